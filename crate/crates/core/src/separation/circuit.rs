use std::collections::HashMap;

use crate::graph::{EdgeId, PolyhedralGraph, VertexId};
use crate::rational::Rational;

use super::{SeparationError, WeightVector};

/// A simple cycle as its edges in cyclic order, canonicalised: rotated to
/// start at the smallest edge id, then oriented so the second entry is the
/// smaller of the two neighbours of the first.
///
/// `Ord` is lexicographic on the canonical sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    edges: Vec<EdgeId>,
}

impl Circuit {
    /// Canonicalises a cyclic edge sequence without validating it.
    pub fn from_cyclic_edges(mut edges: Vec<EdgeId>) -> Self {
        if let Some(start) = (0..edges.len()).min_by_key(|&i| edges[i]) {
            edges.rotate_left(start);
        }
        let k = edges.len();
        if k >= 3 && edges[k - 1] < edges[1] {
            edges[1..].reverse();
        }
        Self { edges }
    }

    /// Validates that `edges`, in the given cyclic order, form a simple
    /// cycle of `g`.
    pub fn new(g: &PolyhedralGraph, edges: Vec<EdgeId>) -> Result<Self, SeparationError> {
        let bad = |msg: String| Err(SeparationError::NotACircuit(msg));
        let k = edges.len();
        if k < 3 {
            return bad(format!("{k} edges"));
        }
        if let Some(&e) = edges.iter().find(|&&e| e >= g.edge_count()) {
            return bad(format!("edge {e} out of range"));
        }
        let mut degree: HashMap<VertexId, usize> = HashMap::new();
        for &e in &edges {
            for v in g.endpoints(e) {
                *degree.entry(v).or_default() += 1;
            }
        }
        if degree.len() != k || degree.values().any(|&d| d != 2) {
            return bad(format!("edges {edges:?} are not a single simple cycle"));
        }
        // Consecutive edges share a vertex; with all degrees two this walks
        // the whole edge set, so it is one cycle in the stated order.
        for i in 0..k {
            let [a, b] = g.endpoints(edges[i]);
            let next = g.endpoints(edges[(i + 1) % k]);
            if !next.contains(&a) && !next.contains(&b) {
                return bad(format!("edges {} and {} are not adjacent", edges[i], edges[(i + 1) % k]));
            }
        }
        let mut walk = vec![edges[0]];
        let mut at = g.endpoints(edges[0])[1];
        let mut used = vec![false; k];
        used[0] = true;
        while walk.len() < k {
            match (0..k).find(|&i| !used[i] && g.endpoints(edges[i]).contains(&at)) {
                Some(i) => {
                    used[i] = true;
                    walk.push(edges[i]);
                    at = g.other_end(edges[i], at);
                }
                None => return bad(format!("edges {edges:?} are not connected")),
            }
        }
        Ok(Self::from_cyclic_edges(edges))
    }

    /// The cycle through `vertices` in order (closing back to the first).
    pub fn from_vertex_cycle(
        g: &PolyhedralGraph,
        vertices: &[VertexId],
    ) -> Result<Self, SeparationError> {
        let k = vertices.len();
        let edges = (0..k)
            .map(|i| {
                let (u, v) = (vertices[i], vertices[(i + 1) % k]);
                g.edge_between(u, v)
                    .ok_or_else(|| SeparationError::NotACircuit(format!("no edge {u}-{v}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(g, edges)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_set(&self) -> Vec<EdgeId> {
        let mut set = self.edges.clone();
        set.sort_unstable();
        set
    }

    pub fn weight(&self, w: &WeightVector) -> Rational {
        w.total(self.edges.iter().copied())
    }

    /// Whether this circuit is the boundary of some face of `g`.
    pub fn is_facial(&self, g: &PolyhedralGraph) -> bool {
        let set = self.edge_set();
        g.faces().iter().any(|f| f.len() == set.len() && f.edge_set() == set)
    }
}
