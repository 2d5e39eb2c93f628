use std::collections::HashMap;

use super::{EdgeId, FaceId, GraphError, PolyhedralGraph, VertexId};

/// A graph, its planar dual and the edge bijection `e <-> e*`.
///
/// Dual vertex `f` is primal face `f`. Dual face `v` corresponds to the
/// primal vertex given by [`DualPair::primal_vertex_of_dual_face`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub primal: PolyhedralGraph,
    pub dual: PolyhedralGraph,
    to_dual: Vec<EdgeId>,
    to_primal: Vec<EdgeId>,
}

impl DualPair {
    /// `e*` for primal edge `e`.
    pub fn dual_edge(&self, e: EdgeId) -> EdgeId {
        self.to_dual[e]
    }

    /// `e` for dual edge `e*`.
    pub fn primal_edge(&self, e_star: EdgeId) -> EdgeId {
        self.to_primal[e_star]
    }

    /// Primal edge id -> dual edge id.
    pub fn edge_bijection(&self) -> &[EdgeId] {
        &self.to_dual
    }

    /// The primal vertex whose incident edges are dual to the boundary of
    /// dual face `f`.
    pub fn primal_vertex_of_dual_face(&self, f: FaceId) -> VertexId {
        let face = &self.dual.faces()[f];
        let e0 = self.to_primal[face.boundary[0].0];
        let e1 = self.to_primal[face.boundary[1].0];
        let [a, b] = self.primal.endpoints(e0);
        let [c, d] = self.primal.endpoints(e1);
        if a == c || a == d {
            a
        } else {
            debug_assert!(b == c || b == d);
            b
        }
    }
}

/// Builds the planar dual: one vertex per face, one edge per primal edge,
/// with rotations read off the face boundaries.
pub fn dual(g: &PolyhedralGraph) -> Result<DualPair, GraphError> {
    let faces = g.faces();
    let mut neighbors: Vec<Vec<VertexId>> = Vec::with_capacity(faces.len());
    let mut crossing: HashMap<(FaceId, FaceId), EdgeId> = HashMap::new();
    for face in faces {
        let mut list = Vec::with_capacity(face.len());
        for d in face.darts() {
            let other = g.face_of_dart(d ^ 1);
            if other == face.id {
                return Err(GraphError::DualLoop { edge: d / 2 });
            }
            let key = (face.id.min(other), face.id.max(other));
            if let Some(&prev) = crossing.get(&key) {
                if prev != d / 2 {
                    return Err(GraphError::DualMultiEdge { a: key.0, b: key.1 });
                }
            } else {
                crossing.insert(key, d / 2);
            }
            list.push(other);
        }
        neighbors.push(list);
    }
    let dual = PolyhedralGraph::from_neighbors(&neighbors)?;
    let mut to_dual = vec![0; g.edge_count()];
    let mut to_primal = vec![0; g.edge_count()];
    for (e_star, [a, b]) in dual.edges().enumerate() {
        let e = crossing[&(a, b)];
        to_dual[e] = e_star;
        to_primal[e_star] = e;
    }
    Ok(DualPair { primal: g.clone(), dual, to_dual, to_primal })
}
