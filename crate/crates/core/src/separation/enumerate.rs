use std::collections::HashSet;

use crate::graph::{EdgeId, PolyhedralGraph, VertexId};
use crate::rational::Rational;

use super::{Circuit, SeparationError, WeightVector};

pub const DEFAULT_VERTEX_CAP: usize = 16;

/// Every simple cycle of `g`, each exactly once, in canonical form.
///
/// Backtracking from each start vertex `s` through vertices larger than `s`;
/// a cycle closing back to `s` is kept only in the orientation whose first
/// edge id is smaller than its closing edge id. Exponential, hence the cap.
pub fn enumerate_simple_cycles(
    g: &PolyhedralGraph,
    max_vertices: usize,
) -> Result<Vec<Circuit>, SeparationError> {
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(SeparationError::VertexCapExceeded { vertices: n, cap: max_vertices });
    }
    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<EdgeId> = Vec::new();
    for start in 0..n {
        on_path[start] = true;
        extend(g, start, start, &mut on_path, &mut path, &mut cycles);
        on_path[start] = false;
    }
    cycles.sort();
    Ok(cycles)
}

fn extend(
    g: &PolyhedralGraph,
    start: VertexId,
    at: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Circuit>,
) {
    for &e in g.rotation(at) {
        let u = g.other_end(e, at);
        if u == start {
            if path.len() >= 2 && path[0] < e {
                let mut cycle = path.clone();
                cycle.push(e);
                out.push(Circuit::from_cyclic_edges(cycle));
            }
        } else if u > start && !on_path[u] {
            on_path[u] = true;
            path.push(e);
            extend(g, start, u, on_path, path, out);
            path.pop();
            on_path[u] = false;
        }
    }
}

/// All simple cycles that are not face boundaries.
pub fn nonfacial_circuits(
    g: &PolyhedralGraph,
    max_vertices: usize,
) -> Result<Vec<Circuit>, SeparationError> {
    let faces: HashSet<Vec<EdgeId>> = g.faces().iter().map(|f| f.edge_set()).collect();
    let mut cycles = enumerate_simple_cycles(g, max_vertices)?;
    cycles.retain(|c| !faces.contains(&c.edge_set()));
    Ok(cycles)
}

/// Reference oracle: minimum over every enumerated non-facial cycle, ties to
/// the smallest canonical form. Refuses graphs above [`DEFAULT_VERTEX_CAP`]
/// vertices.
pub fn brute_force_min_nonfacial(
    g: &PolyhedralGraph,
    w: &WeightVector,
) -> Result<(Circuit, Rational), SeparationError> {
    brute_force_min_nonfacial_with_cap(g, w, DEFAULT_VERTEX_CAP)
}

pub fn brute_force_min_nonfacial_with_cap(
    g: &PolyhedralGraph,
    w: &WeightVector,
    max_vertices: usize,
) -> Result<(Circuit, Rational), SeparationError> {
    w.check_len(g)?;
    nonfacial_circuits(g, max_vertices)?
        .into_iter()
        .map(|c| (c.weight(w), c))
        .min()
        .map(|(weight, c)| (c, weight))
        .ok_or(SeparationError::NoNonFacialCircuit)
}
