use itertools::Itertools;
use serde::Serialize;

use super::{PolyhedralGraph, VertexId};

/// Outcome of the Steinitz checks; failures are data, not errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    /// `V - E + F = 2` for the traced faces.
    pub planar_spherical: bool,
    /// No vertex cut of size at most 2.
    pub three_connected: bool,
}

impl ValidationReport {
    pub fn is_polyhedral(&self) -> bool {
        self.planar_spherical && self.three_connected
    }
}

pub fn validate_steinitz(g: &PolyhedralGraph) -> ValidationReport {
    ValidationReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: g.face_count(),
        planar_spherical: g.euler_characteristic() == 2,
        three_connected: is_k_vertex_connected(g, 3),
    }
}

/// Vertex `k`-connectivity: more than `k` vertices, and deleting any set of
/// at most `k - 1` vertices leaves the graph connected.
///
/// Tries every deletion set, so this is `O(V^(k-1) (V + E))`.
pub fn is_k_vertex_connected(g: &PolyhedralGraph, k: usize) -> bool {
    let n = g.vertex_count();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    let mut removed = vec![false; n];
    for size in 0..k {
        for cut in (0..n).combinations(size) {
            cut.iter().for_each(|&v| removed[v] = true);
            let ok = connected_without(g, &removed);
            cut.iter().for_each(|&v| removed[v] = false);
            if !ok {
                return false;
            }
        }
    }
    true
}

fn connected_without(g: &PolyhedralGraph, removed: &[bool]) -> bool {
    let Some(start) = (0..g.vertex_count()).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack: Vec<VertexId> = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == removed.iter().filter(|&&r| !r).count()
}
