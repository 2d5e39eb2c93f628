use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{EdgeId, PolyhedralGraph, VertexId};
use crate::rational::Rational;

use super::{Circuit, SeparationError, WeightVector};

/// Minimum-weight simple cycle through `e` that avoids `forbidden`: `w(e)`
/// plus a shortest path between the endpoints of `e` in
/// `g - e - forbidden`. `None` if those endpoints are disconnected there.
///
/// Weights must be nonnegative. Equal-distance alternatives inside one
/// search keep the first label found, so the result is deterministic.
pub fn min_cycle_through_edge(
    g: &PolyhedralGraph,
    w: &WeightVector,
    e: EdgeId,
    forbidden: &[EdgeId],
) -> Option<(Circuit, Rational)> {
    let mut banned = vec![false; g.edge_count()];
    banned[e] = true;
    for &f in forbidden {
        banned[f] = true;
    }
    let [source, target] = g.endpoints(e);
    let (dist, path) = shortest_path(g, w, &banned, source, target)?;
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(e);
    cycle.extend(path);
    Some((Circuit::from_cyclic_edges(cycle), dist + &w[e]))
}

/// Dijkstra over exact rationals. Returns the distance and the path's edges
/// ordered from `target` back to `source`.
fn shortest_path(
    g: &PolyhedralGraph,
    w: &WeightVector,
    banned: &[bool],
    source: VertexId,
    target: VertexId,
) -> Option<(Rational, Vec<EdgeId>)> {
    let n = g.vertex_count();
    let mut dist: Vec<Option<Rational>> = vec![None; n];
    let mut via: Vec<Option<EdgeId>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[source] = Some(Rational::default());
    heap.push(Reverse((Rational::default(), source)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        if v == target {
            break;
        }
        for &edge in g.rotation(v) {
            if banned[edge] {
                continue;
            }
            let u = g.other_end(edge, v);
            if done[u] {
                continue;
            }
            let candidate = &d + &w[edge];
            if dist[u].as_ref().is_none_or(|old| candidate < *old) {
                dist[u] = Some(candidate.clone());
                via[u] = Some(edge);
                heap.push(Reverse((candidate, u)));
            }
        }
    }
    if !done[target] {
        return None;
    }
    let mut path = Vec::new();
    let mut at = target;
    while at != source {
        let edge = via[at].expect("settled vertex has a predecessor");
        path.push(edge);
        at = g.other_end(edge, at);
    }
    Some((dist[target].take().unwrap(), path))
}

/// Globally minimum-weight circuit that does not bound a face.
///
/// A non-facial circuit through `e` must omit some edge `g1` of one face at
/// `e` and some edge `g2` of the other (a simple circuit containing all of a
/// face boundary is that boundary), and conversely any cycle through `e`
/// avoiding such a pair is non-facial. So the minimum over all `e`, `g1`,
/// `g2` of [`min_cycle_through_edge`] is exact. Ties between candidates go
/// to the lexicographically smallest canonical circuit.
pub fn min_nonfacial_circuit(
    g: &PolyhedralGraph,
    w: &WeightVector,
) -> Result<(Circuit, Rational), SeparationError> {
    w.check_oracle_input(g)?;
    let faces = g.faces();
    let mut best: Option<(Rational, Circuit)> = None;
    for e in 0..g.edge_count() {
        if best.as_ref().is_some_and(|(bw, _)| w[e] > *bw) {
            continue;
        }
        let [f1, f2] = g.faces_of_edge(e);
        let mut tried: Vec<[EdgeId; 2]> = Vec::new();
        for g1 in faces[f1].edges().filter(|&x| x != e) {
            for g2 in faces[f2].edges().filter(|&x| x != e) {
                let pair = [g1.min(g2), g1.max(g2)];
                if tried.contains(&pair) {
                    continue;
                }
                tried.push(pair);
                let forbidden: &[EdgeId] = if g1 == g2 { &pair[..1] } else { &pair };
                let Some((circuit, weight)) = min_cycle_through_edge(g, w, e, forbidden) else {
                    continue;
                };
                let better = match &best {
                    None => true,
                    Some((bw, bc)) => (&weight, &circuit) < (bw, bc),
                };
                if better {
                    best = Some((weight, circuit));
                }
            }
        }
    }
    best.map(|(weight, circuit)| (circuit, weight))
        .ok_or(SeparationError::NoNonFacialCircuit)
}
