#![allow(dead_code)]

use std::collections::HashSet;

use inscribe::graph::{kleetope, stack_faces};
use inscribe::rational::from_ratio;
use inscribe::separation::{enumerate_simple_cycles, WeightVector};
use inscribe::{dual, generate, EdgeId, Family, PolyhedralGraph};
use rand::seq::IndexedRandom;
use rand::Rng;

pub const SMALL: usize = 14;

pub struct Case {
    pub name: String,
    pub graph: PolyhedralGraph,
}

/// The named solids, prisms, antiprisms, wheels and bipyramids for
/// n = 3..8, and the triakis tetrahedron.
pub fn corpus() -> Vec<Case> {
    let mut specs: Vec<(Family, Option<usize>)> = vec![
        (Family::Tetrahedron, None),
        (Family::Cube, None),
        (Family::Octahedron, None),
        (Family::Dodecahedron, None),
        (Family::Icosahedron, None),
    ];
    for f in [Family::Prism, Family::Antiprism, Family::Wheel, Family::Bipyramid] {
        for n in 3..=8 {
            specs.push((f.clone(), Some(n)));
        }
    }
    specs.push((Family::Kleetope(Box::new(Family::Tetrahedron)), None));
    specs
        .into_iter()
        .map(|(f, n)| Case {
            name: match n {
                Some(n) => format!("{f} {n}"),
                None => f.to_string(),
            },
            graph: generate(&f, n).unwrap(),
        })
        .collect()
}

pub fn klee_tet() -> PolyhedralGraph {
    generate(&Family::Kleetope(Box::new(Family::Tetrahedron)), None).unwrap()
}

/// Nonnegative weights p/q with small numerators and denominators so that
/// ties and zeros are common.
pub fn random_weights<R: Rng>(g: &PolyhedralGraph, rng: &mut R) -> WeightVector {
    (0..g.edge_count())
        .map(|_| {
            let q = rng.random_range(1..=12i64);
            let p = if rng.random_bool(0.1) { 0 } else { rng.random_range(0..=2 * q) };
            from_ratio(p, q)
        })
        .collect()
}

/// A kleetope of a small base, or a small base with a random set of faces
/// stacked once or twice. At most [`SMALL`] vertices.
pub fn random_variant<R: Rng>(rng: &mut R) -> PolyhedralGraph {
    let bases: [(Family, Option<usize>); 9] = [
        (Family::Tetrahedron, None),
        (Family::Cube, None),
        (Family::Octahedron, None),
        (Family::Prism, Some(3)),
        (Family::Prism, Some(4)),
        (Family::Wheel, Some(4)),
        (Family::Wheel, Some(5)),
        (Family::Bipyramid, Some(3)),
        (Family::Antiprism, Some(3)),
    ];
    let (family, n) = bases.choose(rng).unwrap();
    let mut g = generate(family, *n).unwrap();
    if rng.random_bool(0.25) && g.vertex_count() + g.face_count() <= SMALL {
        return kleetope(&g);
    }
    for _ in 0..rng.random_range(1..=2) {
        let room = SMALL - g.vertex_count();
        if room == 0 {
            break;
        }
        let k = rng.random_range(1..=room.min(g.face_count()));
        let faces: Vec<usize> = rand::seq::index::sample(rng, g.face_count(), k).into_vec();
        g = stack_faces(&g, &faces);
    }
    g
}

pub fn check_euler(g: &PolyhedralGraph) -> Result<(), String> {
    let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, g.face_count() as i64);
    if v - e + f == 2 {
        Ok(())
    } else {
        Err(format!("V - E + F = {} - {} + {} != 2", v, e, f))
    }
}

pub fn check_dart_partition(g: &PolyhedralGraph) -> Result<(), String> {
    let mut seen = vec![0usize; g.dart_count()];
    for face in g.faces() {
        for d in face.darts() {
            seen[d] += 1;
            if g.face_of_dart(d) != face.id {
                return Err(format!("dart {d} is listed on face {} but maps elsewhere", face.id));
            }
        }
    }
    match seen.iter().position(|&c| c != 1) {
        None => Ok(()),
        Some(d) => Err(format!("dart {d} lies on {} faces", seen[d])),
    }
}

/// dual(dual(g)) is isomorphic to g: the face-to-vertex map of the second
/// dual, composed with the two edge bijections, preserves incidence and
/// every rotation, and the composed bijection is a permutation of edge ids.
pub fn check_dual_involution(g: &PolyhedralGraph) -> Result<(), String> {
    let first = dual(g).map_err(|e| e.to_string())?;
    let second = dual(&first.dual).map_err(|e| e.to_string())?;
    let back = &second.dual;
    if back.vertex_count() != g.vertex_count() || back.edge_count() != g.edge_count() {
        return Err("double dual has different size".into());
    }
    // Vertex f of the double dual is face f of the dual.
    let phi: Vec<usize> =
        (0..back.vertex_count()).map(|f| first.primal_vertex_of_dual_face(f)).collect();
    if phi.iter().collect::<HashSet<_>>().len() != phi.len() {
        return Err("vertex map is not a bijection".into());
    }
    let edge_map: Vec<EdgeId> =
        (0..g.edge_count()).map(|e| second.dual_edge(first.dual_edge(e))).collect();
    if edge_map.iter().collect::<HashSet<_>>().len() != edge_map.len() {
        return Err("composed edge bijection is not a permutation".into());
    }
    for (e, &mapped) in edge_map.iter().enumerate() {
        let mut want = g.endpoints(e);
        let [a, b] = back.endpoints(mapped);
        let mut got = [phi[a], phi[b]];
        want.sort_unstable();
        got.sort_unstable();
        if want != got {
            return Err(format!("edge {e}: endpoints {want:?} came back as {got:?}"));
        }
    }
    for (x, &v) in phi.iter().enumerate() {
        let mapped: Vec<EdgeId> =
            back.rotation(x).iter().map(|&d| first.primal_edge(second.primal_edge(d))).collect();
        if !same_cyclic_order(&mapped, g.rotation(v)) {
            return Err(format!("rotation at vertex {v} not preserved"));
        }
    }
    Ok(())
}

fn same_cyclic_order(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Every edge has two distinct incident faces and every facial circuit
/// through an edge is one of them, checked against all simple cycles.
pub fn check_facial_lemma(g: &PolyhedralGraph) -> Result<(), String> {
    let face_sets: Vec<Vec<EdgeId>> = g.faces().iter().map(|f| f.edge_set()).collect();
    for e in 0..g.edge_count() {
        let [f1, f2] = g.faces_of_edge(e);
        if f1 == f2 {
            return Err(format!("edge {e} has the same face on both sides"));
        }
    }
    let cycles = enumerate_simple_cycles(g, SMALL).map_err(|e| e.to_string())?;
    let mut found = vec![false; face_sets.len()];
    for c in &cycles {
        let set = c.edge_set();
        let Some(f) = face_sets.iter().position(|s| *s == set) else { continue };
        found[f] = true;
        for &e in c.edges() {
            if !g.faces_of_edge(e).contains(&f) {
                return Err(format!("facial circuit {f} runs through edge {e} off its faces"));
            }
        }
    }
    match found.iter().position(|&x| !x) {
        None => Ok(()),
        Some(f) => Err(format!("face {f} is not a simple cycle")),
    }
}
