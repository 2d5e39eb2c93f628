//! Generators for the standard test families.
//!
//! Rotations of the geometric families are read off a convex realisation:
//! neighbours are sorted by angle around the outward direction at each
//! vertex. Everything after that is combinatorial and deterministic.

use std::fmt;
use std::str::FromStr;

use super::{FaceId, GraphError, PolyhedralGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    /// `n`-gonal prism, `2n` vertices.
    Prism,
    /// `n`-gonal antiprism, `2n` vertices.
    Antiprism,
    /// Pyramid over an `n`-gon: rim `0..n`, apex `n`.
    Wheel,
    /// Ring `0..n`, apexes `n` and `n + 1`.
    Bipyramid,
    /// Stack a pyramid on every face of the base family.
    Kleetope(Box<Family>),
}

impl Family {
    pub fn takes_parameter(&self) -> bool {
        match self {
            Family::Prism | Family::Antiprism | Family::Wheel | Family::Bipyramid => true,
            Family::Kleetope(base) => base.takes_parameter(),
            _ => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Tetrahedron => "tetrahedron",
            Family::Cube => "cube",
            Family::Octahedron => "octahedron",
            Family::Dodecahedron => "dodecahedron",
            Family::Icosahedron => "icosahedron",
            Family::Prism => "prism",
            Family::Antiprism => "antiprism",
            Family::Wheel => "wheel",
            Family::Bipyramid => "bipyramid",
            Family::Kleetope(base) => return write!(f, "kleetope({base})"),
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(inner) = s.strip_prefix("kleetope(").and_then(|r| r.strip_suffix(')')) {
            return Ok(Family::Kleetope(Box::new(inner.parse()?)));
        }
        Ok(match s.as_str() {
            "tetrahedron" => Family::Tetrahedron,
            "cube" | "hexahedron" => Family::Cube,
            "octahedron" => Family::Octahedron,
            "dodecahedron" => Family::Dodecahedron,
            "icosahedron" => Family::Icosahedron,
            "prism" => Family::Prism,
            "antiprism" => Family::Antiprism,
            "wheel" | "pyramid" => Family::Wheel,
            "bipyramid" => Family::Bipyramid,
            _ => return Err(GraphError::UnknownFamily(s)),
        })
    }
}

pub fn generate(family: &Family, n: Option<usize>) -> Result<PolyhedralGraph, GraphError> {
    let out_of_range = || GraphError::ParameterOutOfRange { family: family.to_string(), n };
    let ring = || match n {
        Some(n) if n >= 3 => Ok(n),
        _ => Err(out_of_range()),
    };
    if !family.takes_parameter() && n.is_some() {
        return Err(out_of_range());
    }
    match family {
        Family::Tetrahedron => Ok(platonic(&[
            [1.0, 1.0, 1.0],
            [1.0, -1.0, -1.0],
            [-1.0, 1.0, -1.0],
            [-1.0, -1.0, 1.0],
        ])),
        Family::Cube => {
            let pts: Vec<_> = (0..8)
                .map(|i| [bit(i, 0), bit(i, 1), bit(i, 2)])
                .collect();
            Ok(platonic(&pts))
        }
        Family::Octahedron => Ok(platonic(&[
            [1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [0.0, -1.0, 0.0],
            [0.0, 0.0, 1.0],
            [0.0, 0.0, -1.0],
        ])),
        Family::Icosahedron => {
            let phi = golden();
            let mut pts = Vec::new();
            for (a, b) in [(1.0, phi), (1.0, -phi), (-1.0, phi), (-1.0, -phi)] {
                pts.push([0.0, a, b]);
                pts.push([a, b, 0.0]);
                pts.push([b, 0.0, a]);
            }
            Ok(platonic(&pts))
        }
        Family::Dodecahedron => {
            let phi = golden();
            let inv = 1.0 / phi;
            let mut pts: Vec<_> = (0..8).map(|i| [bit(i, 0), bit(i, 1), bit(i, 2)]).collect();
            for (a, b) in [(inv, phi), (inv, -phi), (-inv, phi), (-inv, -phi)] {
                pts.push([0.0, a, b]);
                pts.push([a, b, 0.0]);
                pts.push([b, 0.0, a]);
            }
            Ok(platonic(&pts))
        }
        Family::Prism => {
            let n = ring()?;
            let mut pts = Vec::with_capacity(2 * n);
            for level in [-1.0, 1.0] {
                pts.extend((0..n).map(|i| on_circle(i as f64, n, level)));
            }
            let mut edges = Vec::new();
            for i in 0..n {
                let j = (i + 1) % n;
                edges.extend([(i, j), (n + i, n + j), (i, n + i)]);
            }
            Ok(from_geometry(&pts, &edges))
        }
        Family::Antiprism => {
            let n = ring()?;
            let mut pts: Vec<_> = (0..n).map(|i| on_circle(i as f64, n, -1.0)).collect();
            pts.extend((0..n).map(|i| on_circle(i as f64 + 0.5, n, 1.0)));
            let mut edges = Vec::new();
            for i in 0..n {
                let j = (i + 1) % n;
                edges.extend([(i, j), (n + i, n + j), (i, n + i), (j, n + i)]);
            }
            Ok(from_geometry(&pts, &edges))
        }
        Family::Wheel => {
            let n = ring()?;
            let mut pts: Vec<_> = (0..n).map(|i| on_circle(i as f64, n, 0.0)).collect();
            pts.push([0.0, 0.0, 1.0]);
            let mut edges = Vec::new();
            for i in 0..n {
                edges.extend([(i, (i + 1) % n), (i, n)]);
            }
            Ok(from_geometry(&pts, &edges))
        }
        Family::Bipyramid => {
            let n = ring()?;
            let mut pts: Vec<_> = (0..n).map(|i| on_circle(i as f64, n, 0.0)).collect();
            pts.push([0.0, 0.0, 1.0]);
            pts.push([0.0, 0.0, -1.0]);
            let mut edges = Vec::new();
            for i in 0..n {
                edges.extend([(i, (i + 1) % n), (i, n), (i, n + 1)]);
            }
            Ok(from_geometry(&pts, &edges))
        }
        Family::Kleetope(base) => Ok(kleetope(&generate(base, n)?)),
    }
}

/// Stacks one new vertex inside every face.
pub fn kleetope(g: &PolyhedralGraph) -> PolyhedralGraph {
    let all: Vec<FaceId> = (0..g.face_count()).collect();
    stack_faces(g, &all)
}

/// Stacks a new vertex on each listed face, joined to every vertex of that
/// face. New vertices are numbered from `V` upward in increasing face order.
pub fn stack_faces(g: &PolyhedralGraph, faces: &[FaceId]) -> PolyhedralGraph {
    let mut stacked: Vec<FaceId> = faces.to_vec();
    stacked.sort_unstable();
    stacked.dedup();
    let base = g.vertex_count();
    let mut apex: Vec<Option<VertexId>> = vec![None; g.face_count()];
    for (i, &f) in stacked.iter().enumerate() {
        apex[f] = Some(base + i);
    }
    let mut neighbors: Vec<Vec<VertexId>> = Vec::with_capacity(base + stacked.len());
    for v in 0..base {
        let mut list = Vec::with_capacity(2 * g.degree(v));
        for &e in g.rotation(v) {
            list.push(g.other_end(e, v));
            // The face of the dart leaving along `e` occupies the corner
            // between this neighbour and the next one counterclockwise.
            if let Some(a) = apex[g.face_of_dart(g.dart_from(v, e))] {
                list.push(a);
            }
        }
        neighbors.push(list);
    }
    for &f in &stacked {
        neighbors.push(g.faces()[f].vertices(g));
    }
    PolyhedralGraph::from_neighbors(&neighbors).expect("stacking preserves well-formedness")
}

fn bit(i: usize, k: usize) -> f64 {
    if i >> k & 1 == 1 {
        1.0
    } else {
        -1.0
    }
}

fn golden() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn on_circle(step: f64, n: usize, z: f64) -> [f64; 3] {
    let theta = std::f64::consts::TAU * step / n as f64;
    [theta.cos(), theta.sin(), z]
}

/// Vertices of a regular solid; edges join nearest pairs.
fn platonic(pts: &[[f64; 3]]) -> PolyhedralGraph {
    let dist = |i: usize, j: usize| sub(pts[i], pts[j]).iter().map(|x| x * x).sum::<f64>();
    let n = pts.len();
    let shortest = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| dist(i, j))
        .fold(f64::INFINITY, f64::min);
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| (dist(i, j) - shortest).abs() < 1e-6)
        .collect();
    from_geometry(pts, &edges)
}

fn from_geometry(pts: &[[f64; 3]], edges: &[(VertexId, VertexId)]) -> PolyhedralGraph {
    let n = pts.len();
    let centroid = pts
        .iter()
        .fold([0.0; 3], |acc, p| [acc[0] + p[0], acc[1] + p[1], acc[2] + p[2]])
        .map(|x| x / n as f64);
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let neighbors: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            let normal = normalize(sub(pts[v], centroid));
            let axis = (0..3)
                .min_by(|&a, &b| normal[a].abs().total_cmp(&normal[b].abs()))
                .unwrap();
            let mut e = [0.0; 3];
            e[axis] = 1.0;
            let a = normalize(sub(e, scale(normal, dot(e, normal))));
            let b = cross(normal, a);
            let mut list = adj[v].clone();
            let angle = |u: VertexId| {
                let d = sub(pts[u], pts[v]);
                dot(d, b).atan2(dot(d, a))
            };
            list.sort_by(|&x, &y| angle(x).total_cmp(&angle(y)));
            let start = (0..list.len()).min_by_key(|&i| list[i]).unwrap();
            list.rotate_left(start);
            list
        })
        .collect();
    PolyhedralGraph::from_neighbors(&neighbors).expect("generator produced a malformed rotation")
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn scale(a: [f64; 3], k: f64) -> [f64; 3] {
    a.map(|x| x * k)
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalize(a: [f64; 3]) -> [f64; 3] {
    scale(a, 1.0 / dot(a, a).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_steinitz;

    fn counts(g: &PolyhedralGraph) -> (usize, usize, usize) {
        (g.vertex_count(), g.edge_count(), g.face_count())
    }

    #[test]
    fn platonic_counts() {
        let cases = [
            (Family::Tetrahedron, (4, 6, 4)),
            (Family::Cube, (8, 12, 6)),
            (Family::Octahedron, (6, 12, 8)),
            (Family::Dodecahedron, (20, 30, 12)),
            (Family::Icosahedron, (12, 30, 20)),
        ];
        for (family, want) in cases {
            let g = generate(&family, None).unwrap();
            assert_eq!(counts(&g), want, "{family}");
            assert!(validate_steinitz(&g).is_polyhedral(), "{family}");
        }
    }

    #[test]
    fn parametric_families_are_polyhedral() {
        for n in 3..=10 {
            for family in [Family::Prism, Family::Antiprism, Family::Wheel, Family::Bipyramid] {
                let g = generate(&family, Some(n)).unwrap();
                assert!(validate_steinitz(&g).is_polyhedral(), "{family} {n}");
            }
            assert_eq!(counts(&generate(&Family::Prism, Some(n)).unwrap()), (2 * n, 3 * n, n + 2));
            assert_eq!(counts(&generate(&Family::Wheel, Some(n)).unwrap()), (n + 1, 2 * n, n + 1));
            assert_eq!(
                counts(&generate(&Family::Bipyramid, Some(n)).unwrap()),
                (n + 2, 3 * n, 2 * n)
            );
        }
    }

    #[test]
    fn documented_examples() {
        let klee = generate(&"kleetope(tetrahedron)".parse().unwrap(), None).unwrap();
        assert_eq!(counts(&klee), (8, 18, 12));
        assert!(validate_steinitz(&klee).is_polyhedral());
        assert_eq!(counts(&generate(&Family::Antiprism, Some(4)).unwrap()), (8, 16, 10));
        assert_eq!(counts(&generate(&Family::Wheel, Some(5)).unwrap()), (6, 10, 6));
    }

    #[test]
    fn kleetope_of_parametric_base() {
        let g = generate(&Family::Kleetope(Box::new(Family::Prism)), Some(5)).unwrap();
        // 10 + 7 vertices, 15 + 4*5 + 2*5 edges.
        assert_eq!((g.vertex_count(), g.edge_count()), (17, 45));
        assert!(validate_steinitz(&g).is_polyhedral());
    }

    #[test]
    fn partial_stacking() {
        let cube = generate(&Family::Cube, None).unwrap();
        let g = stack_faces(&cube, &[4, 1, 1]);
        assert_eq!(counts(&g), (10, 20, 12));
        assert!(validate_steinitz(&g).is_polyhedral());
        assert_eq!(g.degree(8), 4);
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            generate(&Family::Prism, Some(2)),
            Err(GraphError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            generate(&Family::Prism, None),
            Err(GraphError::ParameterOutOfRange { .. })
        ));
        assert!(matches!(
            generate(&Family::Cube, Some(4)),
            Err(GraphError::ParameterOutOfRange { .. })
        ));
        assert!(matches!("heptahedron".parse::<Family>(), Err(GraphError::UnknownFamily(_))));
        assert_eq!("Pyramid".parse::<Family>().unwrap(), Family::Wheel);
        assert_eq!(
            "kleetope(kleetope(cube))".parse::<Family>().unwrap().to_string(),
            "kleetope(kleetope(cube))"
        );
    }

    #[test]
    fn numbering_is_deterministic() {
        let a = generate(&Family::Icosahedron, None).unwrap();
        let b = generate(&Family::Icosahedron, None).unwrap();
        assert_eq!(a, b);
    }
}
