//! Shared inputs for the criterion benchmarks.

use inscribe::{generate, Family, PolyhedralGraph};

/// Named graphs spanning the sizes the benchmarks sweep.
pub fn fixtures() -> Vec<(String, PolyhedralGraph)> {
    let mut out = Vec::new();
    for (family, n) in [
        (Family::Cube, None),
        (Family::Icosahedron, None),
        (Family::Dodecahedron, None),
        (Family::Prism, Some(8)),
        (Family::Antiprism, Some(8)),
        (Family::Kleetope(Box::new(Family::Tetrahedron)), None),
    ] {
        let name = match n {
            Some(n) => format!("{family}-{n}"),
            None => family.to_string(),
        };
        out.push((name, generate(&family, n).expect("fixture family")));
    }
    out
}
