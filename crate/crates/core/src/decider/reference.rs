use crate::graph::PolyhedralGraph;
use crate::lp::{maximize_margin, ConstraintSystem, MarginSolution};
use crate::separation::nonfacial_circuits;

use super::DecideError;

/// Largest graph the reference solver will enumerate.
pub const REFERENCE_VERTEX_CAP: usize = 20;

/// Reference for the cut loop: the margin LP with every non-facial circuit
/// of `g` enumerated up front, solved cold.
pub fn full_enumeration_margin(
    g: &PolyhedralGraph,
    max_vertices: usize,
) -> Result<(MarginSolution, ConstraintSystem), DecideError> {
    let mut system = ConstraintSystem::new(g);
    for c in nonfacial_circuits(g, max_vertices)? {
        system.add_circuit(c)?;
    }
    Ok((maximize_margin(&system), system))
}
