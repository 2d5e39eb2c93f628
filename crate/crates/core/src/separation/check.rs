use num_traits::{One, Signed};

use crate::graph::{EdgeId, FaceId, PolyhedralGraph};
use crate::rational::{half, Rational};

use super::{min_nonfacial_circuit, Circuit, SeparationError, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitCheck {
    /// The lightest non-facial circuit weighs more than 1.
    Passed { min_weight: Rational },
    /// A non-facial circuit of weight at most 1.
    Violated { circuit: Circuit, weight: Rational },
    /// Not evaluated: some weight is negative, which the bound check already
    /// reports.
    Skipped,
}

/// Every violation of the three weighting conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationReport {
    /// Edges with weight outside the open interval `(0, 1/2)`.
    pub bound_violations: Vec<EdgeId>,
    /// Faces whose boundary weight is not exactly 1, with that weight.
    pub face_violations: Vec<(FaceId, Rational)>,
    pub circuits: CircuitCheck,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.bound_violations.is_empty()
            && self.face_violations.is_empty()
            && matches!(self.circuits, CircuitCheck::Passed { .. })
    }
}

/// Checks `w` against the bound, face and circuit conditions on `g`.
///
/// An empty report means `w` witnesses that `g` is of circumscribable type.
pub fn check_conditions(
    g: &PolyhedralGraph,
    w: &WeightVector,
) -> Result<ViolationReport, SeparationError> {
    w.check_len(g)?;
    let half = half();
    let bound_violations = w
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_positive() || **x >= half)
        .map(|(e, _)| e)
        .collect();
    let face_violations = g
        .faces()
        .iter()
        .map(|f| (f.id, w.total(f.edges())))
        .filter(|(_, total)| !total.is_one())
        .collect();
    let circuits = if w.iter().any(Signed::is_negative) {
        CircuitCheck::Skipped
    } else {
        let (circuit, weight) = min_nonfacial_circuit(g, w)?;
        if weight > Rational::one() {
            CircuitCheck::Passed { min_weight: weight }
        } else {
            CircuitCheck::Violated { circuit, weight }
        }
    };
    Ok(ViolationReport { bound_violations, face_violations, circuits })
}
