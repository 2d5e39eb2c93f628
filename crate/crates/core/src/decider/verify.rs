use num_traits::Signed;

use crate::graph::{dual, is_k_vertex_connected, PolyhedralGraph};
use crate::lp::{maximize_margin, ConstraintSystem, LpStatus};
use crate::rational::{self, Rational};
use crate::separation::{check_conditions, Circuit, CircuitCheck};

use super::{Answer, Certificate, DecideError, GraphRole, Method};

/// Outcome of re-checking a certificate; `problems` is empty iff it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub problems: Vec<String>,
    /// Smallest slack over all constraint families, for weighted yes
    /// certificates.
    pub recomputed_margin: Option<Rational>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-checks `cert` against the input graph `g` without trusting anything
/// in it but the weights and cuts.
///
/// * yes with weights: every condition holds exactly on the tested graph,
///   and the smallest slack is at least the stated margin;
/// * yes by 4-connectivity: `g` is 4-connected;
/// * no: the LP over bounds, faces and the listed cuts has optimum
///   `lp_optimum <= 0`.
pub fn verify_certificate(cert: &Certificate, g: &PolyhedralGraph) -> Result<Verification, DecideError> {
    let mut problems = Vec::new();
    let tested = match cert.graph_role {
        GraphRole::Primal => g.clone(),
        GraphRole::Dual => {
            let pair = dual(g)?;
            match &cert.edge_bijection {
                Some(b) if b.as_slice() == pair.edge_bijection() => {}
                Some(_) => problems.push("edge bijection differs from the graph's dual".into()),
                None => problems.push("dual-role certificate lacks an edge bijection".into()),
            }
            pair.dual
        }
    };
    let mut recomputed_margin = None;
    match (cert.answer, cert.method) {
        (Answer::Yes, Method::FourConnected) => {
            if !is_k_vertex_connected(g, 4) {
                problems.push("graph is not 4-connected".into());
            }
        }
        (Answer::Yes, Method::CutLoop) => {
            let (Some(w), Some(margin)) = (&cert.weights, &cert.margin) else {
                return Err(DecideError::NoWeights);
            };
            if w.len() != tested.edge_count() {
                return Err(DecideError::Mismatch(format!(
                    "{} weights for {} edges",
                    w.len(),
                    tested.edge_count()
                )));
            }
            if !rational::is_positive(margin) {
                problems.push(format!("margin {margin} is not positive"));
            }
            let report = check_conditions(&tested, w)?;
            if !report.bound_violations.is_empty() {
                problems.push(format!("bounds violated on edges {:?}", report.bound_violations));
            }
            for (f, total) in &report.face_violations {
                problems.push(format!("face {f} weighs {total}, not 1"));
            }
            if let CircuitCheck::Passed { min_weight } = &report.circuits {
                let half = rational::half();
                let slack = w
                    .iter()
                    .flat_map(|x| [x.clone(), &half - x])
                    .chain(std::iter::once(min_weight - rational::from_int(1)))
                    .min()
                    .expect("graph has edges");
                if slack < *margin {
                    problems.push(format!("recomputed margin {slack} below stated {margin}"));
                }
                recomputed_margin = Some(slack);
            } else if let CircuitCheck::Violated { circuit, weight } = &report.circuits {
                problems.push(format!("non-facial circuit {:?} weighs {weight}", circuit.edges()));
            }
        }
        (Answer::No, _) => {
            let mut system = ConstraintSystem::new(&tested);
            for cut in &cert.cuts {
                let c = Circuit::new(&tested, cut.edges().to_vec())?;
                system.add_circuit(c)?;
            }
            let sol = maximize_margin(&system);
            match (&sol.status, &sol.margin, &cert.lp_optimum) {
                (LpStatus::Infeasible, _, None) => {}
                (LpStatus::Optimal, Some(t), Some(stated)) => {
                    if t != stated {
                        problems.push(format!("cuts reproduce t* = {t}, certificate states {stated}"));
                    }
                    if t.is_positive() {
                        problems.push(format!("t* = {t} is positive"));
                    }
                }
                (status, t, stated) => {
                    problems.push(format!("LP gives {status:?} {t:?}, certificate states {stated:?}"))
                }
            }
        }
    }
    Ok(Verification { problems, recomputed_margin })
}
