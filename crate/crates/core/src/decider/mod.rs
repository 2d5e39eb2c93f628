//! The full decision: validate, dualise, run the cut loop, and turn
//! certificates into ideal dihedral angles.

mod json;
mod reference;
mod verify;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, is_k_vertex_connected, validate_steinitz, DualPair, EdgeId, GraphError, PolyhedralGraph, ValidationReport};
use crate::lp::{self, ConstraintSystem, LpError, LpStatus, MarginSolution};
use crate::rational::{self, Rational};
use crate::separation::{self, Circuit, SeparationError, WeightVector};

pub use reference::{full_enumeration_margin, REFERENCE_VERTEX_CAP};
pub use verify::{verify_certificate, Verification};

#[derive(Debug, Error)]
pub enum DecideError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not polyhedral: {0:?}")]
    NotPolyhedral(ValidationReport),
    #[error("cut loop exceeded {cap} iterations")]
    IterationCap { cap: usize },
    #[error(transparent)]
    Separation(#[from] SeparationError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("LP ended with unexpected status {0:?}")]
    UnexpectedStatus(LpStatus),
    #[error("certificate answer is no; no weights to convert")]
    NotYes,
    #[error("certificate carries no weights")]
    NoWeights,
    #[error("certificate tests circumscribability of the primal; angles need a dual-role certificate")]
    RoleMismatch,
    #[error("certificate does not match the graph: {0}")]
    Mismatch(String),
    #[error("malformed certificate: {0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

/// Which graph the weighting conditions were tested on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphRole {
    /// The input graph itself (circumscribability).
    Primal,
    /// The planar dual of the input (inscribability).
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    CutLoop,
    /// Answered by 4-connectivity alone, without weights.
    FourConnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub answer: Answer,
    pub graph_role: GraphRole,
    pub method: Method,
    /// The optimal weighting on the tested graph, present iff the cut loop
    /// answered yes.
    pub weights: Option<WeightVector>,
    /// `t* > 0`, present iff the cut loop answered yes.
    pub margin: Option<Rational>,
    /// Final `t*` of the cut loop, whatever its sign. `None` if the face
    /// equalities alone are infeasible or the fast path answered.
    pub lp_optimum: Option<Rational>,
    /// Circuit rows added, in order. Re-solving bounds, faces and these
    /// reproduces `lp_optimum`.
    pub cuts: Vec<Circuit>,
    /// LP solves performed.
    pub iterations: usize,
    /// Primal edge id -> dual edge id, for dual-role certificates.
    pub edge_bijection: Option<Vec<EdgeId>>,
}

impl Certificate {
    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    /// Angle coefficients (multiples of pi) per primal edge, computed from
    /// the certificate alone: `1 - 2 w(e*)`.
    pub fn angle_coefficients(&self) -> Option<Vec<Rational>> {
        let (w, bij) = (self.weights.as_ref()?, self.edge_bijection.as_ref()?);
        if self.graph_role != GraphRole::Dual {
            return None;
        }
        Some(bij.iter().map(|&e_star| angle_from_weight(&w[e_star])).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecideOptions {
    /// Cap on cuts added; `None` means `10 * E`.
    pub max_iterations: Option<usize>,
    /// Answer 4-connected inputs without running the LP.
    pub fast_path: bool,
    /// Resume each re-solve from the previous optimal basis.
    pub warm_start: bool,
}

impl Default for DecideOptions {
    fn default() -> Self {
        Self { max_iterations: None, fast_path: false, warm_start: true }
    }
}

/// Decides whether `g` is of circumscribable type.
pub fn decide_circumscribable(g: &PolyhedralGraph) -> Result<Certificate, DecideError> {
    decide_circumscribable_with(g, &DecideOptions::default())
}

pub fn decide_circumscribable_with(
    g: &PolyhedralGraph,
    opts: &DecideOptions,
) -> Result<Certificate, DecideError> {
    require_polyhedral(g)?;
    if opts.fast_path && fast_path_four_connected(g).is_some() {
        return Ok(fast_path_certificate(GraphRole::Primal, None));
    }
    cut_loop(g, opts)
}

/// Decides whether `g` is of inscribable type by testing its dual.
pub fn decide_inscribable(g: &PolyhedralGraph) -> Result<Certificate, DecideError> {
    decide_inscribable_with(g, &DecideOptions::default())
}

pub fn decide_inscribable_with(
    g: &PolyhedralGraph,
    opts: &DecideOptions,
) -> Result<Certificate, DecideError> {
    require_polyhedral(g)?;
    let pair = graph::dual(g)?;
    decide_inscribable_pair(&pair, opts)
}

/// [`decide_inscribable_with`] for a dual pair already built.
pub fn decide_inscribable_pair(pair: &DualPair, opts: &DecideOptions) -> Result<Certificate, DecideError> {
    let bijection = Some(pair.edge_bijection().to_vec());
    if opts.fast_path && fast_path_four_connected(&pair.primal).is_some() {
        return Ok(fast_path_certificate(GraphRole::Dual, bijection));
    }
    require_polyhedral(&pair.dual)?;
    let mut cert = cut_loop(&pair.dual, opts)?;
    cert.graph_role = GraphRole::Dual;
    cert.edge_bijection = bijection;
    Ok(cert)
}

/// `Some(Yes)` (inscribable and circumscribable) when `g` is 4-connected,
/// otherwise no opinion.
pub fn fast_path_four_connected(g: &PolyhedralGraph) -> Option<Answer> {
    is_k_vertex_connected(g, 4).then_some(Answer::Yes)
}

fn fast_path_certificate(graph_role: GraphRole, edge_bijection: Option<Vec<EdgeId>>) -> Certificate {
    Certificate {
        answer: Answer::Yes,
        graph_role,
        method: Method::FourConnected,
        weights: None,
        margin: None,
        lp_optimum: None,
        cuts: Vec::new(),
        iterations: 0,
        edge_bijection,
    }
}

fn require_polyhedral(g: &PolyhedralGraph) -> Result<(), DecideError> {
    let report = validate_steinitz(g);
    if report.is_polyhedral() {
        Ok(())
    } else {
        Err(DecideError::NotPolyhedral(report))
    }
}

/// Maximise the margin, separate the lightest non-facial circuit, add it if
/// its row `sum_C w - t >= 1` is violated, repeat.
///
/// Stops early once `t* < 0`: further rows cannot raise it, so the answer is
/// already no (and the weights may be negative, outside the oracle's
/// domain).
fn cut_loop(g: &PolyhedralGraph, opts: &DecideOptions) -> Result<Certificate, DecideError> {
    let cap = opts.max_iterations.unwrap_or(10 * g.edge_count());
    let mut system = ConstraintSystem::new(g);
    let mut cuts = Vec::new();
    let mut solution = lp::maximize_margin(&system);
    let mut iterations = 1;
    loop {
        let (t, w) = match (&solution.status, &solution.margin, &solution.weights) {
            (LpStatus::Optimal, Some(t), Some(w)) => (t, w),
            (LpStatus::Infeasible, ..) => {
                return Ok(no_certificate(None, cuts, iterations));
            }
            (status, ..) => return Err(DecideError::UnexpectedStatus(*status)),
        };
        if t.is_negative() {
            break;
        }
        let (circuit, weight) = separation::min_nonfacial_circuit(g, w)?;
        if weight - t >= Rational::one() {
            break;
        }
        if cuts.len() >= cap {
            return Err(DecideError::IterationCap { cap });
        }
        system.add_circuit(circuit.clone())?;
        cuts.push(circuit);
        solution = if opts.warm_start {
            lp::maximize_margin_warm(&system, &solution.basis)
        } else {
            lp::maximize_margin(&system)
        };
        iterations += 1;
    }
    let MarginSolution { margin, weights, .. } = solution;
    let t = margin.expect("optimal solution has a margin");
    if rational::is_positive(&t) {
        Ok(Certificate {
            answer: Answer::Yes,
            graph_role: GraphRole::Primal,
            method: Method::CutLoop,
            weights,
            margin: Some(t.clone()),
            lp_optimum: Some(t),
            cuts,
            iterations,
            edge_bijection: None,
        })
    } else {
        Ok(no_certificate(Some(t), cuts, iterations))
    }
}

fn no_certificate(lp_optimum: Option<Rational>, cuts: Vec<Circuit>, iterations: usize) -> Certificate {
    Certificate {
        answer: Answer::No,
        graph_role: GraphRole::Primal,
        method: Method::CutLoop,
        weights: None,
        margin: None,
        lp_optimum,
        cuts,
        iterations,
        edge_bijection: None,
    }
}

/// Ideal dihedral angles, as rational multiples of pi, per primal edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralAngles {
    coefficients: Vec<Rational>,
}

impl DihedralAngles {
    /// Coefficient `c` with angle `c * pi` at primal edge `e`.
    pub fn coefficient(&self, e: EdgeId) -> &Rational {
        &self.coefficients[e]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn radians(&self, e: EdgeId) -> f64 {
        use num_traits::ToPrimitive;
        self.coefficients[e].to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }
}

/// Exterior weight `w(e*)` (normalised by `2 pi`) to interior angle
/// coefficient: `angle = pi - 2 pi w(e*)`.
pub fn angle_from_weight(w: &Rational) -> Rational {
    Rational::one() - w * rational::from_int(2)
}

/// Dihedral angles of the ideal realisation of `pair.primal` certified by
/// an inscribability certificate.
///
/// Every coefficient is checked to lie in `(0, 1)`, and the exterior angles
/// `pi - angle` around each primal vertex (a face of the dual) are checked to
/// sum to `2 pi`.
pub fn dihedral_angles(cert: &Certificate, pair: &DualPair) -> Result<DihedralAngles, DecideError> {
    if cert.answer != Answer::Yes {
        return Err(DecideError::NotYes);
    }
    if cert.graph_role != GraphRole::Dual {
        return Err(DecideError::RoleMismatch);
    }
    let w = cert.weights.as_ref().ok_or(DecideError::NoWeights)?;
    if w.len() != pair.dual.edge_count() {
        return Err(DecideError::Mismatch(format!(
            "{} weights for {} dual edges",
            w.len(),
            pair.dual.edge_count()
        )));
    }
    if let Some(bij) = &cert.edge_bijection {
        if bij.as_slice() != pair.edge_bijection() {
            return Err(DecideError::Mismatch("edge bijection differs from the graph's dual".into()));
        }
    }
    let coefficients: Vec<Rational> =
        (0..pair.primal.edge_count()).map(|e| angle_from_weight(&w[pair.dual_edge(e)])).collect();
    if let Some(e) = coefficients.iter().position(|c| !c.is_positive() || *c >= Rational::one()) {
        return Err(DecideError::Mismatch(format!("angle at edge {e} outside (0, pi)")));
    }
    let two = rational::from_int(2);
    for v in 0..pair.primal.vertex_count() {
        let exterior: Rational = pair.primal.rotation(v).iter().map(|&e| Rational::one() - &coefficients[e]).sum();
        if exterior != two {
            return Err(DecideError::Mismatch(format!(
                "exterior angles at vertex {v} sum to {exterior} pi, not 2 pi"
            )));
        }
    }
    Ok(DihedralAngles { coefficients })
}
