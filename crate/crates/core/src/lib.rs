//! Exact decision procedures for inscribable and circumscribable polyhedral
//! graphs.
//!
//! A polyhedral graph (3-connected, planar, given with a spherical rotation
//! system) is of *circumscribable type* iff its edges admit a weighting `w`
//! with
//!
//! 1. `0 < w(e) < 1/2` for every edge,
//! 2. weight `1` on every face boundary,
//! 3. weight strictly greater than `1` on every circuit that is not a face
//!    boundary,
//!
//! and of *inscribable type* iff its planar dual is of circumscribable type.
//! The circuit family is exponential, so [`decider`] solves the strict system
//! as a margin-maximising LP over exact rationals ([`lp`]) and adds circuit
//! rows on demand from a polynomial separation oracle ([`separation`]).
//!
//! ```
//! use inscribe::{decider, graph::generate, Family};
//!
//! let cube = generate(&Family::Cube, None).unwrap();
//! let cert = decider::decide_inscribable(&cube).unwrap();
//! assert!(cert.is_yes());
//! ```

pub mod decider;
pub mod graph;
pub mod lp;
pub mod rational;
pub mod separation;

pub use decider::{
    decide_circumscribable, decide_inscribable, dihedral_angles, Answer, Certificate,
    DecideError, DecideOptions, DihedralAngles, GraphRole,
};
pub use graph::{
    dual, generate, parse_graph, DualPair, EdgeId, Face, FaceId, Family, GraphError,
    PolyhedralGraph, ValidationReport, VertexId,
};
pub use lp::{ConstraintSystem, LpStatus, MarginSolution};
pub use rational::Rational;
pub use separation::{Circuit, WeightVector};
