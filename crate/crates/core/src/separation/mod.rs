//! Minimum-weight non-facial circuits: the separation oracle for the
//! circuit rows, a brute-force reference, and the full condition check.

mod check;
mod circuit;
mod enumerate;
mod oracle;

use std::ops::Index;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::graph::{EdgeId, PolyhedralGraph};
use crate::rational::Rational;

pub use check::{check_conditions, CircuitCheck, ViolationReport};
pub use circuit::Circuit;
pub use enumerate::{
    brute_force_min_nonfacial, brute_force_min_nonfacial_with_cap, enumerate_simple_cycles,
    nonfacial_circuits, DEFAULT_VERTEX_CAP,
};
pub use oracle::{min_cycle_through_edge, min_nonfacial_circuit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("weight vector has {found} entries, graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {edge} has negative weight")]
    NegativeWeight { edge: EdgeId },
    #[error("graph has no non-facial circuit")]
    NoNonFacialCircuit,
    #[error("brute-force enumeration capped at {cap} vertices, graph has {vertices}")]
    VertexCapExceeded { vertices: usize, cap: usize },
    #[error("not a simple circuit: {0}")]
    NotACircuit(String),
}

/// One exact rational weight per edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Self {
        Self(weights)
    }

    pub fn for_graph(g: &PolyhedralGraph, weights: Vec<Rational>) -> Result<Self, SeparationError> {
        let w = Self(weights);
        w.check_len(g)?;
        Ok(w)
    }

    pub fn uniform(g: &PolyhedralGraph, value: Rational) -> Self {
        Self(vec![value; g.edge_count()])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn set(&mut self, e: EdgeId, value: Rational) {
        self.0[e] = value;
    }

    pub fn total<I: IntoIterator<Item = EdgeId>>(&self, edges: I) -> Rational {
        edges.into_iter().fold(Rational::zero(), |acc, e| acc + &self.0[e])
    }

    pub(crate) fn check_len(&self, g: &PolyhedralGraph) -> Result<(), SeparationError> {
        if self.0.len() != g.edge_count() {
            return Err(SeparationError::LengthMismatch {
                expected: g.edge_count(),
                found: self.0.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_oracle_input(&self, g: &PolyhedralGraph) -> Result<(), SeparationError> {
        self.check_len(g)?;
        match self.0.iter().position(Signed::is_negative) {
            Some(edge) => Err(SeparationError::NegativeWeight { edge }),
            None => Ok(()),
        }
    }
}

impl Index<EdgeId> for WeightVector {
    type Output = Rational;

    fn index(&self, e: EdgeId) -> &Rational {
        &self.0[e]
    }
}

impl FromIterator<Rational> for WeightVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}
