//! The margin LP over exact rationals.
//!
//! Variables are the edge weights `w_0 .. w_{E-1}` and a margin `t`
//! (variable index `E`). The rows are
//!
//! * `w_e - t >= 0` and `w_e + t <= 1/2` for every edge,
//! * `sum_{e in f} w_e = 1` for every face,
//! * `t >= -1`, which keeps every phase bounded,
//! * `sum_{e in C} w_e - t >= 1` for each circuit added so far.
//!
//! The open region of strict weightings is nonempty iff `max t > 0`.

mod simplex;

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{EdgeId, FaceId, PolyhedralGraph};
use crate::rational::{self, Rational};
use crate::separation::{Circuit, WeightVector};

pub use simplex::{maximize, verify_optimality, ColumnKey, Constraint, LpStatus, Relation, Solution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("circuit {0:?} is already in the system")]
    DuplicateCircuit(Vec<EdgeId>),
    #[error("circuit {0:?} bounds a face")]
    FacialCircuit(Vec<EdgeId>),
    #[error("edge {edge} out of range for a system over {edges} edges")]
    EdgeOutOfRange { edge: EdgeId, edges: usize },
}

/// Where a row came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowKind {
    /// `w_e - t >= 0`
    LowerBound(EdgeId),
    /// `w_e + t <= 1/2`
    UpperBound(EdgeId),
    /// Face boundary sums to 1.
    Face(FaceId),
    /// `t >= -1`
    MarginFloor,
    /// `sum_C w - t >= 1`
    Circuit(Circuit),
    /// Anything built by hand through [`ConstraintSystem::from_rows`].
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub kind: RowKind,
    pub constraint: Constraint,
}

/// Bound, face and circuit rows over the edge weights and the margin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    edge_count: usize,
    rows: Vec<Row>,
    circuits: HashSet<Circuit>,
    faces: HashSet<Vec<EdgeId>>,
}

impl ConstraintSystem {
    /// Bounds, face equalities and the margin floor for `g`; no circuits.
    pub fn new(g: &PolyhedralGraph) -> Self {
        let e_count = g.edge_count();
        let t = e_count;
        let mut rows = Vec::with_capacity(2 * e_count + g.face_count() + 1);
        for e in 0..e_count {
            rows.push(Row {
                kind: RowKind::LowerBound(e),
                constraint: Constraint {
                    coeffs: vec![(e, Rational::one()), (t, -Rational::one())],
                    relation: Relation::Ge,
                    rhs: Rational::zero(),
                },
            });
        }
        for e in 0..e_count {
            rows.push(Row {
                kind: RowKind::UpperBound(e),
                constraint: Constraint {
                    coeffs: vec![(e, Rational::one()), (t, Rational::one())],
                    relation: Relation::Le,
                    rhs: rational::half(),
                },
            });
        }
        for f in g.faces() {
            rows.push(Row {
                kind: RowKind::Face(f.id),
                constraint: Constraint {
                    coeffs: f.edges().map(|e| (e, Rational::one())).collect(),
                    relation: Relation::Eq,
                    rhs: Rational::one(),
                },
            });
        }
        rows.push(Row {
            kind: RowKind::MarginFloor,
            constraint: Constraint {
                coeffs: vec![(t, Rational::one())],
                relation: Relation::Ge,
                rhs: -Rational::one(),
            },
        });
        Self {
            edge_count: e_count,
            rows,
            circuits: HashSet::new(),
            faces: g.faces().iter().map(|f| f.edge_set()).collect(),
        }
    }

    /// A system of arbitrary rows over `edge_count` weights and the margin.
    pub fn from_rows(edge_count: usize, rows: Vec<Constraint>) -> Self {
        Self {
            edge_count,
            rows: rows.into_iter().map(|constraint| Row { kind: RowKind::Custom, constraint }).collect(),
            circuits: HashSet::new(),
            faces: HashSet::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Index of the margin variable.
    pub fn margin_var(&self) -> usize {
        self.edge_count
    }

    pub fn variable_count(&self) -> usize {
        self.edge_count + 1
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn circuit_count(&self) -> usize {
        self.circuits.len()
    }

    pub fn contains_circuit(&self, c: &Circuit) -> bool {
        self.circuits.contains(c)
    }

    /// Appends `sum_C w - t >= 1`.
    pub fn add_circuit(&mut self, c: Circuit) -> Result<(), LpError> {
        if let Some(&edge) = c.edges().iter().find(|&&e| e >= self.edge_count) {
            return Err(LpError::EdgeOutOfRange { edge, edges: self.edge_count });
        }
        if self.circuits.contains(&c) {
            return Err(LpError::DuplicateCircuit(c.edges().to_vec()));
        }
        if self.faces.contains(&c.edge_set()) {
            return Err(LpError::FacialCircuit(c.edges().to_vec()));
        }
        let mut coeffs: Vec<_> = c.edges().iter().map(|&e| (e, Rational::one())).collect();
        coeffs.push((self.margin_var(), -Rational::one()));
        self.rows.push(Row {
            kind: RowKind::Circuit(c.clone()),
            constraint: Constraint { coeffs, relation: Relation::Ge, rhs: Rational::one() },
        });
        self.circuits.insert(c);
        Ok(())
    }

    /// Snapshot form of [`Self::add_circuit`].
    pub fn with_circuit(&self, c: Circuit) -> Result<Self, LpError> {
        let mut next = self.clone();
        next.add_circuit(c)?;
        Ok(next)
    }

    fn objective(&self) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.variable_count()];
        c[self.margin_var()] = Rational::one();
        c
    }

    /// The same rows, each multiplied by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Self {
        assert!(rational::is_positive(factor), "scale factor must be positive");
        let mut out = self.clone();
        for row in &mut out.rows {
            row.constraint.coeffs.iter_mut().for_each(|(_, a)| *a *= factor);
            row.constraint.rhs *= factor;
        }
        out
    }
}

impl fmt::Display for ConstraintSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.margin_var();
        for (i, row) in self.rows.iter().enumerate() {
            write!(f, "{i:>4} {:<18}", format!("{:?}", row.kind).chars().take(18).collect::<String>())?;
            for (v, a) in &row.constraint.coeffs {
                let name = if *v == t { "t".to_string() } else { format!("w{v}") };
                write!(f, " {:+}*{name}", a)?;
            }
            let rel = match row.constraint.relation {
                Relation::Le => "<=",
                Relation::Eq => "=",
                Relation::Ge => ">=",
            };
            writeln!(f, " {rel} {}", row.constraint.rhs)?;
        }
        Ok(())
    }
}

/// Optimum of `max t` over a [`ConstraintSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginSolution {
    pub status: LpStatus,
    /// `t*`, present when optimal.
    pub margin: Option<Rational>,
    pub weights: Option<WeightVector>,
    /// Optimal dual basis, usable as a warm start after adding rows.
    pub basis: Vec<ColumnKey>,
    /// Dual value of each basic row (in row units), aligned with `basis`.
    pub dual_values: Vec<Rational>,
    pub pivots: usize,
}

impl MarginSolution {
    /// Strictly feasible: optimal with `t* > 0`.
    pub fn is_strict(&self) -> bool {
        self.margin.as_ref().is_some_and(rational::is_positive)
    }
}

/// Exact `max t` from a cold start.
pub fn maximize_margin(s: &ConstraintSystem) -> MarginSolution {
    solve(s, None)
}

/// Exact `max t`, starting from the basis of an earlier solve of a system
/// this one extends. Falls back to a cold start if the basis no longer fits.
pub fn maximize_margin_warm(s: &ConstraintSystem, basis: &[ColumnKey]) -> MarginSolution {
    solve(s, Some(basis))
}

fn solve(s: &ConstraintSystem, warm: Option<&[ColumnKey]>) -> MarginSolution {
    let sol = maximize(s.variable_count(), &s.objective(), s.rows.iter().map(|r| &r.constraint), warm);
    into_margin(sol)
}

fn into_margin(sol: Solution) -> MarginSolution {
    match sol.status {
        LpStatus::Optimal => {
            let mut x = sol.x;
            let margin = x.pop();
            MarginSolution {
                status: sol.status,
                margin,
                weights: Some(WeightVector::new(x)),
                basis: sol.basis,
                dual_values: sol.dual_values,
                pivots: sol.pivots,
            }
        }
        status => MarginSolution {
            status,
            margin: None,
            weights: None,
            basis: Vec::new(),
            dual_values: Vec::new(),
            pivots: sol.pivots,
        },
    }
}

/// Re-checks an optimal [`MarginSolution`] against `s` from scratch: every
/// row holds at the reported point, and the reported dual values are a
/// nonnegative combination of basic rows reproducing the objective.
pub fn verify_margin(s: &ConstraintSystem, m: &MarginSolution) -> Result<(), String> {
    let mut x = m.weights.clone().ok_or("no weights")?.into_inner();
    x.push(m.margin.clone().ok_or("no margin")?);
    let sol = Solution {
        status: m.status,
        objective: m.margin.clone(),
        x,
        basis: m.basis.clone(),
        dual_values: m.dual_values.clone(),
        pivots: m.pivots,
    };
    let rows: Vec<&Constraint> = s.rows.iter().map(|r| &r.constraint).collect();
    verify_optimality(&s.objective(), &rows, &sol)
}
