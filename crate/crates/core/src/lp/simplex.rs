//! Exact two-phase revised simplex.
//!
//! Solves `max c.x` over free variables `x` subject to rows
//! `a.x (<=|=|>=) b` by running the primal simplex on the dual
//!
//! ```text
//! min b.y   s.t.  A^T y = c,  y >= 0
//! ```
//!
//! where every row becomes one dual column in `<=` form (equalities give two
//! columns). The basis is `n x n` for `n` primal variables however many rows
//! there are, which suits systems with few variables and many rows. The
//! simplex multipliers of an optimal dual basis are the primal optimum.
//!
//! Each dual column is stored as a primitive integer vector (a positive
//! multiple of the row), so positive row scaling does not change the path.
//! Pricing runs with Dantzig's rule and falls back to Bland's rule for the
//! rest of the phase after a run of degenerate pivots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
const STALL_LIMIT: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// `coeffs . x  relation  rhs`, with sparse `(variable, coefficient)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    /// No point satisfies every row.
    Infeasible,
    /// The dual is infeasible: the objective is unbounded above, or the rows
    /// are also infeasible.
    Unbounded,
}

/// A dual column: row `row` taken as `<=` (`negated == false`) or, for
/// `>=` rows and the second half of an equality, as its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnKey {
    pub row: usize,
    pub negated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub status: LpStatus,
    /// Primal optimum; empty unless optimal.
    pub x: Vec<Rational>,
    pub objective: Option<Rational>,
    /// Optimal dual basis and the dual values on it; empty unless optimal.
    pub basis: Vec<ColumnKey>,
    pub dual_values: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Debug, Clone)]
struct Column {
    key: ColumnKey,
    coeffs: Vec<(usize, BigInt)>,
    rhs: BigInt,
    /// Positive factor taking the (signed) row to this column.
    scale: Rational,
}

fn columns<'a, I>(num_vars: usize, rows: I) -> Vec<Column>
where
    I: IntoIterator<Item = &'a Constraint>,
{
    let mut out = Vec::new();
    for (row, c) in rows.into_iter().enumerate() {
        debug_assert!(c.coeffs.iter().all(|&(v, _)| v < num_vars));
        let sides: &[bool] = match c.relation {
            Relation::Le => &[false],
            Relation::Ge => &[true],
            Relation::Eq => &[false, true],
        };
        for &negated in sides {
            out.push(integer_column(ColumnKey { row, negated }, c));
        }
    }
    out
}

/// Smallest positive integer multiple of the row (negated if asked).
fn integer_column(key: ColumnKey, c: &Constraint) -> Column {
    let mut merged: Vec<(usize, Rational)> = Vec::new();
    let mut sorted = c.coeffs.clone();
    sorted.sort_by_key(|&(v, _)| v);
    for (v, a) in sorted {
        match merged.last_mut() {
            Some((last, acc)) if *last == v => *acc += a,
            _ => merged.push((v, a)),
        }
    }
    merged.retain(|(_, a)| !a.is_zero());
    let lcm = merged
        .iter()
        .map(|(_, a)| a.denom())
        .chain(std::iter::once(c.rhs.denom()))
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let scale = |q: &Rational| (q * Rational::from_integer(lcm.clone())).to_integer();
    let mut coeffs: Vec<(usize, BigInt)> = merged.iter().map(|(v, a)| (*v, scale(a))).collect();
    let mut rhs = scale(&c.rhs);
    let gcd = coeffs
        .iter()
        .map(|(_, a)| a)
        .chain(std::iter::once(&rhs))
        .fold(BigInt::zero(), |g, a| g.gcd(a));
    let mut scale = Rational::from_integer(lcm);
    if !gcd.is_zero() && !gcd.is_one() {
        coeffs.iter_mut().for_each(|(_, a)| *a /= &gcd);
        rhs /= &gcd;
        scale /= Rational::from_integer(gcd);
    }
    if key.negated {
        coeffs.iter_mut().for_each(|(_, a)| *a = -&*a);
        rhs = -rhs;
    }
    Column { key, coeffs, rhs, scale }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Var {
    Real(usize),
    Artificial(usize),
}

struct Revised<'a> {
    cols: &'a [Column],
    c: &'a [Rational],
    binv: Vec<Vec<Rational>>,
    basis: Vec<Var>,
    xb: Vec<Rational>,
    in_basis: Vec<bool>,
    pivots: usize,
}

enum Phase {
    One,
    Two,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl<'a> Revised<'a> {
    fn cold(cols: &'a [Column], c: &'a [Rational]) -> Self {
        let n = c.len();
        let mut binv = vec![vec![Rational::zero(); n]; n];
        for (i, row) in binv.iter_mut().enumerate() {
            row[i] = if c[i].is_negative() { -Rational::one() } else { Rational::one() };
        }
        Self {
            cols,
            c,
            binv,
            basis: (0..n).map(Var::Artificial).collect(),
            xb: c.iter().map(|x| x.abs()).collect(),
            in_basis: vec![false; cols.len()],
            pivots: 0,
        }
    }

    /// Starts from a previously optimal basis, if it is still a nonsingular
    /// feasible basis of this column set.
    fn warm(cols: &'a [Column], c: &'a [Rational], keys: &[ColumnKey]) -> Option<Self> {
        let n = c.len();
        if keys.len() != n {
            return None;
        }
        let basis: Vec<usize> = keys
            .iter()
            .map(|k| cols.iter().position(|col| col.key == *k))
            .collect::<Option<_>>()?;
        let mut b = vec![vec![Rational::zero(); n]; n];
        for (j, &col) in basis.iter().enumerate() {
            for (v, a) in &cols[col].coeffs {
                b[*v][j] = Rational::from_integer(a.clone());
            }
        }
        let binv = invert(b)?;
        let xb = mat_vec(&binv, c);
        if xb.iter().any(Signed::is_negative) {
            return None;
        }
        let mut in_basis = vec![false; cols.len()];
        basis.iter().for_each(|&j| in_basis[j] = true);
        Some(Self {
            cols,
            c,
            binv,
            basis: basis.into_iter().map(Var::Real).collect(),
            xb,
            in_basis,
            pivots: 0,
        })
    }

    fn n(&self) -> usize {
        self.c.len()
    }

    fn cost(&self, var: Var, phase: &Phase) -> Rational {
        match (var, phase) {
            (Var::Artificial(_), Phase::One) => Rational::one(),
            (Var::Artificial(_), Phase::Two) => Rational::zero(),
            (Var::Real(_), Phase::One) => Rational::zero(),
            (Var::Real(j), Phase::Two) => Rational::from_integer(self.cols[j].rhs.clone()),
        }
    }

    /// Simplex multipliers `cost_B^T B^-1`.
    fn multipliers(&self, phase: &Phase) -> Vec<Rational> {
        let n = self.n();
        let mut pi = vec![Rational::zero(); n];
        for (i, &var) in self.basis.iter().enumerate() {
            let cost = self.cost(var, phase);
            if cost.is_zero() {
                continue;
            }
            for (k, p) in pi.iter_mut().enumerate() {
                if !self.binv[i][k].is_zero() {
                    *p += &cost * &self.binv[i][k];
                }
            }
        }
        pi
    }

    fn direction(&self, j: usize) -> Vec<Rational> {
        let n = self.n();
        let mut u = vec![Rational::zero(); n];
        for (i, ui) in u.iter_mut().enumerate() {
            for (v, a) in &self.cols[j].coeffs {
                if !self.binv[i][*v].is_zero() {
                    *ui += &self.binv[i][*v] * Rational::from_integer(a.clone());
                }
            }
        }
        u
    }

    fn pivot(&mut self, r: usize, entering: usize, u: &[Rational]) {
        let pivot = u[r].clone();
        for x in self.binv[r].iter_mut() {
            *x /= &pivot;
        }
        self.xb[r] /= &pivot;
        let row = self.binv[r].clone();
        let xr = self.xb[r].clone();
        for (i, ui) in u.iter().enumerate() {
            if i == r || ui.is_zero() {
                continue;
            }
            for (x, p) in self.binv[i].iter_mut().zip(&row) {
                if !p.is_zero() {
                    *x -= ui * p;
                }
            }
            self.xb[i] -= ui * &xr;
        }
        if let Var::Real(old) = self.basis[r] {
            self.in_basis[old] = false;
        }
        self.basis[r] = Var::Real(entering);
        self.in_basis[entering] = true;
        self.pivots += 1;
    }

    fn run(&mut self, phase: Phase) -> Outcome {
        let mut bland = false;
        let mut stalled = 0;
        loop {
            let Some(entering) = self.price(&phase, bland) else {
                return Outcome::Optimal;
            };
            let u = self.direction(entering);
            let mut leave: Option<(usize, Rational)> = None;
            for (i, ui) in u.iter().enumerate() {
                if !ui.is_positive() {
                    continue;
                }
                let ratio = &self.xb[i] / ui;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, ratio)) = leave else {
                return Outcome::Unbounded;
            };
            if ratio.is_zero() {
                stalled += 1;
                if stalled > STALL_LIMIT {
                    bland = true;
                }
            } else {
                stalled = 0;
            }
            self.pivot(r, entering, &u);
        }
    }

    /// Entering column: most negative reduced cost, or the first negative one
    /// under Bland's rule. Reduced costs are compared scaled by the common
    /// denominator of the multipliers.
    fn price(&self, phase: &Phase, bland: bool) -> Option<usize> {
        let pi = self.multipliers(phase);
        let denom = pi.iter().fold(BigInt::one(), |acc, p| acc.lcm(p.denom()));
        let scaled: Vec<BigInt> =
            pi.iter().map(|p| (p * Rational::from_integer(denom.clone())).to_integer()).collect();
        let mut best: Option<(usize, BigInt)> = None;
        for (j, col) in self.cols.iter().enumerate() {
            if self.in_basis[j] {
                continue;
            }
            let mut d = match phase {
                Phase::One => BigInt::zero(),
                Phase::Two => &col.rhs * &denom,
            };
            for (v, a) in &col.coeffs {
                if !scaled[*v].is_zero() {
                    d -= a * &scaled[*v];
                }
            }
            if !d.is_negative() {
                continue;
            }
            if bland {
                return Some(j);
            }
            if best.as_ref().is_none_or(|(_, b)| d < *b) {
                best = Some((j, d));
            }
        }
        best.map(|(j, _)| j)
    }

    fn phase_one_residual(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.xb)
            .filter(|(v, _)| matches!(v, Var::Artificial(_)))
            .fold(Rational::zero(), |acc, (_, x)| acc + x)
    }

    /// Pivots zero-level artificials out where some real column allows it.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.n() {
            if !matches!(self.basis[r], Var::Artificial(_)) {
                continue;
            }
            let candidate = (0..self.cols.len()).filter(|&j| !self.in_basis[j]).find_map(|j| {
                let u = self.direction(j);
                (!u[r].is_zero()).then_some((j, u))
            });
            if let Some((j, u)) = candidate {
                self.pivot(r, j, &u);
            }
        }
    }
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

/// Gauss-Jordan inverse; `None` if singular.
pub(crate) fn invert(mut m: Vec<Vec<Rational>>) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        inv.swap(col, p);
        let pivot = m[col][col].clone();
        for x in m[col].iter_mut().chain(inv[col].iter_mut()) {
            *x /= &pivot;
        }
        let (mrow, irow) = (m[col].clone(), inv[col].clone());
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for (x, p) in m[r].iter_mut().zip(&mrow) {
                *x -= &f * p;
            }
            for (x, p) in inv[r].iter_mut().zip(&irow) {
                *x -= &f * p;
            }
        }
    }
    Some(inv)
}

/// Maximises `objective . x` over the rows, optionally warm-started from a
/// basis returned by an earlier solve whose rows are a prefix of these.
pub fn maximize<'a, I>(
    num_vars: usize,
    objective: &[Rational],
    rows: I,
    warm_start: Option<&[ColumnKey]>,
) -> Solution
where
    I: IntoIterator<Item = &'a Constraint>,
{
    assert_eq!(objective.len(), num_vars, "objective length");
    let cols = columns(num_vars, rows);
    let warm = warm_start.and_then(|keys| Revised::warm(&cols, objective, keys));
    let mut solver = match warm {
        Some(s) => s,
        None => {
            let mut s = Revised::cold(&cols, objective);
            s.run(Phase::One);
            if s.phase_one_residual().is_positive() {
                return Solution::without_optimum(LpStatus::Unbounded, s.pivots);
            }
            s.drive_out_artificials();
            s
        }
    };
    match solver.run(Phase::Two) {
        Outcome::Unbounded => Solution::without_optimum(LpStatus::Infeasible, solver.pivots),
        Outcome::Optimal => {
            let x = solver.multipliers(&Phase::Two);
            let objective = x.iter().zip(objective).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
            let mut basis = Vec::new();
            let mut dual_values = Vec::new();
            for (var, y) in solver.basis.iter().zip(&solver.xb) {
                if let Var::Real(j) = var {
                    basis.push(cols[*j].key);
                    dual_values.push(y * &cols[*j].scale);
                }
            }
            Solution {
                status: LpStatus::Optimal,
                x,
                objective: Some(objective),
                basis,
                dual_values,
                pivots: solver.pivots,
            }
        }
    }
}

impl Solution {
    fn without_optimum(status: LpStatus, pivots: usize) -> Self {
        Self { status, x: Vec::new(), objective: None, basis: Vec::new(), dual_values: Vec::new(), pivots }
    }
}

/// Re-derives optimality of `solution` from scratch: `x` satisfies every row,
/// the dual values are nonnegative and reproduce the objective through the
/// basic rows, and the objective values agree. Returns a description of the
/// first failure.
pub fn verify_optimality(
    objective: &[Rational],
    rows: &[&Constraint],
    solution: &Solution,
) -> Result<(), String> {
    if solution.status != LpStatus::Optimal {
        return Err(format!("status {:?}", solution.status));
    }
    let x = &solution.x;
    for (i, row) in rows.iter().enumerate() {
        let lhs = row.coeffs.iter().fold(Rational::zero(), |acc, (v, a)| acc + a * &x[*v]);
        let ok = match row.relation {
            Relation::Le => lhs <= row.rhs,
            Relation::Ge => lhs >= row.rhs,
            Relation::Eq => lhs == row.rhs,
        };
        if !ok {
            return Err(format!("row {i} violated: {lhs} vs {}", row.rhs));
        }
    }
    // Reduced costs of the dual are exactly the primal slacks checked above;
    // now the dual side: y >= 0 and A_B^T y = c.
    let mut combo = vec![Rational::zero(); objective.len()];
    let mut dual_objective = Rational::zero();
    for (key, y) in solution.basis.iter().zip(&solution.dual_values) {
        if y.is_negative() {
            return Err(format!("negative dual value on {key:?}"));
        }
        let row = rows[key.row];
        let sign = if key.negated { -Rational::one() } else { Rational::one() };
        for (v, a) in &row.coeffs {
            combo[*v] += &sign * a * y;
        }
        dual_objective += &sign * &row.rhs * y;
    }
    if combo != objective {
        return Err("basic rows do not combine to the objective".into());
    }
    let primal = x.iter().zip(objective).fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    if Some(&primal) != solution.objective.as_ref() || primal != dual_objective {
        return Err(format!("objective mismatch: primal {primal}, dual {dual_objective}"));
    }
    Ok(())
}
