//! Exact simplex method over a fraction-free integer tableau.
//!
//! A problem `min c·x s.t. A x <= b` with free `x` is solved through its dual
//! `min b·y s.t. Aᵀ y = -c, y >= 0`. The dual tableau has one row per primal
//! variable, which keeps pivots cheap when there are many more constraints
//! than variables (the usual shape here). The primal optimum is read off the
//! simplex multipliers of the final dual basis.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ConstraintKind, HPolytope};
use crate::error::{Error, Result};
use crate::rational::{common_denominator, dot, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    pub objective: Vec<Rational>,
    pub constraints: HPolytope,
}

impl LpProblem {
    /// `minimize objective · x` over `constraints`.
    pub fn minimize(objective: Vec<Rational>, constraints: HPolytope) -> Result<Self> {
        if objective.len() != constraints.dim() {
            return Err(Error::DimensionMismatch {
                expected: constraints.dim(),
                found: objective.len(),
            });
        }
        Ok(Self { objective, constraints })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, witness: Vec<Rational> },
    Unbounded,
    Infeasible,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rational, Vec<Rational>)> {
        match self {
            Self::Optimal { value, witness } => Some((value, witness)),
            _ => None,
        }
    }
}

pub fn lp_solve(problem: &LpProblem) -> Result<LpOutcome> {
    let h = &problem.constraints;
    let c = &problem.objective;
    if c.len() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), found: c.len() });
    }
    let rows = as_inequalities(h);
    minimize_over(&rows, c)
}

pub(crate) type Row = (Vec<Rational>, Rational);

pub(crate) fn as_inequalities(h: &HPolytope) -> Vec<Row> {
    let mut rows = Vec::with_capacity(h.len());
    for con in h.constraints() {
        rows.push((con.coefficients.clone(), con.rhs.clone()));
        if con.kind == ConstraintKind::Equal {
            rows.push((con.coefficients.iter().map(|a| -a).collect(), -con.rhs.clone()));
        }
    }
    rows
}

pub(crate) fn minimize_over(rows: &[Row], c: &[Rational]) -> Result<LpOutcome> {
    let n = c.len();
    if n == 0 {
        return Ok(if rows.iter().all(|(_, b)| !b.is_negative()) {
            LpOutcome::Optimal { value: Rational::zero(), witness: Vec::new() }
        } else {
            LpOutcome::Infeasible
        });
    }
    let outcome = match solve_dual(rows, c) {
        Dual::Optimal(x) => {
            let value = dot(c, &x);
            check_witness(rows, &x)?;
            LpOutcome::Optimal { value, witness: x }
        }
        Dual::Unbounded => LpOutcome::Infeasible,
        Dual::Infeasible => {
            let zero = vec![Rational::zero(); n];
            match solve_dual(rows, &zero) {
                Dual::Optimal(_) => LpOutcome::Unbounded,
                Dual::Unbounded => LpOutcome::Infeasible,
                Dual::Infeasible => {
                    return Err(Error::Internal("feasibility dual has y = 0 available".into()))
                }
            }
        }
    };
    Ok(outcome)
}

fn check_witness(rows: &[Row], x: &[Rational]) -> Result<()> {
    for (a, b) in rows {
        if dot(a, x) > *b {
            return Err(Error::Internal("simplex witness violates a constraint".into()));
        }
    }
    Ok(())
}

enum Dual {
    Optimal(Vec<Rational>),
    Unbounded,
    Infeasible,
}

fn integer_row(v: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(v);
    v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect()
}

fn solve_dual(rows: &[Row], c: &[Rational]) -> Dual {
    let n = c.len();
    let m = rows.len();
    let ncols = m + n;
    // Scaling a constraint or the objective by a positive integer leaves the
    // primal optimizers unchanged.
    let scaled: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|(a, b)| {
            let mut v = a.clone();
            v.push(b.clone());
            integer_row(&v)
        })
        .collect();
    let c_int = integer_row(c);

    let mut sign = vec![false; n];
    let mut t = Tableau::new(n, ncols);
    for j in 0..n {
        let row = &mut t.rows[j];
        for (i, r) in scaled.iter().enumerate() {
            row[i] = r[j].clone();
        }
        row[m + j] = BigInt::one();
        row[ncols] = -c_int[j].clone();
        if row[ncols].is_negative() {
            sign[j] = true;
            for x in row[..m].iter_mut() {
                *x = -std::mem::take(x);
            }
            row[ncols] = -std::mem::take(&mut row[ncols]);
        }
        t.basis[j] = m + j;
    }

    // Phase 1: minimize the sum of artificials.
    let mut cost = vec![BigInt::zero(); ncols];
    for a in &mut cost[m..] {
        *a = BigInt::one();
    }
    t.set_objective(&cost);
    let real = |col: usize| col < m;
    if t.run(real).is_err() {
        unreachable!("phase one is bounded below by zero");
    }
    if !t.obj[ncols].is_zero() {
        return Dual::Infeasible;
    }
    for r in 0..n {
        if t.basis[r] >= m {
            if let Some(col) = (0..m).find(|&col| !t.rows[r][col].is_zero()) {
                t.pivot(r, col);
            }
        }
    }

    // Phase 2.
    let mut cost = vec![BigInt::zero(); ncols];
    for (i, r) in scaled.iter().enumerate() {
        cost[i] = r[n].clone();
    }
    t.set_objective(&cost);
    if t.run(real).is_err() {
        return Dual::Unbounded;
    }
    let den = Rational::from_integer(t.den.clone());
    let x = (0..n)
        .map(|j| {
            let pi = -Rational::from_integer(t.obj[m + j].clone()) / &den;
            if sign[j] {
                -pi
            } else {
                pi
            }
        })
        .collect();
    Dual::Optimal(x)
}

/// Fraction-free tableau: the true entries are `rows / den` and `obj / den`,
/// with `den > 0` the previous pivot. Updates use exact integer division.
struct Tableau {
    rows: Vec<Vec<BigInt>>,
    /// Reduced costs; the last entry is minus the objective value.
    obj: Vec<BigInt>,
    basis: Vec<usize>,
    ncols: usize,
    den: BigInt,
}

struct Unbounded;

impl Tableau {
    fn new(nrows: usize, ncols: usize) -> Self {
        Self {
            rows: vec![vec![BigInt::zero(); ncols + 1]; nrows],
            obj: vec![BigInt::zero(); ncols + 1],
            basis: vec![0; nrows],
            ncols,
            den: BigInt::one(),
        }
    }

    fn set_objective(&mut self, cost: &[BigInt]) {
        // Basic columns hold `den` in their own row.
        self.obj = cost.iter().map(|c| c * &self.den).collect();
        self.obj.push(BigInt::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (o, x) in self.obj.iter_mut().zip(&self.rows[r]) {
                if !x.is_zero() {
                    *o -= cb * x;
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        if self.rows[r][e].is_negative() {
            for x in self.rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let p = self.rows[r][e].clone();
        let den = std::mem::replace(&mut self.den, p.clone());
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let update = |row: &mut Vec<BigInt>| {
            let f = row[e].clone();
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                let mut v = &*x * &p;
                if !f.is_zero() && !pr.is_zero() {
                    v -= &f * pr;
                }
                *x = if den.is_one() { v } else { v / &den };
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                update(row);
            }
        }
        update(&mut self.obj);
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    /// Dantzig's rule (most negative reduced cost enters), switching to
    /// Bland's rule after a run of degenerate pivots so the method cannot
    /// cycle. Ratio-test ties leave by lowest basic index.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Result<(), Unbounded> {
        const DEGENERATE_RUN: usize = 50;
        let rhs = self.ncols;
        let mut degenerate = 0usize;
        loop {
            let candidates = (0..self.ncols).filter(|&j| allowed(j) && self.obj[j].is_negative());
            let entering = if degenerate < DEGENERATE_RUN {
                candidates.min_by(|&a, &b| self.obj[a].cmp(&self.obj[b]).then(a.cmp(&b)))
            } else {
                candidates.min()
            };
            let Some(e) = entering else {
                return Ok(());
            };
            // Ratios rhs/entry compared by cross multiplication (entries > 0).
            let mut leave: Option<usize> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let lr = &self.rows[l];
                        let lhs = &row[rhs] * &lr[e];
                        let rhs_v = &lr[rhs] * &row[e];
                        lhs < rhs_v || (lhs == rhs_v && self.basis[i] < self.basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
            match leave {
                Some(r) => {
                    if self.rows[r][rhs].is_zero() {
                        degenerate += 1;
                    } else {
                        degenerate = 0;
                    }
                    self.pivot(r, e)
                }
                None => return Err(Unbounded),
            }
        }
    }
}
