//! The assignment-pair formula for the minimal distance sum.
//!
//! `d = max |sum_i M[i][sigma(i)] - sum_i M[i][tau(i)]|` over functions
//! `sigma, tau : [m] -> [n]` taking the same multiset of values. Functions are
//! grouped by their preimage-count vector `w_sigma`; within a group the best
//! pair is the difference between the largest and the smallest sum.

use std::collections::HashMap;

use serde::Serialize;

use super::SampleMatrix;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

/// Two functions `[m] -> [n]`, stored as column indices per row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssignmentPair {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
}

impl AssignmentPair {
    /// `w[j] = |f^{-1}(j)|`.
    pub fn weights(f: &[usize], n: usize) -> Vec<u32> {
        let mut w = vec![0u32; n];
        for &j in f {
            w[j] += 1;
        }
        w
    }

    pub fn is_admissible(&self, n: usize) -> bool {
        self.sigma.len() == self.tau.len() && Self::weights(&self.sigma, n) == Self::weights(&self.tau, n)
    }

    /// `|sum M[i][sigma(i)] - sum M[i][tau(i)]|`.
    pub fn value(&self, sample: &SampleMatrix) -> Rational {
        let s: Rational = self.sigma.iter().enumerate().map(|(i, &j)| sample.entry(i, j)).sum();
        let t: Rational = self.tau.iter().enumerate().map(|(i, &j)| sample.entry(i, j)).sum();
        let diff = s - t;
        if diff < Rational::from_integer(0.into()) {
            -diff
        } else {
            diff
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AssignmentOptimum {
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub pair: AssignmentPair,
}

fn check_budget(sample: &SampleMatrix, budgets: &Budgets) -> Result<()> {
    let size = (sample.n() as u128).checked_pow(sample.m() as u32).unwrap_or(u128::MAX);
    if size > budgets.assignment_limit {
        return Err(Error::BudgetExceeded {
            what: "assignment enumeration n^m",
            size,
            limit: budgets.assignment_limit,
        });
    }
    Ok(())
}

/// An assignment sum together with the assignment attaining it.
type Extreme = (Rational, Vec<usize>);

/// An admissible pair attaining the maximum, with its value.
pub fn best_assignment_pair(sample: &SampleMatrix, budgets: &Budgets) -> Result<AssignmentOptimum> {
    check_budget(sample, budgets)?;
    let (m, n) = (sample.m(), sample.n());
    // weights -> (largest sum, smallest sum)
    let mut groups: HashMap<Vec<u32>, (Extreme, Extreme)> = HashMap::new();
    let mut f = vec![0usize; m];
    loop {
        let s: Rational = f.iter().enumerate().map(|(i, &j)| sample.entry(i, j)).sum();
        let w = AssignmentPair::weights(&f, n);
        match groups.get_mut(&w) {
            None => {
                groups.insert(w, ((s.clone(), f.clone()), (s, f.clone())));
            }
            Some((hi, lo)) => {
                if s > hi.0 {
                    *hi = (s.clone(), f.clone());
                }
                if s < lo.0 {
                    *lo = (s, f.clone());
                }
            }
        }
        let mut pos = 0;
        loop {
            if pos == m {
                let best = groups
                    .into_values()
                    .max_by(|a, b| (&a.0 .0 - &a.1 .0).cmp(&(&b.0 .0 - &b.1 .0)))
                    .expect("at least one function");
                let ((hs, sigma), (ls, tau)) = best;
                return Ok(AssignmentOptimum { value: hs - ls, pair: AssignmentPair { sigma, tau } });
            }
            f[pos] += 1;
            if f[pos] < n {
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

/// The minimal distance sum by full enumeration of assignment pairs.
/// Refuses samples with `n^m` above the configured budget.
pub fn min_sum_combinatorial(sample: &SampleMatrix, budgets: &Budgets) -> Result<Rational> {
    Ok(best_assignment_pair(sample, budgets)?.value)
}
