use num_traits::Zero;

use super::SampleMatrix;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::ratgeom::{lp_solve, HPolytope, LinearConstraint, LpOutcome, LpProblem};
use crate::rational::{one, Rational};

/// The rows `u_j - u_k - c_i <= M_ij - M_ik` for every sample row `i` and
/// ordered column pair `j != k`, over `(u_2..u_n, c_1..c_m)`.
pub fn distance_constraints(sample: &SampleMatrix) -> Vec<LinearConstraint> {
    let (m, n) = (sample.m(), sample.n());
    let dim = n - 1 + m;
    let mut rows = Vec::with_capacity(m * n * (n - 1));
    for i in 0..m {
        for j in 0..n {
            for k in 0..n {
                if j == k {
                    continue;
                }
                let mut a = vec![Rational::zero(); dim];
                if j > 0 {
                    a[j - 1] += one();
                }
                if k > 0 {
                    a[k - 1] -= one();
                }
                a[n - 1 + i] = -one();
                rows.push(LinearConstraint::le(a, sample.entry(i, j) - sample.entry(i, k)));
            }
        }
    }
    rows
}

pub(crate) fn sum_of_distances_row(sample: &SampleMatrix) -> Vec<Rational> {
    let n = sample.n();
    let mut a = vec![Rational::zero(); n - 1 + sample.m()];
    for c in &mut a[n - 1..] {
        *c = one();
    }
    a
}

/// `d(v_1..v_m)` as the optimum of `min sum c_i` over the distance
/// constraints.
pub fn min_sum_lp(sample: &SampleMatrix) -> Result<Rational> {
    let dim = sample.n() - 1 + sample.m();
    let h = HPolytope::from_constraints(dim, distance_constraints(sample))?;
    let problem = LpProblem::minimize(sum_of_distances_row(sample), h)?;
    match lp_solve(&problem)? {
        LpOutcome::Optimal { value, .. } => Ok(value),
        other => Err(Error::Internal(format!("distance-sum LP returned {other:?}"))),
    }
}

/// The family `sum_i (x_{j_i} - x_{k_i}) <= bound + sum_i (M_{i,j_i} - M_{i,k_i})`
/// over all choices of ordered pairs `j_i != k_i`, in the reduced coordinates
/// `(x_2..x_n)`. Its size is `(n(n-1))^m`, so it is only practical for tiny
/// samples.
pub fn direct_inequalities(
    sample: &SampleMatrix,
    bound: &Rational,
    budgets: &Budgets,
) -> Result<HPolytope> {
    let (m, n) = (sample.m(), sample.n());
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|j| (0..n).filter(move |&k| k != j).map(move |k| (j, k))).collect();
    let count = (pairs.len() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if count > budgets.direct_row_limit {
        return Err(Error::BudgetExceeded {
            what: "direct inequality family",
            size: count,
            limit: budgets.direct_row_limit,
        });
    }
    let mut h = HPolytope::new(n - 1);
    let mut seen = std::collections::BTreeSet::new();
    let mut choice = vec![0usize; m];
    loop {
        let mut a = vec![Rational::zero(); n - 1];
        let mut rhs = bound.clone();
        for (i, &c) in choice.iter().enumerate() {
            let (j, k) = pairs[c];
            if j > 0 {
                a[j - 1] += one();
            }
            if k > 0 {
                a[k - 1] -= one();
            }
            rhs += sample.entry(i, j) - sample.entry(i, k);
        }
        if seen.insert((a.clone(), rhs.clone())) {
            h.push(LinearConstraint::le(a, rhs))?;
        }
        // Odometer step.
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(h);
            }
            choice[pos] += 1;
            if choice[pos] < pairs.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}
