//! Shared inputs for the benchmarks in `benches/`.

use tropfw_core::rational::ratio;
use tropfw_core::{HPolytope, LinearConstraint, LpProblem, Rational};

/// `minimize -sum x` over `[0, 10]^d` cut by `d` dense rows with small
/// rational coefficients.
pub fn dense_lp(d: usize) -> LpProblem {
    let mut h = HPolytope::bounding_box(d, &ratio(0, 1), &ratio(10, 1));
    for i in 0..d {
        let row: Vec<Rational> = (0..d).map(|j| ratio(((i * 7 + j * 3) % 11) as i64 + 1, (j % 3) as i64 + 1)).collect();
        h.push(LinearConstraint::le(row, ratio(40 + i as i64, 1))).expect("dimensions match");
    }
    LpProblem::minimize(vec![ratio(-1, 1); d], h).expect("dimensions match")
}
