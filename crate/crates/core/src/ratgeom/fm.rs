//! Fourier-Motzkin elimination.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::{ConstraintKind, HPolytope, LinearConstraint};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Projects out the coordinates in `var_indices`. The remaining coordinates
/// keep their relative order.
///
/// Equalities involving an eliminated variable are used for substitution;
/// otherwise each pair of opposite-signed inequalities is combined. The output
/// is deduplicated after scaling each row so its first nonzero coefficient has
/// absolute value one, and tautologies `0 <= b` with `b >= 0` are dropped.
pub fn project_out(h: &HPolytope, var_indices: &[usize]) -> Result<HPolytope> {
    let d = h.dim();
    let elim: BTreeSet<usize> = var_indices.iter().copied().collect();
    if let Some(&bad) = elim.iter().find(|&&i| i >= d) {
        return Err(Error::InvalidInput(format!("variable index {bad} out of range for dim {d}")));
    }
    let mut rows: Vec<LinearConstraint> = h.constraints().to_vec();
    for &v in &elim {
        rows = eliminate(rows, v, d);
    }
    let keep: Vec<usize> = (0..d).filter(|i| !elim.contains(i)).collect();
    let projected = rows.into_iter().map(|c| LinearConstraint {
        coefficients: keep.iter().map(|&i| c.coefficients[i].clone()).collect(),
        rhs: c.rhs,
        kind: c.kind,
    });
    HPolytope::from_constraints(keep.len(), projected.collect())
}

fn eliminate(rows: Vec<LinearConstraint>, v: usize, d: usize) -> Vec<LinearConstraint> {
    if let Some(pos) = rows.iter().position(|c| c.kind == ConstraintKind::Equal && !c.coefficients[v].is_zero()) {
        let pivot = rows[pos].clone();
        let out = rows
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, c)| {
                if c.coefficients[v].is_zero() {
                    return c;
                }
                let f = &c.coefficients[v] / &pivot.coefficients[v];
                LinearConstraint {
                    coefficients: c
                        .coefficients
                        .iter()
                        .zip(&pivot.coefficients)
                        .map(|(a, p)| a - &f * p)
                        .collect(),
                    rhs: &c.rhs - &f * &pivot.rhs,
                    kind: c.kind,
                }
            });
        return normalize(out.collect(), d);
    }

    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for c in rows {
        let a = &c.coefficients[v];
        if a.is_zero() {
            out.push(c);
        } else if a.is_positive() {
            pos.push(c);
        } else {
            neg.push(c);
        }
    }
    for p in &pos {
        for q in &neg {
            let sp = p.coefficients[v].clone();
            let sq = -q.coefficients[v].clone();
            let coefficients = p
                .coefficients
                .iter()
                .zip(&q.coefficients)
                .map(|(a, b)| a / &sp + b / &sq)
                .collect();
            out.push(LinearConstraint::le(coefficients, &p.rhs / &sp + &q.rhs / &sq));
        }
    }
    normalize(out, d)
}

fn normalize(rows: Vec<LinearConstraint>, d: usize) -> Vec<LinearConstraint> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut infeasible = false;
    for mut c in rows {
        match c.coefficients.iter().find(|a| !a.is_zero()).cloned() {
            None => {
                let ok = match c.kind {
                    ConstraintKind::LessEqual => !c.rhs.is_negative(),
                    ConstraintKind::Equal => c.rhs.is_zero(),
                };
                if !ok {
                    infeasible = true;
                }
                continue;
            }
            Some(lead) => {
                let s: Rational = lead.abs();
                for a in c.coefficients.iter_mut() {
                    *a /= &s;
                }
                c.rhs /= &s;
                if c.kind == ConstraintKind::Equal && lead.is_negative() {
                    for a in c.coefficients.iter_mut() {
                        *a = -a.clone();
                    }
                    c.rhs = -c.rhs.clone();
                }
            }
        }
        let key = (c.coefficients.clone(), c.rhs.clone(), c.kind == ConstraintKind::Equal);
        if seen.insert(key) {
            out.push(c);
        }
    }
    if infeasible {
        out.push(LinearConstraint::le(vec![Rational::zero(); d], -Rational::from_integer(1.into())));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn one_elimination_step() {
        let h = HPolytope::from_constraints(
            2,
            vec![LinearConstraint::le(v(&[1, 1]), int(1)), LinearConstraint::le(v(&[0, -1]), int(0))],
        )
        .unwrap();
        let p = project_out(&h, &[1]).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.constraints(), &[LinearConstraint::le(v(&[1]), int(1))]);
    }

    #[test]
    fn single_point_fw_system() {
        // Variables (u1, u2, c1): c1 >= u2 - u1, c1 >= u1 - u2, c1 <= 0.
        let h = HPolytope::from_constraints(
            3,
            vec![
                LinearConstraint::le(v(&[-1, 1, -1]), int(0)),
                LinearConstraint::le(v(&[1, -1, -1]), int(0)),
                LinearConstraint::le(v(&[0, 0, 1]), int(0)),
            ],
        )
        .unwrap();
        let p = project_out(&h, &[2]).unwrap();
        let mut got = p.constraints().to_vec();
        got.sort_by(|a, b| a.coefficients.cmp(&b.coefficients));
        assert_eq!(
            got,
            vec![LinearConstraint::le(v(&[-1, 1]), int(0)), LinearConstraint::le(v(&[1, -1]), int(0))]
        );
    }

    #[test]
    fn equality_substitution() {
        // x + y = 2, y >= 0, x >= 0 -> 0 <= x <= 2
        let h = HPolytope::from_constraints(
            2,
            vec![
                LinearConstraint::eq(v(&[1, 1]), int(2)),
                LinearConstraint::ge(v(&[0, 1]), int(0)),
                LinearConstraint::ge(v(&[1, 0]), int(0)),
            ],
        )
        .unwrap();
        let p = project_out(&h, &[1]).unwrap();
        assert!(p.contains(&v(&[2])) && p.contains(&v(&[0])));
        assert!(!p.contains(&v(&[3])) && !p.contains(&v(&[-1])));
    }

    #[test]
    fn out_of_range_index() {
        assert!(project_out(&HPolytope::new(2), &[2]).is_err());
    }
}
