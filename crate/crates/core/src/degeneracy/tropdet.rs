use serde::Serialize;

use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropDetReport {
    /// `min over permutations p of sum_i x[i][p(i)]`.
    #[serde(with = "serde_rational")]
    pub value: Rational,
    pub attaining_permutations: u64,
    /// The minimum is attained by two or more permutations.
    pub singular: bool,
    /// No two permutations give the same sum.
    pub distinct_terms: bool,
}

pub fn tropical_determinant(square: &[Vec<Rational>], budgets: &Budgets) -> Result<TropDetReport> {
    let k = square.len();
    if k == 0 {
        return Err(Error::InvalidInput("tropical determinant of an empty matrix".into()));
    }
    if let Some(r) = square.iter().find(|r| r.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: r.len() });
    }
    if k > budgets.permutation_side_limit {
        return Err(Error::BudgetExceeded {
            what: "tropical determinant side",
            size: k as u128,
            limit: budgets.permutation_side_limit as u128,
        });
    }
    let mut terms = Vec::new();
    let mut used = vec![false; k];
    permutation_sums(square, 0, &mut used, Rational::from_integer(0.into()), &mut terms);
    terms.sort_unstable();
    let value = terms[0].clone();
    let attaining = terms.iter().take_while(|t| **t == value).count() as u64;
    let distinct_terms = terms.windows(2).all(|w| w[0] != w[1]);
    Ok(TropDetReport { value, attaining_permutations: attaining, singular: attaining >= 2, distinct_terms })
}

fn permutation_sums(x: &[Vec<Rational>], row: usize, used: &mut [bool], acc: Rational, out: &mut Vec<Rational>) {
    if row == x.len() {
        out.push(acc);
        return;
    }
    for col in 0..x.len() {
        if !used[col] {
            used[col] = true;
            permutation_sums(x, row + 1, used, &acc + &x[row][col], out);
            used[col] = false;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorEntry {
    /// 1-based row and column indices of the minor.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub report: TropDetReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorsReport {
    pub minors: Vec<MinorEntry>,
    pub any_singular: bool,
    pub any_equal_terms: bool,
}

/// Tropical determinants of every square minor, ordered by size and then
/// lexicographically by row and column sets.
pub fn all_minors_report(matrix: &[Vec<Rational>], budgets: &Budgets) -> Result<MinorsReport> {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    if let Some(r) = matrix.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: r.len() });
    }
    let mut minors = Vec::new();
    for k in 1..=m.min(n) {
        for rows in combinations(m, k) {
            for cols in combinations(n, k) {
                let sub: Vec<Vec<Rational>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| matrix[i][j].clone()).collect()).collect();
                let report = tropical_determinant(&sub, budgets)?;
                minors.push(MinorEntry {
                    rows: rows.iter().map(|i| i + 1).collect(),
                    cols: cols.iter().map(|j| j + 1).collect(),
                    report,
                });
            }
        }
    }
    let any_singular = minors.iter().any(|e| e.report.singular);
    let any_equal_terms = minors.iter().any(|e| !e.report.distinct_terms);
    Ok(MinorsReport { minors, any_singular, any_equal_terms })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn anti_diagonal_ones() {
        let r = tropical_determinant(&mat(&[&[0, 1], &[1, 0]]), &Budgets::default()).unwrap();
        assert_eq!(r.value, int(0));
        assert_eq!(r.attaining_permutations, 1);
        assert!(!r.singular);
        assert!(r.distinct_terms);
    }

    #[test]
    fn zero_matrix_is_singular() {
        let r = tropical_determinant(&mat(&[&[0, 0], &[0, 0]]), &Budgets::default()).unwrap();
        assert_eq!(r.value, int(0));
        assert_eq!(r.attaining_permutations, 2);
        assert!(r.singular);
        assert!(!r.distinct_terms);
    }

    #[test]
    fn three_by_three_counts() {
        // Terms: 1+5+9, 1+6+8, 2+4+9, 2+6+7, 3+4+8, 3+5+7.
        let r = tropical_determinant(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]), &Budgets::default()).unwrap();
        assert_eq!(r.value, int(15));
        assert_eq!(r.attaining_permutations, 6);
    }

    #[test]
    fn rejects_non_square_and_oversized() {
        assert!(tropical_determinant(&mat(&[&[0, 1]]), &Budgets::default()).is_err());
        let b = Budgets { permutation_side_limit: 1, ..Budgets::default() };
        assert!(tropical_determinant(&mat(&[&[0, 1], &[1, 0]]), &b).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn minor_count_of_five_by_three() {
        let m = mat(&[&[1, -1, -1], &[-1, 1, -1], &[1, 1, -1], &[0, -1, 1], &[-1, 0, 1]]);
        let r = all_minors_report(&m, &Budgets::default()).unwrap();
        assert_eq!(r.minors.len(), 15 + 30 + 10);
    }
}
