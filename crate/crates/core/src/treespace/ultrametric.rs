use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

/// Number of leaf pairs `C(N, 2)`.
pub fn pair_count(n_leaves: usize) -> usize {
    n_leaves * n_leaves.saturating_sub(1) / 2
}

/// Position of the pair `(i, j)`, `i < j`, 0-based, in the lexicographic order
/// `(0,1), (0,2), ..., (N-2,N-1)`.
pub fn pair_index(i: usize, j: usize, n_leaves: usize) -> usize {
    debug_assert!(i < j && j < n_leaves);
    i * (2 * n_leaves - i - 1) / 2 + (j - i - 1)
}

/// All pairs in coordinate order.
pub fn pairs(n_leaves: usize) -> Vec<(usize, usize)> {
    (0..n_leaves).flat_map(|i| (i + 1..n_leaves).map(move |j| (i, j))).collect()
}

/// The `N` with `C(N, 2) = len`, for `N >= 3`.
pub fn leaf_count_for(len: usize) -> Result<usize> {
    (3..=len + 1)
        .find(|&n| pair_count(n) >= len)
        .filter(|&n| pair_count(n) == len)
        .ok_or_else(|| Error::InvalidInput(format!("{len} is not C(N, 2) for any N >= 3")))
}

/// A triple `(i, j, k)` with `D_ik > max(D_ij, D_jk)`, 0-based.
pub fn ultrametric_violation(v: &[Rational], n_leaves: usize) -> Result<Option<(usize, usize, usize)>> {
    if v.len() != pair_count(n_leaves) {
        return Err(Error::DimensionMismatch { expected: pair_count(n_leaves), found: v.len() });
    }
    let d = |a: usize, b: usize| &v[pair_index(a.min(b), a.max(b), n_leaves)];
    for a in 0..n_leaves {
        for b in a + 1..n_leaves {
            for c in b + 1..n_leaves {
                // (i, k) is the pair opposite the middle leaf j.
                for (i, j, k) in [(a, b, c), (a, c, b), (b, a, c)] {
                    if d(i, k) > d(i, j).max(d(j, k)) {
                        return Ok(Some((i, j, k)));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_ultrametric(v: &[Rational], n_leaves: usize) -> Result<bool> {
    Ok(ultrametric_violation(v, n_leaves)?.is_none())
}

/// The metric vector of an equidistant tree: positive and ultrametric.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct UltrametricVector {
    pub n_leaves: usize,
    #[serde(with = "serde_rational::vec")]
    pub coords: Vec<Rational>,
}

impl UltrametricVector {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let n_leaves = leaf_count_for(coords.len())?;
        if let Some((i, j, k)) = ultrametric_violation(&coords, n_leaves)? {
            return Err(Error::InvalidInput(format!(
                "not an ultrametric: D({},{}) > max(D({},{}), D({},{}))",
                i + 1,
                k + 1,
                i + 1,
                j + 1,
                j + 1,
                k + 1
            )));
        }
        if coords.iter().any(|x| *x <= Rational::from_integer(0.into())) {
            return Err(Error::InvalidInput("ultrametric coordinates must be positive".into()));
        }
        Ok(Self { n_leaves, coords })
    }

    pub fn distance(&self, i: usize, j: usize) -> &Rational {
        &self.coords[pair_index(i.min(j), i.max(j), self.n_leaves)]
    }
}

/// The representative of the class of `x` whose smallest coordinate is 1.
pub fn positive_representative(x: &[Rational]) -> Vec<Rational> {
    let lo = x.iter().min().cloned().unwrap_or_default();
    let shift = Rational::from_integer(1.into()) - lo;
    x.iter().map(|c| c + &shift).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn pair_indexing_is_lexicographic() {
        let ps = pairs(4);
        assert_eq!(ps, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        for (k, &(i, j)) in ps.iter().enumerate() {
            assert_eq!(pair_index(i, j, 4), k);
        }
    }

    #[test]
    fn leaf_counts() {
        assert_eq!(leaf_count_for(3).unwrap(), 3);
        assert_eq!(leaf_count_for(6).unwrap(), 4);
        assert_eq!(leaf_count_for(15).unwrap(), 6);
        assert!(leaf_count_for(5).is_err());
        assert!(leaf_count_for(1).is_err());
    }

    #[test]
    fn all_ones_is_ultrametric() {
        assert!(is_ultrametric(&v(&[1; 6]), 4).unwrap());
    }

    #[test]
    fn violating_triple_is_reported() {
        // D12 = 1, D13 = 2, D23 = 3.
        assert_eq!(ultrametric_violation(&v(&[1, 2, 3]), 3).unwrap(), Some((1, 0, 2)));
        assert!(!is_ultrametric(&v(&[1, 2, 3]), 3).unwrap());
        assert!(is_ultrametric(&v(&[1, 2]), 3).is_err());
    }

    #[test]
    fn vector_validation() {
        assert!(UltrametricVector::new(v(&[1, 2, 2])).is_ok());
        assert!(UltrametricVector::new(v(&[1, 2, 3])).is_err());
        assert!(UltrametricVector::new(v(&[0, 0, 0])).is_err());
    }

    #[test]
    fn representative_has_min_one() {
        assert_eq!(positive_representative(&v(&[0, 0, 0])), v(&[1, 1, 1]));
        assert_eq!(positive_representative(&v(&[0, -2, 3])), v(&[3, 1, 6]));
    }
}
