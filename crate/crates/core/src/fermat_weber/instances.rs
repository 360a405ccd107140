//! Named samples with known Fermat-Weber structure.

use super::SampleMatrix;
use crate::error::{Error, Result};

/// The `n × n` circulant sample with entries `1` where `j - i ≡ 0, 1`,
/// `-1` where `j - i ≡ 2, 3 (mod n)` and `0` elsewhere. It is essential and
/// its only Fermat-Weber point is the origin, at distance sum `2n`.
pub fn circulant_instance(n: usize) -> Result<SampleMatrix> {
    if n < 4 {
        return Err(Error::InvalidInput(format!(
            "the circulant construction needs n >= 4 (got {n}); use three_point_unique_instance for n = 3"
        )));
    }
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (j + n - i) % n {
                    0 | 1 => 1,
                    2 | 3 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    SampleMatrix::from_integers(&refs)
}

/// `{(-1,1,1), (1,-1,1), (1,1,-1)}`: essential, unique Fermat-Weber point `0`.
pub fn three_point_unique_instance() -> SampleMatrix {
    SampleMatrix::from_integers(&[&[-1, 1, 1], &[1, -1, 1], &[1, 1, -1]]).expect("valid")
}

/// Three points in `R^3/R1` whose Fermat-Weber set is a triangle.
pub fn triangle_sample() -> SampleMatrix {
    SampleMatrix::from_integers(&[&[0, 0, 0], &[0, 3, 1], &[0, 2, 5]]).expect("valid")
}

/// Three points in `R^4/R1` with a similar-pair degeneracy but a segment of
/// Fermat-Weber points.
pub fn segment_sample() -> SampleMatrix {
    SampleMatrix::from_integers(&[&[0, 0, 0, 5], &[0, 0, 3, 1], &[0, 4, 5, 7]]).expect("valid")
}

/// Five points in `R^3/R1`, essential with unique Fermat-Weber point `0`,
/// none of whose square minors is tropically singular.
pub fn five_point_unique_sample() -> SampleMatrix {
    SampleMatrix::from_integers(&[&[1, -1, -1], &[-1, 1, -1], &[1, 1, -1], &[0, -1, 1], &[-1, 0, 1]])
        .expect("valid")
}

/// The raw (uncanonicalized) rows of [`five_point_unique_sample`].
pub fn five_point_unique_matrix() -> Vec<Vec<i64>> {
    vec![vec![1, -1, -1], vec![-1, 1, -1], vec![1, 1, -1], vec![0, -1, 1], vec![-1, 0, 1]]
}
