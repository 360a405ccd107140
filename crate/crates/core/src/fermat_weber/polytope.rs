use serde::Serialize;

use super::lp::{distance_constraints, sum_of_distances_row};
use super::{direct_inequalities, min_sum_lp, SampleMatrix};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::ratgeom::{enumerate_vertices, facets, HPolytope, LinearConstraint, VPolytope};
use crate::rational::{serde_rational, Rational};
use crate::tropical::{trop_dist, QuotientPoint};

/// How the Fermat-Weber polytope is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FwMethod {
    /// Enumerate the polytope in `(u, c)` space and project.
    #[default]
    Extended,
    /// Enumerate the direct `(n(n-1))^m` inequality family in `u` space.
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FwResult {
    #[serde(with = "serde_rational")]
    pub d: Rational,
    /// Vertices in canonical coordinates (leading coordinate zero).
    pub polytope: VPolytope,
    pub unique: bool,
}

impl FwResult {
    pub fn vertices(&self) -> Vec<QuotientPoint> {
        self.polytope
            .vertices
            .iter()
            .map(|v| QuotientPoint::from_reduced(&v[1..]))
            .collect()
    }

    pub fn affine_dim(&self) -> i64 {
        self.polytope.affine_dim
    }
}

pub fn fw_polytope(sample: &SampleMatrix) -> Result<FwResult> {
    fw_polytope_with(sample, FwMethod::Extended, &Budgets::default())
}

/// The set of Fermat-Weber points of `sample`.
///
/// The extended method enumerates `{(u, c) : distance constraints, sum c = d}`
/// and projects onto `u`. Projected points that fall inside the hull of the
/// others are removed, so the result is exactly the vertex set.
pub fn fw_polytope_with(sample: &SampleMatrix, method: FwMethod, budgets: &Budgets) -> Result<FwResult> {
    let d = min_sum_lp(sample)?;
    let n = sample.n();
    let points: Vec<Vec<Rational>> = match method {
        FwMethod::Extended => {
            let dim = n - 1 + sample.m();
            let mut h = HPolytope::from_constraints(dim, distance_constraints(sample))?;
            h.push(LinearConstraint::eq(sum_of_distances_row(sample), d.clone()))?;
            let ext = enumerate_vertices(&h)?;
            ext.vertices.iter().map(|v| with_leading_zero(&v[..n - 1])).collect()
        }
        FwMethod::Direct => {
            let h = direct_inequalities(sample, &d, budgets)?;
            enumerate_vertices(&h)?.vertices.iter().map(|v| with_leading_zero(v)).collect()
        }
    };
    if points.is_empty() {
        return Err(Error::Internal("Fermat-Weber polytope came out empty".into()));
    }
    let polytope = VPolytope::from_points(n, points)?;
    let unique = polytope.len() == 1;
    Ok(FwResult { d, polytope, unique })
}

fn with_leading_zero(reduced: &[Rational]) -> Vec<Rational> {
    let mut v = Vec::with_capacity(reduced.len() + 1);
    v.push(Rational::from_integer(0.into()));
    v.extend_from_slice(reduced);
    v
}

/// An irredundant H-representation of the Fermat-Weber polytope in the
/// reduced coordinates `(x_2..x_n)`.
pub fn fw_h_polytope(fw: &FwResult) -> Result<HPolytope> {
    let reduced: Vec<Vec<Rational>> = fw.polytope.vertices.iter().map(|v| v[1..].to_vec()).collect();
    let dim = fw.polytope.ambient_dim - 1;
    facets(&VPolytope::from_points(dim, reduced)?)
}

/// Whether `sum_i d_tr(x, v_i)` equals `d` exactly.
pub fn is_fw_point(x: &QuotientPoint, sample: &SampleMatrix, d: &Rational) -> Result<bool> {
    if x.dim() != sample.n() {
        return Err(Error::DimensionMismatch { expected: sample.n(), found: x.dim() });
    }
    let mut total = Rational::from_integer(0.into());
    for v in sample.rows() {
        total += trop_dist(x, v)?;
    }
    Ok(total == *d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn coords(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn triangle_polytope() {
        let s = SampleMatrix::from_integers(&[&[0, 0, 0], &[0, 3, 1], &[0, 2, 5]]).unwrap();
        let fw = fw_polytope(&s).unwrap();
        assert_eq!(fw.d, int(7));
        assert_eq!(fw.polytope.vertices, vec![coords(&[0, 1, 1]), coords(&[0, 2, 1]), coords(&[0, 2, 2])]);
        assert_eq!(fw.affine_dim(), 2);
        assert!(!fw.unique);
    }

    #[test]
    fn single_point_sample() {
        let s = SampleMatrix::from_integers(&[&[3, 1, 4, 1]]).unwrap();
        let fw = fw_polytope(&s).unwrap();
        assert_eq!(fw.d, int(0));
        assert!(fw.unique);
        assert_eq!(fw.vertices(), vec![s.row(0).clone()]);
    }

    #[test]
    fn direct_method_agrees_on_small_sample() {
        let s = SampleMatrix::from_integers(&[&[0, 0, 0], &[0, 3, 1], &[0, 2, 5]]).unwrap();
        let a = fw_polytope_with(&s, FwMethod::Extended, &Budgets::default()).unwrap();
        let b = fw_polytope_with(&s, FwMethod::Direct, &Budgets::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn membership_examples() {
        let s = SampleMatrix::from_integers(&[&[0, 0, 0], &[0, 3, 1], &[0, 2, 5]]).unwrap();
        let x = QuotientPoint::new(coords(&[0, 1, 1])).unwrap();
        assert!(is_fw_point(&x, &s, &int(7)).unwrap());
        let origin = QuotientPoint::new(coords(&[0, 0, 0])).unwrap();
        assert!(!is_fw_point(&origin, &s, &int(7)).unwrap());
        let short = QuotientPoint::new(coords(&[0, 0])).unwrap();
        assert!(is_fw_point(&short, &s, &int(7)).is_err());
    }
}
