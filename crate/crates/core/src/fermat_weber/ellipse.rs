//! Tropical k-ellipses: sublevel sets of the distance sum.

use serde::Serialize;

use super::lp::{distance_constraints, sum_of_distances_row};
use super::{min_sum_lp, SampleMatrix};
use crate::error::{Error, Result};
use crate::ratgeom::{enumerate_vertices, HPolytope, LinearConstraint, VPolytope};
use crate::rational::{serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipseSpec {
    pub foci: SampleMatrix,
    pub a: Rational,
}

/// Which set the level `a` carves out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EllipseLocus {
    /// `a == d`: the level set is the whole Fermat-Weber polytope.
    FermatWeber,
    /// `a > d`: the level set is the boundary of the returned polytope.
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EllipseResult {
    #[serde(with = "serde_rational")]
    pub d: Rational,
    #[serde(with = "serde_rational")]
    pub a: Rational,
    /// `{u : sum_i d_tr(u, v_i) <= a}` in canonical coordinates.
    pub polytope: VPolytope,
    pub locus: EllipseLocus,
}

pub fn k_ellipse(spec: &EllipseSpec) -> Result<EllipseResult> {
    let foci = &spec.foci;
    let d = min_sum_lp(foci)?;
    if spec.a < d {
        return Err(Error::Precondition(format!(
            "the level a = {} is below the minimal distance sum d = {}",
            spec.a, d
        )));
    }
    let n = foci.n();
    let mut h = HPolytope::from_constraints(n - 1 + foci.m(), distance_constraints(foci))?;
    h.push(LinearConstraint::le(sum_of_distances_row(foci), spec.a.clone()))?;
    let ext = enumerate_vertices(&h)?;
    let points = ext
        .vertices
        .iter()
        .map(|v| {
            let mut p = vec![Rational::from_integer(0.into())];
            p.extend_from_slice(&v[..n - 1]);
            p
        })
        .collect();
    let polytope = VPolytope::from_points(n, points)?;
    let locus = if spec.a == d { EllipseLocus::FermatWeber } else { EllipseLocus::Boundary };
    Ok(EllipseResult { d, a: spec.a.clone(), polytope, locus })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn level_below_minimum_is_rejected() {
        let foci = SampleMatrix::from_integers(&[&[0, 0, 0], &[0, 3, 1], &[0, 2, 5]]).unwrap();
        let err = k_ellipse(&EllipseSpec { foci, a: int(6) }).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
