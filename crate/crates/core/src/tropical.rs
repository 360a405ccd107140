//! The quotient space `R^n / R·1` and the tropical metric on it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

/// A point of `R^n / R·1` in canonical form: the first coordinate is zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuotientPoint {
    #[serde(with = "serde_rational::vec")]
    coords: Vec<Rational>,
}

impl QuotientPoint {
    pub fn new(raw: Vec<Rational>) -> Result<Self> {
        canonicalize(&raw)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The canonical coordinates after the leading zero.
    pub fn reduced(&self) -> &[Rational] {
        &self.coords[1..]
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// Rebuilds a point from the `n - 1` coordinates after the leading zero.
    pub fn from_reduced(reduced: &[Rational]) -> Self {
        let mut coords = Vec::with_capacity(reduced.len() + 1);
        coords.push(Rational::from_integer(0.into()));
        coords.extend_from_slice(reduced);
        Self { coords }
    }

    pub fn add(&self, w: &[Rational]) -> Result<Self> {
        if w.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: w.len() });
        }
        canonicalize(&self.coords.iter().zip(w).map(|(a, b)| a + b).collect::<Vec<_>>())
    }
}

/// Subtracts `raw[0]` from every coordinate.
pub fn canonicalize(raw: &[Rational]) -> Result<QuotientPoint> {
    if raw.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "quotient points need at least 2 coordinates, got {}",
            raw.len()
        )));
    }
    let first = raw[0].clone();
    Ok(QuotientPoint { coords: raw.iter().map(|x| x - &first).collect() })
}

/// `max(D) - min(D)` for the difference multiset `D = {u_i - v_i}`.
pub fn trop_dist(u: &QuotientPoint, v: &QuotientPoint) -> Result<Rational> {
    trop_dist_raw(&u.coords, &v.coords)
}

/// The tropical distance between raw representatives.
pub fn trop_dist_raw(u: &[Rational], v: &[Rational]) -> Result<Rational> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch { expected: u.len(), found: v.len() });
    }
    let mut diffs = u.iter().zip(v).map(|(a, b)| a - b);
    let Some(first) = diffs.next() else {
        return Err(Error::InvalidInput("empty vectors".into()));
    };
    let (lo, hi) = diffs.fold((first.clone(), first), |(lo, hi), d| {
        if d < lo {
            (d, hi)
        } else if d > hi {
            (lo, d)
        } else {
            (lo, hi)
        }
    });
    Ok(hi - lo)
}

/// The difference multiset `{u_i - v_i}`.
pub fn difference_set(u: &QuotientPoint, v: &QuotientPoint) -> Result<Vec<Rational>> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    Ok(u.coords.iter().zip(&v.coords).map(|(a, b)| a - b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn q(xs: &[i64]) -> QuotientPoint {
        canonicalize(&xs.iter().map(|&x| int(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q(&[5, 5, 5]), q(&[0, 0, 0]));
        assert_eq!(q(&[1, 4, 2]).coords(), &[int(0), int(3), int(1)]);
        assert!(canonicalize(&[int(1)]).is_err());
        let p = q(&[1, 4, 2]);
        assert_eq!(canonicalize(p.coords()).unwrap(), p);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(trop_dist(&q(&[0, 0, 0]), &q(&[0, 3, 1])).unwrap(), int(3));
        assert_eq!(trop_dist(&q(&[0, 2, 3, 5]), &q(&[0, 4, 5, 7])).unwrap(), int(2));
        let u = QuotientPoint::new(vec![ratio(1, 3), ratio(-2, 7), int(4)]).unwrap();
        assert_eq!(trop_dist(&u, &u).unwrap(), int(0));
    }

    #[test]
    fn distance_needs_equal_lengths() {
        assert!(trop_dist(&q(&[0, 0]), &q(&[0, 0, 0])).is_err());
    }
}
