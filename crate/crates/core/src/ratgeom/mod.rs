//! Exact polyhedral primitives over the rationals.

mod dd;
mod fm;
mod hull;
pub mod linalg;
mod lp;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{dot, serde_rational, Rational};

pub use fm::project_out;
pub use hull::{
    affine_hull, convex_hull_vertices, enumerate_vertices, facets, in_convex_hull, AffineHull,
};
pub use linalg::affine_dimension;
pub use lp::{lp_solve, LpOutcome, LpProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstraintKind {
    LessEqual,
    Equal,
}

/// One row `coefficients · x (<= | =) rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearConstraint {
    #[serde(with = "serde_rational::vec")]
    pub coefficients: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
    pub kind: ConstraintKind,
}

impl LinearConstraint {
    pub fn le(coefficients: Vec<Rational>, rhs: Rational) -> Self {
        Self { coefficients, rhs, kind: ConstraintKind::LessEqual }
    }

    /// `coefficients · x >= rhs`, stored as its negated `<=` form.
    pub fn ge(coefficients: Vec<Rational>, rhs: Rational) -> Self {
        Self::le(coefficients.into_iter().map(|c| -c).collect(), -rhs)
    }

    pub fn eq(coefficients: Vec<Rational>, rhs: Rational) -> Self {
        Self { coefficients, rhs, kind: ConstraintKind::Equal }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.coefficients, x)
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.evaluate(x);
        match self.kind {
            ConstraintKind::LessEqual => lhs <= self.rhs,
            ConstraintKind::Equal => lhs == self.rhs,
        }
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.evaluate(x) == self.rhs
    }
}

/// A polyhedron `{x in Q^dim : every constraint holds}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytope {
    dim: usize,
    constraints: Vec<LinearConstraint>,
}

impl HPolytope {
    pub fn new(dim: usize) -> Self {
        Self { dim, constraints: Vec::new() }
    }

    pub fn from_constraints(dim: usize, constraints: Vec<LinearConstraint>) -> Result<Self> {
        let mut h = Self::new(dim);
        for c in constraints {
            h.push(c)?;
        }
        Ok(h)
    }

    /// The box `lo <= x_i <= hi` for every coordinate.
    pub fn bounding_box(dim: usize, lo: &Rational, hi: &Rational) -> Self {
        let mut h = Self::new(dim);
        for i in 0..dim {
            let mut e = vec![Rational::from_integer(0.into()); dim];
            e[i] = Rational::from_integer(1.into());
            h.constraints.push(LinearConstraint::le(e.clone(), hi.clone()));
            h.constraints.push(LinearConstraint::ge(e, lo.clone()));
        }
        h
    }

    pub fn push(&mut self, c: LinearConstraint) -> Result<()> {
        if c.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: c.dim() });
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = LinearConstraint>) -> Result<()> {
        for c in cs {
            self.push(c)?;
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.dim && self.constraints.iter().all(|c| c.is_satisfied(x))
    }
}

/// A polytope given by its vertex set.
///
/// Vertices are kept sorted lexicographically so two equal polytopes compare
/// equal. `affine_dim` is `-1` exactly when there are no vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytope {
    pub ambient_dim: usize,
    #[serde(with = "serde_rational::matrix")]
    pub vertices: Vec<Vec<Rational>>,
    pub affine_dim: i64,
}

impl VPolytope {
    pub fn empty(ambient_dim: usize) -> Self {
        Self { ambient_dim, vertices: Vec::new(), affine_dim: -1 }
    }

    pub fn point(p: Vec<Rational>) -> Self {
        Self { ambient_dim: p.len(), vertices: vec![p], affine_dim: 0 }
    }

    /// Builds the polytope `conv(points)`, discarding duplicates and points
    /// that are not vertices.
    pub fn from_points(ambient_dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: p.len() });
        }
        let vertices = convex_hull_vertices(points)?;
        Ok(Self::from_vertices(ambient_dim, vertices))
    }

    /// Wraps a list already known to be the vertex set.
    pub(crate) fn from_vertices(ambient_dim: usize, mut vertices: Vec<Vec<Rational>>) -> Self {
        vertices.sort();
        vertices.dedup();
        let affine_dim = if vertices.is_empty() {
            -1
        } else {
            affine_dimension(&vertices).expect("nonempty") as i64
        };
        Self { ambient_dim, vertices, affine_dim }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, p: &[Rational]) -> Result<bool> {
        in_convex_hull(p, &self.vertices)
    }

    pub fn translate(&self, w: &[Rational]) -> Self {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(w).map(|(a, b)| a + b).collect())
            .collect();
        Self::from_vertices(self.ambient_dim, vertices)
    }
}
