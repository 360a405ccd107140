//! Affine hulls, H-to-V conversion, V-to-H conversion and hull membership.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dd::{self, DdError};
use super::linalg;
use super::lp::{as_inequalities, minimize_over, LpOutcome, Row};
use super::{HPolytope, LinearConstraint, VPolytope};
use crate::error::{Error, Result};
use crate::rational::{dot, primitive_integer_vector, Rational};

/// The affine hull of a nonempty polyhedron, with a coordinate
/// parametrization.
///
/// The hull is `{x : E x = e}` with `E` in reduced row echelon form. The
/// coordinates not appearing as pivots are free: fixing them determines `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineHull {
    pub ambient_dim: usize,
    pub point: Vec<Rational>,
    equations: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl AffineHull {
    fn from_equations(point: Vec<Rational>, normals: Vec<Vec<Rational>>) -> Self {
        let d = point.len();
        let mut aug: Vec<Vec<Rational>> = normals
            .into_iter()
            .map(|mut w| {
                let e = dot(&w, &point);
                w.push(e);
                w
            })
            .collect();
        let pivots = linalg::rref(&mut aug, d);
        let rhs = aug.iter().map(|r| r[d].clone()).collect();
        let equations = aug.into_iter().map(|mut r| {
            r.truncate(d);
            r
        });
        let free = (0..d).filter(|c| !pivots.contains(c)).collect();
        Self { ambient_dim: d, point, equations: equations.collect(), rhs, pivots, free }
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, x: &[Rational]) -> Vec<Rational> {
        self.free.iter().map(|&f| x[f].clone()).collect()
    }

    pub fn lift(&self, z: &[Rational]) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ambient_dim];
        for (&f, v) in self.free.iter().zip(z) {
            x[f] = v.clone();
        }
        for ((row, e), &p) in self.equations.iter().zip(&self.rhs).zip(&self.pivots) {
            let s: Rational = self.free.iter().map(|&f| &row[f] * &x[f]).sum();
            x[p] = e - s;
        }
        x
    }

    /// Restricts `a · x <= b` to the free coordinates.
    fn restrict(&self, a: &[Rational], b: &Rational) -> (Vec<Rational>, Rational) {
        let mut coeffs: Vec<Rational> = self.free.iter().map(|&f| a[f].clone()).collect();
        let mut rhs = b.clone();
        for ((row, e), &p) in self.equations.iter().zip(&self.rhs).zip(&self.pivots) {
            if a[p].is_zero() {
                continue;
            }
            for (k, &f) in self.free.iter().enumerate() {
                coeffs[k] -= &a[p] * &row[f];
            }
            rhs -= &a[p] * e;
        }
        (coeffs, rhs)
    }

    /// The defining equalities in the ambient coordinates.
    pub fn equalities(&self) -> Vec<LinearConstraint> {
        self.equations
            .iter()
            .zip(&self.rhs)
            .map(|(r, e)| LinearConstraint::eq(r.clone(), e.clone()))
            .collect()
    }

    /// Lifts `coeffs · z <= rhs` on the free coordinates to the ambient space.
    fn lift_constraint(&self, coeffs: &[Rational], rhs: Rational) -> LinearConstraint {
        let mut a = vec![Rational::zero(); self.ambient_dim];
        for (&f, c) in self.free.iter().zip(coeffs) {
            a[f] = c.clone();
        }
        LinearConstraint::le(a, rhs)
    }
}

fn optimize(rows: &[Row], w: &[Rational]) -> Result<Option<Vec<Rational>>> {
    match minimize_over(rows, w)? {
        LpOutcome::Optimal { witness, .. } => Ok(Some(witness)),
        LpOutcome::Unbounded => Err(Error::Unbounded),
        LpOutcome::Infeasible => Ok(None),
    }
}

/// Computes the affine hull with two linear programs. Returns `None` for an
/// empty polyhedron.
///
/// A feasible `x0` limits the implicit equalities to the rows tight at `x0`.
/// Over the homogenized system `A y + t <= lambda b`, `0 <= t <= 1`,
/// `lambda >= 1`, maximizing `sum t` drives `t_i` to 1 exactly for the rows
/// that are strict somewhere (slack scales with `lambda`), so the rows left at
/// `t_i = 0` are the implicit equalities.
pub fn affine_hull(h: &HPolytope) -> Result<Option<AffineHull>> {
    let d = h.dim();
    let rows = as_inequalities(h);
    let zero = vec![Rational::zero(); d];
    let Some(x0) = optimize(&rows, &zero)? else {
        return Ok(None);
    };
    let tight: Vec<usize> = (0..rows.len())
        .filter(|&i| {
            let (a, b) = &rows[i];
            !a.iter().all(Zero::is_zero) && dot(a, &x0) == *b
        })
        .collect();
    let normals: Vec<Vec<Rational>> = if tight.is_empty() {
        Vec::new()
    } else {
        implicit_equalities(&rows, &tight, d)?.into_iter().map(|i| rows[i].0.clone()).collect()
    };
    Ok(Some(AffineHull::from_equations(x0, normals)))
}

/// Rows among `tight` that hold with equality on the whole (nonempty) region.
fn implicit_equalities(rows: &[Row], tight: &[usize], d: usize) -> Result<Vec<usize>> {
    // Variables: y (d), t (one per tight row), lambda.
    let k = tight.len();
    let nv = d + k + 1;
    let lam = d + k;
    let mut slot = vec![None; rows.len()];
    for (s, &i) in tight.iter().enumerate() {
        slot[i] = Some(d + s);
    }
    let mut lp: Vec<Row> = Vec::with_capacity(rows.len() + 2 * k + 1);
    for (i, (a, b)) in rows.iter().enumerate() {
        let mut c = vec![Rational::zero(); nv];
        c[..d].clone_from_slice(a);
        if let Some(s) = slot[i] {
            c[s] = Rational::one();
        }
        c[lam] = -b.clone();
        lp.push((c, Rational::zero()));
    }
    for s in d..d + k {
        let mut up = vec![Rational::zero(); nv];
        up[s] = Rational::one();
        lp.push((up, Rational::one()));
        let mut down = vec![Rational::zero(); nv];
        down[s] = -Rational::one();
        lp.push((down, Rational::zero()));
    }
    let mut lam_row = vec![Rational::zero(); nv];
    lam_row[lam] = -Rational::one();
    lp.push((lam_row, -Rational::one()));
    let mut obj = vec![Rational::zero(); nv];
    for o in &mut obj[d..d + k] {
        *o = -Rational::one();
    }
    match minimize_over(&lp, &obj)? {
        LpOutcome::Optimal { witness, .. } => {
            Ok(tight.iter().enumerate().filter(|&(s, _)| witness[d + s] < Rational::one()).map(|(_, &i)| i).collect())
        }
        _ => Err(Error::Internal("implicit-equality program has no optimum".into())),
    }
}


/// Vertex enumeration of a bounded polyhedron.
///
/// The polyhedron is first restricted to its affine hull, where it is full
/// dimensional; the homogenized cone is then handed to the double description
/// method. Rays on the hyperplane at infinity signal unboundedness.
pub fn enumerate_vertices(h: &HPolytope) -> Result<VPolytope> {
    let d = h.dim();
    let Some(hull) = affine_hull(h)? else {
        return Ok(VPolytope::empty(d));
    };
    let k = hull.dimension();
    if k == 0 {
        return Ok(VPolytope::point(hull.point.clone()));
    }
    // Cone rows (b, -a) over (t, z): t·b - a·z >= 0, plus t >= 0.
    let mut cone: Vec<Vec<BigInt>> = Vec::new();
    for (a, b) in as_inequalities(h) {
        let (coeffs, rhs) = hull.restrict(&a, &b);
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let mut row = Vec::with_capacity(k + 1);
        row.push(rhs);
        row.extend(coeffs.into_iter().map(|c| -c));
        cone.push(primitive_integer_vector(&row));
    }
    let mut t_row = vec![BigInt::zero(); k + 1];
    t_row[0] = BigInt::one();
    cone.push(t_row);

    let rays = dd::extreme_rays(&cone, k + 1).map_err(|DdError::NotPointed| Error::Unbounded)?;
    let mut vertices = Vec::with_capacity(rays.len());
    for r in rays {
        if !r[0].is_positive() {
            return Err(Error::Unbounded);
        }
        let t = Rational::from_integer(r[0].clone());
        let z: Vec<Rational> = r[1..].iter().map(|x| Rational::from_integer(x.clone()) / &t).collect();
        vertices.push(hull.lift(&z));
    }
    Ok(VPolytope::from_vertices(d, vertices))
}

/// Whether `p` lies in the convex hull of `points`.
pub fn in_convex_hull(p: &[Rational], points: &[Vec<Rational>]) -> Result<bool> {
    if points.is_empty() {
        return Ok(false);
    }
    if let Some(q) = points.iter().find(|q| q.len() != p.len()) {
        return Err(Error::DimensionMismatch { expected: p.len(), found: q.len() });
    }
    if points.iter().any(|q| q.as_slice() == p) {
        return Ok(true);
    }
    // p is outside the hull iff some (a, beta) has a·q <= beta for every q
    // and a·p >= beta + 1. This program has d + 1 variables.
    let d = p.len();
    let row = |x: &[Rational], s: Rational| {
        let mut a: Vec<Rational> = x.iter().map(|v| &s * v).collect();
        a.push(-s);
        a
    };
    let mut rows: Vec<Row> = points.iter().map(|q| (row(q, Rational::one()), Rational::zero())).collect();
    rows.push((row(p, -Rational::one()), -Rational::one()));
    let zero = vec![Rational::zero(); d + 1];
    Ok(matches!(minimize_over(&rows, &zero)?, LpOutcome::Infeasible))
}

/// Removes duplicates and points lying in the hull of the others. The result
/// is sorted.
pub fn convex_hull_vertices(mut points: Vec<Vec<Rational>>) -> Result<Vec<Vec<Rational>>> {
    points.sort();
    points.dedup();
    if points.len() <= 2 {
        return Ok(points);
    }
    let mut keep = vec![true; points.len()];
    for i in 0..points.len() {
        let others: Vec<Vec<Rational>> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && keep[j])
            .map(|(_, v)| v.clone())
            .collect();
        if in_convex_hull(&points[i], &others)? {
            keep[i] = false;
        }
    }
    Ok(points.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect())
}

/// An irredundant H-representation of `conv(vertices)`: the equalities of its
/// affine hull plus one inequality per facet.
pub fn facets(v: &VPolytope) -> Result<HPolytope> {
    let d = v.ambient_dim;
    let Some(p0) = v.vertices.first() else {
        // Empty: 0 <= -1.
        let mut h = HPolytope::new(d);
        h.push(LinearConstraint::le(vec![Rational::zero(); d], -Rational::one()))?;
        return Ok(h);
    };
    let diffs: Vec<Vec<Rational>> = v
        .vertices
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    let normals = linalg::nullspace(&diffs, d);
    let hull = AffineHull::from_equations(p0.clone(), normals);
    let mut h = HPolytope::from_constraints(d, hull.equalities())?;
    let k = hull.dimension();
    if k == 0 {
        return Ok(h);
    }
    // Polar cone over (beta, a): beta - a · z_i >= 0 for every vertex.
    let rows: Vec<Vec<BigInt>> = v
        .vertices
        .iter()
        .map(|p| {
            let mut row = vec![Rational::one()];
            row.extend(hull.project(p).into_iter().map(|x| -x));
            primitive_integer_vector(&row)
        })
        .collect();
    let rays = dd::extreme_rays(&rows, k + 1)
        .map_err(|_| Error::Internal("vertex set does not span its affine hull".into()))?;
    for r in rays {
        if r[1..].iter().all(Zero::is_zero) {
            continue;
        }
        let coeffs: Vec<Rational> = r[1..].iter().map(|x| Rational::from_integer(x.clone())).collect();
        h.push(hull.lift_constraint(&coeffs, Rational::from_integer(r[0].clone())))?;
    }
    Ok(h)
}
