//! Exact computation of tropical Fermat-Weber points in the quotient space
//! `R^n / R·1`.
//!
//! Everything here runs over arbitrary-precision rationals: the linear programs,
//! the polyhedral conversions and the combinatorial oracles. There is no
//! tolerance parameter anywhere in the crate.
//!
//! The modules build on each other bottom-up:
//!
//! * [`ratgeom`]: rational linear algebra, an exact simplex solver, double
//!   description vertex enumeration and Fourier-Motzkin projection.
//! * [`tropical`]: quotient points and the tropical metric.
//! * [`fermat_weber`]: minimal distance sums, the Fermat-Weber polytope,
//!   essential sets and tropical k-ellipses.
//! * [`degeneracy`]: similar index-subset witnesses, tropical determinants and
//!   the random-sample classification experiment.
//! * [`treespace`]: ultrametrics, equidistant tree cones and the intersection
//!   of Fermat-Weber polytopes with treespace.

pub mod budget;
pub mod degeneracy;
pub mod error;
pub mod fermat_weber;
pub mod ratgeom;
pub mod rational;
mod rng;
pub mod treespace;
pub mod tropical;

pub use budget::Budgets;
pub use error::{Error, Result};
pub use fermat_weber::{
    circulant_instance, fw_polytope, is_essential, is_fw_point, k_ellipse, min_sum_combinatorial,
    min_sum_lp, three_point_unique_instance, EllipseResult, EllipseSpec, EssentialReport,
    FwResult, SampleMatrix,
};
pub use ratgeom::{
    affine_dimension, enumerate_vertices, lp_solve, project_out, ConstraintKind, HPolytope,
    LinearConstraint, LpOutcome, LpProblem, VPolytope,
};
pub use rational::Rational;
pub use tropical::{canonicalize, trop_dist, QuotientPoint};
