//! Fermat-Weber points under the tropical metric.
//!
//! A sample `v_1..v_m` of points in `R^n / R·1` has a minimal distance sum
//! `d(v_1..v_m)`, computed either by linear programming ([`min_sum_lp`]) or by
//! the assignment-pair formula ([`min_sum_combinatorial`]). The minimizers form
//! a convex polytope ([`fw_polytope`]).
//!
//! Linear programs use the reduced variables `(u_2..u_n, c_1..c_m)` with
//! `u_1 = 0`, where `c_i` bounds the distance from `u` to `v_i`.

mod combinatorial;
mod ellipse;
mod essential;
pub mod instances;
mod lp;
mod polytope;
mod sample;

pub use combinatorial::{best_assignment_pair, min_sum_combinatorial, AssignmentPair};
pub use ellipse::{k_ellipse, EllipseLocus, EllipseResult, EllipseSpec};
pub use essential::{is_essential, EssentialReport};
pub use instances::{circulant_instance, three_point_unique_instance};
pub use lp::{direct_inequalities, distance_constraints, min_sum_lp};
pub use polytope::{fw_h_polytope, fw_polytope, fw_polytope_with, is_fw_point, FwMethod, FwResult};
pub use sample::SampleMatrix;
