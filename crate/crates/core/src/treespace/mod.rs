//! Fermat-Weber points of equidistant trees inside the space of ultrametrics.
//!
//! Tree metrics live in `R^C(N,2)` with pair coordinates in lexicographic
//! order `(1,2), (1,3), ..., (N-1,N)`. Treespace is the union of one closed
//! cone per rooted binary tree shape.

mod experiment;
mod generator;
mod intersect;
mod topology;
mod ultrametric;

pub use experiment::{
    classify_subsample, table1_experiment, SubsampleOutcome, Table1Config, Table1Report, Table1Row, UniqueHit,
};
pub use generator::{random_equidistant_tree, random_equidistant_tree_with, EquidistantTree, Merge};
pub use intersect::{fw_intersect_treespace, ConeIntersection, TreespaceIntersection};
pub use topology::{enumerate_topologies, topology_count, TreeTopology};
pub use ultrametric::{
    is_ultrametric, leaf_count_for, pair_count, pair_index, pairs, positive_representative, ultrametric_violation,
    UltrametricVector,
};

use crate::rational::parse_vector;

/// Four quartet trees whose Fermat-Weber polytope is 2-dimensional but meets
/// treespace only in the class of the all-one metric.
pub fn four_tree_unique_sample() -> Vec<UltrametricVector> {
    [
        ["32/109", "1", "124/673", "1", "32/109", "1"],
        ["1", "6/85", "1", "1", "203/445", "1"],
        ["1", "1", "1", "310/783", "310/783", "1/265"],
        ["47/510", "1", "1", "1", "1", "125/151"],
    ]
    .iter()
    .map(|r| UltrametricVector::new(parse_vector(r).expect("valid rationals")).expect("ultrametric"))
    .collect()
}
