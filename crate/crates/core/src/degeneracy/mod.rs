//! Degenerate configurations behind non-unique Fermat-Weber points.
//!
//! An essential sample with a unique Fermat-Weber point forces an exact
//! coincidence `x_S = x_T` between the entry sums of two disjoint similar index
//! sets. This module searches for such witnesses, evaluates tropical
//! determinants, and runs the random-sample classification.

mod experiment;
mod similar;
mod theorem;
mod tropdet;

pub use experiment::{
    random_sample, random_sample_experiment, Classification, ClassificationCounts, ExperimentHit,
    ExperimentStats, RandomRationalSpec,
};
pub use similar::{find_similar_pair, is_similar, verify_similar_pair, IndexSubsetPair, WitnessVerdict};
pub use theorem::{check_theorem_lowdim, TheoremCheck, TheoremStatus};
pub use tropdet::{all_minors_report, tropical_determinant, MinorEntry, MinorsReport, TropDetReport};
