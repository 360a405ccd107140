use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::theorem::{check_theorem_lowdim, TheoremCheck};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::fermat_weber::{fw_polytope, is_essential, SampleMatrix};
use crate::rational::Rational;
use crate::rng::stream_rng;

/// Entries are `p/q` with `p` uniform in `[-numerator_bound, numerator_bound]`
/// and `q` uniform in `[1, max_denominator]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RandomRationalSpec {
    pub numerator_bound: i64,
    pub max_denominator: i64,
}

impl Default for RandomRationalSpec {
    fn default() -> Self {
        Self { numerator_bound: 1000, max_denominator: 1000 }
    }
}

pub fn random_sample<R: Rng>(rng: &mut R, m: usize, n: usize, spec: &RandomRationalSpec) -> Result<SampleMatrix> {
    if spec.numerator_bound < 0 || spec.max_denominator < 1 {
        return Err(Error::InvalidInput("random rational ranges must be nonempty".into()));
    }
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let p = rng.gen_range(-spec.numerator_bound..=spec.numerator_bound);
                    let q = rng.gen_range(1..=spec.max_denominator);
                    Rational::new(p.into(), q.into())
                })
                .collect()
        })
        .collect();
    SampleMatrix::from_raw(&rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    SinglePoint,
    NotEssential,
    EssentialNonunique,
    EssentialUnique,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassificationCounts {
    pub single_point: usize,
    pub not_essential: usize,
    pub essential_nonunique: usize,
    pub essential_unique: usize,
}

impl ClassificationCounts {
    fn add(&mut self, c: Classification) {
        match c {
            Classification::SinglePoint => self.single_point += 1,
            Classification::NotEssential => self.not_essential += 1,
            Classification::EssentialNonunique => self.essential_nonunique += 1,
            Classification::EssentialUnique => self.essential_unique += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.single_point + self.not_essential + self.essential_nonunique + self.essential_unique
    }
}

/// An essential sample with a unique Fermat-Weber point, with its witness check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentHit {
    pub trial: u64,
    pub sample: SampleMatrix,
    pub check: TheoremCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentStats {
    pub m: usize,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub spec: RandomRationalSpec,
    pub counts: ClassificationCounts,
    pub hits: Vec<ExperimentHit>,
}

fn classify(sample: &SampleMatrix) -> Result<Classification> {
    if sample.m() == 1 {
        return Ok(Classification::SinglePoint);
    }
    if !is_essential(sample)?.essential {
        return Ok(Classification::NotEssential);
    }
    Ok(if fw_polytope(sample)?.unique {
        Classification::EssentialUnique
    } else {
        Classification::EssentialNonunique
    })
}

/// Classify `trials` random samples. Trial `t` draws from stream `t` of the
/// master seed, so results do not depend on scheduling.
pub fn random_sample_experiment(
    m: usize,
    n: usize,
    trials: u64,
    seed: u64,
    spec: &RandomRationalSpec,
    budgets: &Budgets,
) -> Result<ExperimentStats> {
    if trials == 0 {
        return Err(Error::Precondition("the experiment needs at least one trial".into()));
    }
    if m == 0 || n < 2 {
        return Err(Error::InvalidInput(format!("samples need m >= 1 and n >= 2 (got m = {m}, n = {n})")));
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let sample = random_sample(&mut stream_rng(seed, t), m, n, spec)?;
            let class = classify(&sample)?;
            let hit = if class == Classification::EssentialUnique {
                let check = check_theorem_lowdim(&sample, budgets)?;
                Some(ExperimentHit { trial: t, sample, check })
            } else {
                None
            };
            Ok((class, hit))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts = ClassificationCounts::default();
    let mut hits = Vec::new();
    for (class, hit) in outcomes {
        counts.add(class);
        hits.extend(hit);
    }
    log::info!("random sample experiment {m}x{n}: {counts:?}");
    Ok(ExperimentStats { m, n, trials, seed, spec: *spec, counts, hits })
}
