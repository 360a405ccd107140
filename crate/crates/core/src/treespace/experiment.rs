use std::collections::BTreeMap;

use rand::seq::index::sample;
use rayon::prelude::*;
use serde::Serialize;

use super::generator::random_equidistant_tree_with;
use super::intersect::fw_intersect_treespace;
use super::ultrametric::{positive_representative, UltrametricVector};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::fermat_weber::{is_essential, SampleMatrix};
use crate::rational::{serde_rational, Rational};
use crate::rng::stream_rng;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Config {
    pub n_leaves: usize,
    pub pool_size: usize,
    pub sizes: Vec<usize>,
    pub trials_per_size: usize,
    pub seed: u64,
    /// Extra fixed subsamples, evaluated and reported separately.
    #[serde(skip)]
    pub injected: Vec<Vec<UltrametricVector>>,
}

impl Default for Table1Config {
    fn default() -> Self {
        Self { n_leaves: 4, pool_size: 60, sizes: vec![4, 5, 6], trials_per_size: 60, seed: 1, injected: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsampleOutcome {
    /// Pool indices (0-based); empty for injected subsamples.
    pub members: Vec<usize>,
    pub max_dim: i64,
    #[serde(with = "serde_rational::option_vec")]
    pub unique_point: Option<Vec<Rational>>,
    #[serde(with = "serde_rational::option_vec")]
    pub unique_representative: Option<Vec<Rational>>,
    pub unique_is_all_ones: Option<bool>,
    /// Only computed for subsamples with a unique point in treespace.
    pub essential: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub size: usize,
    /// Count per maximal dimension, from `-1` (no point in treespace) up to `N - 2`.
    pub counts: BTreeMap<i64, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniqueHit {
    pub size: usize,
    pub trial: usize,
    pub outcome: SubsampleOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub config: Table1Config,
    pub pool: Vec<UltrametricVector>,
    pub rows: Vec<Table1Row>,
    pub unique_hits: Vec<UniqueHit>,
    /// Unique hits whose point is not the all-one class.
    pub all_ones_counterexamples: usize,
    pub injected: Vec<SubsampleOutcome>,
}

pub fn classify_subsample(members: Vec<usize>, trees: &[UltrametricVector], budgets: &Budgets) -> Result<SubsampleOutcome> {
    let r = fw_intersect_treespace(trees, budgets)?;
    let essential = match &r.unique_point {
        Some(_) if trees.len() >= 2 => {
            let rows: Vec<Vec<Rational>> = trees.iter().map(|t| t.coords.clone()).collect();
            Some(is_essential(&SampleMatrix::from_raw(&rows)?)?.essential)
        }
        _ => None,
    };
    Ok(SubsampleOutcome {
        members,
        max_dim: r.max_dim,
        unique_representative: r.unique_point.as_deref().map(positive_representative),
        unique_is_all_ones: r.unique_is_all_ones(),
        unique_point: r.unique_point,
        essential,
    })
}

const SUBSAMPLE_STREAMS: u64 = 1 << 40;

/// Draw a pool of random trees, then random subsamples of each size, and
/// tabulate the maximal dimension of the Fermat-Weber set inside treespace.
///
/// Pool tree `i` uses stream `i` of the seed; subsample `t` of size `s` uses
/// stream `2^40 + s·2^20 + t`. Output order does not depend on scheduling.
pub fn table1_experiment(config: &Table1Config, budgets: &Budgets) -> Result<Table1Report> {
    if config.pool_size == 0 {
        return Err(Error::InvalidInput("pool size must be positive".into()));
    }
    if let Some(&s) = config.sizes.iter().find(|&&s| s == 0 || s > config.pool_size) {
        return Err(Error::InvalidInput(format!("subsample size {s} must be in 1..={}", config.pool_size)));
    }
    let pool = (0..config.pool_size)
        .map(|i| Ok(random_equidistant_tree_with(&mut stream_rng(config.seed, i as u64), config.n_leaves)?.metric()))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize)> =
        config.sizes.iter().flat_map(|&s| (0..config.trials_per_size).map(move |t| (s, t))).collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(s, t)| {
            let stream = SUBSAMPLE_STREAMS + ((s as u64) << 20) + t as u64;
            let mut members = sample(&mut stream_rng(config.seed, stream), config.pool_size, s).into_vec();
            members.sort_unstable();
            let trees: Vec<UltrametricVector> = members.iter().map(|&i| pool[i].clone()).collect();
            classify_subsample(members, &trees, budgets)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<Table1Row> = config
        .sizes
        .iter()
        .map(|&size| Table1Row {
            size,
            counts: (-1..=config.n_leaves as i64 - 2).map(|d| (d, 0)).collect(),
        })
        .collect();
    let mut unique_hits = Vec::new();
    for (&(s, t), o) in jobs.iter().zip(outcomes) {
        let row = rows.iter_mut().find(|r| r.size == s).expect("row per size");
        *row.counts.entry(o.max_dim).or_insert(0) += 1;
        if o.unique_point.is_some() {
            unique_hits.push(UniqueHit { size: s, trial: t, outcome: o });
        }
    }
    let all_ones_counterexamples = unique_hits.iter().filter(|h| h.outcome.unique_is_all_ones == Some(false)).count();
    if all_ones_counterexamples > 0 {
        log::warn!("{all_ones_counterexamples} unique treespace Fermat-Weber points differ from the all-one class");
    }
    let injected = config
        .injected
        .iter()
        .map(|trees| classify_subsample(Vec::new(), trees, budgets))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1Report { config: config.clone(), pool, rows, unique_hits, all_ones_counterexamples, injected })
}
