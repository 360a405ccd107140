//! Double description method for pointed polyhedral cones.
//!
//! Input is a cone `{y : row · y >= 0}` over integer rows; output is its set of
//! extreme rays as primitive integer vectors. Constraints are inserted one at a
//! time and new rays are formed only from adjacent pairs, using the
//! combinatorial adjacency test on zero sets.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg;
use crate::rational::{primitive, primitive_integer_vector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DdError {
    /// The rows have rank below the ambient dimension, so the cone contains a
    /// line.
    NotPointed,
}

struct Ray {
    v: Vec<BigInt>,
    zeros: FixedBitSet,
}

fn eval(row: &[BigInt], v: &[BigInt]) -> BigInt {
    row.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>, DdError> {
    let mut rows: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| primitive(r.clone()))
        .collect();
    rows.sort();
    rows.dedup();

    let initial = independent_rows(&rows, dim);
    if initial.len() < dim {
        return Err(DdError::NotPointed);
    }
    let basis: Vec<Vec<Rational>> = initial
        .iter()
        .map(|&i| rows[i].iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let inv = linalg::inverse(&basis).expect("independent rows");

    let mut processed = FixedBitSet::with_capacity(rows.len());
    for &i in &initial {
        processed.insert(i);
    }
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<Rational> = inv.iter().map(|r| r[j].clone()).collect();
            let mut zeros = FixedBitSet::with_capacity(rows.len());
            for (k, &i) in initial.iter().enumerate() {
                if k != j {
                    zeros.insert(i);
                }
            }
            Ray { v: primitive_integer_vector(&col), zeros }
        })
        .collect();

    for (idx, row) in rows.iter().enumerate() {
        if processed.contains(idx) {
            continue;
        }
        processed.insert(idx);
        let vals: Vec<BigInt> = rays.iter().map(|r| eval(row, &r.v)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !common.is_subset(&r.zeros));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&vals[p], &vals[q]);
                let v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(a, b)| vp * a - vq * b)
                    .collect();
                common.insert(idx);
                created.push(Ray { v: primitive(v), zeros: common });
            }
        }

        let mut next = Vec::with_capacity(rays.len() - neg.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                r.zeros.insert(idx);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    Ok(rays.into_iter().map(|r| r.v).collect())
}

fn independent_rows(rows: &[Vec<BigInt>], dim: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        if chosen.len() == dim {
            break;
        }
        let mut trial = echelon.clone();
        trial.push(row.iter().map(|x| Rational::from_integer(x.clone())).collect());
        let pivots = linalg::rref(&mut trial, dim);
        if pivots.len() > echelon.len() {
            echelon = trial;
            chosen.push(i);
        }
    }
    chosen
}
