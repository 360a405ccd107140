use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::tropical::{canonicalize, QuotientPoint};

/// The `m × n` matrix whose rows are the canonicalized sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleMatrix {
    n: usize,
    rows: Vec<QuotientPoint>,
}

impl Serialize for SampleMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl SampleMatrix {
    pub fn new(rows: Vec<QuotientPoint>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::InvalidInput("a sample needs at least one point".into()));
        };
        let n = first.dim();
        if let Some(r) = rows.iter().find(|r| r.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.dim() });
        }
        Ok(Self { n, rows })
    }

    pub fn from_raw(rows: &[Vec<Rational>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| canonicalize(r)).collect::<Result<_>>()?)
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        let raw: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_raw(&raw)
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[QuotientPoint] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &QuotientPoint {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i].coords()[j]
    }

    /// The sample with row `i` removed.
    pub fn without(&self, i: usize) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, r)| r.clone())
            .collect();
        Self::new(rows)
    }

    pub fn with_row(&self, p: QuotientPoint) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.push(p);
        Self::new(rows)
    }

    /// Every point shifted by `w`.
    pub fn translate(&self, w: &[Rational]) -> Result<Self> {
        Self::new(self.rows.iter().map(|r| r.add(w)).collect::<Result<_>>()?)
    }

    pub fn to_matrix(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.coords().to_vec()).collect()
    }
}
