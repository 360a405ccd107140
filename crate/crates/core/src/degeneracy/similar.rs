use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::budget::Budgets;
use crate::fermat_weber::SampleMatrix;
use crate::rational::{common_denominator, Rational};

/// Two sets of `(row, column)` cells, stored 0-based and sorted.
///
/// Serialized 1-based, as `{"s": [[1,1],[2,2]], "t": [[1,2],[2,1]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSubsetPair {
    pub s: Vec<(usize, usize)>,
    pub t: Vec<(usize, usize)>,
}

impl IndexSubsetPair {
    pub fn new(mut s: Vec<(usize, usize)>, mut t: Vec<(usize, usize)>) -> Self {
        s.sort_unstable();
        s.dedup();
        t.sort_unstable();
        t.dedup();
        Self { s, t }
    }

    /// Build from 1-based cells.
    pub fn from_one_based(s: &[(usize, usize)], t: &[(usize, usize)]) -> Self {
        let shift = |v: &[(usize, usize)]| v.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        Self::new(shift(s), shift(t))
    }

    pub fn swapped(&self) -> Self {
        Self { s: self.t.clone(), t: self.s.clone() }
    }

    pub fn size(&self) -> usize {
        self.s.len()
    }
}

impl Serialize for IndexSubsetPair {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let one = |v: &[(usize, usize)]| v.iter().map(|&(i, j)| [i + 1, j + 1]).collect::<Vec<_>>();
        let mut st = ser.serialize_struct("IndexSubsetPair", 2)?;
        st.serialize_field("s", &one(&self.s))?;
        st.serialize_field("t", &one(&self.t))?;
        st.end()
    }
}

/// Outcome of the witness search. `None` is only returned after the search
/// space up to `|S| = floor(mn/2)` has been covered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WitnessVerdict {
    Found { pair: IndexSubsetPair },
    None,
    Unknown { reason: String },
}

impl WitnessVerdict {
    pub fn pair(&self) -> Option<&IndexSubsetPair> {
        match self {
            WitnessVerdict::Found { pair } => Some(pair),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, WitnessVerdict::Found { .. })
    }
}

/// Equal numbers of cells in every row and in every column.
pub fn is_similar(pair: &IndexSubsetPair, m: usize, n: usize) -> bool {
    let mut rows = vec![0i64; m];
    let mut cols = vec![0i64; n];
    for &(i, j) in &pair.s {
        if i >= m || j >= n {
            return false;
        }
        rows[i] += 1;
        cols[j] += 1;
    }
    for &(i, j) in &pair.t {
        if i >= m || j >= n {
            return false;
        }
        rows[i] -= 1;
        cols[j] -= 1;
    }
    rows.iter().chain(&cols).all(|&c| c == 0)
}

/// Independent check of a witness: nonempty, disjoint, similar, and with
/// equal entry sums.
pub fn verify_similar_pair(sample: &SampleMatrix, pair: &IndexSubsetPair) -> bool {
    let (m, n) = (sample.m(), sample.n());
    if pair.s.is_empty() || pair.s.iter().any(|c| pair.t.contains(c)) || !is_similar(pair, m, n) {
        return false;
    }
    let sum = |cells: &[(usize, usize)]| cells.iter().map(|&(i, j)| sample.entry(i, j).clone()).sum::<Rational>();
    sum(&pair.s) == sum(&pair.t)
}

/// Search for disjoint similar `S`, `T` with `x_S = x_T`.
///
/// A pair corresponds to a matrix `D` in `{-1, 0, 1}^{m×n}` with zero row and
/// column sums (`S` the `+1` cells, `T` the `-1` cells) and `<D, M> = 0`. The
/// search runs over `|S| = 2, 3, ...` in increasing order, visiting cells in
/// row-major order and fixing the first nonzero cell to `+1`.
pub fn find_similar_pair(sample: &SampleMatrix, budgets: &Budgets) -> WitnessVerdict {
    let (m, n) = (sample.m(), sample.n());
    let full = m * n / 2;
    let cap = full.min(budgets.witness_max_size);
    let denom = common_denominator(&sample.to_matrix().concat());
    let scaled: Vec<BigInt> = sample
        .to_matrix()
        .concat()
        .iter()
        .map(|x| (x * Rational::from_integer(denom.clone())).to_integer())
        .collect();
    let mut search = Search {
        m,
        n,
        entries: &scaled,
        cells: vec![0; m * n],
        row_sum: vec![0; m],
        col_sum: vec![0; n],
        total: BigInt::zero(),
        nodes: 0,
        node_limit: budgets.witness_node_limit,
        exhausted: false,
    };
    for k in 2..=cap {
        if search.run(0, k, k, false) {
            let mut s = Vec::new();
            let mut t = Vec::new();
            for (idx, &c) in search.cells.iter().enumerate() {
                match c {
                    1 => s.push((idx / n, idx % n)),
                    -1 => t.push((idx / n, idx % n)),
                    _ => {}
                }
            }
            return WitnessVerdict::Found { pair: IndexSubsetPair::new(s, t) };
        }
        if search.exhausted {
            return WitnessVerdict::Unknown {
                reason: format!("node limit {} reached while searching |S| = {k}", budgets.witness_node_limit),
            };
        }
    }
    if cap < full {
        WitnessVerdict::Unknown { reason: format!("searched |S| <= {cap}; sizes up to {full} not covered") }
    } else {
        WitnessVerdict::None
    }
}

struct Search<'a> {
    m: usize,
    n: usize,
    entries: &'a [BigInt],
    cells: Vec<i8>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    total: BigInt,
    nodes: u64,
    node_limit: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Fill cells from `idx` on with `plus` more `+1`s and `minus` more `-1`s.
    fn run(&mut self, idx: usize, plus: usize, minus: usize, started: bool) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.exhausted = true;
            return false;
        }
        let cells_left = self.m * self.n - idx;
        if plus + minus > cells_left {
            return false;
        }
        if idx == self.m * self.n {
            return self.total.is_zero();
        }
        let (i, j) = (idx / self.n, idx % self.n);
        let choices: &[i8] = if started { &[1, -1, 0] } else { &[1, 0] };
        for &c in choices {
            let (p, q) = match c {
                1 if plus > 0 => (plus - 1, minus),
                -1 if minus > 0 => (plus, minus - 1),
                0 => (plus, minus),
                _ => continue,
            };
            let r = self.row_sum[i] + c as i64;
            let s = self.col_sum[j] + c as i64;
            if r.unsigned_abs() as usize > self.n - 1 - j || s.unsigned_abs() as usize > self.m - 1 - i {
                continue;
            }
            self.apply(idx, c);
            if self.run(idx + 1, p, q, started || c != 0) {
                return true;
            }
            self.apply(idx, -c);
            self.cells[idx] = 0;
            if self.exhausted {
                return false;
            }
        }
        false
    }

    fn apply(&mut self, idx: usize, c: i8) {
        let (i, j) = (idx / self.n, idx % self.n);
        self.cells[idx] += c;
        self.row_sum[i] += c as i64;
        self.col_sum[j] += c as i64;
        match c {
            1 => self.total += &self.entries[idx],
            -1 => self.total -= &self.entries[idx],
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermat_weber::instances::segment_sample;
    use crate::rational::parse_vector;

    #[test]
    fn segment_sample_yields_the_transposition_witness() {
        let s = segment_sample();
        let v = find_similar_pair(&s, &Budgets::default());
        let expected = IndexSubsetPair::from_one_based(&[(1, 1), (2, 2)], &[(1, 2), (2, 1)]);
        assert_eq!(v.pair(), Some(&expected));
        assert!(verify_similar_pair(&s, &expected));
        assert!(verify_similar_pair(&s, &expected.swapped()));
    }

    #[test]
    fn zero_matrix_has_a_witness() {
        let s = SampleMatrix::from_integers(&[&[0, 0], &[0, 0]]).unwrap();
        let v = find_similar_pair(&s, &Budgets::default());
        assert!(verify_similar_pair(&s, v.pair().unwrap()));
    }

    #[test]
    fn generic_two_by_three_has_none() {
        let rows = [
            parse_vector(&["3/7", "-11/13", "5/17"]).unwrap(),
            parse_vector(&["19/23", "29/31", "-2/37"]).unwrap(),
        ];
        let s = SampleMatrix::from_raw(&rows).unwrap();
        assert_eq!(find_similar_pair(&s, &Budgets::default()), WitnessVerdict::None);
    }

    #[test]
    fn cap_gives_unknown_not_none() {
        let rows = [
            parse_vector(&["3/7", "-11/13", "5/17"]).unwrap(),
            parse_vector(&["19/23", "29/31", "-2/37"]).unwrap(),
            parse_vector(&["1/41", "7/43", "-13/47"]).unwrap(),
        ];
        let s = SampleMatrix::from_raw(&rows).unwrap();
        let budgets = Budgets { witness_max_size: 2, ..Budgets::default() };
        assert!(matches!(find_similar_pair(&s, &budgets), WitnessVerdict::Unknown { .. }));
        let budgets = Budgets { witness_node_limit: 3, ..Budgets::default() };
        assert!(matches!(find_similar_pair(&s, &budgets), WitnessVerdict::Unknown { .. }));
    }

    #[test]
    fn similarity_checks_counts() {
        let p = IndexSubsetPair::from_one_based(&[(1, 1), (2, 2)], &[(1, 2), (2, 1)]);
        assert!(is_similar(&p, 2, 2));
        let q = IndexSubsetPair::from_one_based(&[(1, 1), (2, 2)], &[(1, 2), (2, 2)]);
        assert!(!is_similar(&q, 2, 2));
    }

    #[test]
    fn serializes_one_based() {
        let p = IndexSubsetPair::from_one_based(&[(1, 1), (2, 2)], &[(1, 2), (2, 1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"s":[[1,1],[2,2]],"t":[[1,2],[2,1]]}"#);
    }
}
