use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::topology::TreeTopology;
use super::ultrametric::{pair_count, pair_index, UltrametricVector};
use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Merge {
    pub left: u64,
    pub right: u64,
    #[serde(with = "serde_rational")]
    pub height: Rational,
}

/// An equidistant tree given by its merges, leaves at height 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistantTree {
    pub n_leaves: usize,
    pub merges: Vec<Merge>,
}

impl EquidistantTree {
    /// Each merge must join two current clusters at a height strictly above
    /// the previous merge; heights must be positive.
    pub fn from_merges(n_leaves: usize, merges: Vec<Merge>) -> Result<Self> {
        if !(3..=63).contains(&n_leaves) || merges.len() != n_leaves - 1 {
            return Err(Error::InvalidInput(format!(
                "a tree on {n_leaves} leaves needs {} merges (got {})",
                n_leaves.saturating_sub(1),
                merges.len()
            )));
        }
        let mut current: Vec<u64> = (0..n_leaves).map(|i| 1u64 << i).collect();
        let mut last = Rational::from_integer(0.into());
        for m in &merges {
            if m.height <= last {
                return Err(Error::InvalidInput("merge heights must be positive and strictly increasing".into()));
            }
            let (Some(a), Some(b)) =
                (current.iter().position(|&c| c == m.left), current.iter().position(|&c| c == m.right))
            else {
                return Err(Error::InvalidInput("a merge must join two current clusters".into()));
            };
            if a == b {
                return Err(Error::InvalidInput("a merge must join two distinct clusters".into()));
            }
            current.retain(|&c| c != m.left && c != m.right);
            current.push(m.left | m.right);
            last = m.height.clone();
        }
        Ok(Self { n_leaves, merges })
    }

    /// `D_ij = 2 h(lca(i, j))` in lexicographic pair order.
    pub fn metric(&self) -> UltrametricVector {
        let mut coords = vec![Rational::from_integer(0.into()); pair_count(self.n_leaves)];
        let two = Rational::from_integer(2.into());
        for m in &self.merges {
            for i in (0..self.n_leaves).filter(|i| m.left >> i & 1 == 1) {
                for j in (0..self.n_leaves).filter(|j| m.right >> j & 1 == 1) {
                    coords[pair_index(i.min(j), i.max(j), self.n_leaves)] = &two * &m.height;
                }
            }
        }
        UltrametricVector::new(coords).expect("tree metrics are positive ultrametrics")
    }

    pub fn topology(&self) -> TreeTopology {
        TreeTopology::from_clusters(self.n_leaves, self.merges.iter().map(|m| m.left | m.right).collect())
            .expect("merges form a binary tree")
    }
}

/// Coalescent tree: merge two uniformly chosen clusters at a time, with
/// integer height increments uniform in `[1, 1000]`, then scale so the root
/// sits at height 1.
pub fn random_equidistant_tree_with<R: Rng>(rng: &mut R, n_leaves: usize) -> Result<EquidistantTree> {
    if !(3..=63).contains(&n_leaves) {
        return Err(Error::InvalidInput(format!("random trees need 3 <= N <= 63 (got {n_leaves})")));
    }
    let mut current: Vec<u64> = (0..n_leaves).map(|i| 1u64 << i).collect();
    let mut raw = Vec::with_capacity(n_leaves - 1);
    let mut height = 0i64;
    while current.len() > 1 {
        let pick = sample(rng, current.len(), 2);
        let (a, b) = (current[pick.index(0)], current[pick.index(1)]);
        height += rng.gen_range(1..=1000);
        current.retain(|&c| c != a && c != b);
        current.push(a | b);
        raw.push((a.min(b), a.max(b), height));
    }
    let merges = raw
        .into_iter()
        .map(|(left, right, h)| Merge { left, right, height: Rational::new(h.into(), height.into()) })
        .collect();
    EquidistantTree::from_merges(n_leaves, merges)
}

pub fn random_equidistant_tree(n_leaves: usize, seed: u64) -> Result<EquidistantTree> {
    random_equidistant_tree_with(&mut ChaCha8Rng::seed_from_u64(seed), n_leaves)
}
