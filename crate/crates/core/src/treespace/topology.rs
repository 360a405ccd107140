use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ultrametric::{pair_count, pair_index};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::ratgeom::{HPolytope, LinearConstraint};
use crate::rational::Rational;

/// A rooted binary tree shape on leaves `0..N`, stored as the leaf sets
/// (bitmasks) of its `N - 1` internal nodes, sorted by size and then value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeTopology {
    n_leaves: usize,
    clusters: Vec<u64>,
}

impl Serialize for TreeTopology {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TreeTopology", 2)?;
        st.serialize_field("n_leaves", &self.n_leaves)?;
        st.serialize_field("newick", &self.newick())?;
        st.end()
    }
}

fn sort_clusters(c: &mut Vec<u64>) {
    c.sort_unstable_by_key(|&x| (x.count_ones(), x));
    c.dedup();
}

impl TreeTopology {
    /// Builds a topology from its internal-node leaf sets and checks that they
    /// form a rooted binary tree.
    pub fn from_clusters(n_leaves: usize, mut clusters: Vec<u64>) -> Result<Self> {
        if !(2..=63).contains(&n_leaves) {
            return Err(Error::InvalidInput(format!("unsupported leaf count {n_leaves}")));
        }
        sort_clusters(&mut clusters);
        let t = Self { n_leaves, clusters };
        let root = (1u64 << n_leaves) - 1;
        let laminar = t.clusters.iter().all(|&a| {
            t.clusters.iter().all(|&b| a & b == 0 || a & b == a || a & b == b)
        });
        if t.clusters.len() != n_leaves - 1
            || t.clusters.last() != Some(&root)
            || !laminar
            || t.clusters.iter().any(|&c| t.children(c).len() != 2)
        {
            return Err(Error::InvalidInput("clusters do not form a rooted binary tree".into()));
        }
        Ok(t)
    }

    pub fn n_leaves(&self) -> usize {
        self.n_leaves
    }

    pub fn clusters(&self) -> &[u64] {
        &self.clusters
    }

    /// Maximal proper subclusters of `c`, singletons included.
    pub fn children(&self, c: u64) -> Vec<u64> {
        let mut inner: Vec<u64> = self.clusters.iter().copied().filter(|&x| x != c && x & c == x).collect();
        for leaf in 0..self.n_leaves {
            let bit = 1u64 << leaf;
            if c & bit != 0 {
                inner.push(bit);
            }
        }
        let all = inner.clone();
        inner.retain(|&x| !all.iter().any(|&y| y != x && x & y == x));
        inner.sort_unstable();
        inner
    }

    fn parent(&self, c: u64) -> Option<u64> {
        self.clusters.iter().copied().find(|&p| p != c && p & c == c)
    }

    /// Merges in a bottom-up order: every internal node after its children.
    pub fn merge_sequence(&self) -> Vec<(u64, u64)> {
        self.clusters
            .iter()
            .map(|&c| {
                let ch = self.children(c);
                (ch[0], ch[1])
            })
            .collect()
    }

    /// Leaf pairs whose lowest common ancestor is `c`, as coordinate indices.
    fn lca_pairs(&self, c: u64) -> Vec<usize> {
        let (a, b) = {
            let ch = self.children(c);
            (ch[0], ch[1])
        };
        let leaves = |m: u64| (0..self.n_leaves).filter(move |i| m >> i & 1 == 1);
        let mut out: Vec<usize> =
            leaves(a).flat_map(|i| leaves(b).map(move |j| pair_index(i.min(j), i.max(j), self.n_leaves))).collect();
        out.sort_unstable();
        out
    }

    /// The closed cone of metrics with this shape, in all `C(N, 2)`
    /// coordinates: pairs with a common lca have equal coordinates, and a
    /// node's coordinate is at most its parent's.
    pub fn cone_constraints(&self) -> Vec<LinearConstraint> {
        let dim = pair_count(self.n_leaves);
        let unit = |pos: usize, neg: usize| {
            let mut a = vec![Rational::from_integer(0.into()); dim];
            a[pos] = Rational::from_integer(1.into());
            a[neg] = Rational::from_integer((-1).into());
            a
        };
        let mut out = Vec::new();
        for &c in &self.clusters {
            let ps = self.lca_pairs(c);
            for &p in &ps[1..] {
                out.push(LinearConstraint::eq(unit(p, ps[0]), Rational::from_integer(0.into())));
            }
            if let Some(parent) = self.parent(c) {
                let q = self.lca_pairs(parent)[0];
                out.push(LinearConstraint::le(unit(ps[0], q), Rational::from_integer(0.into())));
            }
        }
        out
    }

    /// The cone in canonical quotient coordinates, i.e. with the first pair
    /// coordinate fixed to 0 and dropped.
    pub fn quotient_cone(&self) -> HPolytope {
        let dim = pair_count(self.n_leaves) - 1;
        let cs = self
            .cone_constraints()
            .into_iter()
            .map(|c| LinearConstraint { coefficients: c.coefficients[1..].to_vec(), ..c })
            .collect();
        HPolytope::from_constraints(dim, cs).expect("dimensions agree")
    }

    /// Whether a full metric vector lies in the closed cone.
    pub fn contains(&self, metric: &[Rational]) -> bool {
        metric.len() == pair_count(self.n_leaves) && self.cone_constraints().iter().all(|c| c.is_satisfied(metric))
    }

    /// Parenthesized shape with 1-based leaf labels, children ordered by
    /// smallest leaf.
    pub fn newick(&self) -> String {
        fn go(t: &TreeTopology, c: u64) -> String {
            if c.count_ones() == 1 {
                return (c.trailing_zeros() + 1).to_string();
            }
            let mut ch = t.children(c);
            ch.sort_unstable_by_key(|x| x.trailing_zeros());
            format!("({},{})", go(t, ch[0]), go(t, ch[1]))
        }
        go(self, (1u64 << self.n_leaves) - 1)
    }
}

/// `(2N - 3)!!`.
pub fn topology_count(n_leaves: usize) -> u128 {
    (2..n_leaves).map(|k| (2 * k - 1) as u128).product()
}

/// Every rooted binary tree shape on `N` leaves, built by inserting leaves one
/// at a time onto each edge (including the one above the root).
pub fn enumerate_topologies(n_leaves: usize, budgets: &Budgets) -> Result<Vec<TreeTopology>> {
    if n_leaves < 3 {
        return Err(Error::InvalidInput(format!("treespace needs N >= 3 leaves (got {n_leaves})")));
    }
    if n_leaves > budgets.topology_leaf_limit {
        return Err(Error::BudgetExceeded {
            what: "treespace leaf count",
            size: n_leaves as u128,
            limit: budgets.topology_leaf_limit as u128,
        });
    }
    let mut trees: Vec<Vec<u64>> = vec![vec![0b11]];
    for k in 2..n_leaves {
        let new = 1u64 << k;
        let mut next = Vec::with_capacity(trees.len() * (2 * k - 1));
        for t in &trees {
            let nodes = t.iter().copied().chain((0..k).map(|i| 1u64 << i));
            for x in nodes {
                let mut c: Vec<u64> =
                    t.iter().map(|&y| if y != x && y & x == x { y | new } else { y }).collect();
                c.push(x | new);
                sort_clusters(&mut c);
                next.push(c);
            }
        }
        trees = next;
    }
    let mut out: Vec<TreeTopology> =
        trees.into_iter().map(|clusters| TreeTopology { n_leaves, clusters }).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratgeom::affine_hull;
    use std::collections::HashSet;

    #[test]
    fn counts_match_double_factorial() {
        for (n, expected) in [(3, 3), (4, 15), (5, 105)] {
            let ts = enumerate_topologies(n, &Budgets::default()).unwrap();
            assert_eq!(ts.len(), expected);
            assert_eq!(topology_count(n), expected as u128);
            let distinct: HashSet<_> = ts.iter().collect();
            assert_eq!(distinct.len(), expected);
            for t in &ts {
                assert_eq!(&TreeTopology::from_clusters(n, t.clusters.clone()).unwrap(), t);
            }
        }
    }

    #[test]
    fn leaf_cap_is_enforced() {
        let b = Budgets { topology_leaf_limit: 4, ..Budgets::default() };
        assert!(matches!(enumerate_topologies(5, &b), Err(Error::BudgetExceeded { .. })));
        assert!(enumerate_topologies(2, &b).is_err());
    }

    #[test]
    fn quartet_cones_have_quotient_dimension_two() {
        for t in enumerate_topologies(4, &Budgets::default()).unwrap() {
            let hull = affine_hull(&t.quotient_cone()).unwrap().unwrap();
            assert_eq!(hull.dimension(), 2, "{}", t.newick());
        }
    }

    #[test]
    fn shapes_and_merges() {
        // ((1,2),3): clusters {1,2} and {1,2,3}.
        let t = TreeTopology::from_clusters(3, vec![0b111, 0b011]).unwrap();
        assert_eq!(t.newick(), "((1,2),3)");
        assert_eq!(t.merge_sequence(), vec![(0b001, 0b010), (0b011, 0b100)]);
        assert!(TreeTopology::from_clusters(3, vec![0b111, 0b011, 0b110]).is_err());
        assert!(TreeTopology::from_clusters(3, vec![0b011]).is_err());
    }

    #[test]
    fn cone_membership() {
        use crate::rational::int;
        let t = TreeTopology::from_clusters(3, vec![0b111, 0b011]).unwrap();
        // D12 <= D13 = D23.
        assert!(t.contains(&[int(1), int(2), int(2)]));
        assert!(t.contains(&[int(2), int(2), int(2)]));
        assert!(!t.contains(&[int(2), int(1), int(1)]));
        assert!(!t.contains(&[int(1), int(2), int(3)]));
    }
}
