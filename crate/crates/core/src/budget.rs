//! Search budgets for the exponential oracles.
//!
//! Defaults can be overridden through environment variables:
//!
//! | variable | meaning | default |
//! |---|---|---|
//! | `TROPFW_ASSIGNMENT_LIMIT` | max `n^m` for the assignment-pair oracle | `1000000` |
//! | `TROPFW_WITNESS_MAX_SIZE` | max `|S|` in the similar-pair search | `8` |
//! | `TROPFW_WITNESS_NODE_LIMIT` | max search nodes for similar pairs | `50000000` |
//! | `TROPFW_PERMUTATION_SIDE_LIMIT` | max side of a tropical determinant | `9` |
//! | `TROPFW_DIRECT_ROW_LIMIT` | max rows of the direct inequality family | `200000` |
//! | `TROPFW_TOPOLOGY_LEAF_LIMIT` | max leaves for treespace cone enumeration | `6` |

use std::env;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budgets {
    pub assignment_limit: u128,
    pub witness_max_size: usize,
    pub witness_node_limit: u64,
    pub permutation_side_limit: usize,
    pub direct_row_limit: u128,
    pub topology_leaf_limit: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            assignment_limit: 1_000_000,
            witness_max_size: 8,
            witness_node_limit: 50_000_000,
            permutation_side_limit: 9,
            direct_row_limit: 200_000,
            topology_leaf_limit: 6,
        }
    }
}

impl Budgets {
    /// Defaults overridden by any `TROPFW_*` variables that parse.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        fn read<T: std::str::FromStr>(name: &str, slot: &mut T) {
            if let Some(v) = env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        }
        read("TROPFW_ASSIGNMENT_LIMIT", &mut b.assignment_limit);
        read("TROPFW_WITNESS_MAX_SIZE", &mut b.witness_max_size);
        read("TROPFW_WITNESS_NODE_LIMIT", &mut b.witness_node_limit);
        read("TROPFW_PERMUTATION_SIDE_LIMIT", &mut b.permutation_side_limit);
        read("TROPFW_DIRECT_ROW_LIMIT", &mut b.direct_row_limit);
        read("TROPFW_TOPOLOGY_LEAF_LIMIT", &mut b.topology_leaf_limit);
        b
    }
}
