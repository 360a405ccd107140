use serde::Serialize;

use super::similar::{find_similar_pair, verify_similar_pair, WitnessVerdict};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::fermat_weber::{fw_polytope, is_essential, SampleMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    /// The sample is not both essential and uniquely solved.
    Vacuous,
    /// Essential, unique, and a witness was found.
    Confirmed,
    /// Essential, unique, and a complete search found no witness.
    Contradiction,
    /// Essential, unique, and the search hit its budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub essential: bool,
    pub unique: bool,
    pub witness: WitnessVerdict,
    pub status: TheoremStatus,
}

/// Essential samples with a unique Fermat-Weber point must carry a
/// similar-pair witness. The witness search runs in every case so that the
/// full `(essential, unique, witness)` tuple is reported.
pub fn check_theorem_lowdim(sample: &SampleMatrix, budgets: &Budgets) -> Result<TheoremCheck> {
    let essential = is_essential(sample)?.essential;
    let unique = fw_polytope(sample)?.unique;
    let witness = find_similar_pair(sample, budgets);
    if let Some(pair) = witness.pair() {
        if !verify_similar_pair(sample, pair) {
            return Err(Error::Internal("witness search returned an invalid pair".into()));
        }
    }
    let status = match (essential && unique, &witness) {
        (false, _) => TheoremStatus::Vacuous,
        (true, WitnessVerdict::Found { .. }) => TheoremStatus::Confirmed,
        (true, WitnessVerdict::None) => TheoremStatus::Contradiction,
        (true, WitnessVerdict::Unknown { .. }) => TheoremStatus::Inconclusive,
    };
    Ok(TheoremCheck { essential, unique, witness, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fermat_weber::instances::{segment_sample, triangle_sample};

    #[test]
    fn triangle_is_vacuous() {
        let c = check_theorem_lowdim(&triangle_sample(), &Budgets::default()).unwrap();
        assert!(c.essential);
        assert!(!c.unique);
        assert_eq!(c.status, TheoremStatus::Vacuous);
    }

    #[test]
    fn witness_without_uniqueness() {
        let c = check_theorem_lowdim(&segment_sample(), &Budgets::default()).unwrap();
        assert!(c.essential && !c.unique && c.witness.is_found());
        assert_eq!(c.status, TheoremStatus::Vacuous);
    }
}
