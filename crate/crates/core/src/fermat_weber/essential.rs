use rayon::prelude::*;
use serde::Serialize;

use super::{is_fw_point, min_sum_lp, SampleMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EssentialReport {
    pub essential: bool,
    /// `row_is_fw_point[i]`: whether `v_i` is a Fermat-Weber point of the
    /// sample without row `i`.
    pub row_is_fw_point: Vec<bool>,
}

/// A sample is essential when no point is a Fermat-Weber point of the others.
pub fn is_essential(sample: &SampleMatrix) -> Result<EssentialReport> {
    if sample.m() < 2 {
        return Err(Error::Precondition("essentiality needs at least two points".into()));
    }
    let row_is_fw_point = (0..sample.m())
        .into_par_iter()
        .map(|i| {
            let rest = sample.without(i)?;
            let d = min_sum_lp(&rest)?;
            is_fw_point(sample.row(i), &rest, &d)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(EssentialReport { essential: row_is_fw_point.iter().all(|b| !b), row_is_fw_point })
}
