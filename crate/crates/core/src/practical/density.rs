use serde::{Deserialize, Serialize};

use super::sieve::{sieve_practicals, PracticalBitmap, SieveConfig};
use crate::error::Result;

/// One checkpoint of the counting function P(x).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub x: u64,
    pub count: u64,
    /// P(x) · ln x / x
    pub ratio: f64,
}

pub fn count_practicals(x: u64, config: &SieveConfig) -> Result<u64> {
    Ok(sieve_practicals(x, config)?.count())
}

pub fn density_rows(bitmap: &PracticalBitmap, checkpoints: &[u64]) -> Vec<DensityRow> {
    checkpoints
        .iter()
        .map(|&x| {
            let count = bitmap.count_up_to(x);
            let ratio = if x > 1 {
                count as f64 * (x as f64).ln() / x as f64
            } else {
                0.0
            };
            DensityRow { x, count, ratio }
        })
        .collect()
}

/// Sieves once up to the largest checkpoint and reports every row.
pub fn density_report(checkpoints: &[u64], config: &SieveConfig) -> Result<Vec<DensityRow>> {
    let Some(&max) = checkpoints.iter().max() else {
        return Ok(Vec::new());
    };
    let bitmap = sieve_practicals(max, config)?;
    Ok(density_rows(&bitmap, checkpoints))
}
