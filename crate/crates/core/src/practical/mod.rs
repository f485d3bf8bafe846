//! Deciding, certifying and counting practical numbers.

mod certificate;
mod density;
mod oracle;
mod sieve;
mod verdict;

pub use certificate::{
    certify_power_of_two, certify_product, certify_product_unfactored, MultiplierBound,
    MultiplierCertificate,
};
pub use density::{count_practicals, density_report, density_rows, DensityRow};
pub use oracle::{is_practical_oracle, DEFAULT_ORACLE_BOUND};
pub use sieve::{
    sieve_practicals, PracticalBitmap, SieveConfig, CACHE_HEADER_LEN, CACHE_MAGIC, CACHE_VERSION,
    MAX_SIEVE_LIMIT,
};
pub use verdict::{
    is_practical, is_practical_u64, verdict_from_factorization, verdict_u64, ChainStep,
    PracticalityVerdict, Status, StewartViolation,
};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::FactorBudget;
use crate::error::Result;

/// Boolean practicality for any size, taking the word-size fast path when
/// it applies.
pub fn is_practical_bool(n: &BigUint, budget: &FactorBudget) -> Result<bool> {
    match n.to_u64() {
        Some(x) => Ok(is_practical_u64(x)),
        None => Ok(is_practical(n, budget)?.practical),
    }
}
