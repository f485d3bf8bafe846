//! Sums of practical numbers and the palindromic chain 88, 8888, ….

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::practical::{
    certify_product_unfactored, is_practical_u64, sieve_practicals, verdict_u64,
    MultiplierCertificate, PracticalBitmap, PracticalityVerdict, SieveConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachPair {
    pub n: u64,
    pub p1: u64,
    pub p2: u64,
}

fn member(bitmap: Option<&PracticalBitmap>, n: u64) -> bool {
    match bitmap {
        Some(b) if n <= b.limit() => b.contains(n),
        _ => is_practical_u64(n),
    }
}

/// Smallest practical p1 with n − p1 practical and p1 ≤ n − p1. The bitmap,
/// when given, answers membership up to its limit.
pub fn goldbach_pair(n: u64, bitmap: Option<&PracticalBitmap>) -> Result<GoldbachPair> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidInput(format!("{n} is not an even number ≥ 2")));
    }
    let candidates: Box<dyn Iterator<Item = u64>> = match bitmap {
        Some(b) if n / 2 <= b.limit() => Box::new(b.iter().take_while(move |&p| p <= n / 2)),
        _ => Box::new((1..=n / 2).filter(|&p| is_practical_u64(p))),
    };
    for p1 in candidates {
        if member(bitmap, n - p1) {
            return Ok(GoldbachPair { n, p1, p2: n - p1 });
        }
    }
    Err(Error::NotFound(format!(
        "{n} is not a sum of two practical numbers"
    )))
}

/// All m ≤ limit with m − 2, m and m + 2 practical.
pub fn practical_triples(limit: u64, config: &SieveConfig) -> Result<Vec<u64>> {
    let bitmap = sieve_practicals(limit.saturating_add(2).max(1), config)?;
    Ok(triples_in(&bitmap, limit))
}

pub fn triples_in(bitmap: &PracticalBitmap, limit: u64) -> Vec<u64> {
    let limit = limit.min(bitmap.limit().saturating_sub(2));
    (3..=limit)
        .filter(|&m| bitmap.contains(m - 2) && bitmap.contains(m) && bitmap.contains(m + 2))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PalindromicTerm {
    pub index: u32,
    #[serde(with = "json::big")]
    pub value: BigUint,
    /// Direct Stewart verdict, recorded for the first term.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdict: Option<PracticalityVerdict>,
    /// value = previous term · (10^(2^(index−1)) + 1).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<MultiplierCertificate>,
}

/// Digits grow as 2^(index+1); past this the numbers are unwieldy.
pub const MAX_PALINDROMIC: u32 = 20;

pub fn is_decimal_palindrome(n: &BigUint) -> bool {
    let s = n.to_str_radix(10);
    s.bytes().eq(s.bytes().rev())
}

/// A_1, …, A_count with A_n = 8·(10^(2^n) − 1)/9.
pub fn palindromic_practicals(count: u32) -> Result<Vec<PalindromicTerm>> {
    if count == 0 || count > MAX_PALINDROMIC {
        return Err(Error::InvalidInput(format!(
            "count must be in [1, {MAX_PALINDROMIC}], got {count}"
        )));
    }
    let first = verdict_u64(88);
    debug_assert!(first.practical);
    let mut out = vec![PalindromicTerm {
        index: 1,
        value: BigUint::from(88u32),
        verdict: Some(first),
        certificate: None,
    }];
    for index in 2..=count {
        let prev = &out.last().unwrap().value;
        let multiplier = BigUint::from(10u32).pow(1 << (index - 1)) + 1u32;
        let certificate = certify_product_unfactored(prev, &multiplier)?;
        let value = certificate.product.clone();
        if !is_decimal_palindrome(&value) {
            return Err(Error::Inconsistent(format!("A_{index} is not a palindrome")));
        }
        out.push(PalindromicTerm {
            index,
            value,
            verdict: None,
            certificate: Some(certificate),
        });
    }
    Ok(out)
}
