//! Stewart's structure test with checkable evidence.
//!
//! n = p1^a1 ··· pk^ak (p1 < ... < pk) is practical iff n = 1, or p1 = 2 and
//! every p_i ≤ σ(p1^a1 ··· p_{i−1}^a_{i−1}) + 1. An odd n > 1 fails at i = 1,
//! where the bound is σ(1) + 1 = 2.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, sigma_prime_power, FactorBudget, Factorization};
use crate::error::Result;
use crate::json;

/// One prime power of the chain together with σ of the prefix ending here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "StepRepr", from = "StepRepr")]
pub struct ChainStep {
    pub prime: BigUint,
    pub exponent: u32,
    pub sigma: BigUint,
}

#[derive(Serialize, Deserialize)]
struct StepRepr(
    #[serde(with = "json::big")] BigUint,
    u32,
    #[serde(with = "json::big")] BigUint,
);

impl From<ChainStep> for StepRepr {
    fn from(s: ChainStep) -> Self {
        StepRepr(s.prime, s.exponent, s.sigma)
    }
}

impl From<StepRepr> for ChainStep {
    fn from(r: StepRepr) -> Self {
        ChainStep {
            prime: r.0,
            exponent: r.1,
            sigma: r.2,
        }
    }
}

/// The first prime that breaks the chain: `prime > bound = σ(prefix) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StewartViolation {
    /// 1-based position of the prime in the factorization.
    pub index: usize,
    #[serde(with = "json::big")]
    pub prime: BigUint,
    #[serde(with = "json::big")]
    pub bound: BigUint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Practical,
    NotPractical,
}

/// Outcome of [`is_practical`]. For practical `n` the chain covers the full
/// factorization; otherwise it holds the prefix before the violating prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PracticalityVerdict {
    #[serde(with = "json::big")]
    pub n: BigUint,
    pub practical: bool,
    pub chain: Vec<ChainStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<StewartViolation>,
}

impl PracticalityVerdict {
    pub fn status(&self) -> Status {
        if self.practical {
            Status::Practical
        } else {
            Status::NotPractical
        }
    }

    /// σ(n) for a practical verdict (1 for n = 1).
    pub fn sigma(&self) -> Option<BigUint> {
        if !self.practical {
            return None;
        }
        Some(
            self.chain
                .last()
                .map(|s| s.sigma.clone())
                .unwrap_or_else(BigUint::one),
        )
    }

    /// Re-derives every running σ and bound from the recorded primes and
    /// exponents. Uses only arithmetic on the recorded values.
    pub fn replay(&self) -> bool {
        let mut running = BigUint::one();
        let mut product = BigUint::one();
        let mut prev: Option<&BigUint> = None;
        for step in &self.chain {
            if step.exponent == 0 || step.prime < BigUint::from(2u8) {
                return false;
            }
            if prev.is_some_and(|q| *q >= step.prime) {
                return false;
            }
            if step.prime > &running + 1u32 {
                return false;
            }
            running *= sigma_prime_power(&step.prime, step.exponent);
            if running != step.sigma {
                return false;
            }
            product *= step.prime.pow(step.exponent);
            prev = Some(&step.prime);
        }
        match (&self.witness, self.practical) {
            (None, true) => product == self.n,
            (Some(w), false) => {
                w.index == self.chain.len() + 1
                    && w.bound == &running + 1u32
                    && w.prime > w.bound
                    && prev.is_none_or(|q| *q < w.prime)
                    && !self.n.is_zero()
                    && (&self.n % &product).is_zero()
                    && ((&self.n / &product) % &w.prime).is_zero()
            }
            _ => false,
        }
    }
}

/// Applies the chain test to a known factorization.
pub fn verdict_from_factorization(f: &Factorization) -> PracticalityVerdict {
    let n = f.value();
    let mut running = BigUint::one();
    let mut chain = Vec::with_capacity(f.len());
    for (i, (p, e)) in f.factors().iter().enumerate() {
        let bound = &running + 1u32;
        if *p > bound {
            return PracticalityVerdict {
                n,
                practical: false,
                chain,
                witness: Some(StewartViolation {
                    index: i + 1,
                    prime: p.clone(),
                    bound,
                }),
            };
        }
        running *= sigma_prime_power(p, *e);
        chain.push(ChainStep {
            prime: p.clone(),
            exponent: *e,
            sigma: running.clone(),
        });
    }
    PracticalityVerdict {
        n,
        practical: true,
        chain,
        witness: None,
    }
}

pub fn is_practical(n: &BigUint, budget: &FactorBudget) -> Result<PracticalityVerdict> {
    let f = factorize(n, budget)?;
    Ok(verdict_from_factorization(&f))
}

pub fn verdict_u64(n: u64) -> PracticalityVerdict {
    verdict_from_factorization(&crate::arith::factorize_u64(n))
}

/// Boolean Stewart test for machine words.
///
/// Trial division stops as soon as the next candidate divisor exceeds
/// σ(prefix) + 1, since every remaining prime factor is at least that large.
pub fn is_practical_u64(n: u64) -> bool {
    if n == 1 {
        return true;
    }
    if n == 0 || n & 1 == 1 {
        return false;
    }
    let e = n.trailing_zeros();
    let mut sigma: u128 = (1u128 << (e + 1)) - 1;
    let mut rem = n >> e;
    let mut p: u64 = 3;
    while rem > 1 {
        if p as u128 > sigma + 1 {
            return false;
        }
        if p.saturating_mul(p) > rem {
            // rem is prime
            return rem as u128 <= sigma + 1;
        }
        if rem % p == 0 {
            let mut pk: u128 = 1;
            let mut s: u128 = 1;
            while rem % p == 0 {
                rem /= p;
                pk *= p as u128;
                s += pk;
            }
            sigma *= s;
        }
        p += 2;
    }
    true
}
