//! Factorization-free practicality certificates: if `base` is practical and
//! `multiplier ≤ σ(base) + 1` then `base · multiplier` is practical.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::verdict::{ChainStep, PracticalityVerdict};
use crate::error::{Error, Result};
use crate::json;

/// How the bound on the multiplier was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MultiplierBound {
    /// σ(base) + 1, with σ(base) read off the base's Stewart chain.
    Sigma { chain: Vec<ChainStep> },
    /// base = 2^k, so σ(base) + 1 = 2^(k+1).
    PowerOfTwo { k: u32 },
    /// 2·base − 1 ≤ σ(base) for practical base: the proper divisors of a
    /// practical base already sum to at least base − 1. The practicality of
    /// the base is established elsewhere (e.g. by an earlier certificate).
    TwiceBase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierCertificate {
    #[serde(with = "json::big")]
    pub base: BigUint,
    #[serde(with = "json::big")]
    pub multiplier: BigUint,
    #[serde(with = "json::big")]
    pub bound: BigUint,
    #[serde(with = "json::big")]
    pub product: BigUint,
    pub evidence: MultiplierBound,
}

impl MultiplierCertificate {
    /// Recomputes the bound from the evidence and re-checks every relation.
    pub fn check(&self) -> bool {
        let bound = match &self.evidence {
            MultiplierBound::Sigma { chain } => {
                let v = PracticalityVerdict {
                    n: self.base.clone(),
                    practical: true,
                    chain: chain.clone(),
                    witness: None,
                };
                if !v.replay() {
                    return false;
                }
                v.sigma().unwrap() + 1u32
            }
            MultiplierBound::PowerOfTwo { k } => {
                if *k == 0 || self.base != BigUint::one() << *k {
                    return false;
                }
                BigUint::one() << (*k + 1)
            }
            MultiplierBound::TwiceBase => (&self.base << 1u32) - 1u32,
        };
        bound == self.bound
            && self.multiplier >= BigUint::one()
            && self.multiplier <= self.bound
            && self.product == &self.base * &self.multiplier
    }
}

fn build(
    base: BigUint,
    multiplier: BigUint,
    bound: BigUint,
    evidence: MultiplierBound,
) -> Result<MultiplierCertificate> {
    if multiplier.bits() == 0 {
        return Err(Error::InvalidInput("multiplier must be positive".into()));
    }
    if multiplier > bound {
        return Err(Error::BoundViolated {
            multiplier: multiplier.to_string(),
            bound: bound.to_string(),
        });
    }
    let product = &base * &multiplier;
    Ok(MultiplierCertificate {
        base,
        multiplier,
        bound,
        product,
        evidence,
    })
}

/// Certificate for `base · multiplier` from a practical verdict of `base`.
pub fn certify_product(
    base: &PracticalityVerdict,
    multiplier: &BigUint,
) -> Result<MultiplierCertificate> {
    let Some(sigma) = base.sigma() else {
        return Err(Error::InvalidInput(format!("{} is not practical", base.n)));
    };
    build(
        base.n.clone(),
        multiplier.clone(),
        sigma + 1u32,
        MultiplierBound::Sigma {
            chain: base.chain.clone(),
        },
    )
}

/// Certificate using only 2·base − 1 as the bound; the caller vouches for
/// the practicality of `base`.
pub fn certify_product_unfactored(
    base: &BigUint,
    multiplier: &BigUint,
) -> Result<MultiplierCertificate> {
    if base.bits() == 0 {
        return Err(Error::InvalidInput("base must be positive".into()));
    }
    build(
        base.clone(),
        multiplier.clone(),
        (base << 1u32) - 1u32,
        MultiplierBound::TwiceBase,
    )
}

/// Certificate for 2^k · m with m ≤ 2^(k+1).
pub fn certify_power_of_two(k: u32, multiplier: &BigUint) -> Result<MultiplierCertificate> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    build(
        BigUint::one() << k,
        multiplier.clone(),
        BigUint::one() << (k + 1),
        MultiplierBound::PowerOfTwo { k },
    )
}
