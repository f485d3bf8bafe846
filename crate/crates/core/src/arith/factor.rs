//! Canonical prime factorizations and the divisor-sum function.
//!
//! Factoring is delegated to `num-prime` (trial division followed by
//! Pollard rho / SQUFOF). Inputs wider than 128 bits go through its fallible
//! path, and any cofactor it cannot split is reported as
//! [`Error::BudgetExceeded`] instead of being guessed at.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_prime::nt_funcs;
use num_prime::FactorizationConfig;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Work limits for [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorBudget {
    /// Largest accepted input, in bits.
    pub max_bits: u64,
    /// Trial division bound applied before the second stage (inputs > 128 bits).
    pub trial_limit: u64,
    /// Pollard rho attempts per composite cofactor (inputs > 128 bits).
    pub rho_trials: usize,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            max_bits: 192,
            trial_limit: 1 << 16,
            rho_trials: 8,
        }
    }
}

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing
/// primes. The empty list is the factorization of 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(BigUint, u32)>", into = "Vec<(BigUint, u32)>")]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization::default()
    }

    /// Builds a factorization from pairs, checking ordering and exponents.
    /// Primality of the bases is the caller's responsibility.
    pub fn from_pairs(factors: Vec<(BigUint, u32)>) -> Result<Self> {
        for (i, (p, e)) in factors.iter().enumerate() {
            if *e == 0 {
                return Err(Error::InvalidInput(format!("exponent 0 for prime {p}")));
            }
            if *p < BigUint::from(2u8) {
                return Err(Error::InvalidInput(format!("{p} is not a prime")));
            }
            if i > 0 && factors[i - 1].0 >= *p {
                return Err(Error::InvalidInput(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        Ok(Factorization { factors })
    }

    pub fn from_u64_pairs(pairs: &[(u64, u32)]) -> Result<Self> {
        Self::from_pairs(pairs.iter().map(|&(p, e)| (BigUint::from(p), e)).collect())
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Re-multiplies the factorization.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn sigma(&self) -> BigUint {
        sigma(self)
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// Product of two factorizations, merging exponents.
    pub fn multiply(&self, other: &Factorization) -> Factorization {
        let mut merged: BTreeMap<BigUint, u32> = BTreeMap::new();
        for (p, e) in self.factors.iter().chain(other.factors.iter()) {
            *merged.entry(p.clone()).or_insert(0) += e;
        }
        Factorization {
            factors: merged.into_iter().collect(),
        }
    }

    /// All divisors in ascending order. Only sensible for small inputs.
    pub fn divisors(&self) -> Vec<BigUint> {
        let mut divs = vec![BigUint::one()];
        for (p, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
            for d in &divs {
                let mut pk = d.clone();
                next.push(pk.clone());
                for _ in 0..*e {
                    pk *= p;
                    next.push(pk.clone());
                }
            }
            divs = next;
        }
        divs.sort();
        divs
    }
}

impl TryFrom<Vec<(BigUint, u32)>> for Factorization {
    type Error = Error;

    fn try_from(v: Vec<(BigUint, u32)>) -> Result<Self> {
        Factorization::from_pairs(v)
    }
}

impl From<Factorization> for Vec<(BigUint, u32)> {
    fn from(f: Factorization) -> Self {
        f.factors
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// σ(p^e) = (p^(e+1) − 1)/(p − 1).
pub fn sigma_prime_power(p: &BigUint, e: u32) -> BigUint {
    (p.pow(e + 1) - 1u32) / (p - 1u32)
}

/// Sum of divisors, evaluated multiplicatively from the factorization.
pub fn sigma(f: &Factorization) -> BigUint {
    f.factors
        .iter()
        .fold(BigUint::one(), |acc, (p, e)| acc * sigma_prime_power(p, *e))
}

/// Factorization of a machine word. Never fails.
pub fn factorize_u64(n: u64) -> Factorization {
    assert!(n >= 1, "factorize_u64(0)");
    Factorization {
        factors: nt_funcs::factorize64(n)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e as u32))
            .collect(),
    }
}

pub fn factorize(n: &BigUint, budget: &FactorBudget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::InvalidInput("cannot factorize 0".into()));
    }
    if let Some(small) = n.to_u64() {
        return Ok(factorize_u64(small));
    }
    if n.bits() > budget.max_bits {
        return Err(Error::BudgetExceeded {
            n: n.to_string(),
            reason: format!("{} bits exceeds max_bits = {}", n.bits(), budget.max_bits),
        });
    }
    let mut config = FactorizationConfig::default();
    config.td_limit = Some(budget.trial_limit);
    config.rho_trials = budget.rho_trials;
    let (found, failed) = nt_funcs::factors(n.clone(), Some(config));
    if let Some(rest) = failed {
        let rest: Vec<String> = rest.iter().map(|r| r.to_string()).collect();
        return Err(Error::BudgetExceeded {
            n: n.to_string(),
            reason: format!("could not split cofactor(s) {}", rest.join(", ")),
        });
    }
    let f = Factorization {
        factors: found.into_iter().map(|(p, e)| (p, e as u32)).collect(),
    };
    debug_assert_eq!(&f.value(), n);
    Ok(f)
}

/// Largest k with p^k | n. `n` must be nonzero and `p` ≥ 2.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of 0");
    assert!(p >= 2, "valuation base must be ≥ 2");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

pub fn valuation_u64(mut n: u64, p: u64) -> u32 {
    assert!(n != 0 && p >= 2);
    let mut k = 0;
    while n % p == 0 {
        n /= p;
        k += 1;
    }
    k
}
