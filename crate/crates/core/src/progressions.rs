//! Practical numbers in arithmetic progressions a·n + b, and non-practical
//! values of arbitrary integer polynomials.
//!
//! With d the largest practical divisor of gcd(a, b): if some prime
//! p ≤ σ(d) + 1 does not divide a/d the progression holds infinitely many
//! practical numbers. Otherwise every term with n ≥ 1 is d times a number
//! with no prime factor ≤ σ(d) + 1, so the only candidate is b itself.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, prime_stream, FactorBudget, Factorization};
use crate::error::{Error, Result};
use crate::json;
use crate::practical::{
    is_practical, is_practical_bool, is_practical_u64, verdict_from_factorization,
    PracticalityVerdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ApCase {
    InfinitelyMany,
    ExactlyOne,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApClassification {
    pub case: ApCase,
    #[serde(with = "json::big")]
    pub d: BigUint,
    /// Smallest prime p ≤ σ(d) + 1 with p ∤ a/d.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_prime: Option<u64>,
    #[serde(
        default,
        with = "json::big_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub unique_value: Option<BigUint>,
}

/// Largest practical divisor of `g` (at least 1).
pub fn largest_practical_divisor(g: &BigUint, budget: &FactorBudget) -> Result<BigUint> {
    if g.is_zero() {
        return Err(Error::InvalidInput("g must be positive".into()));
    }
    let f = factorize(g, budget)?;
    Ok(largest_practical_divisor_of(&f))
}

fn largest_practical_divisor_of(f: &Factorization) -> BigUint {
    // Walk divisors from the top; sub-factorizations keep this exact.
    let mut best = BigUint::one();
    let mut stack: Vec<(usize, Vec<(BigUint, u32)>)> = vec![(0, Vec::new())];
    let primes = f.factors();
    while let Some((i, chosen)) = stack.pop() {
        if i == primes.len() {
            let sub = Factorization::from_pairs(chosen).expect("ordered subset");
            if verdict_from_factorization(&sub).practical {
                let v = sub.value();
                if v > best {
                    best = v;
                }
            }
            continue;
        }
        let (p, e) = &primes[i];
        for k in 0..=*e {
            let mut next = chosen.clone();
            if k > 0 {
                next.push((p.clone(), k));
            }
            stack.push((i + 1, next));
        }
    }
    best
}

fn require_positive(x: &BigUint, name: &str) -> Result<()> {
    if x.is_zero() {
        return Err(Error::InvalidInput(format!("{name} must be positive")));
    }
    Ok(())
}

pub fn classify_ap(a: &BigUint, b: &BigUint, budget: &FactorBudget) -> Result<ApClassification> {
    require_positive(a, "a")?;
    require_positive(b, "b")?;
    let d = largest_practical_divisor(&a.gcd(b), budget)?;
    let sigma_bound = factorize(&d, budget)?.sigma() + 1u32;
    let a1 = a / &d;
    let mut witness = None;
    for p in prime_stream() {
        if BigUint::from(p) > sigma_bound {
            break;
        }
        if !(&a1 % p).is_zero() {
            witness = Some(p);
            break;
        }
    }
    if witness.is_some() {
        return Ok(ApClassification {
            case: ApCase::InfinitelyMany,
            d,
            witness_prime: witness,
            unique_value: None,
        });
    }
    let b_practical = is_practical(b, budget)?.practical;
    Ok(ApClassification {
        case: if b_practical {
            ApCase::ExactlyOne
        } else {
            ApCase::None
        },
        d,
        witness_prime: None,
        unique_value: b_practical.then(|| b.clone()),
    })
}

/// Default number of progression indices scanned by the stream operations.
pub const DEFAULT_SCAN_LIMIT: u64 = 1_000_000;

/// The first `count` practical terms a·n + b, n = 0, 1, 2, ... in order.
///
/// When the progression is not of the infinite kind the (at most one)
/// practical term b is returned and the scan stops.
pub fn ap_practical_stream(
    a: u64,
    b: u64,
    count: usize,
    scan_limit: u64,
    budget: &FactorBudget,
) -> Result<Vec<u64>> {
    let cls = classify_ap(&BigUint::from(a), &BigUint::from(b), budget)?;
    if cls.case != ApCase::InfinitelyMany {
        return Ok(cls
            .unique_value
            .map(|_| vec![b])
            .unwrap_or_default()
            .into_iter()
            .take(count)
            .collect());
    }
    let mut out = Vec::with_capacity(count);
    for n in 0..=scan_limit {
        if out.len() == count {
            break;
        }
        let v = a
            .checked_mul(n)
            .and_then(|x| x.checked_add(b))
            .ok_or_else(|| Error::InvalidInput(format!("{a}·{n} + {b} overflows u64")))?;
        if is_practical_u64(v) {
            out.push(v);
        }
    }
    if out.len() < count {
        return Err(Error::ScanBudgetExceeded {
            found: out.len(),
            wanted: count,
            scanned: scan_limit + 1,
        });
    }
    Ok(out)
}

/// A practical term ≥ `threshold` built the way the infinitude argument
/// builds it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApWitness {
    #[serde(with = "json::big")]
    pub n: BigUint,
    #[serde(with = "json::big")]
    pub value: BigUint,
    pub p: u64,
    pub k: u32,
    #[serde(with = "json::big")]
    pub d: BigUint,
    pub verdict: PracticalityVerdict,
}

/// Picks the witness prime p, the least k with p^k ≥ max(A, b/d) and
/// σ(d·p^k) + 1 ≥ a/d + 1, then solves (a/d)·n ≡ −b/d (mod p^k) with
/// 1 ≤ n ≤ p^k. The value a·n + b = d·p^k · ((a/d)·n + b/d)/p^k is practical
/// because the cofactor is at most a/d + 1.
pub fn ap_constructive_witness(
    a: &BigUint,
    b: &BigUint,
    threshold: &BigUint,
    budget: &FactorBudget,
) -> Result<ApWitness> {
    let cls = classify_ap(a, b, budget)?;
    let Some(p) = cls.witness_prime else {
        return Err(Error::InvalidInput(format!(
            "{a}·n + {b} does not contain infinitely many practical numbers"
        )));
    };
    let d = cls.d;
    let a1 = a / &d;
    let b1 = b / &d;
    let d_fact = factorize(&d, budget)?;
    let pb = BigUint::from(p);
    let target = threshold.max(&b1).clone();

    let mut k: u32 = 1;
    let mut pk = pb.clone();
    loop {
        if pk >= target {
            let p_fact = Factorization::from_pairs(vec![(pb.clone(), k)])?;
            let sigma = d_fact.multiply(&p_fact).sigma();
            if sigma >= a1 {
                break;
            }
        }
        k += 1;
        pk *= &pb;
    }

    // a1 is a unit mod p^k since p ∤ a1
    let modulus = BigInt::from(pk.clone());
    let inv = BigInt::from(a1.clone())
        .extended_gcd(&modulus)
        .x
        .mod_floor(&modulus);
    let mut n = (-BigInt::from(b1.clone()) * inv).mod_floor(&modulus);
    if n.is_zero() {
        n = modulus.clone();
    }
    let n = n.to_biguint().expect("non-negative");
    let value = a * &n + b;
    debug_assert!((&a1 * &n + &b1).is_multiple_of(&pk));
    let verdict = is_practical(&value, budget)?;
    if !verdict.practical {
        return Err(Error::ClassificationMismatch(format!(
            "constructed term {value} of {a}·n + {b} is not practical"
        )));
    }
    Ok(ApWitness {
        n,
        value,
        p,
        k,
        d,
        verdict,
    })
}

/// Evaluates Σ coeffs[i]·x^i.
pub fn eval_poly(coeffs: &[i64], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * x + c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyWitness {
    pub n: u64,
    #[serde(with = "json::big")]
    pub value: BigUint,
    pub verdict: PracticalityVerdict,
}

/// Smallest n in [1, bound] with P(n) ≥ 1 and P(n) not practical.
/// `coeffs[i]` is the coefficient of x^i.
pub fn nonpractical_witness(
    coeffs: &[i64],
    bound: u64,
    budget: &FactorBudget,
) -> Result<PolyWitness> {
    let degree = coeffs.iter().rposition(|&c| c != 0);
    match degree {
        None | Some(0) => {
            return Err(Error::InvalidInput("polynomial must be non-constant".into()))
        }
        Some(deg) if coeffs[deg] < 0 => {
            return Err(Error::InvalidInput(
                "leading coefficient must be positive".into(),
            ))
        }
        _ => {}
    }
    for n in 1..=bound {
        let v = eval_poly(coeffs, &BigInt::from(n));
        if !v.is_positive() {
            continue;
        }
        let v = v.to_biguint().expect("positive");
        let practical = match v.to_u64() {
            Some(x) => is_practical_u64(x),
            None => is_practical_bool(&v, budget)?,
        };
        if !practical {
            let verdict = is_practical(&v, budget)?;
            return Ok(PolyWitness {
                n,
                value: v,
                verdict,
            });
        }
    }
    Err(Error::SearchExhausted { bound })
}
