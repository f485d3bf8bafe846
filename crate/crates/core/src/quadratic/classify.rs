use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::mq::{mq, MqResult};
use super::poly::QuadraticPoly;
use crate::arith::{prime_stream, FactorBudget};
use crate::error::{Error, Result};
use crate::json;
use crate::practical::{is_practical, is_practical_u64, PracticalityVerdict};

/// Primes tried by [`least_infinite_prime`] before giving up.
pub const DEFAULT_PRIME_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeastInfinitePrime {
    /// 1-based index of p_r in the sequence of primes.
    pub r: usize,
    pub p_r: u64,
    /// m_q(p_1), …, m_q(p_{r−1}).
    pub exponents: Vec<u32>,
    /// Full m_q results for p_1, …, p_r.
    pub details: Vec<MqResult>,
}

pub fn least_infinite_prime(q: &QuadraticPoly, cap: usize) -> Result<LeastInfinitePrime> {
    let mut exponents = Vec::new();
    let mut details = Vec::new();
    for (i, p) in prime_stream().take(cap).enumerate() {
        let res = mq(q, p);
        let value = res.value;
        details.push(res);
        match value.finite() {
            Some(k) => exponents.push(k),
            None => {
                return Ok(LeastInfinitePrime {
                    r: i + 1,
                    p_r: p,
                    exponents,
                    details,
                })
            }
        }
    }
    Err(Error::IterationCap {
        cap: cap as u64,
        what: format!("primes searched for an infinite m_q of {q}"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuadCase {
    InfinitelyMany,
    FinitelyMany,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadClassification {
    pub case: QuadCase,
    pub r: usize,
    pub p_r: u64,
    pub exponents: Vec<u32>,
    #[serde(rename = "witness_N", with = "json::big")]
    pub witness_n: BigUint,
    #[serde(rename = "verdict_N")]
    pub verdict_n: PracticalityVerdict,
}

pub fn classify_quadratic(q: &QuadraticPoly, budget: &FactorBudget) -> Result<QuadClassification> {
    let lip = least_infinite_prime(q, DEFAULT_PRIME_CAP)?;
    let mut n = BigUint::from(lip.p_r);
    for (p, &e) in prime_stream().zip(&lip.exponents) {
        n *= BigUint::from(p).pow(e);
    }
    let verdict = is_practical(&n, budget)?;
    Ok(QuadClassification {
        case: if verdict.practical {
            QuadCase::InfinitelyMany
        } else {
            QuadCase::FinitelyMany
        },
        r: lip.r,
        p_r: lip.p_r,
        exponents: lip.exponents,
        witness_n: n,
        verdict_n: verdict,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadTerm {
    pub n: u64,
    pub value: u64,
}

pub const DEFAULT_QUAD_SCAN_LIMIT: u64 = 1_000_000;

/// The first `count` distinct practical values of q at n = 1, 2, …, in
/// increasing order, each tagged with the smallest n producing it.
///
/// For the finitely-many case the scan stops once q is increasing and has
/// passed witness_N, beyond which no value is practical, and may return
/// fewer than `count` terms.
pub fn quad_practical_stream(
    q: &QuadraticPoly,
    count: usize,
    scan_limit: u64,
    budget: &FactorBudget,
) -> Result<Vec<QuadTerm>> {
    let cls = classify_quadratic(q, budget)?;
    let ceiling = (cls.case == QuadCase::FinitelyMany).then_some(cls.witness_n);
    let start = q.increasing_from();
    let value_at = |n: u64| -> Result<Option<u64>> {
        let v = q
            .eval_i128(n as i128)
            .ok_or_else(|| Error::InvalidInput(format!("{q} overflows at n = {n}")))?;
        if v <= 0 {
            return Ok(None);
        }
        v.to_u64()
            .map(Some)
            .ok_or_else(|| Error::InvalidInput(format!("{q}({n}) = {v} exceeds u64")))
    };

    // Before the vertex q may decrease; collect those values first and merge.
    let mut early: BTreeMap<u64, u64> = BTreeMap::new();
    for n in 1..start.min(scan_limit + 1) {
        if let Some(v) = value_at(n)? {
            if is_practical_u64(v) {
                early.entry(v).or_insert(n);
            }
        }
    }

    let mut out: Vec<QuadTerm> = Vec::with_capacity(count);
    let push = |t: QuadTerm, out: &mut Vec<QuadTerm>| {
        if out.last().map_or(true, |last| last.value < t.value) && out.len() < count {
            out.push(t);
        }
    };
    let mut exhausted = false;
    let mut n = start;
    while out.len() < count && n <= scan_limit {
        let Some(v) = value_at(n)? else {
            n += 1;
            continue;
        };
        if let Some(cap) = &ceiling {
            if BigUint::from(v) > *cap {
                exhausted = true;
                break;
            }
        }
        while let Some((&ev, &en)) = early.first_key_value() {
            if ev > v {
                break;
            }
            early.pop_first();
            if ev < v {
                push(QuadTerm { n: en, value: ev }, &mut out);
            } else {
                push(QuadTerm { n: en.min(n), value: v }, &mut out);
            }
        }
        if is_practical_u64(v) {
            push(QuadTerm { n, value: v }, &mut out);
        }
        n += 1;
    }
    if exhausted || n > scan_limit {
        for (ev, en) in std::mem::take(&mut early) {
            push(QuadTerm { n: en, value: ev }, &mut out);
        }
    }
    if out.len() < count && !exhausted {
        return Err(Error::ScanBudgetExceeded {
            found: out.len(),
            wanted: count,
            scanned: scan_limit,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64) -> QuadraticPoly {
        QuadraticPoly::new(a, b, c).unwrap()
    }

    #[test]
    fn least_primes() {
        let l = least_infinite_prime(&q(1, 1, 2), 100).unwrap();
        assert_eq!((l.r, l.p_r, l.exponents), (1, 2, vec![]));
        let l = least_infinite_prime(&q(1, 0, 1), 100).unwrap();
        assert_eq!((l.r, l.p_r, l.exponents), (3, 5, vec![1, 0]));
        let l = least_infinite_prime(&q(1, 0, 3), 100).unwrap();
        assert_eq!((l.r, l.p_r, l.exponents), (4, 7, vec![2, 1, 0]));
    }

    #[test]
    fn classifications() {
        let b = FactorBudget::default();
        let c = classify_quadratic(&q(1, 1, 2), &b).unwrap();
        assert_eq!((c.case, c.witness_n), (QuadCase::InfinitelyMany, BigUint::from(2u8)));
        let c = classify_quadratic(&q(1, 0, 1), &b).unwrap();
        assert_eq!((c.case, c.witness_n), (QuadCase::FinitelyMany, BigUint::from(10u8)));
        let c = classify_quadratic(&q(1, 0, 3), &b).unwrap();
        assert_eq!((c.case, c.witness_n), (QuadCase::InfinitelyMany, BigUint::from(84u8)));
    }

    fn values(t: &[QuadTerm]) -> Vec<u64> {
        t.iter().map(|t| t.value).collect()
    }

    #[test]
    fn streams() {
        let b = FactorBudget::default();
        let s = quad_practical_stream(&q(1, 1, 2), 3, 1000, &b).unwrap();
        assert_eq!(values(&s), vec![4, 8, 32]);
        assert_eq!(s.iter().map(|t| t.n).collect::<Vec<_>>(), vec![1, 2, 5]);
        // q(3) = 12 is practical and precedes 28
        let s = quad_practical_stream(&q(1, 0, 3), 2, 1000, &b).unwrap();
        assert_eq!(values(&s), vec![4, 12]);
        let s = quad_practical_stream(&q(1, 0, 1), 5, 1000, &b).unwrap();
        assert_eq!(values(&s), vec![2]);
    }

    #[test]
    fn stream_merges_values_before_the_vertex() {
        // n² − 6n + 12: n = 1..6 → 7, 4, 3, 4, 7, 12
        let b = FactorBudget::default();
        let poly = q(1, -6, 12);
        let s = quad_practical_stream(&poly, 4, 10_000, &b).unwrap();
        let v = values(&s);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(v[0], 4);
        assert_eq!(s[0].n, 2);
        // brute force
        let mut expect: Vec<u64> = (1..10_000i128)
            .filter_map(|n| poly.eval_i128(n))
            .filter(|&v| v > 0 && is_practical_u64(v as u64))
            .map(|v| v as u64)
            .collect();
        expect.sort_unstable();
        expect.dedup();
        assert_eq!(v, expect[..4]);
    }

    #[test]
    fn stream_budget() {
        let b = FactorBudget::default();
        assert!(matches!(
            quad_practical_stream(&q(1, 1, 2), 100, 10, &b),
            Err(Error::ScanBudgetExceeded { .. })
        ));
    }
}
