//! Practical values of q built from root classes modulo a practical D.
//!
//! D = p_1^{m_1}···p_{r−1}^{m_{r−1}} · p_r^k · t_1···t_s, where the t_i are
//! primes above p_r at which q has a root. Any n solving q(n) ≡ 0 (mod D)
//! gives q(n) = D·m, and if m ≤ σ(D) + 1 the product is practical. Rather
//! than adding t_i until σ(D)/D exceeds a + b + c (which would need primes
//! far beyond reach), we try the CRT combinations of root classes from the
//! smallest n upward and add another t_i only when none certifies.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::classify::{classify_quadratic, QuadCase};
use super::modroots::{legendre, roots_mod_prime};
use super::poly::QuadraticPoly;
use crate::arith::{factorize, prime_stream, valuation_u64, FactorBudget, Factorization};
use crate::error::{Error, Result};
use crate::json;
use crate::practical::{
    certify_product, verdict_from_factorization, MultiplierCertificate, PracticalityVerdict,
};

/// Extra primes t_i tried before giving up.
pub const MAX_EXTRA_PRIMES: usize = 24;
/// Root classes kept per prime power.
const ROOTS_PER_MODULUS: usize = 64;
/// CRT combinations examined per choice of D.
const COMBINATIONS: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadWitness {
    #[serde(with = "json::big")]
    pub n: BigUint,
    #[serde(with = "json::big")]
    pub value: BigUint,
    #[serde(with = "json::big")]
    pub modulus: BigUint,
    pub p_r: u64,
    pub k: u32,
    pub extra_primes: Vec<u64>,
    /// value = modulus · multiplier with multiplier ≤ σ(modulus) + 1.
    pub certificate: MultiplierCertificate,
    pub verdict: PracticalityVerdict,
}

/// Roots of q mod p^e, as residues mod p^(e − v) where v = v_p(content)
/// absorbs the part of the congruence every n satisfies.
fn root_classes(q: &QuadraticPoly, p: u64, e: u32) -> (BigInt, Vec<BigInt>) {
    let v = valuation_u64(q.content(), p);
    let q0 = q.primitive_part();
    let e = e.saturating_sub(v);
    let pb = BigInt::from(p);
    if e == 0 {
        return (BigInt::one(), vec![BigInt::zero()]);
    }
    let coeffs = q0.coefficients().map(BigInt::from);
    let mut roots: Vec<BigInt> = roots_mod_prime([&coeffs[0], &coeffs[1], &coeffs[2]], p)
        .into_iter()
        .map(BigInt::from)
        .collect();
    let mut pk = pb.clone();
    for _ in 1..e {
        let next_pk = &pk * &pb;
        let mut next = Vec::new();
        'outer: for r in &roots {
            for t in 0..p {
                let cand = r + &pk * t;
                if q0.eval(&cand).mod_floor(&next_pk).is_zero() {
                    next.push(cand);
                    if next.len() >= ROOTS_PER_MODULUS {
                        break 'outer;
                    }
                }
            }
        }
        roots = next;
        pk = next_pk;
        if roots.is_empty() {
            break;
        }
    }
    (pk, roots)
}

/// Whether q has a root modulo the prime t.
fn has_root_mod(q: &QuadraticPoly, t: u64) -> bool {
    if t != 2 && q.a % t as i64 != 0 {
        legendre(&q.discriminant(), t) >= 0
    } else {
        let c = q.coefficients().map(BigInt::from);
        !roots_mod_prime([&c[0], &c[1], &c[2]], t).is_empty()
    }
}

/// CRT over pairwise coprime moduli: all combinations in mixed-radix order,
/// up to `cap` of them, each reduced into [1, M].
fn combine(classes: &[(BigInt, Vec<BigInt>)], cap: usize) -> Vec<BigInt> {
    let m: BigInt = classes.iter().map(|(m, _)| m.clone()).product();
    let basis: Vec<BigInt> = classes
        .iter()
        .map(|(mi, _)| {
            let rest = &m / mi;
            let inv = rest.extended_gcd(mi).x.mod_floor(mi);
            rest * inv
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; classes.len()];
    'outer: loop {
        let mut n = BigInt::zero();
        for (i, (_, rs)) in classes.iter().enumerate() {
            n += &rs[idx[i]] * &basis[i];
        }
        let mut n = n.mod_floor(&m);
        if n.is_zero() {
            n = m.clone();
        }
        out.push(n);
        if out.len() >= cap {
            break;
        }
        for i in 0..idx.len() {
            idx[i] += 1;
            if idx[i] < classes[i].1.len() {
                continue 'outer;
            }
            idx[i] = 0;
        }
        break;
    }
    out
}

pub fn quad_constructive_witness(
    q: &QuadraticPoly,
    threshold: &BigUint,
    budget: &FactorBudget,
) -> Result<QuadWitness> {
    let cls = classify_quadratic(q, budget)?;
    if cls.case != QuadCase::InfinitelyMany {
        return Err(Error::InvalidInput(format!(
            "{q} takes only finitely many practical values"
        )));
    }
    let p_r = cls.p_r;
    let low: Vec<(u64, u32)> = prime_stream()
        .zip(cls.exponents.iter().copied())
        .filter(|&(_, e)| e > 0)
        .collect();
    let base: BigUint = low
        .iter()
        .map(|&(p, e)| BigUint::from(p).pow(e))
        .product();
    let prb = BigUint::from(p_r);

    let mut extra: Vec<u64> = Vec::new();
    let mut candidates = prime_stream().skip_while(|&t| t <= p_r);
    loop {
        let t_prod: BigUint = extra.iter().map(|&t| BigUint::from(t)).product();
        let mut k = 1u32;
        let mut pk = prb.clone();
        while pk <= *threshold || &base * &pk < t_prod {
            k += 1;
            pk *= &prb;
        }
        let mut pairs: Vec<(BigUint, u32)> = low
            .iter()
            .map(|&(p, e)| (BigUint::from(p), e))
            .chain(std::iter::once((prb.clone(), k)))
            .chain(extra.iter().map(|&t| (BigUint::from(t), 1)))
            .collect();
        pairs.sort();
        let d_fact = Factorization::from_pairs(pairs)?;
        let d_verdict = verdict_from_factorization(&d_fact);
        if d_verdict.practical {
            if let Some(w) = try_modulus(q, &d_fact, &d_verdict, p_r, k, &extra, budget)? {
                return Ok(w);
            }
        }
        if extra.len() == MAX_EXTRA_PRIMES {
            return Err(Error::IterationCap {
                cap: MAX_EXTRA_PRIMES as u64,
                what: format!("auxiliary primes for a practical value of {q}"),
            });
        }
        let t = candidates
            .by_ref()
            .find(|&t| has_root_mod(q, t))
            .expect("prime stream is infinite");
        extra.push(t);
    }
}

fn try_modulus(
    q: &QuadraticPoly,
    d_fact: &Factorization,
    d_verdict: &PracticalityVerdict,
    p_r: u64,
    k: u32,
    extra: &[u64],
    budget: &FactorBudget,
) -> Result<Option<QuadWitness>> {
    let d = d_fact.value();
    let classes: Vec<(BigInt, Vec<BigInt>)> = d_fact
        .factors()
        .iter()
        .map(|(p, e)| root_classes(q, p.to_u64().expect("small prime"), *e))
        .collect();
    if classes.iter().any(|(_, rs)| rs.is_empty()) {
        return Ok(None);
    }
    let mut ns = combine(&classes, COMBINATIONS);
    ns.sort();
    ns.dedup();
    let bound = d_verdict.sigma().expect("practical") + 1u32;
    let db = BigInt::from(d.clone());
    for n in ns {
        let value = q.eval(&n);
        if !value.is_positive() {
            continue;
        }
        debug_assert!((&value % &db).is_zero());
        let cof = (&value / &db).to_biguint().expect("positive");
        if cof > bound {
            continue;
        }
        let certificate = certify_product(d_verdict, &cof)?;
        let verdict = verdict_from_factorization(&d_fact.multiply(&factorize(&cof, budget)?));
        if !verdict.practical {
            return Err(Error::ClassificationMismatch(format!(
                "certified value {value} of {q} fails the practicality test"
            )));
        }
        return Ok(Some(QuadWitness {
            n: n.to_biguint().expect("positive"),
            value: value.to_biguint().expect("positive"),
            modulus: d,
            p_r,
            k,
            extra_primes: extra.to_vec(),
            certificate,
            verdict,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64, c: i64) -> QuadraticPoly {
        QuadraticPoly::new(a, b, c).unwrap()
    }

    fn check(poly: &QuadraticPoly, threshold: u64) -> QuadWitness {
        let w = quad_constructive_witness(poly, &BigUint::from(threshold), &FactorBudget::default())
            .unwrap();
        assert_eq!(BigInt::from(w.value.clone()), poly.eval(&BigInt::from(w.n.clone())));
        assert!(w.value >= BigUint::from(threshold));
        assert!(w.verdict.practical && w.verdict.replay());
        assert_eq!(w.verdict.n, w.value);
        assert!(w.certificate.check());
        w
    }

    #[test]
    fn small_thresholds() {
        check(&q(1, 1, 2), 10);
        check(&q(1, 1, 2), 1);
        let w = check(&q(1, 0, 3), 100);
        assert!((&w.value % BigUint::from(7u32).pow(w.k)).is_zero());
    }

    #[test]
    fn large_threshold() {
        check(&q(1, 1, 2), 1_000_000_000_000);
        check(&q(3, 5, 2), 1_000_000);
    }

    #[test]
    fn root_existence_matches_exhaustion() {
        for (a, b, c) in [(1, 0, 1), (1, 0, 3), (2, 1, 5), (5, 3, 2)] {
            let poly = q(a, b, c);
            for t in prime_stream().take(40) {
                let brute = (0..t).any(|n| poly.eval(&BigInt::from(n)).mod_floor(&BigInt::from(t)).is_zero());
                assert_eq!(has_root_mod(&poly, t), brute, "{poly} mod {t}");
            }
        }
    }

    #[test]
    fn finitely_many_is_rejected() {
        assert!(quad_constructive_witness(&q(1, 0, 1), &BigUint::from(5u8), &FactorBudget::default()).is_err());
    }
}
