//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Everything is re-checked against oracles written here: a smallest-prime-
//! factor table, Stewart's test on its factorizations, and the divisor
//! prefix-sum test of the definition (sorted divisors d_1 < d_2 < … cover
//! every integer up to n by distinct subsets iff d_i ≤ 1 + d_1 + … + d_{i−1}
//! for all i).
//!
//! The process exits non-zero on any failure, except a failure whose shape
//! matches the analysis recorded for it exactly; that one still prints FAIL.

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use practicum::arith::FactorBudget;
use practicum::practical::{is_practical, is_practical_oracle, sieve_practicals, SieveConfig};
use practicum::progressions::{
    ap_practical_stream, classify_ap, eval_poly, nonpractical_witness, ApCase,
};
use practicum::quadratic::{classify_quadratic, mq, MqValue, QuadCase, QuadraticPoly};
use practicum::representations::{
    decompose_square_plus_practical, family_stream, goldbach_pair, is_decimal_palindrome,
    palindromic_practicals, practical_triples, verify_not_representable, FamilyVariant,
};

// ---------------------------------------------------------------------------
// Local oracles

struct Local {
    spf: Vec<u32>,
    primes: Vec<u64>,
}

impl Local {
    fn new(limit: usize) -> Self {
        let mut spf = vec![0u32; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
                let mut j = i * i;
                while j <= limit {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        Local { spf, primes }
    }

    fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        };
        if n < self.spf.len() as u64 {
            while n > 1 {
                let p = self.spf[n as usize] as u64;
                push(p, &mut out);
                n /= p;
            }
            return out;
        }
        for &p in &self.primes {
            if p * p > n {
                break;
            }
            while n.is_multiple_of(p) {
                push(p, &mut out);
                n /= p;
            }
        }
        let last = *self.primes.last().unwrap();
        // a cofactor with no prime factor up to `last` is prime below last²
        assert!(n < last * last, "trial division table too small");
        if n > 1 {
            push(n, &mut out);
        }
        out
    }

    fn stewart(&self, n: u64) -> bool {
        if n == 1 {
            return true;
        }
        let mut sigma: u128 = 1;
        for (p, e) in self.factor(n) {
            if p as u128 > sigma + 1 {
                return false;
            }
            sigma *= ((p as u128).pow(e + 1) - 1) / (p as u128 - 1);
        }
        true
    }

    fn divisors(&self, n: u64) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (p, e) in self.factor(n) {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }

    /// Subset-sum representability of 1..=n by distinct divisors of n.
    fn by_definition(&self, n: u64) -> bool {
        let mut reach: u64 = 0;
        for d in self.divisors(n) {
            if d > reach + 1 {
                return false;
            }
            reach += d;
        }
        reach >= n
    }
}

/// Root-set sizes mod p, p², … while p^k ≤ horizon, stopping at the first
/// empty level.
fn lifting_oracle(a: i128, b: i128, c: i128, p: i128, horizon: i128) -> Vec<usize> {
    let q = |n: i128| (a * n + b) * n + c;
    let mut roots: Vec<i128> = (0..p).filter(|&n| q(n).rem_euclid(p) == 0).collect();
    let mut sizes = vec![roots.len()];
    let mut pk = p;
    while !roots.is_empty() && pk * p <= horizon {
        let next = pk * p;
        roots = roots
            .iter()
            .flat_map(|&r| (0..p).map(move |t| r + t * pk))
            .filter(|&n| q(n).rem_euclid(next) == 0)
            .collect();
        sizes.push(roots.len());
        pk = next;
    }
    sizes
}

enum Lifted {
    /// Deepest level with a root.
    Finite(u32),
    /// A root at every level up to the horizon.
    Unbounded,
}

fn lifted(a: i64, b: i64, c: i64, p: u64, horizon: i128) -> Lifted {
    let sizes = lifting_oracle(a as i128, b as i128, c as i128, p as i128, horizon);
    let reached = sizes.iter().take_while(|&&s| s > 0).count() as u32;
    if reached == sizes.len() as u32 {
        Lifted::Unbounded
    } else {
        Lifted::Finite(reached)
    }
}

const HORIZON: i128 = 10_000_000;

// ---------------------------------------------------------------------------
// Harness

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails exactly as analysed; reported as FAIL without failing the run.
    KnownFail(String),
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let stamp = format!("{:.1}s, limit {}s", took.as_secs_f64(), limit.as_secs());
    match out {
        Outcome::Pass(m) if took > limit => Outcome::Fail(format!("{m}; too slow ({stamp})")),
        Outcome::Pass(m) => Outcome::Pass(format!("{m} ({stamp})")),
        Outcome::Fail(m) => Outcome::Fail(format!("{m} ({stamp})")),
        Outcome::KnownFail(m) => Outcome::KnownFail(format!("{m} ({stamp})")),
    }
}

fn check(ok: bool, pass: impl FnOnce() -> String, fail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass(pass())
    } else {
        Outcome::Fail(fail())
    }
}

fn first<T: std::fmt::Debug>(v: &[T]) -> String {
    format!("{:?}{}", &v[..v.len().min(5)], if v.len() > 5 { " …" } else { "" })
}

// ---------------------------------------------------------------------------
// Criteria

fn stewart_vs_definition(local: &Local) -> Outcome {
    let mismatches: Vec<u64> = (1..=20_000u64)
        .into_par_iter()
        .filter(|&n| {
            let fast = practicum::practical::is_practical_u64(n);
            let general = is_practical(&BigUint::from(n), &FactorBudget::default()).unwrap();
            let oracle = is_practical_oracle(n, 20_000).unwrap();
            fast != general.practical || fast != oracle || fast != local.by_definition(n)
        })
        .collect();
    check(
        mismatches.is_empty(),
        || "0 mismatches over n ≤ 20000".into(),
        || format!("{} mismatches: {}", mismatches.len(), first(&mismatches)),
    )
}

fn ap_trichotomy(local: &Local) -> Outcome {
    let budget = FactorBudget::default();
    let practical = |v: u64| local.stewart(v);
    let mut errors = Vec::new();
    let mut counts = [0usize; 3];
    for a in 1..=30u64 {
        for b in 1..=30u64 {
            let c = classify_ap(&BigUint::from(a), &BigUint::from(b), &budget).unwrap();
            if a % 2 == 1 && c.case != ApCase::InfinitelyMany {
                errors.push(format!("{a}n+{b}: odd modulus not infinite"));
            }
            match c.case {
                ApCase::InfinitelyMany => {
                    counts[0] += 1;
                    let hits = (0..=100_000u64).map(|n| a * n + b).filter(|&v| practical(v)).take(5);
                    let stream = ap_practical_stream(a, b, 5, 100_000, &budget);
                    let hits: Vec<u64> = hits.collect();
                    if hits.len() < 5 || stream.as_deref().ok() != Some(&hits[..]) {
                        errors.push(format!("{a}n+{b}: scan {hits:?}, stream {stream:?}"));
                    }
                }
                ApCase::ExactlyOne | ApCase::None => {
                    let hits: Vec<u64> =
                        (0..=10_000u64).map(|n| a * n + b).filter(|&v| practical(v)).collect();
                    let expect = if c.case == ApCase::ExactlyOne { vec![b] } else { vec![] };
                    counts[if c.case == ApCase::ExactlyOne { 1 } else { 2 }] += 1;
                    if hits != expect {
                        errors.push(format!("{a}n+{b}: {:?} but scan {}", c.case, first(&hits)));
                    }
                }
            }
        }
    }
    check(
        errors.is_empty(),
        || format!("900 progressions: {} infinite, {} exactly one, {} none", counts[0], counts[1], counts[2]),
        || errors.join("; "),
    )
}

fn quadratic_iff(local: &Local) -> Outcome {
    let budget = FactorBudget::default();
    let mut errors = Vec::new();
    for a in 1..=6i64 {
        for b in 0..=6i64 {
            for c in 0..=6i64 {
                let q = QuadraticPoly::new(a, b, c).unwrap();
                let cls = classify_quadratic(&q, &budget).unwrap();
                let bound = cls.witness_n.to_u64().unwrap();
                let values: Vec<u64> = (1..=10_000i128)
                    .map(|n| q.eval_i128(n).unwrap() as u64)
                    .filter(|&v| v > 0 && local.stewart(v))
                    .collect();
                let ok = match cls.case {
                    QuadCase::InfinitelyMany => values.len() >= 3 && local.stewart(bound),
                    QuadCase::FinitelyMany => {
                        values.iter().all(|&v| v <= bound) && !local.stewart(bound)
                    }
                };
                if !ok {
                    errors.push(format!("{q}: {:?}, N = {bound}, scan {}", cls.case, first(&values)));
                }
            }
        }
    }
    // anchors, with N rebuilt from the lifting oracle
    for ((a, b, c), case, n) in [
        ((1, 1, 2), QuadCase::InfinitelyMany, 2u64),
        ((1, 0, 1), QuadCase::FinitelyMany, 10),
        ((1, 0, 3), QuadCase::InfinitelyMany, 84),
    ] {
        let q = QuadraticPoly::new(a, b, c).unwrap();
        let cls = classify_quadratic(&q, &budget).unwrap();
        let mut oracle_n = 1u64;
        for &p in &local.primes {
            match lifted(a, b, c, p, HORIZON) {
                Lifted::Finite(k) => oracle_n *= p.pow(k),
                Lifted::Unbounded => {
                    oracle_n *= p;
                    break;
                }
            }
        }
        let oracle_case = if local.stewart(oracle_n) { QuadCase::InfinitelyMany } else { QuadCase::FinitelyMany };
        if cls.case != case || cls.witness_n != BigUint::from(n) || oracle_n != n || oracle_case != case {
            errors.push(format!("{q}: got {:?} N = {}, oracle N = {oracle_n}", cls.case, cls.witness_n));
        }
    }
    check(
        errors.is_empty(),
        || "343 quadratics consistent with scans; anchors N = 2, 10, 84 confirmed by lifting".into(),
        || errors.join("; "),
    )
}

fn mq_oracle() -> Outcome {
    let grid: Vec<(i64, i64, i64, u64)> = (1..=10)
        .flat_map(|a| (-10..=10).flat_map(move |b| (-10..=10).map(move |c| (a, b, c))))
        .flat_map(|(a, b, c)| [2, 3, 5, 7, 11, 13].map(|p| (a, b, c, p)))
        .collect();
    let mut errors: Vec<String> = grid
        .par_iter()
        .filter_map(|&(a, b, c, p)| {
            let q = QuadraticPoly::new(a, b, c).unwrap();
            let res = mq(&q, p);
            let horizon = lifting_oracle(a as i128, b as i128, c as i128, p as i128, HORIZON).len() as u32;
            let ok = res.check(&q)
                && match (res.value, lifted(a, b, c, p, HORIZON)) {
                    (MqValue::Infinite, Lifted::Unbounded) => true,
                    (MqValue::Finite(k), Lifted::Finite(r)) => k == r,
                    // beyond what the oracle can see
                    (MqValue::Finite(k), Lifted::Unbounded) => k >= horizon,
                    _ => false,
                };
            (!ok).then(|| format!("({a},{b},{c}) mod {p}: {:?}", res.value))
        })
        .collect();
    for a in (1..=9).step_by(2) {
        for b in (1..=9).step_by(2) {
            for c in (0..=8).step_by(2) {
                let q = QuadraticPoly::new(a, b, c).unwrap();
                if !mq(&q, 2).value.is_infinite() {
                    errors.push(format!("{q} not infinite at 2"));
                }
            }
        }
    }
    check(
        errors.is_empty(),
        || format!("{} (q, p) pairs match lifting to p^k ≤ 10^7; odd/odd/even grid infinite at 2", grid.len()),
        || format!("{} errors: {}", errors.len(), first(&errors)),
    )
}

fn decomposition(local: &Local) -> Outcome {
    let rows: Vec<(u64, u64, Result<(), String>)> = (1..=124_999u64)
        .into_par_iter()
        .map(|k| 8 * k + 1)
        .map(|n| {
            let d = match decompose_square_plus_practical(&BigUint::from(n)) {
                Ok(d) => d,
                Err(e) => return (n, 0, Err(e.to_string())),
            };
            let x = d.x.to_u64().unwrap();
            let p = d.practical_part.to_u64().unwrap();
            let bound = 1u64 << d.m;
            let ok = x * x + p == n
                && (1..bound).contains(&x)
                && d.s.to_u64().is_some_and(|s| s >= 1 && s <= bound)
                && p == (4u64 << d.m) * d.s.to_u64().unwrap()
                && d.certificate.check()
                && local.stewart(p)
                && local.by_definition(p);
            (n, p, if ok { Ok(()) } else { Err(format!("{n} = {x}^2 + {p}, m = {}, s = {}", d.m, d.s)) })
        })
        .collect();
    let errors: Vec<&String> = rows.iter().filter_map(|r| r.2.as_ref().err()).collect();
    // the library's own subset-sum oracle on every distinct P
    let mut parts: Vec<u64> = rows.iter().map(|r| r.1).filter(|&p| p > 0).collect();
    parts.sort_unstable();
    parts.dedup();
    let rejected: Vec<u64> = parts
        .par_iter()
        .copied()
        .filter(|&p| !is_practical_oracle(p, 1_000_000).unwrap())
        .collect();
    check(
        errors.is_empty() && rejected.is_empty(),
        || format!("{} values n ≡ 1 (mod 8); {} distinct P all practical", rows.len(), parts.len()),
        || format!("errors {}; oracle rejects {}", first(&errors), first(&rejected)),
    )
}

fn families(local: &Local) -> Outcome {
    let is_square = |n: u64| n.isqrt() * n.isqrt() == n;
    let representable = |m: u64| -> Option<(u64, u64)> {
        (0..=(m - 1).isqrt()).map(|x| (x, m - x * x)).find(|&(_, r)| local.stewart(r))
    };
    let mut errors = Vec::new();
    let mut stated_failures: BTreeMap<u8, Vec<String>> = BTreeMap::new();
    let mut expected_failures: BTreeMap<u8, Vec<String>> = BTreeMap::new();
    for j in [0u8, 2, 3, 4, 5, 6, 7] {
        for variant in [FamilyVariant::Stated, FamilyVariant::Repaired] {
            let members = family_stream(j, 50, variant).unwrap();
            let found: Vec<(u64, Option<(u64, u64)>, Option<(u64, u64)>)> = members
                .par_iter()
                .map(|&m| {
                    let lib = verify_not_representable(m).unwrap().representation();
                    (m, lib, representable(m))
                })
                .collect();
            for (m, lib, ours) in found {
                if lib != ours {
                    errors.push(format!("j={j} {m}: library {lib:?}, oracle {ours:?}"));
                }
                if variant == FamilyVariant::Stated {
                    if let Some((x, p)) = ours {
                        stated_failures.entry(j).or_default().push(format!("{m}={x}^2+{p}"));
                    }
                    if is_square(m - 2) {
                        let x = (m - 2).isqrt();
                        expected_failures.entry(j).or_default().push(format!("{m}={x}^2+2"));
                    }
                } else if ours.is_some() {
                    errors.push(format!("j={j} repaired member {m} is representable"));
                }
            }
        }
    }
    let leads = (
        family_stream(3, 1, FamilyVariant::Stated).unwrap()[0],
        family_stream(2, 1, FamilyVariant::Stated).unwrap()[0],
    );
    if leads != (11, 74) {
        errors.push(format!("first members (j=3, j=2) are {leads:?}"));
    }
    if !errors.is_empty() {
        return Outcome::Fail(errors.join("; "));
    }
    if stated_failures.is_empty() {
        return Outcome::Pass("first 50 members of every family are not representable".into());
    }
    let listing: Vec<String> =
        stated_failures.iter().map(|(j, v)| format!("j={j}: {}", v.join(", "))).collect();
    let msg = format!(
        "members that are a square plus the practical number 2: {}; with m − 2 square removed, all 7×50 members pass",
        listing.join("; ")
    );
    // the only counterexamples are m = x² + 2
    if stated_failures == expected_failures {
        Outcome::KnownFail(msg)
    } else {
        Outcome::Fail(msg)
    }
}

fn goldbach_and_triples(local: &Local, table: &[bool]) -> Outcome {
    let bitmap = sieve_practicals(1_000_000, &SieveConfig::default()).unwrap();
    let bad: Vec<u64> = (1..=500_000u64)
        .into_par_iter()
        .map(|k| 2 * k)
        .filter(|&n| match goldbach_pair(n, Some(&bitmap)) {
            Ok(g) => !(g.p1 + g.p2 == n && g.p1 <= g.p2 && table[g.p1 as usize] && table[g.p2 as usize]),
            Err(_) => true,
        })
        .collect();
    // spot-check the bitmap-free path
    let direct_ok = [2u64, 998, 65_536, 999_998]
        .iter()
        .all(|&n| goldbach_pair(n, None).ok() == goldbach_pair(n, Some(&bitmap)).ok());
    let triples = practical_triples(10_000, &SieveConfig::default()).unwrap();
    let expected: Vec<u64> =
        (3..=10_000u64).filter(|&m| local.stewart(m - 2) && local.stewart(m) && local.stewart(m + 2)).collect();
    check(
        bad.is_empty() && direct_ok && !triples.is_empty() && triples == expected,
        || format!("500000 even n ≤ 10^6 split; {} triples below 10^4, first {}", triples.len(), first(&triples)),
        || format!("bad n {}; direct path ok {direct_ok}; triples {} vs {}", first(&bad), first(&triples), first(&expected)),
    )
}

fn palindromic(local: &Local) -> Outcome {
    let terms = palindromic_practicals(10).unwrap();
    let mut errors = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        let digits = 1usize << (i + 1);
        if t.value.to_string() != "8".repeat(digits) || !is_decimal_palindrome(&t.value) {
            errors.push(format!("A_{} = {}", i + 1, t.value));
        }
        if i > 0 {
            let multiplier = BigUint::from(10u32).pow(1 << i) + 1u32;
            let prev = &terms[i - 1].value;
            match &t.certificate {
                Some(c) if c.check()
                    && &c.base == prev
                    && c.multiplier == multiplier
                    && c.product == prev * &multiplier
                    && c.multiplier < prev * 2u32 => {}
                other => errors.push(format!("A_{} certificate {other:?}", i + 1)),
            }
        }
    }
    for n in [88u64, 8888, 88888888] {
        let v = is_practical(&BigUint::from(n), &FactorBudget::default()).unwrap();
        if !(v.practical && v.replay() && local.stewart(n)) {
            errors.push(format!("{n} fails Stewart"));
        }
    }
    check(
        terms.len() == 10 && errors.is_empty(),
        || format!("A_1..A_10 certified (A_10 has {} digits); 88, 8888, 88888888 pass Stewart", terms[9].value.to_string().len()),
        || errors.join("; "),
    )
}

fn density(table: &[bool]) -> Outcome {
    const FROZEN: u64 = 97_385;
    let bitmap = sieve_practicals(1_000_000, &SieveConfig::default()).unwrap();
    let mut notes = Vec::new();
    let mut ok = true;
    for x in [10_000u64, 100_000, 1_000_000] {
        let count = bitmap.count_up_to(x);
        let local_count = table[1..=x as usize].iter().filter(|&&b| b).count() as u64;
        let ratio = count as f64 * (x as f64).ln() / x as f64;
        ok &= count == local_count && (1.0..=1.6).contains(&ratio);
        notes.push(format!("P({x}) = {count}, ratio {ratio:.4}"));
    }
    ok &= bitmap.count_up_to(1_000_000) == FROZEN;
    let members: Vec<u64> = bitmap.iter().collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(9);
    let sample: Vec<u64> = (0..100).map(|_| members[rng.gen_range(0..members.len())]).collect();
    let rejected: Vec<u64> = sample
        .par_iter()
        .copied()
        .filter(|&n| !is_practical_oracle(n, 1_000_000).unwrap())
        .collect();
    ok &= rejected.is_empty();
    check(
        ok,
        || format!("{}; frozen P(10^6) = {FROZEN}; 100 sampled members confirmed by subset sums", notes.join(", ")),
        || format!("{}; oracle rejects {rejected:?}", notes.join(", ")),
    )
}

fn nonpractical_witnesses(local: &Local) -> Outcome {
    let budget = FactorBudget::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(10);
    let mut errors = Vec::new();
    let mut degrees = [0usize; 5];
    for _ in 0..50 {
        let degree = rng.gen_range(1..=4usize);
        let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(0..=20)).collect();
        coeffs[degree] = rng.gen_range(1..=20);
        degrees[degree] += 1;
        match nonpractical_witness(&coeffs, 1_000_000, &budget) {
            Ok(w) => {
                let v = eval_poly(&coeffs, &BigInt::from(w.n));
                let value = w.value.to_u64().unwrap();
                let earlier = (1..w.n).find(|&n| {
                    eval_poly(&coeffs, &BigInt::from(n))
                        .to_u64()
                        .is_some_and(|x| x >= 1 && !local.stewart(x))
                });
                let ok = v == BigInt::from(w.value.clone())
                    && !w.verdict.practical
                    && w.verdict.replay()
                    && !local.stewart(value)
                    && (value > 20_000_000 || !local.by_definition(value))
                    && earlier.is_none();
                if !ok {
                    errors.push(format!("{coeffs:?}: n = {}, value {}", w.n, w.value));
                }
            }
            Err(e) => errors.push(format!("{coeffs:?}: {e}")),
        }
    }
    check(
        errors.is_empty(),
        || format!("50 polynomials (degrees 1–4: {:?}) each have a verified smallest witness", &degrees[1..]),
        || errors.join("; "),
    )
}

fn main() -> ExitCode {
    let local = Local::new(3_100_000);
    let table: Vec<bool> = (0..=1_000_000u64).into_par_iter().map(|n| n >= 1 && local.stewart(n)).collect();

    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("Stewart test agrees with the definition", Box::new(|| timed(secs(60), || stewart_vs_definition(&local)))),
        ("progression trichotomy", Box::new(|| timed(secs(300), || ap_trichotomy(&local)))),
        ("quadratic classification", Box::new(|| timed(secs(600), || quadratic_iff(&local)))),
        ("m_q against exhaustive lifting", Box::new(|| timed(secs(600), mq_oracle))),
        ("square plus practical decomposition", Box::new(|| timed(secs(120), || decomposition(&local)))),
        ("non-representable families", Box::new(|| timed(secs(600), || families(&local)))),
        ("practical Goldbach pairs and triples", Box::new(|| timed(secs(600), || goldbach_and_triples(&local, &table)))),
        ("palindromic chain", Box::new(|| timed(secs(60), || palindromic(&local)))),
        ("density sanity", Box::new(|| timed(secs(600), || density(&table)))),
        ("non-practical polynomial values", Box::new(|| timed(secs(60), || nonpractical_witnesses(&local)))),
    ];

    let mut unexpected = 0;
    let mut summary: HashMap<&str, usize> = HashMap::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (tag, msg) = match run() {
            Outcome::Pass(m) => ("PASS", m),
            Outcome::KnownFail(m) => ("FAIL", format!("{m} [matches recorded analysis]")),
            Outcome::Fail(m) => {
                unexpected += 1;
                ("FAIL", m)
            }
        };
        *summary.entry(tag).or_default() += 1;
        println!("{tag} {:>2} {name}: {msg}", i + 1);
    }
    println!(
        "acceptance: {} passed, {} failed ({} unexpected)",
        summary.get("PASS").copied().unwrap_or(0),
        summary.get("FAIL").copied().unwrap_or(0),
        unexpected
    );
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
