use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

use practicum::arith::FactorBudget;
use practicum::practical::is_practical_u64;
use practicum::progressions::{
    ap_constructive_witness, ap_practical_stream, classify_ap, nonpractical_witness, ApCase,
};

fn b(n: u64) -> BigUint {
    BigUint::from(n)
}

fn hits(a: u64, bb: u64, n_max: u64) -> Vec<u64> {
    (0..=n_max)
        .map(|n| a * n + bb)
        .filter(|&v| is_practical_u64(v))
        .collect()
}

#[test]
fn trichotomy_against_scans() {
    let budget = FactorBudget::default();
    for a in 1..=30u64 {
        for bb in 1..=30u64 {
            let c = classify_ap(&b(a), &b(bb), &budget).unwrap();
            if a % 2 == 1 {
                assert_eq!(c.case, ApCase::InfinitelyMany);
            }
            match c.case {
                ApCase::InfinitelyMany => {
                    assert_eq!(ap_practical_stream(a, bb, 5, 100_000, &budget).unwrap().len(), 5)
                }
                ApCase::ExactlyOne => assert_eq!(hits(a, bb, 10_000), vec![bb], "{a}n+{bb}"),
                ApCase::None => assert!(hits(a, bb, 10_000).is_empty(), "{a}n+{bb}"),
            }
        }
    }
}

#[test]
fn constructive_witnesses_for_random_progressions() {
    let budget = FactorBudget::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut done = 0;
    while done < 100 {
        let (a, bb) = (rng.gen_range(1..=200u64), rng.gen_range(1..=200u64));
        let threshold = b(rng.gen_range(1..=1_000_000u64));
        if classify_ap(&b(a), &b(bb), &budget).unwrap().case != ApCase::InfinitelyMany {
            continue;
        }
        let w = ap_constructive_witness(&b(a), &b(bb), &threshold, &budget).unwrap();
        assert!(w.value >= threshold);
        assert_eq!(w.value, b(a) * &w.n + b(bb));
        assert!(w.verdict.practical && w.verdict.replay());
        done += 1;
    }
}

#[test]
fn nonpractical_values_of_random_polynomials() {
    let budget = FactorBudget::default();
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for _ in 0..50 {
        let degree = rng.gen_range(1..=4usize);
        let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(0..=20)).collect();
        coeffs[degree] = rng.gen_range(1..=20);
        let w = nonpractical_witness(&coeffs, 10_000, &budget).unwrap();
        assert!(!w.verdict.practical && w.verdict.replay());
        let value: u64 = coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * w.n + c as u64);
        assert_eq!(w.value, b(value));
        assert!(!(w.value.is_zero()));
    }
}
