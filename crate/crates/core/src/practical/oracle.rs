//! Definition-level check: every m in [1, n] is a sum of distinct divisors
//! of n. Divisors come from direct trial division up to √n and reachability
//! is a bitset subset-sum clamped at n, so this path shares nothing with the
//! factorization-based test.

use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

fn divisors_by_trial(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `reach |= reach << shift`, keeping only the first `nbits` bits.
fn shift_or(reach: &mut [u64], shift: usize, nbits: usize) {
    let words = nbits.div_ceil(64);
    let ws = shift / 64;
    let bs = shift % 64;
    for i in (ws..words).rev() {
        let mut v = reach[i - ws] << bs;
        if bs != 0 && i > ws {
            v |= reach[i - ws - 1] >> (64 - bs);
        }
        reach[i] |= v;
    }
    let tail = nbits % 64;
    if tail != 0 {
        reach[words - 1] &= (1u64 << tail) - 1;
    }
}

pub fn is_practical_oracle(n: u64, bound: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidInput("0 is not a positive integer".into()));
    }
    if n > bound {
        return Err(Error::OracleBoundExceeded { n, bound });
    }
    let nbits = n as usize + 1;
    let mut reach = vec![0u64; nbits.div_ceil(64)];
    reach[0] = 1;
    let mut total: u64 = 0;
    for d in divisors_by_trial(n) {
        total = (total + d).min(n);
        // bits above the running total are still zero
        shift_or(&mut reach, d as usize, total as usize + 1);
    }
    // bits 0..=n must all be set
    let full_words = nbits / 64;
    if reach[..full_words].iter().any(|&w| w != u64::MAX) {
        return Ok(false);
    }
    let tail = nbits % 64;
    Ok(tail == 0 || reach[full_words] == (1u64 << tail) - 1)
}
