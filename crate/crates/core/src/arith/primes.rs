//! Prime enumeration and smallest-prime-factor tables.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Primes ≤ `limit` by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Integer square root, rounded down.
pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

const STREAM_SEGMENT: u64 = 1 << 15;

/// Unbounded, gap-free stream of primes 2, 3, 5, ...
///
/// Backed by a segmented sieve whose base primes are extended on demand.
#[derive(Debug, Clone)]
pub struct PrimeStream {
    base: Vec<u64>,
    base_limit: u64,
    buffer: Vec<u64>,
    pos: usize,
    next_lo: u64,
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream {
            base: Vec::new(),
            base_limit: 1,
            buffer: Vec::new(),
            pos: 0,
            next_lo: 2,
        }
    }

    fn refill(&mut self) {
        let lo = self.next_lo;
        let hi = lo + STREAM_SEGMENT;
        let need = isqrt(hi) + 1;
        if need > self.base_limit {
            let target = need.max(self.base_limit * 2);
            self.base = primes_up_to(target);
            self.base_limit = target;
        }
        let mut composite = vec![false; (hi - lo) as usize];
        for &p in &self.base {
            if p * p >= hi {
                break;
            }
            let mut m = (lo.div_ceil(p) * p).max(p * p);
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        self.buffer = composite
            .iter()
            .enumerate()
            .filter(|(_, &c)| !c)
            .map(|(i, _)| lo + i as u64)
            .collect();
        self.pos = 0;
        self.next_lo = hi;
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.pos >= self.buffer.len() {
            self.refill();
        }
        let p = self.buffer[self.pos];
        self.pos += 1;
        Some(p)
    }
}

pub fn prime_stream() -> PrimeStream {
    PrimeStream::new()
}

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpfTable {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of `n` (2 ≤ n ≤ limit).
    pub fn get(&self, n: u64) -> u64 {
        assert!(n >= 2 && n <= self.limit, "{n} outside spf table");
        self.spf[n as usize] as u64
    }

    /// Factorization of `n` by repeatedly dividing out the smallest prime.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.get(n);
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
            n /= p;
        }
        out
    }
}

/// Default memory ceiling for sieve tables (1 GiB).
pub const DEFAULT_MEMORY_BUDGET: u64 = 1 << 30;

const SPF_SEGMENT: u64 = 1 << 16;

/// Builds the table segment by segment (in parallel); the result does not
/// depend on the number of workers.
pub fn spf_sieve(limit: u64, memory_budget: u64) -> Result<SpfTable> {
    let bytes = limit.saturating_add(1).saturating_mul(4);
    if bytes > memory_budget || limit > u32::MAX as u64 {
        return Err(Error::MemoryBudgetExceeded {
            requested: bytes,
            budget: memory_budget,
        });
    }
    let base = primes_up_to(isqrt(limit));
    let mut spf = vec![0u32; limit as usize + 1];
    spf.par_chunks_mut(SPF_SEGMENT as usize)
        .enumerate()
        .for_each(|(i, chunk)| {
            let lo = i as u64 * SPF_SEGMENT;
            spf_segment(lo, chunk, &base);
        });
    Ok(SpfTable { limit, spf })
}

/// Fills `out[i]` with spf(lo + i); base primes must cover √(lo + out.len()).
fn spf_segment(lo: u64, out: &mut [u32], base: &[u64]) {
    let hi = lo + out.len() as u64;
    for &p in base {
        if p * p >= hi {
            break;
        }
        let mut m = (lo.div_ceil(p) * p).max(p * p);
        while m < hi {
            let slot = &mut out[(m - lo) as usize];
            if *slot == 0 {
                *slot = p as u32;
            }
            m += p;
        }
    }
    for (i, slot) in out.iter_mut().enumerate() {
        let n = lo + i as u64;
        if *slot == 0 && n >= 2 {
            *slot = n as u32;
        }
    }
}
