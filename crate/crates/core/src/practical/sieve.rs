//! Segmented practical-number sieve.
//!
//! Each segment divides out the base primes (≤ √limit) in ascending order,
//! keeping the running σ of the prefix for every even n. A number dies at the
//! first prime that exceeds σ(prefix) + 1; whatever cofactor survives all
//! base primes is a single large prime and is checked last.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::arith::{isqrt, primes_up_to, DEFAULT_MEMORY_BUDGET};
use crate::error::{Error, Result};

/// Bit k of the bitmap (k = 0 .. limit−1) stands for the integer k + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PracticalBitmap {
    limit: u64,
    words: Vec<u64>,
}

pub const CACHE_MAGIC: &[u8; 4] = b"PRAC";
pub const CACHE_VERSION: u32 = 1;
pub const CACHE_HEADER_LEN: usize = 16;

impl PracticalBitmap {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 || n > self.limit {
            return false;
        }
        let k = n - 1;
        self.words[(k / 64) as usize] >> (k % 64) & 1 == 1
    }

    /// Number of practical numbers in [1, x] (x ≤ limit).
    pub fn count_up_to(&self, x: u64) -> u64 {
        assert!(x <= self.limit, "{x} beyond sieve limit {}", self.limit);
        let full = (x / 64) as usize;
        let mut c: u64 = self.words[..full].iter().map(|w| w.count_ones() as u64).sum();
        let tail = x % 64;
        if tail != 0 {
            c += (self.words[full] & ((1u64 << tail) - 1)).count_ones() as u64;
        }
        c
    }

    pub fn count(&self) -> u64 {
        self.count_up_to(self.limit)
    }

    /// Practical numbers in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i as u64 * 64 + 1;
            BitIter(w).map(move |b| base + b as u64)
        })
    }

    /// Header (magic, version u32 LE, limit u64 LE) followed by the raw
    /// little-endian bit array, ⌈limit/8⌉ bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let nbytes = self.limit.div_ceil(8) as usize;
        let mut out = Vec::with_capacity(CACHE_HEADER_LEN + nbytes);
        out.extend_from_slice(CACHE_MAGIC);
        out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        out.extend_from_slice(&self.limit.to_le_bytes());
        let mut payload: Vec<u8> = self.words.iter().flat_map(|w| w.to_le_bytes()).collect();
        payload.truncate(nbytes);
        out.extend_from_slice(&payload);
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < CACHE_HEADER_LEN {
            return Err(Error::BadCache("truncated header".into()));
        }
        if &bytes[..4] != CACHE_MAGIC {
            return Err(Error::BadCache("bad magic".into()));
        }
        let version = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
        if version != CACHE_VERSION {
            return Err(Error::BadCache(format!("unsupported version {version}")));
        }
        let limit = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
        let payload = &bytes[CACHE_HEADER_LEN..];
        if payload.len() as u64 != limit.div_ceil(8) {
            return Err(Error::BadCache(format!(
                "payload is {} bytes, limit {limit} needs {}",
                payload.len(),
                limit.div_ceil(8)
            )));
        }
        let mut words = vec![0u64; limit.div_ceil(64) as usize];
        for (i, chunk) in payload.chunks(8).enumerate() {
            let mut buf = [0u8; 8];
            buf[..chunk.len()].copy_from_slice(chunk);
            words[i] = u64::from_le_bytes(buf);
        }
        let tail = limit % 64;
        if tail != 0 && words.last().is_some_and(|w| w >> tail != 0) {
            return Err(Error::BadCache("bits set beyond limit".into()));
        }
        Ok(PracticalBitmap { limit, words })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(&self.to_bytes())?;
        w.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let mut buf = Vec::new();
        BufReader::new(File::open(path)?).read_to_end(&mut buf)?;
        Self::from_bytes(&buf)
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Integers per segment; rounded up to a multiple of 64.
    pub segment_len: u64,
    pub parallel: bool,
    pub memory_budget: u64,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            segment_len: 1 << 18,
            parallel: true,
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

/// Largest sieve limit accepted; keeps every σ comfortably inside u64.
pub const MAX_SIEVE_LIMIT: u64 = 1 << 40;

pub fn sieve_practicals(limit: u64, config: &SieveConfig) -> Result<PracticalBitmap> {
    if limit == 0 {
        return Err(Error::InvalidInput("sieve limit must be positive".into()));
    }
    let seg = config.segment_len.max(64).div_ceil(64) * 64;
    // bitmap plus per-segment scratch (σ and cofactor for the even half)
    let scratch = if config.parallel {
        rayon::current_num_threads() as u64
    } else {
        1
    } * seg
        * 8;
    let requested = limit.div_ceil(8).saturating_add(scratch);
    if requested > config.memory_budget || limit > MAX_SIEVE_LIMIT {
        return Err(Error::MemoryBudgetExceeded {
            requested,
            budget: config.memory_budget,
        });
    }
    let base = primes_up_to(isqrt(limit));
    let nseg = limit.div_ceil(seg);
    let run = |s: u64| {
        let lo = 1 + s * seg;
        let hi = (lo + seg).min(limit + 1);
        sieve_segment(lo, hi, &base)
    };
    let segments: Vec<Vec<u64>> = if config.parallel {
        (0..nseg).into_par_iter().map(run).collect()
    } else {
        (0..nseg).map(run).collect()
    };
    let words = segments.into_iter().flatten().collect();
    Ok(PracticalBitmap { limit, words })
}

/// Practicality bits for [lo, hi); lo ≡ 1 (mod 64).
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    debug_assert_eq!((lo - 1) % 64, 0);
    let len = (hi - lo) as usize;
    let mut words = vec![0u64; len.div_ceil(64)];
    let set = |words: &mut [u64], n: u64| {
        let k = n - lo;
        words[(k / 64) as usize] |= 1 << (k % 64);
    };
    if lo == 1 {
        set(&mut words, 1);
    }
    // even numbers only: index i <-> first_even + 2i
    let first_even = lo + (lo & 1);
    if first_even >= hi {
        return words;
    }
    let count = ((hi - first_even) as usize).div_ceil(2);
    let mut rem = vec![0u64; count];
    let mut sigma = vec![0u64; count];
    for i in 0..count {
        let n = first_even + 2 * i as u64;
        let e = n.trailing_zeros();
        rem[i] = n >> e;
        sigma[i] = (1u64 << (e + 1)) - 1;
    }
    for &p in base.iter().skip(1) {
        // first even multiple of p that is ≥ first_even
        let step = 2 * p;
        let start = first_even.div_ceil(step) * step;
        let mut n = start;
        while n < hi {
            let i = ((n - first_even) / 2) as usize;
            let s = sigma[i];
            if s != 0 {
                if p > s + 1 {
                    sigma[i] = 0;
                } else {
                    let mut r = rem[i];
                    let mut pk = 1u64;
                    let mut sp = 1u64;
                    while r % p == 0 {
                        r /= p;
                        pk *= p;
                        sp += pk;
                    }
                    rem[i] = r;
                    sigma[i] = s * sp;
                }
            }
            n += step;
        }
    }
    for i in 0..count {
        let s = sigma[i];
        if s == 0 {
            continue;
        }
        if rem[i] == 1 || rem[i] <= s + 1 {
            set(&mut words, first_even + 2 * i as u64);
        }
    }
    words
}
