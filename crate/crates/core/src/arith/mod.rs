//! Exact integer arithmetic: factorization, σ, valuations, CRT and primes.

mod crt;
mod factor;
mod primes;

pub use crt::{crt_solve, Congruence, CongruenceSystem};
pub use factor::{
    factorize, factorize_u64, sigma, sigma_prime_power, valuation, valuation_u64, FactorBudget,
    Factorization,
};
pub use primes::{
    isqrt, prime_stream, primes_up_to, spf_sieve, PrimeStream, SpfTable, DEFAULT_MEMORY_BUDGET,
};
