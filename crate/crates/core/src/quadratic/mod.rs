//! Quadratic polynomials: m_q(p), the least prime with m_q(p) = ∞, the
//! practical-values classification, and constructive practical values.

mod classify;
mod construct;
mod modroots;
mod mq;
mod poly;

pub use classify::{
    classify_quadratic, least_infinite_prime, quad_practical_stream, LeastInfinitePrime,
    QuadCase, QuadClassification, QuadTerm, DEFAULT_PRIME_CAP, DEFAULT_QUAD_SCAN_LIMIT,
};
pub use construct::{quad_constructive_witness, QuadWitness, MAX_EXTRA_PRIMES};
pub use modroots::{legendre, roots_mod_prime, sqrt_mod_prime};
pub use mq::{mq, MqResult, MqValue, MqWitness};
pub use poly::QuadraticPoly;
