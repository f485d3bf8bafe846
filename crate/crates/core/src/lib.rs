//! Practical numbers: integers n for which every m in [1, n] is a sum of
//! distinct divisors of n.
//!
//! The crate decides practicality with Stewart's chain criterion and emits
//! certificates that can be replayed with plain arithmetic. On top of that
//! it classifies linear and quadratic polynomials by whether they take
//! infinitely many practical values, and builds and checks additive
//! representations (square + practical, practical + practical).

pub mod arith;
pub mod error;
pub mod json;
pub mod practical;
pub mod progressions;
pub mod quadratic;
pub mod representations;

pub use error::{Error, Result};
