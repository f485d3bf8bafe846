use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// q(n) = a·n² + b·n + c with a ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticPoly {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticPoly {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidInput(format!(
                "leading coefficient must be positive, got {a}"
            )));
        }
        Ok(QuadraticPoly { a, b, c })
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        (BigInt::from(self.a) * n + self.b) * n + self.c
    }

    pub fn eval_i128(&self, n: i128) -> Option<i128> {
        (self.a as i128)
            .checked_mul(n)?
            .checked_add(self.b as i128)?
            .checked_mul(n)?
            .checked_add(self.c as i128)
    }

    pub fn derivative(&self, n: &BigInt) -> BigInt {
        BigInt::from(2 * self.a as i128) * n + self.b
    }

    /// b² − 4ac
    pub fn discriminant(&self) -> BigInt {
        BigInt::from(self.b).pow(2) - BigInt::from(4) * self.a * self.c
    }

    /// gcd(a, b, c), always ≥ 1 since a ≥ 1.
    pub fn content(&self) -> u64 {
        let g = (self.a as i128).gcd(&(self.b as i128)).gcd(&(self.c as i128));
        g as u64
    }

    /// The polynomial divided by its content.
    pub fn primitive_part(&self) -> QuadraticPoly {
        let g = self.content() as i64;
        QuadraticPoly {
            a: self.a / g,
            b: self.b / g,
            c: self.c / g,
        }
    }

    /// Smallest n ≥ 1 from which q is non-decreasing.
    pub fn increasing_from(&self) -> u64 {
        // vertex at −b/(2a)
        let v = Integer::div_floor(&(-(self.b as i128)), &(2 * self.a as i128)) + 1;
        v.max(1) as u64
    }

    pub fn coefficients(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }
}

impl fmt::Display for QuadraticPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            1 => write!(f, "n^2")?,
            a => write!(f, "{a}n^2")?,
        }
        match self.b {
            0 => {}
            1 => write!(f, " + n")?,
            -1 => write!(f, " - n")?,
            b if b < 0 => write!(f, " - {}n", b.unsigned_abs())?,
            b => write!(f, " + {b}n")?,
        }
        match self.c {
            0 => Ok(()),
            c if c < 0 => write!(f, " - {}", c.unsigned_abs()),
            c => write!(f, " + {c}"),
        }
    }
}
