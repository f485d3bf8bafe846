use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::practical::{certify_power_of_two, MultiplierCertificate};

/// 2^k · m, certified practical for 1 ≤ m ≤ 2^(k+1).
pub fn power2_practical(k: u32, m: &BigUint) -> Result<MultiplierCertificate> {
    if m.is_zero() {
        return Err(Error::InvalidInput("multiplier must be positive".into()));
    }
    certify_power_of_two(k, m)
}

fn check_one_mod_eight(m: &BigUint) -> Result<()> {
    if (m % 8u32).to_u32() != Some(1) {
        return Err(Error::InvalidResidue { m: m.to_string() });
    }
    Ok(())
}

/// x in [1, 2^k − 1] with x² ≡ m (mod 2^(k+2)), for m ≡ 1 (mod 8).
///
/// Built one bit at a time: x₁ = 1, and x_{s+1} is x_s or 2^(s+1) − x_s,
/// whichever squares to m modulo 2^(s+3).
pub fn sqrt_mod_power_of_two(m: &BigUint, k: u32) -> Result<BigUint> {
    check_one_mod_eight(m)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let mut x = BigUint::one();
    for s in 1..k {
        let modulus = BigUint::one() << (s + 3);
        if (&x * &x) % &modulus != m % &modulus {
            x = (BigUint::one() << (s + 1)) - &x;
        }
    }
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDecomposition {
    #[serde(with = "json::big")]
    pub n: BigUint,
    #[serde(with = "json::big")]
    pub x: BigUint,
    #[serde(with = "json::big")]
    pub practical_part: BigUint,
    pub m: u32,
    #[serde(with = "json::big")]
    pub s: BigUint,
    pub certificate: MultiplierCertificate,
}

/// n = x² + 2^(m+2)·s with m = ⌊log₂ √n⌋, x from [`sqrt_mod_power_of_two`]
/// and s ≤ 2^m, so the second term is practical.
pub fn decompose_square_plus_practical(n: &BigUint) -> Result<SquareDecomposition> {
    check_one_mod_eight(n).map_err(|_| Error::InvalidInput(format!("{n} is not 1 mod 8")))?;
    if n.is_one() {
        return Err(Error::InvalidInput("n must exceed 1".into()));
    }
    // 2^(2m) ≤ n < 2^(2m+2)
    let m = ((n.bits() - 1) / 2) as u32;
    let x = sqrt_mod_power_of_two(n, m)?;
    let practical_part = n - &x * &x;
    let (s, r) = practical_part.div_rem(&(BigUint::one() << (m + 2)));
    debug_assert!(r.is_zero());
    if !r.is_zero() || s.is_zero() || s > BigUint::one() << m {
        return Err(Error::Inconsistent(format!(
            "decomposition of {n} left s = {s}, remainder {r}"
        )));
    }
    let certificate = power2_practical(m + 2, &s)?;
    Ok(SquareDecomposition {
        n: n.clone(),
        x,
        practical_part,
        m,
        s,
        certificate,
    })
}
