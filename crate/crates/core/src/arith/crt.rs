//! Chinese remaindering over arbitrary (not necessarily coprime) moduli.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Congruence {
    pub residue: BigUint,
    pub modulus: BigUint,
}

impl Congruence {
    /// `residue` is reduced modulo `modulus`; the modulus must be at least 2.
    pub fn new(residue: impl Into<BigInt>, modulus: impl Into<BigUint>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigUint::from(2u8) {
            return Err(Error::InvalidInput(format!("modulus {modulus} < 2")));
        }
        let m = BigInt::from_biguint(Sign::Plus, modulus.clone());
        let r = residue.into().mod_floor(&m);
        Ok(Congruence {
            residue: r.to_biguint().expect("mod_floor is non-negative"),
            modulus,
        })
    }

    pub fn holds_for(&self, x: &BigUint) -> bool {
        x % &self.modulus == self.residue
    }
}

/// A list of simultaneous congruences x ≡ r_i (mod m_i).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    pub congruences: Vec<Congruence>,
}

impl CongruenceSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, residue: i64, modulus: u64) -> Result<Self> {
        self.congruences.push(Congruence::new(residue, modulus)?);
        Ok(self)
    }

    pub fn push(&mut self, c: Congruence) {
        self.congruences.push(c);
    }

    pub fn is_satisfied_by(&self, x: &BigUint) -> bool {
        self.congruences.iter().all(|c| c.holds_for(x))
    }
}

/// Solves the system, returning the unique class `(residue, lcm of moduli)`.
/// An empty system yields `(0, 1)`.
pub fn crt_solve(sys: &CongruenceSystem) -> Result<(BigUint, BigUint)> {
    let mut r = BigInt::zero();
    let mut m = BigInt::one();
    for c in &sys.congruences {
        let r2 = BigInt::from(c.residue.clone());
        let m2 = BigInt::from(c.modulus.clone());
        // x = r + m·t, need m·t ≡ r2 − r (mod m2)
        let g = m.extended_gcd(&m2);
        let diff = &r2 - &r;
        if !diff.mod_floor(&g.gcd).is_zero() {
            return Err(Error::Inconsistent(format!(
                "x ≡ {r} (mod {m}) conflicts with x ≡ {r2} (mod {m2})"
            )));
        }
        let m2g = &m2 / &g.gcd;
        let t = ((&diff / &g.gcd) * &g.x).mod_floor(&m2g);
        let lcm = &m * &m2g;
        r = (r + &m * t).mod_floor(&lcm);
        m = lcm;
    }
    Ok((
        r.to_biguint().expect("non-negative"),
        m.to_biguint().expect("positive"),
    ))
}
