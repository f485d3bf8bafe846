//! Residue classes j mod 8 (j ≠ 1) with infinitely many members that are
//! not a square plus a practical number.

use num_integer::Roots;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{crt_solve, CongruenceSystem};
use crate::error::{Error, Result};
use crate::practical::{verdict_u64, StewartViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyVariant {
    /// The congruence classes exactly as constructed.
    Stated,
    /// Additionally drops members m with m − 2 a perfect square: 2 is
    /// practical, and the stated classes for j = 2, 3, 6 do not exclude it.
    Repaired,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub j: u8,
    /// (residue, modulus) pairs as constructed; negative residues allowed.
    pub congruences: Vec<(i64, u64)>,
    pub residue: u64,
    pub modulus: u64,
    /// Members with m − 1 a perfect square are excluded.
    pub excludes_square_plus_one: bool,
}

fn is_square(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

impl FamilySpec {
    pub fn new(j: u8) -> Result<Self> {
        let odd_primes = [(2, 3), (2, 5), (-1, 7), (-1, 11), (2, 13)];
        let congruences: Vec<(i64, u64)> = match j {
            0 => std::iter::once((24, 32)).chain(odd_primes).collect(),
            4 => std::iter::once((12, 16)).chain(odd_primes).collect(),
            5 => vec![(5, 8), (2, 3), (2, 5), (-1, 7)],
            2 => vec![(2, 24)],
            3 => vec![(11, 24)],
            6 => vec![(14, 24)],
            7 => vec![(23, 24)],
            _ => return Err(Error::InvalidJ(j)),
        };
        let mut sys = CongruenceSystem::new();
        for &(r, m) in &congruences {
            sys = sys.with(r, m)?;
        }
        let (residue, modulus) = crt_solve(&sys)?;
        let residue = u64::try_from(residue).expect("residue below modulus");
        let modulus = u64::try_from(modulus).expect("small modulus");
        debug_assert_eq!(residue % 8, j as u64);
        Ok(FamilySpec {
            j,
            congruences,
            residue,
            modulus,
            excludes_square_plus_one: j == 2,
        })
    }

    fn admits(&self, m: u64, variant: FamilyVariant) -> bool {
        if self.excludes_square_plus_one && is_square(m - 1) {
            return false;
        }
        !(variant == FamilyVariant::Repaired && m >= 2 && is_square(m - 2))
    }

    /// Members in increasing order.
    pub fn members(&self, variant: FamilyVariant) -> impl Iterator<Item = u64> + '_ {
        (0u64..)
            .map(move |i| self.residue + i * self.modulus)
            .filter(move |&m| self.admits(m, variant))
    }
}

/// The i-th (0-based) member of family j.
pub fn family_member(j: u8, i: usize, variant: FamilyVariant) -> Result<u64> {
    Ok(FamilySpec::new(j)?
        .members(variant)
        .nth(i)
        .expect("families are infinite"))
}

pub fn family_stream(j: u8, count: usize, variant: FamilyVariant) -> Result<Vec<u64>> {
    Ok(FamilySpec::new(j)?.members(variant).take(count).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub x: u64,
    pub remainder: u64,
    /// Why the remainder is not practical; absent when it is.
    pub witness: Option<StewartViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentabilityCheck {
    pub m: u64,
    pub not_representable: bool,
    pub trace: Vec<TraceEntry>,
}

impl RepresentabilityCheck {
    /// The first x with m − x² practical, if any.
    pub fn representation(&self) -> Option<(u64, u64)> {
        self.trace
            .iter()
            .find(|e| e.witness.is_none())
            .map(|e| (e.x, e.remainder))
    }
}

/// Largest m accepted by [`verify_not_representable`].
pub const MAX_VERIFY: u64 = 1 << 40;

/// Tests m − x² for every x ≥ 0 with x² < m.
pub fn verify_not_representable(m: u64) -> Result<RepresentabilityCheck> {
    if m == 0 || m > MAX_VERIFY {
        return Err(Error::InvalidInput(format!(
            "m must be in [1, {MAX_VERIFY}], got {m}"
        )));
    }
    let top = (m - 1).sqrt();
    let trace: Vec<TraceEntry> = (0..=top)
        .into_par_iter()
        .map(|x| {
            let remainder = m - x * x;
            TraceEntry {
                x,
                remainder,
                witness: verdict_u64(remainder).witness,
            }
        })
        .collect();
    Ok(RepresentabilityCheck {
        m,
        not_representable: trace.iter().all(|e| e.witness.is_some()),
        trace,
    })
}
