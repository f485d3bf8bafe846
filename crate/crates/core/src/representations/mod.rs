//! Additive representations: square plus practical, the non-representable
//! families, sums of two practical numbers, and the palindromic chain.

mod decompose;
mod families;
mod sums;

pub use decompose::{
    decompose_square_plus_practical, power2_practical, sqrt_mod_power_of_two, SquareDecomposition,
};
pub use families::{
    family_member, family_stream, verify_not_representable, FamilySpec, FamilyVariant,
    RepresentabilityCheck, TraceEntry, MAX_VERIFY,
};
pub use sums::{
    goldbach_pair, is_decimal_palindrome, palindromic_practicals, practical_triples, triples_in,
    GoldbachPair, PalindromicTerm, MAX_PALINDROMIC,
};
