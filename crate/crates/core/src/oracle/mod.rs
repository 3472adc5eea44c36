//! Brute-force ground truth: Schur expansions of plethysms computed from
//! symmetric group characters.

pub mod characters;
pub mod plethysm;

pub use characters::{sign, z_order, CharacterTable};
pub use plethysm::{
    expected_dimension, InnerFlavor, PlethysmOracle, SchurExpansion, DEFAULT_GUARD, SINGLE_COEFFICIENT_LIMIT,
};
