//! Extremal irreducible constituents of twisted Foulkes characters.
//!
//! The characters `φ^(m^n)_ν` and `ψ^(m^n)_ν` of `S_mn` correspond to the
//! plethysms `s_ν ∘ s_(m)` and `s_ν ∘ s_(1^m)`. Their dominance-minimal and
//! dominance-maximal constituents are read off from minimal set and
//! multiset family tuples ([`constituents`]); [`oracle`] computes the full
//! Schur expansion independently from symmetric group characters so every
//! combinatorial answer can be checked.

pub mod cli;
pub mod constituents;
pub mod error;
pub mod families;
pub mod oracle;
pub mod partition;
pub mod special;

pub use constituents::{
    certificate_from_closed_tuple, maximal_constituents_phi, maximal_constituents_psi,
    minimal_constituents_phi, minimal_constituents_psi, sign_twist_labels, CharacterSpec, Constituent,
    ConstituentReport, Extremum, Flavor,
};
pub use error::{Error, Result};
pub use families::{Block, BlockKind, Family, FamilyTuple, OccurrenceVector};
pub use oracle::{InnerFlavor, PlethysmOracle, SchurExpansion};
pub use partition::{DominanceRelation, Partition};
