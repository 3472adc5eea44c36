//! Dominance-extremal constituents of `φ^(m^n)_ν` and `ψ^(m^n)_ν` from
//! minimal family tuples, and constituent certificates from closed tuples.
//!
//! All parity bookkeeping lives here. With `κ = ν` for even `m` and
//! `κ = ν'` for odd `m`:
//!
//! | character      | extremum | tuple kind | component block counts | label      |
//! |----------------|----------|------------|------------------------|------------|
//! | `φ_ν`          | minimal  | set        | `κ'_1, …, κ'_{κ_1}`    | type       |
//! | `φ_ν`          | maximal  | multiset   | `ν'_1, …, ν'_{ν_1}`    | type′      |
//! | `ψ_ν`          | minimal  | multiset   | `κ'_1, …, κ'_{κ_1}`    | type       |
//! | `ψ_ν`          | maximal  | set        | `ν'_1, …, ν'_{ν_1}`    | type′      |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{enumerate_minimal_tuple_types, BlockKind, FamilyTuple};
use crate::oracle::InnerFlavor;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// `φ^(m^n)_ν`, the character of `s_ν ∘ s_(m)`.
    Phi,
    /// `ψ^(m^n)_ν`, the character of `s_ν ∘ s_(1^m)`.
    Psi,
}

impl Flavor {
    pub fn inner(self) -> InnerFlavor {
        match self {
            Flavor::Phi => InnerFlavor::Row,
            Flavor::Psi => InnerFlavor::Column,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Phi => "phi",
            Flavor::Psi => "psi",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(Flavor::Phi),
            "psi" => Ok(Flavor::Psi),
            other => Err(Error::InvalidArgument(format!("unknown character {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Minimal,
    Maximal,
}

impl fmt::Display for Extremum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Extremum::Minimal => "minimal",
            Extremum::Maximal => "maximal",
        })
    }
}

/// The character `φ^(m^n)_ν` or `ψ^(m^n)_ν` of `S_mn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CharacterSpec {
    pub m: u32,
    pub nu: Partition,
    pub flavor: Flavor,
}

impl CharacterSpec {
    pub fn new(m: u32, nu: Partition, flavor: Flavor) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be positive".into()));
        }
        if nu.is_empty() {
            return Err(Error::InvalidArgument("ν must be a nonempty partition".into()));
        }
        Ok(CharacterSpec { m, nu, flavor })
    }

    pub fn n(&self) -> u32 {
        self.nu.weight()
    }

    /// Degree `mn` of the symmetric group.
    pub fn degree(&self) -> u32 {
        self.m * self.n()
    }

    /// `ν` for even `m`, `ν'` for odd `m`.
    pub fn kappa(&self) -> Partition {
        kappa(self.m, &self.nu)
    }

    /// Block counts for the minimal-constituent rule: `κ'_1, …, κ'_k`.
    pub fn minimal_shapes(&self) -> Vec<usize> {
        self.kappa()
            .conjugate_parts()
            .iter()
            .map(|&c| c as usize)
            .collect()
    }

    /// Block counts for the maximal-constituent rule: `ν'_1, …, ν'_ℓ`.
    pub fn maximal_shapes(&self) -> Vec<usize> {
        self.nu.conjugate_parts().iter().map(|&c| c as usize).collect()
    }

    /// Tuple kind used for the minimal constituents (the maximal ones use
    /// the other kind).
    pub fn minimal_kind(&self) -> BlockKind {
        match self.flavor {
            Flavor::Phi => BlockKind::Set,
            Flavor::Psi => BlockKind::Multiset,
        }
    }

    fn other_kind(&self) -> BlockKind {
        match self.flavor {
            Flavor::Phi => BlockKind::Multiset,
            Flavor::Psi => BlockKind::Set,
        }
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({}^{})_({})", self.flavor, self.m, self.n(), self.nu)
    }
}

pub(crate) fn kappa(m: u32, nu: &Partition) -> Partition {
    if m.is_multiple_of(2) {
        nu.clone()
    } else {
        nu.conjugate()
    }
}

/// A constituent label with the closed tuple certifying it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Constituent {
    pub label: Partition,
    pub witness: FamilyTuple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstituentReport {
    pub spec: CharacterSpec,
    pub extremum: Extremum,
    /// Descending lex order of label.
    pub constituents: Vec<Constituent>,
}

impl ConstituentReport {
    pub fn labels(&self) -> Vec<Partition> {
        self.constituents.iter().map(|c| c.label.clone()).collect()
    }

    pub fn witness(&self, label: &Partition) -> Option<&FamilyTuple> {
        self.constituents
            .iter()
            .find(|c| &c.label == label)
            .map(|c| &c.witness)
    }
}

fn report(
    spec: CharacterSpec,
    extremum: Extremum,
    shapes: &[usize],
    kind: BlockKind,
    conjugate_labels: bool,
) -> Result<ConstituentReport> {
    let typed = enumerate_minimal_tuple_types(spec.m, shapes, kind)?;
    let mut constituents: Vec<Constituent> = typed
        .into_iter()
        .map(|t| Constituent {
            label: if conjugate_labels {
                t.label.conjugate()
            } else {
                t.label
            },
            witness: t.witness,
        })
        .collect();
    constituents.sort_by(|a, b| b.label.cmp(&a.label));
    Ok(ConstituentReport {
        spec,
        extremum,
        constituents,
    })
}

/// Minimal constituents of `φ^(m^n)_ν`: types of minimal set family tuples
/// with component block counts `κ'_j`.
pub fn minimal_constituents_phi(m: u32, nu: &Partition) -> Result<ConstituentReport> {
    let spec = CharacterSpec::new(m, nu.clone(), Flavor::Phi)?;
    let shapes = spec.minimal_shapes();
    report(spec, Extremum::Minimal, &shapes, BlockKind::Set, false)
}

/// Maximal constituents of `φ^(m^n)_ν`: conjugates of the types of minimal
/// multiset family tuples with component block counts `ν'_j`.
pub fn maximal_constituents_phi(m: u32, nu: &Partition) -> Result<ConstituentReport> {
    let spec = CharacterSpec::new(m, nu.clone(), Flavor::Phi)?;
    let shapes = spec.maximal_shapes();
    report(spec, Extremum::Maximal, &shapes, BlockKind::Multiset, true)
}

/// Minimal constituents of `ψ^(m^n)_ν`: types of minimal multiset family
/// tuples with component block counts `κ'_j`.
pub fn minimal_constituents_psi(m: u32, nu: &Partition) -> Result<ConstituentReport> {
    let spec = CharacterSpec::new(m, nu.clone(), Flavor::Psi)?;
    let shapes = spec.minimal_shapes();
    report(spec, Extremum::Minimal, &shapes, BlockKind::Multiset, false)
}

/// Maximal constituents of `ψ^(m^n)_ν`. Tensoring with the sign turns
/// `ψ_ν` into `φ_ν` (even `m`) or `φ_ν'` (odd `m`); either way the minimal
/// rule for that character uses set tuples with block counts `ν'_j`.
pub fn maximal_constituents_psi(m: u32, nu: &Partition) -> Result<ConstituentReport> {
    let spec = CharacterSpec::new(m, nu.clone(), Flavor::Psi)?;
    let shapes = spec.maximal_shapes();
    report(spec, Extremum::Maximal, &shapes, BlockKind::Set, true)
}

pub fn constituents(spec: &CharacterSpec, extremum: Extremum) -> Result<ConstituentReport> {
    match (spec.flavor, extremum) {
        (Flavor::Phi, Extremum::Minimal) => minimal_constituents_phi(spec.m, &spec.nu),
        (Flavor::Phi, Extremum::Maximal) => maximal_constituents_phi(spec.m, &spec.nu),
        (Flavor::Psi, Extremum::Minimal) => minimal_constituents_psi(spec.m, &spec.nu),
        (Flavor::Psi, Extremum::Maximal) => maximal_constituents_psi(spec.m, &spec.nu),
    }
}

/// The label a closed tuple guarantees to occur in the character.
///
/// Set tuples certify `φ` constituents by type and `ψ` constituents by
/// conjugate type; multiset tuples the other way round. The component
/// block counts must match the corresponding rule (in any order).
pub fn certificate_from_closed_tuple(spec: &CharacterSpec, tuple: &FamilyTuple) -> Result<Partition> {
    if tuple.m() != spec.m {
        return Err(Error::ShapeMismatch(format!(
            "tuple has blocks of size {}, character has m = {}",
            tuple.m(),
            spec.m
        )));
    }
    let (mut required, conjugate) = if tuple.kind() == spec.minimal_kind() {
        (spec.minimal_shapes(), false)
    } else {
        debug_assert_eq!(tuple.kind(), spec.other_kind());
        (spec.maximal_shapes(), true)
    };
    let mut shapes = tuple.shapes();
    shapes.sort_unstable();
    required.sort_unstable();
    if shapes != required {
        return Err(Error::ShapeMismatch(format!(
            "{} tuple with block counts {:?} does not fit {spec}, which needs {:?}",
            tuple.kind(),
            tuple.shapes(),
            required
        )));
    }
    if !tuple.is_closed() {
        return Err(Error::NotClosed);
    }
    let label = tuple.tuple_type().ok_or(Error::UndefinedType)?;
    Ok(if conjugate { label.conjugate() } else { label })
}

/// Conjugates every label: the effect of tensoring with the sign character.
pub fn sign_twist_labels(labels: &[Partition]) -> Vec<Partition> {
    let mut out: Vec<Partition> = labels.iter().map(Partition::conjugate).collect();
    out.sort_by(|a, b| b.cmp(a));
    out
}
