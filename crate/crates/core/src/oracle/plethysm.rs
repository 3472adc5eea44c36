//! Schur expansion of `s_ν ∘ s_(m)` and `s_ν ∘ s_(1^m)` through power sums.
//!
//! With `s_ν = Σ_ρ χ^ν(ρ) p_ρ / z_ρ` and `p_r ∘ s_(m) = Σ_σ c(σ) p_{rσ} / z_σ`
//! (where `c` is trivial for `s_(m)` and the sign for `s_(1^m)`), the
//! plethysm is a rational combination of power sums `p_τ`, and the
//! coefficient of `s_λ` is `Σ_τ C(τ) χ^λ(τ)`. All arithmetic is exact.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::oracle::characters::{sign, z_order, CharacterTable};
use crate::partition::{
    dominance_maximal_elements, dominance_minimal_elements, factorial, partitions_of, Partition,
};

/// Default largest degree `mn` for full expansions.
pub const DEFAULT_GUARD: u32 = 16;

/// Largest degree for which a single coefficient may be computed when it
/// exceeds the guard.
pub const SINGLE_COEFFICIENT_LIMIT: u32 = 24;

/// Which inner Schur function the plethysm composes with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerFlavor {
    /// `s_(m)`
    Row,
    /// `s_(1^m)`
    Column,
}

impl fmt::Display for InnerFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InnerFlavor::Row => "row",
            InnerFlavor::Column => "column",
        })
    }
}

impl std::str::FromStr for InnerFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(InnerFlavor::Row),
            "column" => Ok(InnerFlavor::Column),
            other => Err(Error::InvalidArgument(format!("unknown flavor {other:?}"))),
        }
    }
}

/// Nonzero Schur coefficients of a homogeneous symmetric function.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: u32,
    coefficients: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn new(degree: u32) -> Self {
        SchurExpansion {
            degree,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Partition, u64)>) -> Result<Self> {
        let mut e = SchurExpansion::new(degree);
        for (lambda, c) in terms {
            e.add(lambda, c)?;
        }
        Ok(e)
    }

    pub fn add(&mut self, lambda: Partition, coefficient: u64) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::InvalidArgument(format!(
                "{lambda:?} is not a partition of {}",
                self.degree
            )));
        }
        if coefficient > 0 {
            *self.coefficients.entry(lambda).or_insert(0) += coefficient;
        }
        Ok(())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficient(&self, lambda: &Partition) -> u64 {
        self.coefficients.get(lambda).copied().unwrap_or(0)
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.coefficients.iter().rev().map(|(l, &c)| (l, c))
    }

    /// Labels with nonzero coefficient, descending lex.
    pub fn support(&self) -> Vec<Partition> {
        self.coefficients.keys().rev().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn minimal_support(&self) -> Vec<Partition> {
        dominance_minimal_elements(&self.support()).expect("support has a single degree")
    }

    pub fn maximal_support(&self) -> Vec<Partition> {
        dominance_maximal_elements(&self.support()).expect("support has a single degree")
    }

    /// Apply `ω`: every label is conjugated.
    pub fn conjugated(&self) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            coefficients: self
                .coefficients
                .iter()
                .map(|(l, &c)| (l.conjugate(), c))
                .collect(),
        }
    }

    /// `Σ_λ mult(λ) · dim χ^λ`.
    pub fn total_dimension(&self) -> BigUint {
        self.coefficients.iter().map(|(l, &c)| l.dimension() * c).sum()
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coefficients<'a>(&'a SchurExpansion);
        impl Serialize for Coefficients<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.len()))?;
                for (lambda, c) in self.0.terms() {
                    map.serialize_entry(&lambda.to_string(), &c)?;
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("degree", &self.degree)?;
        map.serialize_entry("coefficients", &Coefficients(self))?;
        map.end()
    }
}

/// Degree of the induced character: `(mn)! / (m!^n n!) · dim χ^ν`.
pub fn expected_dimension(nu: &Partition, m: u32) -> BigUint {
    let n = nu.weight();
    let cosets = factorial(m * n) / (factorial(m).pow(n) * factorial(n));
    cosets * nu.dimension()
}

/// Plethysm calculator holding the character memo and the degree guard.
#[derive(Debug, Clone)]
pub struct PlethysmOracle {
    characters: CharacterTable,
    guard: u32,
    cache_dir: Option<PathBuf>,
}

impl Default for PlethysmOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl PlethysmOracle {
    pub fn new() -> Self {
        PlethysmOracle {
            characters: CharacterTable::new(),
            guard: DEFAULT_GUARD,
            cache_dir: None,
        }
    }

    pub fn with_guard(mut self, guard: u32) -> Self {
        self.guard = guard;
        self
    }

    /// Persist character values of the top degree in `dir` across runs.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn characters(&mut self) -> &mut CharacterTable {
        &mut self.characters
    }

    fn check_degree(&self, degree: u32, single: bool) -> Result<()> {
        if degree <= self.guard {
            return Ok(());
        }
        if single && degree <= SINGLE_COEFFICIENT_LIMIT.max(self.guard) {
            log::warn!(
                "single coefficient at degree {degree} is above the guard {}",
                self.guard
            );
            return Ok(());
        }
        Err(Error::DegreeGuard {
            degree,
            guard: self.guard,
        })
    }

    fn load_cache(&mut self, degree: u32) -> Result<()> {
        if let Some(dir) = &self.cache_dir {
            let read = self.characters.load_degree(dir, degree)?;
            log::debug!("loaded {read} cached character values of degree {degree}");
        }
        Ok(())
    }

    fn store_cache(&self, degree: u32) -> Result<()> {
        if let Some(dir) = &self.cache_dir {
            self.characters.save_degree(dir, degree)?;
        }
        Ok(())
    }

    /// Coefficients `C(τ)` of the plethysm in the power-sum basis.
    pub fn power_sum_expansion(
        &mut self,
        nu: &Partition,
        m: u32,
        flavor: InnerFlavor,
    ) -> Result<BTreeMap<Partition, BigRational>> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be positive".into()));
        }
        let n = nu.weight();
        // p_r ∘ h_m or p_r ∘ e_m, for each needed r: list of (stretched σ, weight)
        let inner: Vec<(Partition, BigRational)> = partitions_of(m)
            .into_iter()
            .map(|sigma| {
                let c = match flavor {
                    InnerFlavor::Row => 1,
                    InnerFlavor::Column => sign(&sigma),
                };
                let w = BigRational::new(BigInt::from(c), BigInt::from(z_order(&sigma)));
                (sigma, w)
            })
            .collect();

        let mut total: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for rho in partitions_of(n) {
            let chi = self.characters.value(nu, &rho)?;
            if chi == 0 {
                continue;
            }
            let lead = BigRational::new(BigInt::from(chi), BigInt::from(z_order(&rho)));
            let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
            terms.insert(Vec::new(), lead);
            for &r in rho.parts() {
                let mut next: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
                for (tau, coeff) in &terms {
                    for (sigma, w) in &inner {
                        let mut merged = tau.clone();
                        merged.extend(sigma.parts().iter().map(|&s| s * r));
                        merged.sort_unstable_by(|a, b| b.cmp(a));
                        let entry = next.entry(merged).or_insert_with(BigRational::zero);
                        *entry += coeff * w;
                    }
                }
                terms = next;
            }
            for (tau, coeff) in terms {
                let entry = total
                    .entry(Partition::from_sorted(tau))
                    .or_insert_with(BigRational::zero);
                *entry += coeff;
            }
        }
        total.retain(|_, c| !c.is_zero());
        Ok(total)
    }

    fn coefficient_from_power_sums(
        &mut self,
        power_sums: &BTreeMap<Partition, BigRational>,
        lambda: &Partition,
    ) -> Result<u64> {
        let mut sum = BigRational::zero();
        for (tau, c) in power_sums {
            let chi = self.characters.value(lambda, tau)?;
            if chi != 0 {
                sum += c * BigRational::from_integer(BigInt::from(chi));
            }
        }
        if !sum.is_integer() {
            return Err(Error::Internal(format!(
                "coefficient of s_{lambda:?} is not an integer: {sum}"
            )));
        }
        let value = sum.to_integer();
        if value < BigInt::zero() {
            return Err(Error::Internal(format!(
                "coefficient of s_{lambda:?} is negative: {value}"
            )));
        }
        value
            .to_u64()
            .ok_or_else(|| Error::Internal(format!("coefficient of s_{lambda:?} overflows: {value}")))
    }

    /// Full Schur expansion of `s_ν ∘ s_(m)` (row) or `s_ν ∘ s_(1^m)` (column).
    pub fn expansion(&mut self, nu: &Partition, m: u32, flavor: InnerFlavor) -> Result<SchurExpansion> {
        let degree = m * nu.weight();
        self.check_degree(degree, false)?;
        self.load_cache(degree)?;
        let power_sums = self.power_sum_expansion(nu, m, flavor)?;
        let mut e = SchurExpansion::new(degree);
        for lambda in partitions_of(degree) {
            let c = self.coefficient_from_power_sums(&power_sums, &lambda)?;
            e.add(lambda, c)?;
        }
        let expected = expected_dimension(nu, m);
        let got = e.total_dimension();
        if got != expected {
            return Err(Error::Internal(format!(
                "dimension check failed for ν={nu:?}, m={m}: {got} ≠ {expected}"
            )));
        }
        self.store_cache(degree)?;
        Ok(e)
    }

    /// Single Schur coefficient, without expanding the rest.
    pub fn multiplicity(
        &mut self,
        nu: &Partition,
        m: u32,
        lambda: &Partition,
        flavor: InnerFlavor,
    ) -> Result<u64> {
        let degree = m * nu.weight();
        if lambda.weight() != degree {
            return Err(Error::InvalidArgument(format!(
                "{lambda:?} is not a partition of {degree}"
            )));
        }
        self.check_degree(degree, true)?;
        self.load_cache(degree)?;
        let power_sums = self.power_sum_expansion(nu, m, flavor)?;
        let c = self.coefficient_from_power_sums(&power_sums, lambda)?;
        self.store_cache(degree)?;
        Ok(c)
    }

    /// Checks `ω(s_ν ∘ s_(m)) = s_ν' ∘ s_(1^m)` for odd `m` and
    /// `s_ν ∘ s_(1^m)` for even `m`.
    pub fn omega_check(&mut self, nu: &Partition, m: u32) -> Result<bool> {
        let row = self.expansion(nu, m, InnerFlavor::Row)?;
        let partner = if m % 2 == 1 { nu.conjugate() } else { nu.clone() };
        let column = self.expansion(&partner, m, InnerFlavor::Column)?;
        Ok(row.conjugated() == column)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_expansions() {
        let mut o = PlethysmOracle::new();
        let e = o.expansion(&p("1,1"), 2, InnerFlavor::Row).unwrap();
        assert_eq!(e, SchurExpansion::from_terms(4, [(p("3,1"), 1)]).unwrap());
        let e = o.expansion(&p("2"), 2, InnerFlavor::Row).unwrap();
        assert_eq!(
            e,
            SchurExpansion::from_terms(4, [(p("4"), 1), (p("2,2"), 1)]).unwrap()
        );
        assert_eq!(
            o.multiplicity(&p("1,1"), 2, &p("2,2"), InnerFlavor::Row).unwrap(),
            0
        );
    }

    #[test]
    fn example_support() {
        let mut o = PlethysmOracle::new();
        let e = o.expansion(&p("2,1,1"), 2, InnerFlavor::Row).unwrap();
        assert_eq!(e.minimal_support(), vec![p("4,2,1,1"), p("3,3,2")]);
        assert_eq!(e.maximal_support(), vec![p("6,1,1"), p("5,3")]);
    }

    #[test]
    fn m_equal_one_is_identity() {
        let mut o = PlethysmOracle::new();
        for nu in partitions_of(5) {
            for flavor in [InnerFlavor::Row, InnerFlavor::Column] {
                let e = o.expansion(&nu, 1, flavor).unwrap();
                assert_eq!(e, SchurExpansion::from_terms(5, [(nu.clone(), 1)]).unwrap());
            }
        }
    }

    #[test]
    fn guard() {
        let mut o = PlethysmOracle::new().with_guard(6);
        assert!(matches!(
            o.expansion(&p("2,1,1"), 2, InnerFlavor::Row),
            Err(Error::DegreeGuard { degree: 8, guard: 6 })
        ));
        assert!(o.multiplicity(&p("2,1,1"), 2, &p("8"), InnerFlavor::Row).is_ok());
        assert!(matches!(
            o.multiplicity(&p("5,5,3"), 2, &p("26"), InnerFlavor::Row),
            Err(Error::DegreeGuard { .. })
        ));
    }

    #[test]
    fn omega() {
        let mut o = PlethysmOracle::new();
        assert!(o.omega_check(&p("2"), 2).unwrap());
        assert!(o.omega_check(&p("2,1"), 3).unwrap());
        assert!(o.omega_check(&p("1,1,1"), 2).unwrap());
    }

    #[test]
    fn json_layout() {
        let e = SchurExpansion::from_terms(4, [(p("2,2"), 1), (p("4"), 1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"degree":4,"coefficients":{"4":1,"2,2":1}}"#
        );
    }
}
