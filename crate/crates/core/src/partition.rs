//! Integer partitions: conjugation, dominance and lexicographic order,
//! enumeration, and the diagonal-hook constructions used by the closed-form
//! decompositions.
//!
//! A partition is stored as its weakly decreasing part sequence. The text
//! form is a comma-separated list (`"4,2,1,1"`, empty string for the empty
//! partition) and the JSON form is an array of integers.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Equality, hashing and ordering only look at the parts. The derived
/// `Ord` is the lexicographic order on part sequences, with a proper prefix
/// ordered first.
#[derive(Clone, Default)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u32,
    conjugate: OnceLock<Vec<u32>>,
}

/// Outcome of comparing two partitions of the same weight in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DominanceRelation {
    StrictlyBelow,
    Equal,
    StrictlyAbove,
    Incomparable,
}

impl DominanceRelation {
    pub fn reverse(self) -> Self {
        match self {
            DominanceRelation::StrictlyBelow => DominanceRelation::StrictlyAbove,
            DominanceRelation::StrictlyAbove => DominanceRelation::StrictlyBelow,
            other => other,
        }
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds a partition from parts in any order; zero entries are dropped.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    /// The partition whose conjugate has the given column lengths.
    /// The input must be weakly decreasing (zeros are dropped).
    pub fn from_conjugate(columns: &[u32]) -> Result<Self> {
        let cols = Partition::new(columns.iter().copied().filter(|&c| c > 0).collect())?;
        Ok(cols.conjugate())
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        let weight = parts.iter().sum();
        Partition {
            parts,
            weight,
            conjugate: OnceLock::new(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self::from_sorted(vec![1; n as usize])
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: u32, height: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![width; height as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), or 0 beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Column lengths, computed once per instance.
    pub fn conjugate_parts(&self) -> &[u32] {
        self.conjugate.get_or_init(|| {
            let mut cols = vec![0u32; self.first() as usize];
            for &p in &self.parts {
                for c in cols.iter_mut().take(p as usize) {
                    *c += 1;
                }
            }
            cols
        })
    }

    pub fn conjugate(&self) -> Partition {
        let conj = Partition::from_sorted(self.conjugate_parts().to_vec());
        let _ = conj.conjugate.set(self.parts.clone());
        conj
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<DominanceRelation> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch {
                left: Box::new(self.clone()),
                right: Box::new(other.clone()),
            });
        }
        let (mut above, mut below) = (false, false);
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            match a.cmp(&b) {
                Ordering::Greater => above = true,
                Ordering::Less => below = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (above, below) {
            (false, false) => DominanceRelation::Equal,
            (true, false) => DominanceRelation::StrictlyAbove,
            (false, true) => DominanceRelation::StrictlyBelow,
            (true, true) => DominanceRelation::Incomparable,
        })
    }

    /// `self ⊵ other` (weakly).
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        Ok(matches!(
            self.dominance_compare(other)?,
            DominanceRelation::Equal | DominanceRelation::StrictlyAbove
        ))
    }

    pub fn lex_compare(&self, other: &Partition) -> Ordering {
        self.parts.cmp(&other.parts)
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> Option<u32> {
        let row = self.part(i);
        if j as u32 >= row {
            return None;
        }
        let arm = row - j as u32 - 1;
        let leg = self.conjugate_parts()[j] - i as u32 - 1;
        Some(arm + leg + 1)
    }

    /// Hook lengths of the cells on the leading diagonal.
    pub fn diagonal_hook_lengths(&self) -> Vec<u32> {
        (0..self.len()).map_while(|i| self.hook_length(i, i)).collect()
    }

    /// Degree of the irreducible character, by the hook length formula.
    pub fn dimension(&self) -> BigUint {
        let mut numer = factorial(self.weight);
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                hooks *= self.hook_length(i, j).unwrap_or(1);
            }
        }
        numer /= hooks;
        numer
    }

    /// True when the parts are strictly decreasing.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Multiplicity of each part size, indexed by size (index 0 unused).
    pub fn part_multiplicities(&self) -> Vec<u32> {
        let mut mult = vec![0u32; self.first() as usize + 1];
        for &p in &self.parts {
            mult[p as usize] += 1;
        }
        mult
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_compare(other)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidPartition(format!("{s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Keeps exactly the members not strictly dominating another member.
/// Duplicates are collapsed; output is in descending lexicographic order.
pub fn dominance_minimal_elements(set: &[Partition]) -> Result<Vec<Partition>> {
    extremal_elements(set, DominanceRelation::StrictlyAbove)
}

/// Keeps exactly the members not strictly dominated by another member.
pub fn dominance_maximal_elements(set: &[Partition]) -> Result<Vec<Partition>> {
    extremal_elements(set, DominanceRelation::StrictlyBelow)
}

fn extremal_elements(set: &[Partition], excluded: DominanceRelation) -> Result<Vec<Partition>> {
    let mut unique: Vec<Partition> = set.to_vec();
    unique.sort_unstable_by(|a, b| b.cmp(a));
    unique.dedup();
    if let Some(first) = unique.first() {
        if let Some(bad) = unique.iter().find(|p| p.weight() != first.weight()) {
            return Err(Error::WeightMismatch {
                left: Box::new(first.clone()),
                right: Box::new(bad.clone()),
            });
        }
    }
    let mut keep = Vec::new();
    for lambda in &unique {
        let mut extremal = true;
        for mu in &unique {
            if lambda.dominance_compare(mu)? == excluded {
                extremal = false;
                break;
            }
        }
        if extremal {
            keep.push(lambda.clone());
        }
    }
    Ok(keep)
}

/// The partition whose column lengths are the sums of the column lengths of
/// the inputs.
pub fn conjugate_join(list: &[Partition]) -> Partition {
    let width = list.iter().map(Partition::first).max().unwrap_or(0) as usize;
    let mut cols = vec![0u32; width];
    for lambda in list {
        for (c, &x) in cols.iter_mut().zip(lambda.conjugate_parts()) {
            *c += x;
        }
    }
    Partition::from_sorted(cols).conjugate()
}

/// The partition `2[α]` of `2|α|` with diagonal hook lengths `2α_i` and
/// `λ_i = α_i + i` on the diagonal rows.
pub fn double_from_distinct(alpha: &Partition) -> Result<Partition> {
    if !alpha.has_distinct_parts() {
        return Err(Error::RepeatedParts(Box::new(alpha.clone())));
    }
    // Frobenius coordinates (α_1,…,α_r | α_1−1,…,α_r−1).
    let r = alpha.len();
    let mut parts: Vec<u32> = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &a)| a + i as u32 + 1)
        .collect();
    let mut row = r as u32 + 1;
    loop {
        let len = alpha
            .parts()
            .iter()
            .enumerate()
            .filter(|&(j, &a)| a - 1 + j as u32 + 1 >= row)
            .count() as u32;
        if len == 0 {
            break;
        }
        parts.push(len);
        row += 1;
    }
    let lambda = Partition::new(parts)?;

    let expected: Vec<u32> = alpha.parts().iter().map(|&a| 2 * a).collect();
    if lambda.weight() != 2 * alpha.weight() || lambda.diagonal_hook_lengths() != expected {
        return Err(Error::Internal(format!(
            "2[{alpha:?}] = {lambda:?} has diagonal hooks {:?}",
            lambda.diagonal_hook_lengths()
        )));
    }
    Ok(lambda)
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, false, &mut current, &mut out);
    out
}

/// All partitions of `n` with distinct parts, in descending lexicographic order.
pub fn distinct_part_partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, true, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max: u32, distinct: bool, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        let next_max = if distinct { part - 1 } else { part };
        fill(remaining - part, next_max, distinct, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("4,2,1,1").conjugate(), p("4,2,1,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("6,1,1").conjugate(), p("3,1,1,1,1,1"));
    }

    #[test]
    fn conjugate_of_conjugate_reuses_memo() {
        let lambda = p("5,3,3,1");
        let conj = lambda.conjugate();
        assert_eq!(conj.conjugate_parts(), lambda.parts());
        assert_eq!(conj.conjugate(), lambda);
    }

    #[test]
    fn dominance_examples() {
        use DominanceRelation::*;
        assert_eq!(p("4,2,1,1").dominance_compare(&p("3,3,2")).unwrap(), Incomparable);
        assert_eq!(p("8").dominance_compare(&p("3,3,2")).unwrap(), StrictlyAbove);
        assert_eq!(p("4,1,1").dominance_compare(&p("3,3")).unwrap(), Incomparable);
        assert_eq!(p("3,3,2").dominance_compare(&p("4,3,1")).unwrap(), StrictlyBelow);
        assert_eq!(p("3,3,2").dominance_compare(&p("3,3,2")).unwrap(), Equal);
    }

    #[test]
    fn dominance_rejects_unequal_weights() {
        assert!(matches!(
            p("3,1").dominance_compare(&p("3")),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn minimal_elements() {
        let set = vec![p("4,2,1,1"), p("3,3,2"), p("4,3,1")];
        assert_eq!(
            dominance_minimal_elements(&set).unwrap(),
            vec![p("4,2,1,1"), p("3,3,2")]
        );
        assert_eq!(dominance_maximal_elements(&set).unwrap(), vec![p("4,3,1")]);
        assert_eq!(dominance_minimal_elements(&[p("2,1")]).unwrap(), vec![p("2,1")]);
        assert!(dominance_minimal_elements(&[]).unwrap().is_empty());
        assert!(dominance_minimal_elements(&[p("2"), p("1")]).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(p("3,3,2").lex_compare(&p("4,2,1,1")), Ordering::Less);
        assert_eq!(p("4,3,1").lex_compare(&p("4,3,1")), Ordering::Equal);
        assert_eq!(p("2,1,1").lex_compare(&p("2,2")), Ordering::Less);
    }

    #[test]
    fn join_examples() {
        assert_eq!(conjugate_join(&[p("4,3,1"), p("2,1")]), p("4,3,2,1,1"));
        assert_eq!(conjugate_join(&[p("3,1")]), p("3,1"));
        assert_eq!(conjugate_join(&[p(""), p("")]), p(""));
    }

    #[test]
    fn doubles() {
        assert_eq!(double_from_distinct(&p("2,1")).unwrap(), p("3,3"));
        assert_eq!(double_from_distinct(&p("3,1")).unwrap(), p("4,3,1"));
        for n in 1..=6 {
            let mut expected = vec![n + 1];
            expected.extend(std::iter::repeat_n(1, n as usize - 1));
            assert_eq!(
                double_from_distinct(&Partition::row(n)).unwrap().parts(),
                &expected[..]
            );
        }
        assert!(matches!(
            double_from_distinct(&p("2,2")),
            Err(Error::RepeatedParts(_))
        ));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(4)[0], p("4"));
        assert_eq!(partitions_of(4)[4], p("1,1,1,1"));
        assert_eq!(distinct_part_partitions_of(4), vec![p("4"), p("3,1")]);
        assert_eq!(partitions_of(0), vec![p("")]);
        assert_eq!(partitions_of(12).len(), 77);
    }

    #[test]
    fn parsing() {
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(" 3, 1 ".parse::<Partition>().unwrap(), p("3,1"));
        assert_eq!(p("4,2,1,1").to_string(), "4,2,1,1");
        let json = serde_json::to_string(&p("4,2,1,1")).unwrap();
        assert_eq!(json, "[4,2,1,1]");
        let back: Partition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("4,2,1,1"));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(p("2,1").dimension(), BigUint::from(2u32));
        assert_eq!(p("3,2").dimension(), BigUint::from(5u32));
        assert_eq!(p("").dimension(), BigUint::from(1u32));
    }
}
