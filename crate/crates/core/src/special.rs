//! Closed forms that follow from the constituent rules: lexicographically
//! least and greatest constituents, unique extrema, rectangular constituents
//! and the decomposition of `φ^(2^n)_(1^n)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::constituents::{kappa, Constituent, Flavor};
use crate::error::{Error, Result};
use crate::families::{BlockKind, Family, FamilyTuple};
use crate::oracle::SchurExpansion;
use crate::partition::{conjugate_join, distinct_part_partitions_of, double_from_distinct, Partition};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient fits in u64")
}

/// Number of `t`-multisets drawn from `q` values: `C(q + t - 1, t)`.
pub fn multichoose(q: u64, t: u64) -> u64 {
    if t == 0 {
        return 1;
    }
    if q == 0 {
        return 0;
    }
    binomial(q + t - 1, t)
}

/// Greedy decomposition of `n` and the assembled lexicographically least
/// type of a family of shape `(m^n)`.
///
/// Set kind: `n = Σ_i C(p_i, m+1-i)` with `p_1 > p_2 > …`, residuals
/// `a_i = n - Σ_{j≤i} C(p_j, m+1-j)` and widths `b_i = C(p_i - 1, m - i)`.
/// Multiset kind: the same with `C(q, t)` replaced by the multichoose count,
/// `q_1 ≥ q_2 ≥ …`, and widths `multichoose(q_i + 1, m - i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgaokaData {
    pub kind: BlockKind,
    pub m: u32,
    pub n: u32,
    pub indices: Vec<u32>,
    pub residuals: Vec<u64>,
    pub widths: Vec<u64>,
    pub assembled: Partition,
}

pub fn agaoka_lex_least(m: u32, n: u32, kind: BlockKind) -> Result<AgaokaData> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    let count = |p: u64, t: u64| match kind {
        BlockKind::Set => binomial(p, t),
        BlockKind::Multiset => multichoose(p, t),
    };
    let mut indices = Vec::new();
    let mut residuals = Vec::new();
    let mut widths = Vec::new();
    let mut rest = n as u64;
    for i in 1..=m as u64 {
        if rest == 0 {
            break;
        }
        let t = m as u64 + 1 - i;
        let mut p = 1;
        while count(p + 1, t) <= rest {
            p += 1;
        }
        if count(p, t) > rest {
            return Err(Error::Internal(format!(
                "no index for residual {rest} at step {i}"
            )));
        }
        rest -= count(p, t);
        indices.push(p as u32);
        residuals.push(rest);
        widths.push(match kind {
            BlockKind::Set => binomial(p - 1, m as u64 - i),
            BlockKind::Multiset => multichoose(p + 1, m as u64 - i),
        });
    }
    if rest != 0 {
        return Err(Error::Internal(format!(
            "greedy decomposition of {n} left {rest}"
        )));
    }

    // Parts ((p_1+1)^{a_1}, p_1^{b_1-a_1}, …); exponents at equal part sizes
    // are merged, so a negative b_i - a_i is absorbed by the next term.
    let mut exponents: BTreeMap<u32, i64> = BTreeMap::new();
    for ((&p, &a), &b) in indices.iter().zip(&residuals).zip(&widths) {
        *exponents.entry(p + 1).or_insert(0) += a as i64;
        *exponents.entry(p).or_insert(0) += b as i64 - a as i64;
    }
    let mut parts = Vec::new();
    for (&size, &exp) in exponents.iter().rev() {
        if exp < 0 {
            return Err(Error::Internal(format!(
                "part {size} has exponent {exp} for m={m}, n={n}, {kind}"
            )));
        }
        parts.extend(std::iter::repeat_n(size, exp as usize));
    }
    let assembled = Partition::new(parts)?;
    if assembled.weight() != m * n {
        return Err(Error::Internal(format!(
            "assembled {assembled:?} does not have weight {}",
            m * n
        )));
    }
    Ok(AgaokaData {
        kind,
        m,
        n,
        indices,
        residuals,
        widths,
        assembled,
    })
}

/// Lexicographically least constituent label, joined over the components
/// `κ'_j` of the minimal-constituent rule.
pub fn lex_least_constituent(m: u32, nu: &Partition, flavor: Flavor) -> Result<Partition> {
    if m == 0 || nu.is_empty() {
        return Err(Error::InvalidArgument("m and ν must be nonempty".into()));
    }
    let kind = match flavor {
        Flavor::Phi => BlockKind::Set,
        Flavor::Psi => BlockKind::Multiset,
    };
    let pieces = kappa(m, nu)
        .conjugate_parts()
        .iter()
        .map(|&c| agaoka_lex_least(m, c, kind).map(|d| d.assembled))
        .collect::<Result<Vec<_>>>()?;
    Ok(conjugate_join(&pieces))
}

/// Lexicographically greatest constituent label with its witness tuple:
/// `((m-1)n + ν_1, ν_2, …)` for `φ`, `(n^(m-1), ν_1, ν_2, …)` for `ψ`.
pub fn lex_greatest_constituent(m: u32, nu: &Partition, flavor: Flavor) -> Result<Constituent> {
    if m == 0 || nu.is_empty() {
        return Err(Error::InvalidArgument("m and ν must be nonempty".into()));
    }
    let n = nu.weight();
    let columns = nu.conjugate_parts();
    let (label, witness) = match flavor {
        Flavor::Phi => {
            let mut parts = nu.parts().to_vec();
            parts[0] += (m - 1) * n;
            let families = columns
                .iter()
                .map(|&c| {
                    let blocks = (1..=c)
                        .map(|last| {
                            let mut b = vec![1; m as usize - 1];
                            b.push(last);
                            b
                        })
                        .collect();
                    Family::from_lists(m, BlockKind::Multiset, blocks)
                })
                .collect::<Result<Vec<_>>>()?;
            (Partition::new(parts)?, FamilyTuple::new(families)?)
        }
        Flavor::Psi => {
            let mut parts = vec![n; m as usize - 1];
            parts.extend_from_slice(nu.parts());
            let families = columns
                .iter()
                .map(|&c| {
                    let blocks = (0..c)
                        .map(|j| {
                            let mut b: Vec<u32> = (1..m).collect();
                            b.push(m + j);
                            b
                        })
                        .collect();
                    Family::from_lists(m, BlockKind::Set, blocks)
                })
                .collect::<Result<Vec<_>>>()?;
            let label =
                Partition::new(parts).map_err(|e| Error::Internal(format!("lex-greatest ψ label: {e}")))?;
            (label, FamilyTuple::new(families)?)
        }
    };
    if witness.tuple_type().map(|t| t.conjugate()) != Some(label.clone()) {
        return Err(Error::Internal(format!(
            "witness {witness:?} does not certify {label:?}"
        )));
    }
    Ok(Constituent { label, witness })
}

/// The unique minimal constituent of `φ^(m^n)_ν`, if there is exactly one.
pub fn unique_minimal_classification(m: u32, nu: &Partition) -> Option<Partition> {
    if m == 0 || nu.is_empty() {
        return None;
    }
    if m == 1 {
        return Some(nu.clone());
    }
    let k = kappa(m, nu);
    if k.len() > 2 {
        return None;
    }
    let n = nu.weight();
    let r = k.part(1);
    let mut parts = vec![m + 1; r as usize];
    parts.extend(std::iter::repeat_n(m, (n - 2 * r) as usize));
    parts.extend(std::iter::repeat_n(m - 1, r as usize));
    Some(Partition::from_sorted(parts))
}

/// The unique maximal constituent of `φ^(m^n)_ν`, if there is exactly one.
pub fn unique_maximal_classification(m: u32, nu: &Partition) -> Option<Partition> {
    if m == 0 || nu.is_empty() {
        return None;
    }
    if m == 1 {
        return Some(nu.clone());
    }
    if nu.len() > 2 {
        return None;
    }
    let r = nu.part(1);
    Some(Partition::from_unsorted(vec![m * nu.weight() - r, r]))
}

/// A rectangle guaranteed to label a constituent of `φ^(m^n)_ν`, with the
/// closed tuple `(P, …, P)` behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectangularCertificate {
    pub kind: BlockKind,
    pub m: u32,
    pub nu: Partition,
    pub rectangle: Partition,
    pub witness: FamilyTuple,
}

/// Set kind: `P` is all `m`-subsets of `{1..a}`, `ν` has `k` parts equal to
/// `C(a, m)` (conjugated for even `m`), and the rectangle is `(a^b)` with
/// `b = k·C(a-1, m-1)`.
///
/// Multiset kind: `P` is all `m`-multisets over `{1..a}`, `ν` is the
/// conjugate of `(multichoose(a, m)^k)`, and the rectangle is `(b^a)` with
/// `b = k·multichoose(a+1, m-1)`.
pub fn rectangular_certificate(a: u32, m: u32, k: u32, kind: BlockKind) -> Result<RectangularCertificate> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument("m and k must be positive".into()));
    }
    if a == 0 || (kind == BlockKind::Set && a < m) {
        return Err(Error::InvalidArgument(format!("no {m}-{kind}s over {{1..{a}}}")));
    }
    let (a64, m64, k64) = (a as u64, m as u64, k as u64);
    let family = all_blocks_up_to(a, m, kind)?;
    let witness = FamilyTuple::new(vec![family; k as usize])?;
    let to_u32 = |x: u64| u32::try_from(x).map_err(|_| Error::InvalidArgument(format!("{x} is too large")));
    let (nu, rectangle) = match kind {
        BlockKind::Set => {
            let c = to_u32(binomial(a64, m64))?;
            let rows = Partition::rectangle(c, k);
            let nu = if m % 2 == 1 { rows } else { rows.conjugate() };
            let b = to_u32(k64 * binomial(a64 - 1, m64 - 1))?;
            (nu, Partition::rectangle(a, b))
        }
        BlockKind::Multiset => {
            let c = to_u32(multichoose(a64, m64))?;
            let nu = Partition::rectangle(c, k).conjugate();
            let b = to_u32(k64 * multichoose(a64 + 1, m64 - 1))?;
            (nu, Partition::rectangle(b, a))
        }
    };
    Ok(RectangularCertificate {
        kind,
        m,
        nu,
        rectangle,
        witness,
    })
}

fn all_blocks_up_to(a: u32, m: u32, kind: BlockKind) -> Result<Family> {
    let mut lists = Vec::new();
    let mut current = Vec::new();
    collect(a, m as usize, 1, kind, &mut current, &mut lists);
    Family::from_lists(m, kind, lists)
}

fn collect(
    a: u32,
    remaining: usize,
    min: u32,
    kind: BlockKind,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for x in min..=a {
        current.push(x);
        let next = if kind == BlockKind::Set { x + 1 } else { x };
        collect(a, remaining - 1, next, kind, current, out);
        current.pop();
    }
}

/// `φ^(2^n)_(1^n) = Σ_α χ^(2[α])` over partitions `α` of `n` with distinct parts.
pub fn theta_decomposition(n: u32) -> Result<SchurExpansion> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut e = SchurExpansion::new(2 * n);
    for alpha in distinct_part_partitions_of(n) {
        e.add(double_from_distinct(&alpha)?, 1)?;
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::colex_initial_segment;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(multichoose(3, 2), 6);
        assert_eq!(multichoose(2, 2), 3);
        assert_eq!(multichoose(4, 0), 1);
    }

    #[test]
    fn agaoka_examples() {
        let d = agaoka_lex_least(2, 4, BlockKind::Set).unwrap();
        assert_eq!(d.indices, vec![3, 1]);
        assert_eq!(d.residuals, vec![1, 0]);
        assert_eq!(d.widths, vec![2, 1]);
        assert_eq!(d.assembled, p("4,3,1"));
        for m in 1..=5 {
            assert_eq!(
                agaoka_lex_least(m, 1, BlockKind::Set).unwrap().assembled,
                Partition::row(m)
            );
        }
        let d = agaoka_lex_least(2, 3, BlockKind::Multiset).unwrap();
        assert_eq!(d.indices, vec![2]);
        assert_eq!(d.assembled, p("2,2,2"));
        assert_eq!(
            colex_initial_segment(2, 3, BlockKind::Multiset).family_type(),
            Some(p("2,2,2"))
        );
    }

    #[test]
    fn lex_extremes() {
        assert_eq!(
            lex_least_constituent(2, &p("2,1,1"), Flavor::Phi).unwrap(),
            p("3,3,2")
        );
        assert_eq!(
            lex_least_constituent(2, &p("1,1,1,1"), Flavor::Phi).unwrap(),
            agaoka_lex_least(2, 4, BlockKind::Set).unwrap().assembled
        );
        assert_eq!(
            lex_least_constituent(2, &p("4"), Flavor::Phi).unwrap(),
            p("2,2,2,2")
        );
        assert_eq!(
            lex_least_constituent(3, &p("4"), Flavor::Phi).unwrap(),
            agaoka_lex_least(3, 4, BlockKind::Set).unwrap().assembled
        );
        assert_eq!(
            lex_least_constituent(1, &p("3,2"), Flavor::Phi).unwrap(),
            p("3,2")
        );
        assert_eq!(
            lex_greatest_constituent(2, &p("2,1,1"), Flavor::Phi)
                .unwrap()
                .label,
            p("6,1,1")
        );
        assert_eq!(
            lex_greatest_constituent(3, &p("2,2"), Flavor::Phi).unwrap().label,
            p("10,2")
        );
        assert_eq!(
            lex_greatest_constituent(2, &p("2"), Flavor::Psi).unwrap().label,
            p("2,2")
        );
    }

    #[test]
    fn unique_extrema() {
        assert_eq!(unique_minimal_classification(2, &p("3,2")), Some(p("3,3,2,1,1")));
        assert_eq!(
            unique_minimal_classification(3, &p("2,2,1")),
            Some(p("4,4,3,2,2"))
        );
        assert_eq!(unique_minimal_classification(2, &p("2,1,1")), None);
        assert_eq!(unique_minimal_classification(2, &p("4")), Some(p("2,2,2,2")));
        assert_eq!(unique_minimal_classification(3, &p("1,1,1")), Some(p("3,3,3")));
        assert_eq!(unique_maximal_classification(2, &p("3,1")), Some(p("7,1")));
        assert_eq!(unique_maximal_classification(3, &p("4")), Some(p("12")));
        assert_eq!(unique_maximal_classification(2, &p("2,1,1")), None);
    }

    #[test]
    fn rectangles() {
        let c = rectangular_certificate(3, 3, 2, BlockKind::Set).unwrap();
        assert_eq!(c.nu, p("1,1"));
        assert_eq!(c.rectangle, p("3,3"));
        let c = rectangular_certificate(4, 3, 2, BlockKind::Set).unwrap();
        assert_eq!(c.nu, p("4,4"));
        assert_eq!(c.rectangle, Partition::rectangle(4, 6));
        assert_eq!(c.witness.families()[0].len(), 4);
        let c = rectangular_certificate(2, 2, 1, BlockKind::Set).unwrap();
        assert_eq!(c.nu, p("1"));
        assert_eq!(c.rectangle, p("2"));
        let c = rectangular_certificate(2, 2, 1, BlockKind::Multiset).unwrap();
        assert_eq!(c.nu, p("1,1,1"));
        assert_eq!(c.rectangle, p("3,3"));
        assert!(rectangular_certificate(2, 3, 1, BlockKind::Set).is_err());
    }

    #[test]
    fn theta() {
        assert_eq!(
            theta_decomposition(2).unwrap(),
            SchurExpansion::from_terms(4, [(p("3,1"), 1)]).unwrap()
        );
        assert_eq!(
            theta_decomposition(3).unwrap(),
            SchurExpansion::from_terms(6, [(p("4,1,1"), 1), (p("3,3"), 1)]).unwrap()
        );
        assert_eq!(
            theta_decomposition(4).unwrap(),
            SchurExpansion::from_terms(8, [(p("5,1,1,1"), 1), (p("4,3,1"), 1)]).unwrap()
        );
    }
}
