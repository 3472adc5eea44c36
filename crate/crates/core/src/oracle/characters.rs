//! Symmetric group character values by the Murnaghan–Nakayama rule.
//!
//! Rim hooks are removed on the abacus: with beta-numbers
//! `β_i = λ_i + ℓ - i`, removing an `r`-rim hook moves one bead from `b` to
//! an empty position `b - r`, with sign `(-1)^(beads strictly between)`.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};

const CACHE_FORMAT: &str = "foulkes-character-cache";
const CACHE_VERSION: u32 = 1;

/// Memoized character values `χ^λ(ρ)`, shared across degrees.
#[derive(Debug, Default, Clone)]
pub struct CharacterTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized values.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `χ^λ(ρ)` where `ρ` is the cycle type.
    pub fn value(&mut self, lambda: &Partition, rho: &Partition) -> Result<i64> {
        if lambda.weight() != rho.weight() {
            return Err(Error::WeightMismatch {
                left: Box::new(lambda.clone()),
                right: Box::new(rho.clone()),
            });
        }
        self.eval(lambda.parts(), rho.parts())
    }

    fn eval(&mut self, lambda: &[u32], rho: &[u32]) -> Result<i64> {
        if rho.is_empty() {
            return Ok(1);
        }
        if lambda.len() <= 1 {
            return Ok(1);
        }
        if lambda[0] == 1 {
            // sign character
            let even_cycles = rho.iter().filter(|&&r| r % 2 == 0).count();
            return Ok(if even_cycles % 2 == 0 { 1 } else { -1 });
        }
        let key = (lambda.to_vec(), rho.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let r = rho[0];
        let rest = &rho[1..];
        let len = lambda.len() as u32;
        let beta: Vec<u32> = lambda
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i as u32)
            .collect();
        let mut total: i64 = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<u32> = moved
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (len - 1 - j as u32))
                .filter(|&p| p > 0)
                .collect();
            let v = self.eval(&shape, rest)?;
            let signed = if between % 2 == 0 { v } else { -v };
            total = total
                .checked_add(signed)
                .ok_or_else(|| Error::Internal("character value overflow".into()))?;
        }
        self.memo.insert(key, total);
        Ok(total)
    }

    /// Full character table of `S_n`: rows are characters and columns are
    /// classes, both in descending lex order of partitions.
    pub fn table(&mut self, n: u32) -> Result<(Vec<Partition>, Vec<Vec<i64>>)> {
        let parts = partitions_of(n);
        let mut rows = Vec::with_capacity(parts.len());
        for lambda in &parts {
            let row = parts
                .iter()
                .map(|rho| self.value(lambda, rho))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok((parts, rows))
    }

    fn cache_path(dir: &Path, degree: u32) -> PathBuf {
        dir.join(format!("characters-{degree}.json"))
    }

    /// Loads previously saved values of the given degree, if a cache file
    /// exists. Returns the number of values read.
    pub fn load_degree(&mut self, dir: &Path, degree: u32) -> Result<usize> {
        let path = Self::cache_path(dir, degree);
        if !path.exists() {
            return Ok(0);
        }
        let text = fs::read_to_string(&path)?;
        let file: CacheFile = serde_json::from_str(&text)?;
        if file.format != CACHE_FORMAT || file.version != CACHE_VERSION || file.degree != degree {
            return Err(Error::InvalidArgument(format!(
                "{} is not a version {CACHE_VERSION} character cache for degree {degree}",
                path.display()
            )));
        }
        let count = file.entries.len();
        for (lambda, rho, value) in file.entries {
            self.memo.insert((lambda, rho), value);
        }
        Ok(count)
    }

    /// Writes every memoized value of the given degree to the cache directory.
    pub fn save_degree(&self, dir: &Path, degree: u32) -> Result<usize> {
        fs::create_dir_all(dir)?;
        let mut entries: Vec<(Vec<u32>, Vec<u32>, i64)> = self
            .memo
            .iter()
            .filter(|((lambda, _), _)| lambda.iter().sum::<u32>() == degree)
            .map(|((l, r), &v)| (l.clone(), r.clone(), v))
            .collect();
        entries.sort();
        let count = entries.len();
        let file = CacheFile {
            format: CACHE_FORMAT.to_string(),
            version: CACHE_VERSION,
            degree,
            entries,
        };
        let tmp = Self::cache_path(dir, degree).with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, Self::cache_path(dir, degree))?;
        Ok(count)
    }
}

/// On-disk layout of one degree of the character cache.
#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: String,
    version: u32,
    degree: u32,
    /// `[λ, ρ, χ^λ(ρ)]` triples.
    entries: Vec<(Vec<u32>, Vec<u32>, i64)>,
}

/// Centralizer order `z_ρ = Π i^(m_i) m_i!`.
pub fn z_order(rho: &Partition) -> BigUint {
    let mut z = BigUint::one();
    for (i, &mult) in rho.part_multiplicities().iter().enumerate().skip(1) {
        if mult > 0 {
            z *= BigUint::from(i as u32).pow(mult);
            z *= factorial(mult);
        }
    }
    z
}

/// Sign of a permutation of cycle type `ρ`.
pub fn sign(rho: &Partition) -> i64 {
    if (rho.weight() as usize - rho.len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign() {
        let mut t = CharacterTable::new();
        for rho in partitions_of(6) {
            assert_eq!(t.value(&Partition::row(6), &rho).unwrap(), 1);
            assert_eq!(t.value(&Partition::column(6), &rho).unwrap(), sign(&rho));
        }
    }

    #[test]
    fn small_values() {
        let mut t = CharacterTable::new();
        assert_eq!(t.value(&p("2,1"), &p("1,1,1")).unwrap(), 2);
        assert_eq!(t.value(&p("2,1"), &p("2,1")).unwrap(), 0);
        assert_eq!(t.value(&p("2,1"), &p("3")).unwrap(), -1);
        assert_eq!(t.value(&p("2,2"), &p("2,2")).unwrap(), 2);
        assert_eq!(t.value(&p("3,1"), &p("4")).unwrap(), -1);
        assert!(t.value(&p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn degrees_match_hook_formula() {
        let mut t = CharacterTable::new();
        for lambda in partitions_of(9) {
            let deg = t.value(&lambda, &Partition::column(9)).unwrap();
            assert_eq!(BigUint::from(deg as u64), lambda.dimension());
        }
    }

    #[test]
    fn centralizers() {
        assert_eq!(z_order(&p("1,1,1")), BigUint::from(6u32));
        assert_eq!(z_order(&p("3")), BigUint::from(3u32));
        assert_eq!(z_order(&p("2,1")), BigUint::from(2u32));
        assert_eq!(z_order(&p("2,2,1")), BigUint::from(8u32));
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut t = CharacterTable::new();
        let v = t.value(&p("3,2,1"), &p("3,1,1,1")).unwrap();
        let saved = t.save_degree(dir.path(), 6).unwrap();
        assert!(saved >= 1);
        let mut fresh = CharacterTable::new();
        assert_eq!(fresh.load_degree(dir.path(), 6).unwrap(), saved);
        assert_eq!(fresh.len(), saved);
        assert_eq!(fresh.value(&p("3,2,1"), &p("3,1,1,1")).unwrap(), v);
        assert_eq!(fresh.load_degree(dir.path(), 7).unwrap(), 0);
    }
}
