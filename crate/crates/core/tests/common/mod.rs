//! Brute-force plethysm by monomial counting, independent of the
//! character-based oracle. Only practical for degree up to about 10.

#![allow(dead_code)]

use std::collections::BTreeMap;

use foulkes::oracle::InnerFlavor;
use foulkes::partition::partitions_of;
use foulkes::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Degree-`m` monomials in `vars` variables dividing `bound`, as exponent
/// vectors; squarefree ones only for the column flavor.
fn monomials(m: u32, bound: &[u32], flavor: InnerFlavor) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, bound: &[u32], cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bound.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left.min(bound[i]).min(cap) {
            cur.push(e);
            go(i + 1, left - e, bound, cap, cur, out);
            cur.pop();
        }
    }
    let cap = match flavor {
        InnerFlavor::Row => m,
        InnerFlavor::Column => 1,
    };
    let mut out = Vec::new();
    go(0, m, bound, cap, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of semistandard fillings of `shape` with entries `0..alphabet`
/// where `weight(entry)` sums to `target`.
fn count_fillings(shape: &Partition, alphabet: &[Vec<u32>], target: &[u32]) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![usize::MAX; shape.first() as usize]; shape.len()];
    let mut remaining = target.to_vec();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        alphabet: &[Vec<u32>],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<u32>,
    ) -> u64 {
        if k == cells.len() {
            return remaining.iter().all(|&x| x == 0) as u64;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let lo = lo_row.max(lo_col);
        let mut total = 0;
        for x in lo..alphabet.len() {
            let w = &alphabet[x];
            if w.iter().zip(remaining.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for (rem, a) in remaining.iter_mut().zip(w) {
                *rem -= a;
            }
            grid[r][c] = x;
            total += go(k + 1, cells, alphabet, grid, remaining);
            for (rem, a) in remaining.iter_mut().zip(w) {
                *rem += a;
            }
        }
        grid[r][c] = usize::MAX;
        total
    }
    go(0, &cells, alphabet, &mut grid, &mut remaining)
}

/// Kostka number `K_{μλ}`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> u64 {
    let alphabet: Vec<Vec<u32>> = (0..lambda.len())
        .map(|i| {
            let mut v = vec![0; lambda.len()];
            v[i] = 1;
            v
        })
        .collect();
    count_fillings(mu, &alphabet, lambda.parts())
}

/// Schur expansion of `s_ν ∘ s_(m)` (row) or `s_ν ∘ s_(1^m)` (column) by
/// counting monomials and peeling off Kostka rows in descending lex order.
pub fn brute_plethysm(nu: &Partition, m: u32, flavor: InnerFlavor) -> BTreeMap<Partition, i64> {
    let degree = m * nu.weight();
    let all = partitions_of(degree);
    let mut coefficients: BTreeMap<Partition, i64> = BTreeMap::new();
    for lambda in &all {
        let alphabet = monomials(m, lambda.parts(), flavor);
        let mut c = count_fillings(nu, &alphabet, lambda.parts()) as i64;
        for (mu, &d) in &coefficients {
            c -= d * kostka(mu, lambda) as i64;
        }
        assert!(c >= 0, "negative coefficient at {lambda:?}");
        if c > 0 {
            coefficients.insert(lambda.clone(), c);
        }
    }
    coefficients
}
