//! Set and multiset families of `m`-element blocks.
//!
//! Blocks are ordered by majorization (`A ⪯ B` when the `r`-th smallest
//! element of `A` is at most the `r`-th smallest element of `B`, for all `r`).
//! A family is closed when it is a down-set for this order. Closed families
//! of `n` blocks are the size-`n` order ideals of the majorization poset,
//! which only involves elements up to `m + n - 1` for sets and `n` for
//! multisets: a closed set family containing a block with largest element
//! `x` also contains `{1,…,m-1,y}` for every `m ≤ y ≤ x`, and similarly
//! `{1,…,1,y}` for multisets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{dominance_maximal_elements, dominance_minimal_elements, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Set,
    Multiset,
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockKind::Set => "set",
            BlockKind::Multiset => "multiset",
        })
    }
}

impl std::str::FromStr for BlockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "set" => Ok(BlockKind::Set),
            "multiset" => Ok(BlockKind::Multiset),
            other => Err(Error::InvalidArgument(format!("unknown block kind {other:?}"))),
        }
    }
}

/// An `m`-subset or `m`-multiset of positive integers, stored sorted.
///
/// Blocks of the same size are ordered colexicographically: the block with
/// the smaller largest differing element comes first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Block {
    elements: Vec<u32>,
    kind: BlockKind,
}

impl Block {
    pub fn new(mut elements: Vec<u32>, kind: BlockKind) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidBlock("blocks must be nonempty".into()));
        }
        if elements.contains(&0) {
            return Err(Error::InvalidBlock(format!("{elements:?} contains 0")));
        }
        elements.sort_unstable();
        if kind == BlockKind::Set && elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidBlock(format!("{elements:?} repeats an element")));
        }
        Ok(Block { elements, kind })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn max_element(&self) -> u32 {
        *self.elements.last().expect("blocks are nonempty")
    }

    /// Whether `self ⪯ other`.
    pub fn majorized_by(&self, other: &Block) -> Result<bool> {
        majorizes(self, other)
    }

    /// Blocks obtained by lowering one element by one; these are the
    /// elements covered by `self` in the majorization order.
    pub fn lower_covers(&self) -> Vec<Block> {
        let mut covers = Vec::new();
        for r in 0..self.elements.len() {
            let x = self.elements[r];
            if x < 2 {
                continue;
            }
            let fits = match (r, self.kind) {
                (0, _) => true,
                (_, BlockKind::Set) => self.elements[r - 1] < x - 1,
                (_, BlockKind::Multiset) => self.elements[r - 1] < x,
            };
            if fits {
                let mut lowered = self.elements.clone();
                lowered[r] = x - 1;
                covers.push(Block {
                    elements: lowered,
                    kind: self.kind,
                });
            }
        }
        covers
    }

    /// Replace one occurrence of `i + 1` by `i`, if that gives a valid block.
    fn lowered_at(&self, i: u32) -> Option<Block> {
        if i == 0 {
            return None;
        }
        let pos = self.elements.iter().position(|&x| x == i + 1)?;
        if self.kind == BlockKind::Set && self.elements.contains(&i) {
            return None;
        }
        let mut elements = self.elements.clone();
        elements[pos] = i;
        Some(Block {
            elements,
            kind: self.kind,
        })
    }

    fn colex_key(&self) -> impl Iterator<Item = &u32> {
        self.elements.iter().rev()
    }
}

impl PartialOrd for Block {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Block {
    fn cmp(&self, other: &Self) -> Ordering {
        self.kind
            .cmp(&other.kind)
            .then(self.elements.len().cmp(&other.elements.len()))
            .then_with(|| self.colex_key().cmp(other.colex_key()))
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Whether `a ⪯ b` in the majorization order.
pub fn majorizes(a: &Block, b: &Block) -> Result<bool> {
    if a.kind != b.kind || a.size() != b.size() {
        return Err(Error::BlockMismatch(format!(
            "{a:?} ({}) vs {b:?} ({})",
            a.kind, b.kind
        )));
    }
    Ok(a.elements.iter().zip(&b.elements).all(|(x, y)| x <= y))
}

/// Total occurrences of `1, 2, 3, …` across the blocks of a family or tuple.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceVector {
    counts: Vec<u32>,
}

impl OccurrenceVector {
    pub fn from_blocks<'a>(blocks: impl IntoIterator<Item = &'a Block>) -> Self {
        let mut v = OccurrenceVector::default();
        for block in blocks {
            v.add_block(block);
        }
        v
    }

    fn add_block(&mut self, block: &Block) {
        for &x in block.elements() {
            let i = x as usize - 1;
            if self.counts.len() <= i {
                self.counts.resize(i + 1, 0);
            }
            self.counts[i] += 1;
        }
    }

    /// Occurrences of `i` (1-based).
    pub fn count(&self, i: u32) -> u32 {
        if i == 0 {
            return 0;
        }
        self.counts.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// Counts at `1, 2, …` up to the largest element that occurs.
    pub fn counts(&self) -> &[u32] {
        let end = self.counts.iter().rposition(|&c| c > 0).map_or(0, |i| i + 1);
        &self.counts[..end]
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn add(&self, other: &OccurrenceVector) -> OccurrenceVector {
        let len = self.counts.len().max(other.counts.len());
        let counts = (0..len)
            .map(|i| self.counts.get(i).copied().unwrap_or(0) + other.counts.get(i).copied().unwrap_or(0))
            .collect();
        OccurrenceVector { counts }
    }

    /// The partition whose conjugate is the count sequence, when the counts
    /// are weakly decreasing from `1` on.
    pub fn to_type(&self) -> Option<Partition> {
        let counts = self.counts();
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Partition::from_sorted(counts.to_vec()).conjugate())
    }
}

/// `n` distinct blocks of a common size and kind.
///
/// Blocks are kept in colex order, which is also the serialization order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    m: u32,
    kind: BlockKind,
    blocks: Vec<Block>,
}

impl Family {
    pub fn new(m: u32, kind: BlockKind, mut blocks: Vec<Block>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidFamily("block size must be positive".into()));
        }
        if let Some(b) = blocks.iter().find(|b| b.size() != m as usize || b.kind != kind) {
            return Err(Error::InvalidFamily(format!(
                "block {b:?} is not a {kind} of size {m}"
            )));
        }
        blocks.sort();
        if blocks.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFamily("blocks must be distinct".into()));
        }
        Ok(Family { m, kind, blocks })
    }

    pub fn from_lists(m: u32, kind: BlockKind, lists: Vec<Vec<u32>>) -> Result<Self> {
        let blocks = lists
            .into_iter()
            .map(|l| Block::new(l, kind))
            .collect::<Result<Vec<_>>>()?;
        Family::new(m, kind, blocks)
    }

    pub fn empty(m: u32, kind: BlockKind) -> Self {
        Family {
            m,
            kind,
            blocks: Vec::new(),
        }
    }

    /// Every block majorized by `top`.
    pub fn down_set(top: &Block) -> Family {
        let mut seen = vec![top.clone()];
        let mut frontier = vec![top.clone()];
        while let Some(b) = frontier.pop() {
            for c in b.lower_covers() {
                if !seen.contains(&c) {
                    seen.push(c.clone());
                    frontier.push(c);
                }
            }
        }
        seen.sort();
        Family {
            m: top.size() as u32,
            kind: top.kind,
            blocks: seen,
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Number of blocks, i.e. the `n` of the shape `(m^n)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, block: &Block) -> bool {
        self.blocks.binary_search(block).is_ok()
    }

    pub fn occurrences(&self) -> OccurrenceVector {
        OccurrenceVector::from_blocks(&self.blocks)
    }

    pub fn family_type(&self) -> Option<Partition> {
        self.occurrences().to_type()
    }

    pub fn is_closed(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.lower_covers().iter().all(|c| self.contains(c)))
    }

    /// Repeatedly lowers an element `i + 1` of some block to `i` whenever the
    /// lowered block is not already present, until the family is closed.
    /// The step applied is always the least (block, `i`) pair available.
    pub fn closure(&self) -> Family {
        let mut family = self.clone();
        'outer: loop {
            for idx in 0..family.blocks.len() {
                let block = &family.blocks[idx];
                let mut targets: Vec<u32> = block.elements.iter().map(|&x| x - 1).collect();
                targets.dedup();
                for i in targets {
                    if let Some(lowered) = block.lowered_at(i) {
                        if !family.contains(&lowered) {
                            family.blocks[idx] = lowered;
                            family.blocks.sort();
                            continue 'outer;
                        }
                    }
                }
            }
            return family;
        }
    }

    pub fn to_lists(&self) -> Vec<Vec<u32>> {
        self.blocks.iter().map(|b| b.elements.clone()).collect()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b:?}")?;
        }
        f.write_str("}")
    }
}

/// A nonempty sequence of families sharing `m` and kind.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyTuple {
    families: Vec<Family>,
}

impl FamilyTuple {
    pub fn new(families: Vec<Family>) -> Result<Self> {
        let first = families
            .first()
            .ok_or_else(|| Error::InvalidFamily("a family tuple needs at least one family".into()))?;
        if families.iter().any(|f| f.m != first.m || f.kind != first.kind) {
            return Err(Error::InvalidFamily(
                "families in a tuple must share block size and kind".into(),
            ));
        }
        Ok(FamilyTuple { families })
    }

    pub fn from_lists(m: u32, kind: BlockKind, lists: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let families = lists
            .into_iter()
            .map(|l| Family::from_lists(m, kind, l))
            .collect::<Result<Vec<_>>>()?;
        FamilyTuple::new(families)
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn m(&self) -> u32 {
        self.families[0].m
    }

    pub fn kind(&self) -> BlockKind {
        self.families[0].kind
    }

    /// Block counts `n_1, …, n_k` of the component shapes.
    pub fn shapes(&self) -> Vec<usize> {
        self.families.iter().map(Family::len).collect()
    }

    pub fn occurrences(&self) -> OccurrenceVector {
        OccurrenceVector::from_blocks(self.families.iter().flat_map(|f| f.blocks.iter()))
    }

    pub fn tuple_type(&self) -> Option<Partition> {
        self.occurrences().to_type()
    }

    pub fn is_closed(&self) -> bool {
        self.families.iter().all(Family::is_closed)
    }

    pub fn closure(&self) -> FamilyTuple {
        FamilyTuple {
            families: self.families.iter().map(Family::closure).collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(FamilyTupleJson::from(self)).expect("tuple serializes")
    }
}

impl fmt::Debug for FamilyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, fam) in self.families.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{fam:?}")?;
        }
        f.write_str(")")
    }
}

/// Wire form: `{"m":2,"kind":"set","families":[[[1,2],[1,3]],[[1,2]]]}`.
#[derive(Serialize, Deserialize)]
struct FamilyTupleJson {
    m: u32,
    kind: BlockKind,
    families: Vec<Vec<Vec<u32>>>,
}

impl From<&FamilyTuple> for FamilyTupleJson {
    fn from(t: &FamilyTuple) -> Self {
        FamilyTupleJson {
            m: t.m(),
            kind: t.kind(),
            families: t.families.iter().map(Family::to_lists).collect(),
        }
    }
}

impl Serialize for FamilyTuple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyTupleJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FamilyTuple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = FamilyTupleJson::deserialize(deserializer)?;
        FamilyTuple::from_lists(raw.m, raw.kind, raw.families).map_err(serde::de::Error::custom)
    }
}

/// Largest element that can occur in a closed family of shape `(m^n)`.
pub fn ground_bound(m: u32, n: u32, kind: BlockKind) -> u32 {
    match kind {
        BlockKind::Set => (m + n).saturating_sub(1),
        BlockKind::Multiset => n,
    }
}

/// The majorization poset on blocks with elements in `1..=bound`, indexed
/// by a linear extension (blocks sorted by element sum, then colex).
#[derive(Debug)]
pub struct MajorizationPoset {
    m: u32,
    kind: BlockKind,
    blocks: Vec<Block>,
    lower: Vec<Vec<usize>>,
}

impl MajorizationPoset {
    pub fn new(m: u32, kind: BlockKind, bound: u32) -> Self {
        let mut blocks = Vec::new();
        let mut current = Vec::with_capacity(m as usize);
        all_blocks(m as usize, 1, bound, kind, &mut current, &mut blocks);
        blocks.sort_by(|a, b| {
            let sa: u32 = a.elements.iter().sum();
            let sb: u32 = b.elements.iter().sum();
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        let index: HashMap<&Block, usize> = blocks.iter().enumerate().map(|(i, b)| (b, i)).collect();
        let lower = blocks
            .iter()
            .map(|b| b.lower_covers().iter().map(|c| index[c]).collect())
            .collect();
        MajorizationPoset {
            m,
            kind,
            blocks,
            lower,
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }
}

fn all_blocks(
    remaining: usize,
    min: u32,
    bound: u32,
    kind: BlockKind,
    current: &mut Vec<u32>,
    out: &mut Vec<Block>,
) {
    if remaining == 0 {
        out.push(Block {
            elements: current.clone(),
            kind,
        });
        return;
    }
    for x in min..=bound {
        current.push(x);
        let next = if kind == BlockKind::Set { x + 1 } else { x };
        all_blocks(remaining - 1, next, bound, kind, current, out);
        current.pop();
    }
}

/// Iterator over all closed families of shape `(m^n)`, each exactly once.
///
/// Every nonempty order ideal has a unique parent: the ideal obtained by
/// removing its element of largest index in the linear extension. Children
/// are generated by adding addable elements beyond the current largest
/// index, so no duplicate check is required.
pub struct ClosedFamilies {
    poset: Arc<MajorizationPoset>,
    target: usize,
    ideal: Vec<usize>,
    member: Vec<bool>,
    cursor: usize,
    finished: bool,
}

impl ClosedFamilies {
    pub fn new(m: u32, n: u32, kind: BlockKind) -> Self {
        let poset = Arc::new(MajorizationPoset::new(m, kind, ground_bound(m, n, kind)));
        Self::over(poset, n as usize)
    }

    pub fn over(poset: Arc<MajorizationPoset>, target: usize) -> Self {
        let len = poset.len();
        ClosedFamilies {
            poset,
            target,
            ideal: Vec::with_capacity(target),
            member: vec![false; len],
            cursor: 0,
            finished: false,
        }
    }

    fn current_family(&self) -> Family {
        let mut blocks: Vec<Block> = self.ideal.iter().map(|&i| self.poset.blocks[i].clone()).collect();
        blocks.sort();
        Family {
            m: self.poset.m,
            kind: self.poset.kind,
            blocks,
        }
    }
}

impl Iterator for ClosedFamilies {
    type Item = Family;

    fn next(&mut self) -> Option<Family> {
        if self.finished {
            return None;
        }
        if self.target == 0 {
            self.finished = true;
            return Some(Family::empty(self.poset.m, self.poset.kind));
        }
        let len = self.poset.len();
        loop {
            let found = (self.cursor..len).find(|&c| self.poset.lower[c].iter().all(|&l| self.member[l]));
            match found {
                Some(c) => {
                    self.ideal.push(c);
                    self.member[c] = true;
                    self.cursor = c + 1;
                    if self.ideal.len() == self.target {
                        let family = self.current_family();
                        self.ideal.pop();
                        self.member[c] = false;
                        return Some(family);
                    }
                }
                None => match self.ideal.pop() {
                    Some(c) => {
                        self.member[c] = false;
                        self.cursor = c + 1;
                    }
                    None => {
                        self.finished = true;
                        return None;
                    }
                },
            }
        }
    }
}

pub fn enumerate_closed_families(m: u32, n: u32, kind: BlockKind) -> ClosedFamilies {
    ClosedFamilies::new(m, n, kind)
}

/// A minimal type together with the least closed tuple achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedTuple {
    pub label: Partition,
    pub witness: FamilyTuple,
}

/// Dominance-minimal types of closed tuples whose components have the given
/// block counts, each with its lexicographically least witness tuple.
///
/// Closing a tuple never raises its type, so these are also the minimal types
/// over all tuples of these shapes. Output is in descending lex order of type.
pub fn enumerate_minimal_tuple_types(m: u32, shapes: &[usize], kind: BlockKind) -> Result<Vec<TypedTuple>> {
    if m == 0 {
        return Err(Error::InvalidArgument("block size must be positive".into()));
    }
    if shapes.is_empty() {
        return Err(Error::InvalidArgument("at least one shape is required".into()));
    }
    // Per distinct block count: dominance-maximal occurrence vectors of closed
    // families with their least family. A component with a non-maximal vector
    // can always be swapped for one that strictly lowers the tuple type.
    let mut options: BTreeMap<usize, Vec<(OccurrenceVector, Family)>> = BTreeMap::new();
    for &n in shapes {
        if options.contains_key(&n) {
            continue;
        }
        let mut best: HashMap<OccurrenceVector, Family> = HashMap::new();
        for family in ClosedFamilies::new(m, n as u32, kind) {
            let occ = family.occurrences();
            match best.get(&occ) {
                Some(existing) if *existing <= family => {}
                _ => {
                    best.insert(occ, family);
                }
            }
        }
        let count_shapes: Vec<Partition> = best
            .keys()
            .map(|o| Partition::from_sorted(o.counts().to_vec()))
            .collect();
        let keep = dominance_maximal_elements(&count_shapes)?;
        let mut kept: Vec<(OccurrenceVector, Family)> = best
            .into_iter()
            .filter(|(o, _)| keep.iter().any(|k| k.parts() == o.counts()))
            .collect();
        kept.sort();
        options.insert(n, kept);
    }

    let mut states: HashMap<OccurrenceVector, Vec<Family>> = HashMap::new();
    states.insert(OccurrenceVector::default(), Vec::new());
    for &n in shapes {
        let mut next: HashMap<OccurrenceVector, Vec<Family>> = HashMap::new();
        for (occ, prefix) in &states {
            for (add, family) in &options[&n] {
                let sum = occ.add(add);
                let mut candidate = prefix.clone();
                candidate.push(family.clone());
                match next.get(&sum) {
                    Some(existing) if *existing <= candidate => {}
                    _ => {
                        next.insert(sum, candidate);
                    }
                }
            }
        }
        states = next;
    }

    let mut typed: Vec<(Partition, Vec<Family>)> = states
        .into_iter()
        .map(|(occ, fams)| {
            let label = occ
                .to_type()
                .ok_or_else(|| Error::Internal(format!("closed tuple {fams:?} has no type")))?;
            Ok((label, fams))
        })
        .collect::<Result<_>>()?;
    let labels: Vec<Partition> = typed.iter().map(|(l, _)| l.clone()).collect();
    let minimal = dominance_minimal_elements(&labels)?;
    typed.retain(|(l, _)| minimal.contains(l));
    typed.sort_by(|a, b| b.0.cmp(&a.0));
    typed
        .into_iter()
        .map(|(label, fams)| {
            Ok(TypedTuple {
                label,
                witness: FamilyTuple::new(fams)?,
            })
        })
        .collect()
}

/// Whether the tuple's type is dominance-minimal among types of tuples with
/// the same component shapes.
pub fn is_minimal_tuple(tuple: &FamilyTuple) -> Result<bool> {
    let label = tuple.tuple_type().ok_or(Error::UndefinedType)?;
    let shapes: Vec<usize> = tuple.shapes().into_iter().filter(|&n| n > 0).collect();
    if shapes.is_empty() {
        return Ok(true);
    }
    let minimal = enumerate_minimal_tuple_types(tuple.m(), &shapes, tuple.kind())?;
    Ok(minimal.iter().any(|t| t.label == label))
}

/// The first `n` blocks in colex order.
pub fn colex_initial_segment(m: u32, n: u32, kind: BlockKind) -> Family {
    let mut blocks = Vec::with_capacity(n as usize);
    // Multisets a_1 ≤ … ≤ a_m correspond to sets {a_r + r - 1}; the
    // correspondence preserves colex order.
    let mut set: Vec<u32> = (1..=m).collect();
    for _ in 0..n {
        let elements = match kind {
            BlockKind::Set => set.clone(),
            BlockKind::Multiset => set.iter().enumerate().map(|(r, &x)| x - r as u32).collect(),
        };
        blocks.push(Block { elements, kind });
        colex_successor(&mut set);
    }
    Family { m, kind, blocks }
}

/// Advances an `m`-subset (sorted) to the next subset in colex order.
fn colex_successor(set: &mut [u32]) {
    let m = set.len();
    // smallest r in the set with r + 1 absent
    let j = (0..m)
        .find(|&j| j + 1 == m || set[j + 1] != set[j] + 1)
        .expect("nonempty set");
    set[j] += 1;
    for (i, x) in set.iter_mut().take(j).enumerate() {
        *x = i as u32 + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[u32]) -> Block {
        Block::new(e.to_vec(), BlockKind::Set).unwrap()
    }

    fn mset(e: &[u32]) -> Block {
        Block::new(e.to_vec(), BlockKind::Multiset).unwrap()
    }

    fn fam(kind: BlockKind, lists: &[&[u32]]) -> Family {
        let m = lists.first().map_or(2, |l| l.len() as u32);
        Family::from_lists(m, kind, lists.iter().map(|l| l.to_vec()).collect()).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn block_validation() {
        assert!(Block::new(vec![], BlockKind::Set).is_err());
        assert!(Block::new(vec![1, 1], BlockKind::Set).is_err());
        assert!(Block::new(vec![0, 1], BlockKind::Multiset).is_err());
        assert_eq!(set(&[3, 1]).elements(), &[1, 3]);
        assert!(Family::from_lists(2, BlockKind::Set, vec![vec![1, 2], vec![2, 1]]).is_err());
        assert!(Family::from_lists(2, BlockKind::Set, vec![vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn majorization() {
        assert!(majorizes(&set(&[1, 3]), &set(&[2, 4])).unwrap());
        assert!(!majorizes(&set(&[2, 3]), &set(&[1, 5])).unwrap());
        assert!(!majorizes(&set(&[1, 5]), &set(&[2, 3])).unwrap());
        assert!(majorizes(&mset(&[1, 1]), &mset(&[1, 1])).unwrap());
        assert!(majorizes(&set(&[1, 2]), &set(&[1, 2, 3])).is_err());
        assert!(majorizes(&set(&[1, 2]), &mset(&[1, 2])).is_err());
    }

    #[test]
    fn colex_block_order() {
        let mut blocks = vec![set(&[1, 4]), set(&[2, 3]), set(&[1, 2]), set(&[1, 3])];
        blocks.sort();
        assert_eq!(
            blocks,
            vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3]), set(&[1, 4])]
        );
    }

    #[test]
    fn closedness() {
        assert!(fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4]]).is_closed());
        assert!(!fam(BlockKind::Set, &[&[2, 4]]).is_closed());
        let down = Family::down_set(&set(&[2, 4]));
        assert_eq!(
            down,
            fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        assert!(down.is_closed());
        assert!(Family::empty(2, BlockKind::Set).is_closed());
    }

    #[test]
    fn closure_examples() {
        let f = fam(BlockKind::Set, &[&[2, 4]]);
        assert_eq!(f.closure(), fam(BlockKind::Set, &[&[1, 2]]));
        let closed = fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(closed.closure(), closed);
        let mf = fam(BlockKind::Multiset, &[&[1, 1], &[2, 2]]);
        assert_eq!(mf.closure(), fam(BlockKind::Multiset, &[&[1, 1], &[1, 2]]));
    }

    #[test]
    fn types() {
        let t = FamilyTuple::new(vec![
            fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4]]),
            fam(BlockKind::Set, &[&[1, 2]]),
        ])
        .unwrap();
        assert_eq!(t.tuple_type(), Some(p("4,2,1,1")));
        let t = FamilyTuple::new(vec![
            fam(BlockKind::Multiset, &[&[1, 1], &[1, 2], &[1, 3]]),
            fam(BlockKind::Multiset, &[&[1, 1]]),
        ])
        .unwrap();
        assert_eq!(t.tuple_type(), Some(p("3,1,1,1,1,1")));
        let t = FamilyTuple::new(vec![fam(BlockKind::Set, &[&[2, 3]])]).unwrap();
        assert_eq!(t.tuple_type(), None);
    }

    #[test]
    fn tuples_must_agree() {
        assert!(FamilyTuple::new(vec![]).is_err());
        let a = fam(BlockKind::Set, &[&[1, 2]]);
        let b = fam(BlockKind::Multiset, &[&[1, 1]]);
        assert!(FamilyTuple::new(vec![a, b]).is_err());
    }

    #[test]
    fn closed_family_enumeration() {
        let all: Vec<Family> = enumerate_closed_families(2, 2, BlockKind::Set).collect();
        assert_eq!(all, vec![fam(BlockKind::Set, &[&[1, 2], &[1, 3]])]);
        let empty: Vec<Family> = enumerate_closed_families(3, 0, BlockKind::Multiset).collect();
        assert_eq!(empty, vec![Family::empty(3, BlockKind::Multiset)]);
        let four: Vec<Family> = enumerate_closed_families(2, 4, BlockKind::Set).collect();
        assert!(four.contains(&fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]])));
    }

    #[test]
    fn minimal_types_example() {
        let got = enumerate_minimal_tuple_types(2, &[3, 1], BlockKind::Set).unwrap();
        let labels: Vec<Partition> = got.iter().map(|t| t.label.clone()).collect();
        assert_eq!(labels, vec![p("4,2,1,1"), p("3,3,2")]);
        let got = enumerate_minimal_tuple_types(2, &[3, 1], BlockKind::Multiset).unwrap();
        let labels: Vec<Partition> = got.iter().map(|t| t.label.clone()).collect();
        assert_eq!(labels, vec![p("3,1,1,1,1,1"), p("2,2,2,1,1")]);
        for m in 1..=4 {
            let got = enumerate_minimal_tuple_types(m, &[1], BlockKind::Set).unwrap();
            assert_eq!(got.len(), 1);
            assert_eq!(got[0].label, Partition::row(m));
            assert_eq!(
                got[0].witness.families()[0].to_lists(),
                vec![(1..=m).collect::<Vec<_>>()]
            );
        }
    }

    #[test]
    fn minimality_check() {
        let t = FamilyTuple::new(vec![
            fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4]]),
            fam(BlockKind::Set, &[&[1, 2]]),
        ])
        .unwrap();
        assert!(is_minimal_tuple(&t).unwrap());
        let untyped = FamilyTuple::new(vec![fam(BlockKind::Set, &[&[2, 3]])]).unwrap();
        assert!(matches!(is_minimal_tuple(&untyped), Err(Error::UndefinedType)));
    }

    #[test]
    fn colex_segments() {
        assert_eq!(
            colex_initial_segment(2, 4, BlockKind::Set),
            fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[2, 3], &[1, 4]])
        );
        assert_eq!(
            colex_initial_segment(3, 4, BlockKind::Set),
            fam(BlockKind::Set, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        );
        assert_eq!(
            colex_initial_segment(2, 1, BlockKind::Multiset),
            fam(BlockKind::Multiset, &[&[1, 1]])
        );
        assert_eq!(
            colex_initial_segment(2, 3, BlockKind::Multiset),
            fam(BlockKind::Multiset, &[&[1, 1], &[1, 2], &[2, 2]])
        );
        assert_eq!(
            colex_initial_segment(2, 4, BlockKind::Set).family_type(),
            Some(p("4,3,1"))
        );
    }

    #[test]
    fn json_schema() {
        let t = FamilyTuple::new(vec![
            fam(BlockKind::Set, &[&[1, 2], &[1, 3], &[1, 4]]),
            fam(BlockKind::Set, &[&[1, 2]]),
        ])
        .unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"m":2,"kind":"set","families":[[[1,2],[1,3],[1,4]],[[1,2]]]}"#
        );
        let back: FamilyTuple = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<FamilyTuple>(r#"{"m":2,"kind":"set","families":[[[1,1]]]}"#).is_err());
    }
}
