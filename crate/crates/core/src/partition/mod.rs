//! Colored set partitions of one or two rows of points.
//!
//! A partition in `P(k, l)` has `k` upper and `l` lower legs. One-row
//! partitions keep all their legs on the lower row with an empty upper row.

mod enumerate;
mod fatten;
mod mobius;

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use enumerate::{count_by_blocks, enumerate, enumerate_two_row, ClassFilter, Generator};
pub use fatten::{fatten, shrink};
pub use mobius::{mobius, mobius_recurrence, PosetMobius};

/// Documented practical bound on the number of enumerated points.
pub const MAX_POINTS: usize = 16;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn invert(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::White => 'o',
            Color::Black => 'b',
        }
    }

    /// `+1` for white, `-1` for black.
    pub fn weight(self) -> i64 {
        match self {
            Color::White => 1,
            Color::Black => -1,
        }
    }
}

/// Word over the two colors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ColoredWord(pub Vec<Color>);

impl ColoredWord {
    /// The uncolored word of length `k`, all letters white.
    pub fn plain(k: usize) -> Self {
        ColoredWord(vec![Color::White; k])
    }

    pub fn empty() -> Self {
        ColoredWord(Vec::new())
    }

    /// Parse `o`/`w`/`∘` as white and `b`/`•` as black; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for ch in s.chars() {
            match ch {
                'o' | 'w' | '∘' | '○' => out.push(Color::White),
                'b' | '•' | '●' => out.push(Color::Black),
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("unknown color letter {c:?}"))),
            }
        }
        Ok(ColoredWord(out))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn invert(&self) -> Self {
        ColoredWord(self.0.iter().map(|c| c.invert()).collect())
    }

    pub fn concat(&self, other: &ColoredWord) -> Self {
        ColoredWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn is_plain(&self) -> bool {
        self.0.iter().all(|&c| c == Color::White)
    }
}

impl fmt::Display for ColoredWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Row {
    Upper,
    Lower,
}

/// A leg addressed by row and 0-based position.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Leg {
    pub row: Row,
    pub pos: usize,
}

impl Leg {
    pub fn upper(pos: usize) -> Self {
        Leg { row: Row::Upper, pos }
    }

    pub fn lower(pos: usize) -> Self {
        Leg { row: Row::Lower, pos }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let (row, rest) = match s.chars().next() {
            Some('u') => (Row::Upper, &s[1..]),
            Some('l') => (Row::Lower, &s[1..]),
            _ => return Err(Error::Parse(format!("bad leg {s:?}"))),
        };
        let pos = rest.parse().map_err(|_| Error::Parse(format!("bad leg {s:?}")))?;
        Ok(Leg { row, pos })
    }
}

impl fmt::Display for Leg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Upper => write!(f, "u{}", self.pos),
            Row::Lower => write!(f, "l{}", self.pos),
        }
    }
}

/// Two-row colored partition in canonical form.
///
/// Legs are numbered globally, upper row first. `labels[leg]` is the block
/// index, relabelled in order of first appearance, so blocks come sorted by
/// least leg and equal partitions have equal labels. Partitions are ordered
/// by words, then lexicographically by their lists of sorted blocks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    upper: ColoredWord,
    lower: ColoredWord,
    labels: Vec<u8>,
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.upper, &self.lower)
            .cmp(&(&other.upper, &other.lower))
            .then_with(|| self.block_indices().cmp(&other.block_indices()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn canonical_labels(raw: &[usize]) -> Vec<u8> {
    let mut map: Vec<(usize, u8)> = Vec::new();
    raw.iter()
        .map(|&r| match map.iter().find(|(k, _)| *k == r) {
            Some(&(_, v)) => v,
            None => {
                let v = map.len() as u8;
                map.push((r, v));
                v
            }
        })
        .collect()
}

impl Partition {
    /// Build from per-leg block tags in global order (upper legs, then lower).
    pub fn from_labels(upper: ColoredWord, lower: ColoredWord, raw: &[usize]) -> Result<Self> {
        if raw.len() != upper.len() + lower.len() {
            return Err(Error::Shape(format!(
                "{} labels for {} legs",
                raw.len(),
                upper.len() + lower.len()
            )));
        }
        Ok(Partition { upper, lower, labels: canonical_labels(raw) })
    }

    /// One-row partition on `word` from block tags.
    pub fn one_row(word: ColoredWord, raw: &[usize]) -> Result<Self> {
        Partition::from_labels(ColoredWord::empty(), word, raw)
    }

    /// Uncolored one-row partition from 1-based blocks, e.g. `[[1, 3], [2]]`.
    pub fn from_blocks_1based(k: usize, blocks: &[&[usize]]) -> Result<Self> {
        let mut raw = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            for &p in block.iter() {
                if p == 0 || p > k || raw[p - 1] != usize::MAX {
                    return Err(Error::Shape(format!("point {p} invalid or repeated")));
                }
                raw[p - 1] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::Shape("blocks do not cover all points".into()));
        }
        Partition::one_row(ColoredWord::plain(k), &raw)
    }

    pub fn from_blocks(upper: ColoredWord, lower: ColoredWord, blocks: &[Vec<Leg>]) -> Result<Self> {
        let k = upper.len();
        let total = k + lower.len();
        let mut raw = vec![usize::MAX; total];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Shape("empty block".into()));
            }
            for leg in block {
                let idx = match leg.row {
                    Row::Upper if leg.pos < k => leg.pos,
                    Row::Lower if leg.pos < lower.len() => k + leg.pos,
                    _ => return Err(Error::Shape(format!("leg {leg} out of range"))),
                };
                if raw[idx] != usize::MAX {
                    return Err(Error::Shape(format!("leg {leg} repeated")));
                }
                raw[idx] = b;
            }
        }
        if raw.contains(&usize::MAX) {
            return Err(Error::Shape("blocks do not cover all legs".into()));
        }
        Partition::from_labels(upper, lower, &raw)
    }

    pub fn empty() -> Self {
        Partition { upper: ColoredWord::empty(), lower: ColoredWord::empty(), labels: Vec::new() }
    }

    pub fn upper(&self) -> &ColoredWord {
        &self.upper
    }

    pub fn lower(&self) -> &ColoredWord {
        &self.lower
    }

    pub fn k(&self) -> usize {
        self.upper.len()
    }

    pub fn l(&self) -> usize {
        self.lower.len()
    }

    pub fn num_legs(&self) -> usize {
        self.labels.len()
    }

    pub fn is_one_row(&self) -> bool {
        self.upper.is_empty()
    }

    /// Block tags in global leg order.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    pub fn leg_at(&self, idx: usize) -> Leg {
        if idx < self.k() {
            Leg::upper(idx)
        } else {
            Leg::lower(idx - self.k())
        }
    }

    pub fn index_of(&self, leg: Leg) -> usize {
        match leg.row {
            Row::Upper => leg.pos,
            Row::Lower => self.k() + leg.pos,
        }
    }

    pub fn color_of(&self, leg: Leg) -> Color {
        match leg.row {
            Row::Upper => self.upper.0[leg.pos],
            Row::Lower => self.lower.0[leg.pos],
        }
    }

    pub fn blocks(&self) -> Vec<Vec<Leg>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(self.leg_at(i));
        }
        out
    }

    /// Blocks as sorted lists of global leg indices.
    pub fn block_indices(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    /// Block sizes in block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_blocks()];
        for &b in &self.labels {
            out[b as usize] += 1;
        }
        out
    }

    /// Lower-row labels of a one-row partition.
    pub fn points(&self) -> &[u8] {
        &self.labels[self.k()..]
    }

    fn same_points(&self, other: &Partition) -> Result<()> {
        if self.k() != other.k() || self.l() != other.l() {
            return Err(Error::Shape(format!(
                "P({},{}) against P({},{})",
                self.k(),
                self.l(),
                other.k(),
                other.l()
            )));
        }
        Ok(())
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        self.same_points(other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Partition) -> bool {
        let mut image = [u8::MAX; 256];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            let slot = &mut image[a as usize];
            if *slot == u8::MAX {
                *slot = b;
            } else if *slot != b {
                return false;
            }
        }
        true
    }

    /// Least upper bound: blocks of the union relation closed transitively.
    pub fn join(&self, other: &Partition) -> Result<Partition> {
        self.same_points(other)?;
        let n = self.labels.len();
        let mut uf = UnionFind::new(n);
        for lab in [&self.labels, &other.labels] {
            let mut first = vec![usize::MAX; n];
            for (i, &b) in lab.iter().enumerate() {
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    uf.union(*f, i);
                }
            }
        }
        let raw: Vec<usize> = (0..n).map(|i| uf.find(i)).collect();
        Partition::from_labels(self.upper.clone(), self.lower.clone(), &raw)
    }

    /// Number of blocks of the join, without building it.
    pub fn join_blocks(&self, other: &Partition) -> usize {
        let n = self.labels.len();
        let mut uf = UnionFind::new(n);
        for lab in [&self.labels, &other.labels] {
            let mut first = [usize::MAX; 256];
            for (i, &b) in lab.iter().enumerate() {
                let f = &mut first[b as usize];
                if *f == usize::MAX {
                    *f = i;
                } else {
                    uf.union(*f, i);
                }
            }
        }
        uf.count()
    }

    /// Labels read around the boundary: lower row left to right, then upper
    /// row right to left. Noncrossing is a property of this cyclic order.
    pub fn rotated_labels(&self) -> Vec<u8> {
        let k = self.k();
        let mut out: Vec<u8> = self.labels[k..].to_vec();
        out.extend(self.labels[..k].iter().rev());
        out
    }

    /// Colors in the rotated order, upper colors inverted.
    pub fn rotated_colors(&self) -> Vec<Color> {
        let mut out = self.lower.0.clone();
        out.extend(self.upper.0.iter().rev().map(|c| c.invert()));
        out
    }

    /// The one-row partition obtained by rotating the upper legs down.
    pub fn rotate_to_one_row(&self) -> Partition {
        let raw: Vec<usize> = self.rotated_labels().iter().map(|&b| b as usize).collect();
        Partition {
            upper: ColoredWord::empty(),
            lower: ColoredWord(self.rotated_colors()),
            labels: canonical_labels(&raw),
        }
    }

    pub fn is_noncrossing(&self) -> bool {
        labels_noncrossing(&self.rotated_labels())
    }

    pub fn has_even_blocks(&self) -> bool {
        self.block_sizes().iter().all(|s| s % 2 == 0)
    }

    pub fn is_pairing(&self) -> bool {
        self.block_sizes().iter().all(|&s| s == 2)
    }

    pub fn max_block(&self) -> usize {
        self.block_sizes().into_iter().max().unwrap_or(0)
    }

    /// Drop colors, keeping the block structure.
    pub fn uncolored(&self) -> Partition {
        Partition {
            upper: ColoredWord::plain(self.k()),
            lower: ColoredWord::plain(self.l()),
            labels: self.labels.clone(),
        }
    }

    pub fn with_colors(&self, upper: ColoredWord, lower: ColoredWord) -> Result<Partition> {
        if upper.len() != self.k() || lower.len() != self.l() {
            return Err(Error::Shape("color word lengths do not match".into()));
        }
        Ok(Partition { upper, lower, labels: self.labels.clone() })
    }

    pub fn to_json(&self) -> Value {
        let blocks: Vec<Value> = self
            .blocks()
            .iter()
            .map(|b| Value::Array(b.iter().map(|l| Value::String(l.to_string())).collect()))
            .collect();
        json!({
            "upper": self.upper.to_string(),
            "lower": self.lower.to_string(),
            "blocks": blocks,
        })
    }

    pub fn from_json(v: &Value) -> Result<Partition> {
        let word = |key: &str| -> Result<ColoredWord> {
            let s = v.get(key).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("missing {key}")))?;
            ColoredWord::parse(s)
        };
        let upper = word("upper")?;
        let lower = word("lower")?;
        let blocks = v
            .get("blocks")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing blocks".into()))?
            .iter()
            .map(|b| {
                b.as_array()
                    .ok_or_else(|| Error::Parse("block is not an array".into()))?
                    .iter()
                    .map(|l| Leg::parse(l.as_str().unwrap_or("")))
                    .collect::<Result<Vec<Leg>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(upper, lower, &blocks)
    }
}

/// Stack test on a linear label sequence.
pub(crate) fn labels_noncrossing(labels: &[u8]) -> bool {
    let mut last = [usize::MAX; 256];
    for (i, &b) in labels.iter().enumerate() {
        last[b as usize] = i;
    }
    let mut seen = [false; 256];
    let mut stack: Vec<u8> = Vec::new();
    for (i, &b) in labels.iter().enumerate() {
        if !seen[b as usize] {
            seen[b as usize] = true;
            stack.push(b);
        } else if stack.last() != Some(&b) {
            return false;
        }
        if last[b as usize] == i {
            stack.pop();
        }
    }
    true
}

/// Partition of `1..=n` whose blocks collect equal indices.
pub fn kernel(indices: &[usize]) -> Result<Partition> {
    if indices.is_empty() {
        return Err(Error::Domain("kernel of an empty index tuple".into()));
    }
    Partition::one_row(ColoredWord::plain(indices.len()), indices)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks = self.blocks();
        if blocks.is_empty() {
            return write!(f, "∅");
        }
        for b in blocks {
            let legs: Vec<String> = if self.is_one_row() {
                b.iter().map(|l| (l.pos + 1).to_string()).collect()
            } else {
                b.iter().map(|l| l.to_string()).collect()
            };
            write!(f, "{{{}}}", legs.join(","))?;
        }
        Ok(())
    }
}

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}
