//! Named categories of partitions and the categorical operations.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{
    enumerate, enumerate_two_row, ClassFilter, Color, ColoredWord, Partition, UnionFind, MAX_POINTS,
};

/// Parameter `s` of the `P^s` and `NC^s` families.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum SParam {
    Finite(u32),
    Infinite,
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum CategoryId {
    P,
    PEven,
    CPEven,
    Ps(SParam),
    P2,
    CP2,
    P12,
    CP12,
    NC,
    NCEven,
    CNCEven,
    NCs(SParam),
    NC2,
    CNC2,
    NC12,
}

impl CategoryId {
    pub const ALL_FIXED: [CategoryId; 13] = [
        CategoryId::P,
        CategoryId::PEven,
        CategoryId::CPEven,
        CategoryId::P2,
        CategoryId::CP2,
        CategoryId::P12,
        CategoryId::CP12,
        CategoryId::NC,
        CategoryId::NCEven,
        CategoryId::CNCEven,
        CategoryId::NC2,
        CategoryId::CNC2,
        CategoryId::NC12,
    ];

    pub fn is_noncrossing(self) -> bool {
        use CategoryId::*;
        matches!(self, NC | NCEven | CNCEven | NCs(_) | NC2 | CNC2 | NC12)
    }

    /// Whether membership depends on the colors of the legs.
    pub fn is_colored(self) -> bool {
        use CategoryId::*;
        match self {
            CPEven | CP2 | CP12 | CNCEven | CNC2 => true,
            Ps(s) | NCs(s) => !matches!(s, SParam::Finite(1) | SParam::Finite(2)),
            _ => false,
        }
    }

    /// Structural generator filter whose members include every category member.
    pub fn structural_filter(self) -> ClassFilter {
        use CategoryId::*;
        let s_even = |s: SParam| matches!(s, SParam::Infinite) || matches!(s, SParam::Finite(v) if v % 2 == 0);
        match self {
            P => ClassFilter::All,
            PEven | CPEven => ClassFilter::EvenBlocks,
            Ps(s) if s_even(s) => ClassFilter::EvenBlocks,
            Ps(_) => ClassFilter::All,
            P2 | CP2 => ClassFilter::Pairings,
            P12 | CP12 => ClassFilter::SingletonsAndPairings,
            NC => ClassFilter::Noncrossing,
            NCEven | CNCEven => ClassFilter::NoncrossingEven,
            NCs(s) if s_even(s) => ClassFilter::NoncrossingEven,
            NCs(_) => ClassFilter::Noncrossing,
            NC2 | CNC2 => ClassFilter::NoncrossingPairings,
            NC12 => ClassFilter::NoncrossingSingletonsAndPairings,
        }
    }

    /// Membership. Two-row partitions are rotated to one row first, with the
    /// colors of the upper legs inverted.
    pub fn contains(self, pi: &Partition) -> bool {
        let one = pi.rotate_to_one_row();
        if !self.structural_filter().accepts(&one) {
            return false;
        }
        let colors = &one.lower().0;
        let mut weight = vec![0i64; one.num_blocks()];
        for (&b, c) in one.labels().iter().zip(colors) {
            weight[b as usize] += c.weight();
        }
        self.accepts_block_data(&one.block_sizes(), &weight)
    }

    /// Color condition on a structurally admissible one-row partition, given
    /// the size and color weight (whites minus blacks) of each block.
    pub fn accepts_block_data(self, sizes: &[usize], weight: &[i64]) -> bool {
        use CategoryId::*;
        let balanced = || weight.iter().all(|&w| w == 0);
        let pairs_balanced = || weight.iter().zip(sizes).all(|(&w, &s)| s != 2 || w == 0);
        let modular = |s: SParam| match s {
            SParam::Infinite => balanced(),
            SParam::Finite(v) => weight.iter().all(|w| w.rem_euclid(v as i64) == 0),
        };
        match self {
            P | PEven | P2 | P12 | NC | NCEven | NC2 | NC12 => true,
            CPEven | CNCEven | CP2 | CNC2 => balanced(),
            CP12 => pairs_balanced(),
            Ps(s) | NCs(s) => modular(s),
        }
    }

    /// Number of one-row members on `word` with each number of blocks,
    /// streamed without materializing the partitions.
    pub fn block_counts(self, word: &ColoredWord) -> Result<Vec<u64>> {
        let n = word.len();
        if n > MAX_POINTS {
            return Err(Error::Capacity(format!("{n} points exceeds the enumeration bound {MAX_POINTS}")));
        }
        let mut counts = vec![0u64; n + 1];
        let (mut sizes, mut weight) = (Vec::with_capacity(n), Vec::with_capacity(n));
        self.structural_filter().generator().for_each(n, |labels| {
            sizes.clear();
            weight.clear();
            for (&b, c) in labels.iter().zip(&word.0) {
                let b = b as usize;
                if b == sizes.len() {
                    sizes.push(0);
                    weight.push(0);
                }
                sizes[b] += 1;
                weight[b] += c.weight();
            }
            if self.accepts_block_data(&sizes, &weight) {
                counts[sizes.len()] += 1;
            }
        });
        Ok(counts)
    }

    /// One-row members on `word`, in canonical order.
    pub fn members(self, word: &ColoredWord) -> Result<Vec<Partition>> {
        Ok(enumerate(word, self.structural_filter())?.into_iter().filter(|p| self.contains(p)).collect())
    }

    /// Two-row members on the given words.
    pub fn members_two_row(self, upper: &ColoredWord, lower: &ColoredWord) -> Result<Vec<Partition>> {
        Ok(enumerate_two_row(upper, lower, self.structural_filter())?
            .into_iter()
            .filter(|p| self.contains(p))
            .collect())
    }

    pub fn token(self) -> String {
        use CategoryId::*;
        let s = |v: SParam| match v {
            SParam::Finite(n) => n.to_string(),
            SParam::Infinite => "inf".to_string(),
        };
        match self {
            P => "p".into(),
            PEven => "p_even".into(),
            CPEven => "cp_even".into(),
            Ps(v) => format!("p_s:{}", s(v)),
            P2 => "p2".into(),
            CP2 => "cp2".into(),
            P12 => "p12".into(),
            CP12 => "cp12".into(),
            NC => "nc".into(),
            NCEven => "nc_even".into(),
            CNCEven => "cnc_even".into(),
            NCs(v) => format!("nc_s:{}", s(v)),
            NC2 => "nc2".into(),
            CNC2 => "cnc2".into(),
            NC12 => "nc12".into(),
        }
    }
}

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

impl FromStr for CategoryId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CategoryId::*;
        let t = s.trim().to_ascii_lowercase();
        let param = |rest: &str| -> Result<SParam> {
            if rest == "inf" || rest == "infinity" {
                return Ok(SParam::Infinite);
            }
            match rest.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(SParam::Finite(v)),
                _ => Err(Error::Parse(format!("bad category parameter {rest:?}"))),
            }
        };
        if let Some(rest) = t.strip_prefix("p_s:") {
            return Ok(Ps(param(rest)?));
        }
        if let Some(rest) = t.strip_prefix("nc_s:") {
            return Ok(NCs(param(rest)?));
        }
        Ok(match t.as_str() {
            "p" => P,
            "p_even" => PEven,
            "cp_even" => CPEven,
            "p2" => P2,
            "cp2" => CP2,
            "p12" => P12,
            "cp12" => CP12,
            "nc" => NC,
            "nc_even" => NCEven,
            "cnc_even" => CNCEven,
            "nc2" => NC2,
            "cnc2" => CNC2,
            "nc12" => NC12,
            _ => return Err(Error::Parse(format!("unknown category {s:?}"))),
        })
    }
}

/// `[πσ]`: σ placed to the right of π on both rows.
pub fn horizontal_concat(pi: &Partition, sigma: &Partition) -> Partition {
    let (k1, l1) = (pi.k(), pi.l());
    let (k2, l2) = (sigma.k(), sigma.l());
    let off = pi.num_blocks();
    let mut raw = Vec::with_capacity(pi.num_legs() + sigma.num_legs());
    raw.extend(pi.labels()[..k1].iter().map(|&b| b as usize));
    raw.extend(sigma.labels()[..k2].iter().map(|&b| b as usize + off));
    raw.extend(pi.labels()[k1..].iter().map(|&b| b as usize));
    raw.extend(sigma.labels()[k2..].iter().map(|&b| b as usize + off));
    debug_assert_eq!(raw.len(), k1 + k2 + l1 + l2);
    Partition::from_labels(pi.upper().concat(sigma.upper()), pi.lower().concat(sigma.lower()), &raw)
        .expect("lengths agree")
}

/// Result of a vertical composition with the number of closed loops removed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    pub result: Partition,
    pub loops: usize,
}

/// `[^σ_π]`: σ on top of π, the lower row of σ glued to the upper row of π.
pub fn vertical_concat(pi: &Partition, sigma: &Partition) -> Result<Composition> {
    if sigma.lower() != pi.upper() {
        return Err(Error::Shape(format!(
            "middle rows differ: {} against {}",
            sigma.lower(),
            pi.upper()
        )));
    }
    let ks = sigma.k();
    let m = pi.k();
    let lp = pi.l();
    // nodes: sigma's legs, then pi's legs; sigma lower j == pi upper j
    let ns = sigma.num_legs();
    let mut uf = UnionFind::new(ns + pi.num_legs());
    for lab in [(0, sigma.labels()), (ns, pi.labels())] {
        let (base, labels) = lab;
        let mut first = [usize::MAX; 256];
        for (i, &b) in labels.iter().enumerate() {
            let f = &mut first[b as usize];
            if *f == usize::MAX {
                *f = base + i;
            } else {
                uf.union(*f, base + i);
            }
        }
    }
    for j in 0..m {
        uf.union(ks + j, ns + j);
    }
    let outer: Vec<usize> = (0..ks).chain((ns + m)..(ns + m + lp)).collect();
    let raw: Vec<usize> = outer.iter().map(|&x| uf.find(x)).collect();
    let mut roots: Vec<usize> = (ks..ks + m).map(|x| uf.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let loops = roots.iter().filter(|r| !raw.contains(r)).count();
    let result = Partition::from_labels(sigma.upper().clone(), pi.lower().clone(), &raw)?;
    Ok(Composition { result, loops })
}

/// Upside-down turning: rows swapped, colors inverted.
pub fn involute(pi: &Partition) -> Partition {
    let k = pi.k();
    let mut raw: Vec<usize> = pi.labels()[k..].iter().map(|&b| b as usize).collect();
    raw.extend(pi.labels()[..k].iter().map(|&b| b as usize));
    Partition::from_labels(pi.lower().invert(), pi.upper().invert(), &raw).expect("lengths agree")
}

/// The identity `|` on a single leg of the given color.
pub fn identity(c: Color) -> Partition {
    let w = ColoredWord(vec![c]);
    Partition::from_labels(w.clone(), w, &[0, 0]).expect("two legs")
}

/// The semicircle `⊓` on the word `∘•`.
pub fn semicircle() -> Partition {
    Partition::one_row(ColoredWord(vec![Color::White, Color::Black]), &[0, 0]).expect("two legs")
}

/// The basic crossing in `P(2, 2)`: upper legs `a b`, lower legs `b a`.
pub fn crossing() -> Partition {
    let w = ColoredWord::plain(2);
    Partition::from_labels(w.clone(), w, &[0, 1, 1, 0]).expect("four legs")
}

/// A class of partitions whose category axioms can be checked.
pub trait PartitionClass: Sync {
    fn contains(&self, pi: &Partition) -> bool;
    fn colored(&self) -> bool;
    fn noncrossing(&self) -> bool;
    fn candidates(&self) -> ClassFilter {
        ClassFilter::All
    }
}

impl PartitionClass for CategoryId {
    fn contains(&self, pi: &Partition) -> bool {
        CategoryId::contains(*self, pi)
    }
    fn colored(&self) -> bool {
        self.is_colored()
    }
    fn noncrossing(&self) -> bool {
        self.is_noncrossing()
    }
    fn candidates(&self) -> ClassFilter {
        self.structural_filter()
    }
}

/// A class given by an arbitrary predicate, for testing the checker itself.
pub struct PredicateClass<F> {
    pub predicate: F,
    pub colored: bool,
    pub noncrossing: bool,
}

impl<F: Fn(&Partition) -> bool + Sync> PartitionClass for PredicateClass<F> {
    fn contains(&self, pi: &Partition) -> bool {
        (self.predicate)(pi)
    }
    fn colored(&self) -> bool {
        self.colored
    }
    fn noncrossing(&self) -> bool {
        self.noncrossing
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub passed: bool,
    pub members: usize,
    pub checks: usize,
    pub failure: Option<String>,
}

fn all_words(n: usize, colored: bool) -> Vec<ColoredWord> {
    if !colored {
        return vec![ColoredWord::plain(n)];
    }
    (0..1usize << n)
        .map(|mask| {
            ColoredWord((0..n).map(|i| if mask >> i & 1 == 1 { Color::Black } else { Color::White }).collect())
        })
        .collect()
}

/// Exhaustive check of the category axioms on members with at most `k_max`
/// legs. Horizontal pairs are checked when their combined legs stay within
/// `k_max`; vertical pairs when each factor does.
pub fn verify_axioms(class: &dyn PartitionClass, k_max: usize) -> Result<AxiomReport> {
    if k_max > 6 {
        return Err(Error::Capacity(format!("axiom check limited to 6 legs, asked {k_max}")));
    }
    let colored = class.colored();
    let mut members: Vec<Partition> = Vec::new();
    for n in 0..=k_max {
        for k in 0..=n {
            for up in all_words(k, colored) {
                for low in all_words(n - k, colored) {
                    for p in enumerate_two_row(&up, &low, class.candidates())? {
                        if class.contains(&p) {
                            members.push(p);
                        }
                    }
                }
            }
        }
    }
    let fail = |checks: usize, msg: String| AxiomReport { passed: false, members: 0, checks, failure: Some(msg) };
    let mut checks = 0usize;

    let mut basics = vec![("identity", identity(Color::White)), ("semicircle", semicircle())];
    if colored {
        basics.push(("identity", identity(Color::Black)));
    }
    for (name, p) in &basics {
        checks += 1;
        if !class.contains(p) {
            return Ok(AxiomReport { members: members.len(), ..fail(checks, format!("{name} {p} missing")) });
        }
    }
    if !class.noncrossing() && k_max >= 4 {
        checks += 1;
        if !class.contains(&crossing()) {
            return Ok(AxiomReport { members: members.len(), ..fail(checks, "crossing missing".into()) });
        }
    }

    for p in &members {
        checks += 1;
        let inv = involute(p);
        if !class.contains(&inv) {
            return Ok(AxiomReport { members: members.len(), ..fail(checks, format!("involution of {p} gives {inv}")) });
        }
    }

    for a in &members {
        for b in &members {
            if a.num_legs() + b.num_legs() > k_max {
                continue;
            }
            checks += 1;
            let h = horizontal_concat(a, b);
            if !class.contains(&h) {
                return Ok(AxiomReport {
                    members: members.len(),
                    ..fail(checks, format!("horizontal [{a} {b}] = {h} missing"))
                });
            }
        }
    }

    let mut by_upper: HashMap<&ColoredWord, Vec<&Partition>> = HashMap::new();
    for p in &members {
        by_upper.entry(p.upper()).or_default().push(p);
    }
    for sigma in &members {
        let Some(below) = by_upper.get(sigma.lower()) else { continue };
        for pi in below {
            checks += 1;
            let c = vertical_concat(pi, sigma)?;
            if !class.contains(&c.result) {
                return Ok(AxiomReport {
                    members: members.len(),
                    ..fail(checks, format!("vertical [{sigma} over {pi}] = {} missing", c.result))
                });
            }
        }
    }
    Ok(AxiomReport { passed: true, members: members.len(), checks, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(k: usize, blocks: &[&[usize]]) -> Partition {
        Partition::from_blocks_1based(k, blocks).unwrap()
    }

    fn word(s: &str) -> ColoredWord {
        ColoredWord::parse(s).unwrap()
    }

    #[test]
    fn membership() {
        assert!(CategoryId::PEven.contains(&p(4, &[&[1, 2], &[3, 4]])));
        assert!(!CategoryId::PEven.contains(&p(4, &[&[1], &[2, 3, 4]])));
        let all = enumerate(&ColoredWord::plain(4), ClassFilter::All).unwrap();
        let s2 = CategoryId::Ps(SParam::Finite(2));
        assert_eq!(all.iter().filter(|q| s2.contains(q) == CategoryId::PEven.contains(q)).count(), 15);
    }

    #[test]
    fn colored_noncrossing_pairings() {
        let m = CategoryId::CNC2.members(&word("obob")).unwrap();
        assert_eq!(m, vec![
            p(4, &[&[1, 2], &[3, 4]]).with_colors(ColoredWord::empty(), word("obob")).unwrap(),
            p(4, &[&[1, 4], &[2, 3]]).with_colors(ColoredWord::empty(), word("obob")).unwrap(),
        ]);
        assert!(CategoryId::CNC2.members(&word("oobb")).unwrap().len() == 1);
    }

    #[test]
    fn horizontal() {
        let cap = p(2, &[&[1, 2]]);
        assert_eq!(horizontal_concat(&cap, &cap), p(4, &[&[1, 2], &[3, 4]]));
        assert_eq!(horizontal_concat(&cap, &Partition::empty()), cap);
        let bar = p(1, &[&[1]]);
        assert_eq!(horizontal_concat(&bar, &bar), p(2, &[&[1], &[2]]));
    }

    #[test]
    fn vertical() {
        let id = identity(Color::White);
        let cup = involute(&p(2, &[&[1, 2]]));
        assert_eq!(vertical_concat(&id, &id).unwrap(), Composition { result: id.clone(), loops: 0 });
        // the turned cap has upper word bb; a cap on bb placed over it closes one circle
        let cap = p(2, &[&[1, 2]]);
        let cap_bb = Partition::one_row(word("bb"), &[0, 0]).unwrap();
        let c = vertical_concat(&cup, &cap_bb).unwrap();
        assert_eq!((c.result, c.loops), (Partition::empty(), 1));
        let w = ColoredWord::plain(2);
        let e1 = Partition::from_labels(w.clone(), w, &[0, 0, 1, 1]).unwrap();
        let c = vertical_concat(&e1, &e1).unwrap();
        assert_eq!((c.result, c.loops), (e1, 1));
        assert!(vertical_concat(&cap, &cap).is_err());
    }

    #[test]
    fn involution() {
        let cap = p(2, &[&[1, 2]]);
        let cup = involute(&cap);
        assert_eq!((cup.k(), cup.l()), (2, 0));
        let w3 = ColoredWord::plain(3);
        let w2 = ColoredWord::plain(2);
        for q in enumerate_two_row(&w3, &w2, ClassFilter::All).unwrap() {
            assert_eq!(involute(&involute(&q)), q);
        }
        let ob = Partition::one_row(word("ob"), &[0, 1]).unwrap();
        assert_eq!(involute(&ob).upper(), &word("bo"));
    }

    #[test]
    fn tokens_roundtrip() {
        for c in CategoryId::ALL_FIXED {
            assert_eq!(c.token().parse::<CategoryId>().unwrap(), c);
        }
        assert_eq!("p_s:4".parse::<CategoryId>().unwrap(), CategoryId::Ps(SParam::Finite(4)));
        assert_eq!("nc_s:inf".parse::<CategoryId>().unwrap(), CategoryId::NCs(SParam::Infinite));
        assert!("q".parse::<CategoryId>().is_err());
    }

    #[test]
    fn axioms_small() {
        assert!(verify_axioms(&CategoryId::P2, 4).unwrap().passed);
        assert!(verify_axioms(&CategoryId::NC, 4).unwrap().passed);
        let two_blocks = PredicateClass {
            predicate: |q: &Partition| q.is_pairing() && q.num_blocks() <= 2,
            colored: false,
            noncrossing: false,
        };
        let r = verify_axioms(&two_blocks, 6).unwrap();
        assert!(!r.passed);
        assert!(r.failure.unwrap().contains("horizontal"));
    }
}
