//! Temperley-Lieb diagrams with a loop parameter, the Markov trace, braid
//! representations and the Jones polynomial of braid closures.

pub mod braid;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Ring;
use crate::categories::CategoryId;
use crate::error::{Error, Result};
use crate::partition::{ColoredWord, Leg, Partition};

pub use braid::{
    braid_to_tl, bracket, jones_polynomial, markov_invariance_test, skein_check, BraidMap, BraidWord, JonesPoly,
    MarkovReport, SkeinRelation, SkeinReport,
};

/// Most strands for which diagram algebras are built.
pub const MAX_STRANDS: usize = 10;

/// Noncrossing pairing of `k` top and `k` bottom points. Points `0..k` are on
/// top and `k..2k` on the bottom, both read left to right; `pairs[p]` is the
/// partner of `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TLDiagram {
    k: usize,
    pairs: Vec<usize>,
}

fn check_strands(k: usize) -> Result<()> {
    if k > MAX_STRANDS {
        return Err(Error::Capacity(format!("{k} strands exceeds {MAX_STRANDS}")));
    }
    Ok(())
}

impl TLDiagram {
    pub fn identity(k: usize) -> Self {
        let pairs = (0..2 * k).map(|p| if p < k { p + k } else { p - k }).collect();
        TLDiagram { k, pairs }
    }

    /// `ε_i` for `1 ≤ i < k`: cups joining positions `i−1, i` on each side.
    pub fn epsilon(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::Domain(format!("ε_{i} needs 1 ≤ i < {k}")));
        }
        let mut d = TLDiagram::identity(k);
        let (a, b) = (i - 1, i);
        d.pairs[a] = b;
        d.pairs[b] = a;
        d.pairs[k + a] = k + b;
        d.pairs[k + b] = k + a;
        Ok(d)
    }

    /// From a two-row pairing with `k` legs in each row.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        let k = p.k();
        if p.l() != k || !p.is_pairing() || !p.is_noncrossing() {
            return Err(Error::Shape("TL diagrams are noncrossing pairings with equal rows".into()));
        }
        let mut pairs = vec![0; 2 * k];
        for b in p.block_indices() {
            pairs[b[0]] = b[1];
            pairs[b[1]] = b[0];
        }
        Ok(TLDiagram { k, pairs })
    }

    pub fn to_partition(&self) -> Partition {
        let k = self.k;
        let leg = |p: usize| if p < k { Leg::upper(p) } else { Leg::lower(p - k) };
        let blocks: Vec<Vec<Leg>> =
            (0..2 * k).filter(|&p| p < self.pairs[p]).map(|p| vec![leg(p), leg(self.pairs[p])]).collect();
        Partition::from_blocks(ColoredWord::plain(k), ColoredWord::plain(k), &blocks).expect("valid pairing")
    }

    /// All diagrams on `k` strands, in canonical order.
    pub fn basis(k: usize) -> Result<Vec<TLDiagram>> {
        check_strands(k)?;
        let w = ColoredWord::plain(k);
        let mut out: Vec<TLDiagram> = CategoryId::NC2
            .members_two_row(&w, &w)?
            .iter()
            .map(TLDiagram::from_partition)
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.k
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairs[p]
    }

    /// Upside-down reflection.
    pub fn star(&self) -> Self {
        let k = self.k;
        let flip = |p: usize| if p < k { p + k } else { p - k };
        let mut pairs = vec![0; 2 * k];
        for p in 0..2 * k {
            pairs[flip(p)] = flip(self.pairs[p]);
        }
        TLDiagram { k, pairs }
    }

    /// Adds a vertical strand on the right.
    pub fn embed(&self) -> Self {
        let k = self.k;
        let map = |p: usize| if p < k { p } else { p + 1 };
        let mut pairs = vec![0; 2 * k + 2];
        for p in 0..2 * k {
            pairs[map(p)] = map(self.pairs[p]);
        }
        pairs[k] = 2 * k + 1;
        pairs[2 * k + 1] = k;
        TLDiagram { k: k + 1, pairs }
    }

    /// `self` stacked on top of `other`, with the number of closed loops.
    pub fn compose(&self, other: &TLDiagram) -> Result<(TLDiagram, usize)> {
        let k = self.k;
        if other.k != k {
            return Err(Error::Shape(format!("composing {k} and {} strands", other.k)));
        }
        // middle point j is the bottom of self and the top of other
        let mut seen = vec![false; k];
        let mut pairs = vec![0; 2 * k];
        // walk from an outer point until leaving through an outer point
        let walk = |start_top: bool, idx: usize, seen: &mut Vec<bool>| -> usize {
            let (mut in_self, mut p) = if start_top { (true, idx) } else { (false, k + idx) };
            loop {
                let q = if in_self { self.pairs[p] } else { other.pairs[p] };
                if in_self && q < k {
                    return q;
                }
                if !in_self && q >= k {
                    return q;
                }
                let mid = if in_self { q - k } else { q };
                seen[mid] = true;
                if in_self {
                    in_self = false;
                    p = mid;
                } else {
                    in_self = true;
                    p = k + mid;
                }
            }
        };
        for p in 0..2 * k {
            let end = if p < k { walk(true, p, &mut seen) } else { walk(false, p - k, &mut seen) };
            // ends in self's top stay; ends in other's bottom keep their index
            pairs[p] = end;
        }
        let mut loops = 0;
        for start in 0..k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut mid = start;
            loop {
                seen[mid] = true;
                let down = other.pairs[mid];
                debug_assert!(down < k);
                let up = self.pairs[k + down] - k;
                seen[down] = true;
                mid = up;
                if mid == start {
                    break;
                }
            }
        }
        Ok((TLDiagram { k, pairs }, loops))
    }

    /// Loops after closing with `k` parallel arcs on the right.
    pub fn closure_loops(&self) -> usize {
        let k = self.k;
        let mut seen = vec![false; 2 * k];
        let mut loops = 0;
        for start in 0..2 * k {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut p = start;
            loop {
                seen[p] = true;
                let q = self.pairs[p];
                seen[q] = true;
                p = if q < k { q + k } else { q - k };
                if p == start {
                    break;
                }
            }
        }
        loops
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.k;
        let name = |p: usize| if p < k { format!("u{p}") } else { format!("l{}", p - k) };
        let arcs: Vec<String> =
            (0..2 * k).filter(|&p| p < self.pairs[p]).map(|p| format!("{}-{}", name(p), name(self.pairs[p]))).collect();
        write!(f, "[{}]", arcs.join(" "))
    }
}

/// The loop value and, when it is invertible, its inverse.
#[derive(Clone, PartialEq, Debug)]
pub struct LoopParam<R> {
    pub delta: R,
    pub inverse: Option<R>,
}

impl<R: Ring> LoopParam<R> {
    pub fn new(delta: R, inverse: Option<R>) -> Self {
        LoopParam { delta, inverse }
    }

    /// `δ^e`, possibly negative.
    pub fn power(&self, e: i64) -> Result<R> {
        if e >= 0 {
            return Ok(self.delta.pow_u(e as u32));
        }
        let inv = self.inverse.as_ref().ok_or_else(|| Error::Domain("loop value is not invertible".into()))?;
        Ok(inv.pow_u((-e) as u32))
    }
}

/// Formal sum of diagrams on a fixed number of strands.
#[derive(Clone, PartialEq, Debug)]
pub struct TLElement<R> {
    k: usize,
    terms: BTreeMap<TLDiagram, R>,
}

impl<R: Ring> TLElement<R> {
    pub fn zero(k: usize) -> Self {
        TLElement { k, terms: BTreeMap::new() }
    }

    pub fn basis(d: TLDiagram, c: R) -> Self {
        let mut e = TLElement::zero(d.strands());
        e.add_term(d, c);
        e
    }

    pub fn identity(k: usize) -> Self {
        TLElement::basis(TLDiagram::identity(k), R::one())
    }

    pub fn epsilon(k: usize, i: usize) -> Result<Self> {
        Ok(TLElement::basis(TLDiagram::epsilon(k, i)?, R::one()))
    }

    pub fn strands(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &TLDiagram) -> R {
        self.terms.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: TLDiagram, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &TLElement<R>) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::Shape(format!("adding {} and {} strands", self.k, other.k)));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = TLElement::zero(self.k);
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Product with `self` on top, each closed loop contributing `δ`.
    pub fn mul(&self, other: &TLElement<R>, delta: &R) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::Shape(format!("multiplying {} and {} strands", self.k, other.k)));
        }
        let mut out = TLElement::zero(self.k);
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (d, loops) = x.compose(y)?;
                out.add_term(d, a.clone() * b.clone() * delta.pow_u(loops as u32));
            }
        }
        Ok(out)
    }

    /// `Σ c_D δ^{c(D̂) − k}`, so that the identity has trace one.
    pub fn markov_trace(&self, p: &LoopParam<R>) -> Result<R> {
        self.terms.iter().try_fold(R::zero(), |acc, (d, c)| {
            Ok(acc + c.clone() * p.power(d.closure_loops() as i64 - self.k as i64)?)
        })
    }

    /// `Σ c_D δ^{c(D̂) − 1}`, the closure normalized so one loop counts 1.
    pub fn closure(&self, delta: &R) -> R {
        self.terms.iter().fold(R::zero(), |acc, (d, c)| acc + c.clone() * delta.pow_u(d.closure_loops() as u32 - 1))
    }

    pub fn star(&self) -> Self {
        let mut out = TLElement::zero(self.k);
        for (d, c) in &self.terms {
            out.add_term(d.star(), c.clone());
        }
        out
    }

    pub fn embed(&self) -> Self {
        let mut out = TLElement::zero(self.k + 1);
        for (d, c) in &self.terms {
            out.add_term(d.embed(), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;
    use num_traits::One;

    fn delta() -> LaurentPoly {
        LaurentPoly::var()
    }

    fn formal() -> LoopParam<LaurentPoly> {
        LoopParam::new(LaurentPoly::var(), Some(LaurentPoly::monomial(1, -1)))
    }

    #[test]
    fn basis_sizes() {
        let sizes: Vec<usize> = (0..=6).map(|k| TLDiagram::basis(k).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 5, 14, 42, 132]);
        for d in TLDiagram::basis(4).unwrap() {
            assert_eq!(TLDiagram::from_partition(&d.to_partition()).unwrap(), d);
        }
    }

    #[test]
    fn relations() {
        let e1 = TLElement::<LaurentPoly>::epsilon(2, 1).unwrap();
        assert_eq!(e1.mul(&e1, &delta()).unwrap(), e1.scale(&delta()));
        let e1 = TLElement::<LaurentPoly>::epsilon(3, 1).unwrap();
        let e2 = TLElement::<LaurentPoly>::epsilon(3, 2).unwrap();
        let prod = e1.mul(&e2, &delta()).unwrap().mul(&e1, &delta()).unwrap();
        assert_eq!(prod, e1);
        let id = TLElement::identity(3);
        assert_eq!(id.mul(&e2, &delta()).unwrap(), e2);
    }

    #[test]
    fn traces() {
        let p = formal();
        assert_eq!(TLElement::identity(4).markov_trace(&p).unwrap(), LaurentPoly::one());
        let e1 = TLElement::<LaurentPoly>::epsilon(2, 1).unwrap();
        assert_eq!(e1.markov_trace(&p).unwrap(), LaurentPoly::monomial(1, -1));
        let x = TLElement::<LaurentPoly>::epsilon(3, 1).unwrap();
        let ek = TLElement::epsilon(4, 3).unwrap();
        let lhs = x.embed().mul(&ek, &delta()).unwrap().markov_trace(&p).unwrap();
        assert_eq!(lhs, &x.markov_trace(&p).unwrap() * &LaurentPoly::monomial(1, -1));
        assert!(LoopParam::new(LaurentPoly::var(), None).power(-1).is_err());
    }

    #[test]
    fn shape_errors() {
        let a = TLElement::<LaurentPoly>::identity(2);
        let b = TLElement::<LaurentPoly>::identity(3);
        assert!(matches!(a.mul(&b, &delta()), Err(Error::Shape(_))));
        assert!(TLDiagram::epsilon(3, 3).is_err());
        assert!(matches!(TLDiagram::basis(11), Err(Error::Capacity(_))));
    }
}
