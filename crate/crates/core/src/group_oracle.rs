//! Finite groups of generalized permutation matrices, fully enumerated, as an
//! exact ground truth for integrals, character laws and fixed-point counts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::numbers::{factorial, fmt_rational};
use crate::algebra::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::partition::{Color, ColoredWord};

/// Largest group that is enumerated.
pub const MAX_ORDER: u64 = 1_000_000;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Hyperoctahedral(usize),
    /// `H_N^s`: permutation matrices with `s`-th roots of unity as entries.
    ComplexReflection(usize, u32),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Hyperoctahedral(n) => write!(f, "H{n}"),
            GroupSpec::ComplexReflection(n, s) => write!(f, "H{n}^{s}"),
        }
    }
}

/// Permutation matrix with phases: column `j` holds `ζ_s^{phases[j]}` in row
/// `perm[j]`, 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenPermMatrix {
    pub perm: Vec<usize>,
    pub phases: Vec<u32>,
    pub s: u32,
}

impl GenPermMatrix {
    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// Exponent of the entry at `(i, j)`, or `None` for a zero entry.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        (self.perm[j] == i).then_some(self.phases[j])
    }

    /// Trace as counts of each power of `ζ_s`.
    pub fn trace_counts(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.s as usize];
        for (j, &i) in self.perm.iter().enumerate() {
            if i == j {
                out[self.phases[j] as usize] += 1;
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic<BigInt> {
        from_counts(self.s, &self.trace_counts())
    }
}

fn from_counts(s: u32, counts: &[i64]) -> Cyclotomic<BigInt> {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(Cyclotomic::root(s, 0, BigInt::zero()), |acc, (e, &c)| acc + Cyclotomic::root(s, e as i64, BigInt::from(c)))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Odometer step over phase vectors, last coordinate fastest.
fn advance(phases: &mut [u32], s: u32) -> bool {
    for t in (0..phases.len()).rev() {
        phases[t] += 1;
        if phases[t] < s {
            return true;
        }
        phases[t] = 0;
    }
    false
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

impl GroupSpec {
    pub fn dim(self) -> usize {
        match self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Symmetric(n)
            | GroupSpec::Alternating(n)
            | GroupSpec::Hyperoctahedral(n)
            | GroupSpec::ComplexReflection(n, _) => n,
        }
    }

    /// Order of the roots of unity that occur as entries.
    pub fn phase_order(self) -> u32 {
        match self {
            GroupSpec::Hyperoctahedral(_) => 2,
            GroupSpec::ComplexReflection(_, s) => s,
            _ => 1,
        }
    }

    pub fn order(self) -> Result<u64> {
        let n = self.dim();
        let fact = || factorial(n as u64);
        let big = match self {
            GroupSpec::Cyclic(n) => BigInt::from(n),
            GroupSpec::Dihedral(n) => BigInt::from(2 * n),
            GroupSpec::Symmetric(_) => fact(),
            GroupSpec::Alternating(n) => {
                if n < 2 {
                    fact()
                } else {
                    fact() / 2
                }
            }
            GroupSpec::Hyperoctahedral(n) => BigInt::from(2).pow(n as u32) * fact(),
            GroupSpec::ComplexReflection(n, s) => BigInt::from(s).pow(n as u32) * fact(),
        };
        big.to_u64().ok_or_else(|| Error::Capacity(format!("order of {self}")))
    }

    fn validate(self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(0) | GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => {
                Err(Error::Domain(format!("{self} needs N ≥ 1")))
            }
            GroupSpec::Hyperoctahedral(0) | GroupSpec::ComplexReflection(0, _) => {
                Err(Error::Domain(format!("{self} needs N ≥ 1")))
            }
            GroupSpec::Dihedral(n) if n < 3 => Err(Error::Domain(format!("{self} needs N ≥ 3"))),
            GroupSpec::ComplexReflection(_, 0) => Err(Error::Domain("root order must be positive".into())),
            _ => {
                let order = self.order()?;
                if order > MAX_ORDER {
                    return Err(Error::Capacity(format!("{self} has {order} elements")));
                }
                Ok(())
            }
        }
    }

    fn permutations(self) -> Vec<Vec<usize>> {
        let n = self.dim();
        let mut out: Vec<Vec<usize>> = match self {
            GroupSpec::Cyclic(_) => (0..n).map(|k| (0..n).map(|i| (i + k) % n).collect()).collect(),
            GroupSpec::Dihedral(_) => (0..n)
                .map(|k| (0..n).map(|i| (i + k) % n).collect())
                .chain((0..n).map(|k| (0..n).map(|i| (k + n - i) % n).collect()))
                .collect(),
            _ => {
                let mut p: Vec<usize> = (0..n).collect();
                let mut all = vec![p.clone()];
                while next_permutation(&mut p) {
                    all.push(p.clone());
                }
                if matches!(self, GroupSpec::Alternating(_)) {
                    all.retain(|p| is_even(p));
                }
                all
            }
        };
        out.sort();
        out
    }

    /// Visit every element: permutations in lexicographic order, then phase
    /// vectors in lexicographic order.
    pub fn for_each_element(self, mut visit: impl FnMut(&GenPermMatrix)) -> Result<()> {
        self.validate()?;
        let s = self.phase_order();
        let n = self.dim();
        for perm in self.permutations() {
            let mut g = GenPermMatrix { perm, phases: vec![0; n], s };
            loop {
                visit(&g);
                if !advance(&mut g.phases, s) {
                    break;
                }
            }
        }
        Ok(())
    }

    pub fn elements(self) -> Result<Vec<GenPermMatrix>> {
        let mut out = Vec::new();
        self.for_each_element(|g| out.push(g.clone()))?;
        Ok(out)
    }
}

/// Finite law with exact probabilities.
#[derive(Clone, PartialEq, Debug)]
pub struct DiscreteLaw {
    pub atoms: Vec<(Cyclotomic<BigInt>, Rational)>,
}

impl DiscreteLaw {
    fn from_counts(s: u32, counts: BTreeMap<Vec<BigInt>, u64>, total: u64) -> DiscreteLaw {
        let atoms = counts
            .into_iter()
            .map(|(coeffs, c)| {
                let atom = coeffs
                    .iter()
                    .enumerate()
                    .fold(Cyclotomic::root(s, 0, BigInt::zero()), |acc, (e, v)| {
                        acc + Cyclotomic::root(s, e as i64, v.clone())
                    });
                (atom, Rational::new(BigInt::from(c), BigInt::from(total)))
            })
            .collect();
        DiscreteLaw { atoms }
    }

    /// Integer atoms with their probabilities, when every atom is an integer.
    pub fn integer_atoms(&self) -> Option<Vec<(BigInt, Rational)>> {
        let mut out: Vec<(BigInt, Rational)> =
            self.atoms.iter().map(|(a, p)| a.as_scalar().map(|v| (v, p.clone()))).collect::<Option<_>>()?;
        out.sort();
        Some(out)
    }

    /// Probability of an integer atom.
    pub fn prob_of(&self, v: i64) -> Rational {
        let target = Cyclotomic::scalar(BigInt::from(v));
        self.atoms.iter().find(|(a, _)| *a == target).map_or_else(Rational::zero, |(_, p)| p.clone())
    }

    pub fn total(&self) -> Rational {
        self.atoms.iter().map(|(_, p)| p).sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.atoms
                .iter()
                .map(|(a, p)| {
                    let atom = match a.as_scalar() {
                        Some(v) => json!(v.to_string()),
                        None => json!({
                            "modulus": a.modulus(),
                            "coeffs": a.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        }),
                    };
                    json!({"atom": atom, "prob": fmt_rational(p)})
                })
                .collect(),
        )
    }
}

/// Integer law from (value, probability) pairs, merging equal atoms.
pub fn integer_law(pairs: impl IntoIterator<Item = (i64, Rational)>) -> DiscreteLaw {
    let mut m: BTreeMap<i64, Rational> = BTreeMap::new();
    for (v, p) in pairs {
        *m.entry(v).or_insert_with(Rational::zero) += p;
    }
    DiscreteLaw {
        atoms: m
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(v, p)| (Cyclotomic::scalar(BigInt::from(v)), p))
            .collect(),
    }
}

/// Law of the trace over the counting measure.
pub fn character_law(g: GroupSpec) -> Result<DiscreteLaw> {
    let s = g.phase_order();
    let mut counts: BTreeMap<Vec<BigInt>, u64> = BTreeMap::new();
    let mut total = 0u64;
    g.for_each_element(|x| {
        let key = x.trace().coeffs().to_vec();
        *counts.entry(key).or_default() += 1;
        total += 1;
    })?;
    Ok(DiscreteLaw::from_counts(s, counts, total))
}

/// Law of `g_11 + … + g_ss` over `S_N`, by enumeration; it is checked
/// against the closed convolution formula before being returned.
pub fn truncated_character_law(n: usize, s: usize) -> Result<DiscreteLaw> {
    if s > n {
        return Err(Error::Domain(format!("truncation {s} exceeds {n}")));
    }
    let mut counts = vec![0u64; s + 1];
    let mut total = 0u64;
    GroupSpec::Symmetric(n).for_each_element(|g| {
        counts[(0..s).filter(|&i| g.perm[i] == i).count()] += 1;
        total += 1;
    })?;
    let law = integer_law(
        counts.iter().enumerate().map(|(v, &c)| (v as i64, Rational::new(BigInt::from(c), BigInt::from(total)))),
    );
    if law != truncated_character_closed(n, s)? {
        return Err(Error::Internal(format!("truncated law of S{n}, s={s} disagrees with the closed formula")));
    }
    Ok(law)
}

/// `(s!/N!) Σ_p (N−p)!/(s−p)! (δ_1 − δ_0)^{*p} / p!`.
pub fn truncated_character_closed(n: usize, s: usize) -> Result<DiscreteLaw> {
    if s > n {
        return Err(Error::Domain(format!("truncation {s} exceeds {n}")));
    }
    let f = |x: usize| factorial(x as u64);
    let mut pairs = Vec::new();
    for p in 0..=s {
        let weight = Rational::new(f(s) * f(n - p), f(n) * f(s - p) * f(p));
        // (δ_1 − δ_0)^{*p} = Σ_j C(p, j) (−1)^{p−j} δ_j
        for j in 0..=p {
            let sign = if (p - j) % 2 == 0 { 1 } else { -1 };
            let c = crate::algebra::numbers::binomial(p as i64, j as i64) * sign;
            pairs.push((j as i64, &weight * Rational::from_integer(c)));
        }
    }
    Ok(integer_law(pairs))
}

/// `P(χ = k) = (1/k!) Σ_{p ≤ N−k} (−1)^p / p!` for `S_N`.
pub fn symmetric_character_closed(n: usize) -> DiscreteLaw {
    integer_law((0..=n).map(|k| {
        let inner: Rational = (0..=n - k)
            .map(|p| {
                let v = Rational::new(BigInt::one(), factorial(p as u64));
                if p % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum();
        (k as i64, inner / Rational::from_integer(factorial(k as u64)))
    }))
}

/// `(1 − 1/N) δ_0 + (1/N) δ_N` for the cyclic group.
pub fn cyclic_character_closed(n: usize) -> DiscreteLaw {
    let n_i = n as i64;
    integer_law([(0, Rational::new((n_i - 1).into(), n_i.into())), (n_i, Rational::new(1.into(), n_i.into()))])
}

/// Dihedral law, with separate even and odd cases.
pub fn dihedral_character_closed(n: usize) -> DiscreteLaw {
    let n_i = n as i64;
    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
    let tail = q(1, 2 * n_i);
    if n % 2 == 0 {
        integer_law([(0, q(3, 4) - &tail), (2, q(1, 4)), (n_i, tail.clone())])
    } else {
        integer_law([(0, q(1, 2) - &tail), (1, q(1, 2)), (n_i, tail.clone())])
    }
}

fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    let s = a.len();
    let mut out = vec![0i64; s];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate() {
            out[(i + j) % s] += x * y;
        }
    }
    out
}

fn conj_counts(a: &[i64]) -> Vec<i64> {
    let s = a.len();
    (0..s).map(|e| a[(s - e) % s]).collect()
}

fn average(s: u32, sums: &[i64], order: u64) -> Cyclotomic<Rational> {
    let denom = Rational::from_integer(BigInt::from(order));
    sums.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(Cyclotomic::root(s, 0, Rational::zero()), |acc, (e, &c)| {
            acc + Cyclotomic::root(s, e as i64, Rational::from_integer(BigInt::from(c)) / denom.clone())
        })
}

/// `(1/|G|) Σ_g ∏_t g_{i_t j_t}^{c_t}` with black letters conjugated,
/// indices 1-based.
pub fn integrate_exact(g: GroupSpec, word: &ColoredWord, i: &[usize], j: &[usize]) -> Result<Cyclotomic<Rational>> {
    if i.len() != word.len() || j.len() != word.len() {
        return Err(Error::Shape(format!("{} and {} indices for a word of length {}", i.len(), j.len(), word.len())));
    }
    let n = g.dim();
    if let Some(bad) = i.iter().chain(j).find(|&&x| x == 0 || x > n) {
        return Err(Error::Domain(format!("index {bad} outside 1..={n}")));
    }
    let s = g.phase_order();
    let mut sums = vec![0i64; s as usize];
    let mut order = 0u64;
    g.for_each_element(|x| {
        order += 1;
        let mut e = 0u32;
        for ((&a, &b), c) in i.iter().zip(j).zip(&word.0) {
            match x.entry(a - 1, b - 1) {
                None => return,
                Some(p) => {
                    e = match c {
                        Color::White => (e + p) % s,
                        Color::Black => (e + s - p) % s,
                    }
                }
            }
        }
        sums[e as usize] += 1;
    })?;
    Ok(average(s, &sums, order))
}

/// `(1/|G|) Σ_g ∏_t tr(g)^{c_t}`, which must be a nonnegative integer.
pub fn fix_dim(g: GroupSpec, word: &ColoredWord) -> Result<u64> {
    let s = g.phase_order();
    let mut sums = vec![0i64; s as usize];
    let mut order = 0u64;
    let mut unit = vec![0i64; s as usize];
    unit[0] = 1;
    g.for_each_element(|x| {
        order += 1;
        let t = x.trace_counts();
        let tb = conj_counts(&t);
        let prod = word.0.iter().fold(unit.clone(), |acc, c| convolve(&acc, if *c == Color::White { &t } else { &tb }));
        for (a, b) in sums.iter_mut().zip(prod) {
            *a += b;
        }
    })?;
    let avg = average(s, &sums, order);
    let v = avg.as_scalar().ok_or_else(|| Error::Internal(format!("non-real fixed point average for {g}")))?;
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Internal(format!("fixed point dimension {v} for {g} is not a natural number")));
    }
    v.to_integer().to_u64().ok_or_else(|| Error::Capacity("fixed point dimension".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::rat;

    #[test]
    fn orders() {
        assert_eq!(GroupSpec::Symmetric(3).elements().unwrap().len(), 6);
        assert_eq!(GroupSpec::Hyperoctahedral(3).elements().unwrap().len(), 48);
        assert_eq!(GroupSpec::ComplexReflection(2, 3).elements().unwrap().len(), 18);
        assert_eq!(GroupSpec::Alternating(4).elements().unwrap().len(), 12);
        assert_eq!(GroupSpec::Dihedral(5).elements().unwrap().len(), 10);
        assert!(matches!(GroupSpec::Symmetric(11).elements(), Err(Error::Capacity(_))));
    }

    #[test]
    fn deterministic_order() {
        let els = GroupSpec::Hyperoctahedral(2).elements().unwrap();
        assert_eq!(els[0].perm, vec![0, 1]);
        assert_eq!(els[1].phases, vec![0, 1]);
        assert_eq!(els[4].perm, vec![1, 0]);
        let mut dedup = els.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }

    #[test]
    fn laws() {
        let z5 = character_law(GroupSpec::Cyclic(5)).unwrap();
        assert_eq!(z5.integer_atoms().unwrap(), vec![(0.into(), rat(4, 5)), (5.into(), rat(1, 5))]);
        let d4 = character_law(GroupSpec::Dihedral(4)).unwrap();
        assert_eq!((d4.prob_of(0), d4.prob_of(2), d4.prob_of(4)), (rat(5, 8), rat(1, 4), rat(1, 8)));
        let s3 = character_law(GroupSpec::Symmetric(3)).unwrap();
        assert_eq!((s3.prob_of(0), s3.prob_of(1), s3.prob_of(3)), (rat(1, 3), rat(1, 2), rat(1, 6)));
        assert_eq!(s3, symmetric_character_closed(3));
        let h = character_law(GroupSpec::ComplexReflection(2, 3)).unwrap();
        assert_eq!(h.total(), rat(1, 1));
    }

    #[test]
    fn truncated_laws() {
        let l = truncated_character_law(3, 2).unwrap();
        assert_eq!((l.prob_of(0), l.prob_of(1), l.prob_of(2)), (rat(1, 2), rat(1, 3), rat(1, 6)));
        let l = truncated_character_law(4, 1).unwrap();
        assert_eq!((l.prob_of(0), l.prob_of(1)), (rat(3, 4), rat(1, 4)));
        assert_eq!(truncated_character_law(5, 5).unwrap(), character_law(GroupSpec::Symmetric(5)).unwrap());
    }

    #[test]
    fn integrals() {
        let w = ColoredWord::plain(1);
        let v = integrate_exact(GroupSpec::Symmetric(3), &w, &[1], &[1]).unwrap();
        assert_eq!(v.as_scalar(), Some(rat(1, 3)));
        let w2 = ColoredWord::plain(2);
        let v = integrate_exact(GroupSpec::Symmetric(4), &w2, &[1, 2], &[1, 2]).unwrap();
        assert_eq!(v.as_scalar(), Some(rat(1, 12)));
        let v = integrate_exact(GroupSpec::Hyperoctahedral(2), &w2, &[1, 2], &[1, 2]).unwrap();
        assert_eq!(v.as_scalar(), Some(rat(0, 1)));
    }

    #[test]
    fn fixed_points() {
        assert_eq!(fix_dim(GroupSpec::Symmetric(4), &ColoredWord::plain(3)).unwrap(), 5);
        assert_eq!(fix_dim(GroupSpec::Hyperoctahedral(3), &ColoredWord::plain(2)).unwrap(), 1);
        let ob = ColoredWord::parse("ob").unwrap();
        assert_eq!(fix_dim(GroupSpec::ComplexReflection(2, 4), &ob).unwrap(), 1);
        assert_eq!(fix_dim(GroupSpec::ComplexReflection(2, 4), &ColoredWord::plain(2)).unwrap(), 0);
    }
}
