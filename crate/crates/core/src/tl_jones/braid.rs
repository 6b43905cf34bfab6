//! Braid words, their Temperley-Lieb images and the Jones polynomial.
//!
//! The letter `+i` is sent to `A·1 + A⁻¹·ε_i` by the Kauffman map. With that
//! choice the closure of `1 1 1` on two strands has `V = q + q³ − q⁴`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use super::{check_strands, TLElement};
use crate::algebra::laurent::fmt_exponent;
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Domain("a braid needs at least one strand".into()));
        }
        check_strands(strands)?;
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::Domain(format!("letter {bad} outside ±1..±{}", strands - 1)));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Space-separated signed generator indices, e.g. `"1 -2 1"`.
    pub fn parse(strands: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Shape(format!("braids on {} and {} strands", self.strands, other.strands)));
        }
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `α β α⁻¹`.
    pub fn conjugate(&self, alpha: &BraidWord) -> Result<BraidWord> {
        alpha.concat(self)?.concat(&alpha.inverse())
    }

    /// Adds a strand and appends `g_k^{±1}`, `k` the old strand count.
    pub fn stabilize(&self, positive: bool) -> Result<BraidWord> {
        let k = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { k } else { -k });
        BraidWord::new(self.strands + 1, letters)
    }

    fn with_letter(&self, pos: usize, letter: Option<i32>) -> BraidWord {
        let mut letters = self.letters.clone();
        match letter {
            Some(l) => letters[pos] = l,
            None => {
                letters.remove(pos);
            }
        }
        BraidWord { strands: self.strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}] on {} strands", w.join(" "), self.strands)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BraidMap {
    /// `g_i ↦ A + A⁻¹ε_i`, `g_i⁻¹ ↦ A⁻¹ + Aε_i`, loop `−A² − A⁻²`, in powers of `A`.
    Kauffman,
    /// `g_i ↦ tε_i − 1`, `g_i⁻¹ ↦ t⁻¹ε_i − 1`, `t = q^{1/2}`, loop `t + t⁻¹`, in powers of `t`.
    Jones,
}

impl BraidMap {
    pub fn loop_value(self) -> LaurentPoly {
        match self {
            BraidMap::Kauffman => LaurentPoly::from_terms([(2, -1), (-2, -1)]),
            BraidMap::Jones => LaurentPoly::from_terms([(1, 1), (-1, 1)]),
        }
    }

    /// `(c_1, c_ε)` with the letter sent to `c_1·1 + c_ε·ε_i`.
    fn letter_coeffs(self, positive: bool) -> (LaurentPoly, LaurentPoly) {
        let s = if positive { 1 } else { -1 };
        match self {
            BraidMap::Kauffman => (LaurentPoly::monomial(1, s), LaurentPoly::monomial(1, -s)),
            BraidMap::Jones => (LaurentPoly::monomial(-1, 0), LaurentPoly::monomial(1, s)),
        }
    }
}

/// Image of the braid word, multiplying letters left to right.
pub fn braid_to_tl(w: &BraidWord, map: BraidMap) -> Result<TLElement<LaurentPoly>> {
    let k = w.strands;
    let delta = map.loop_value();
    let mut x = TLElement::identity(k);
    for &l in &w.letters {
        let (c1, ce) = map.letter_coeffs(l > 0);
        let e = TLElement::epsilon(k, l.unsigned_abs() as usize)?;
        x = x.scale(&c1).add(&x.mul(&e, &delta)?.scale(&ce))?;
    }
    Ok(x)
}

/// Kauffman bracket of the closure, normalized so the unknot gives 1, in
/// powers of `A`.
pub fn bracket(w: &BraidWord) -> Result<LaurentPoly> {
    let delta = BraidMap::Kauffman.loop_value();
    Ok(braid_to_tl(w, BraidMap::Kauffman)?.closure(&delta))
}

/// Laurent polynomial in `q^{1/2}`: the stored exponent `e` stands for `q^{e/2}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JonesPoly(pub LaurentPoly);

impl JonesPoly {
    /// From a polynomial in `A` with `q = A⁻⁴`.
    pub fn from_a(p: &LaurentPoly) -> Result<JonesPoly> {
        if let Some((e, _)) = p.terms().find(|(e, _)| e % 2 != 0) {
            return Err(Error::Internal(format!("A-exponent {e} is not a half-integer power of q")));
        }
        Ok(JonesPoly(LaurentPoly::from_terms(p.terms().map(|(e, c)| (-e / 2, c)))))
    }

    /// From `(exponent of q times 2, coefficient)` pairs.
    pub fn from_half_exponents(pairs: impl IntoIterator<Item = (i32, i64)>) -> JonesPoly {
        JonesPoly(LaurentPoly::from_terms(pairs))
    }

    /// `{"q^1": 1, "q^1/2": -1, …}` sorted by exponent.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (e, c) in self.0.terms() {
            m.insert(format!("q^{}", fmt_exponent(e, 2)), Value::from(c));
        }
        Value::Object(m)
    }

    pub fn neg(&self) -> JonesPoly {
        JonesPoly(-self.0.clone())
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.display("q", 2))
    }
}

/// `V = (−A)^{−3w} ⟨β̂⟩` at `A = q^{−1/4}`.
pub fn jones_polynomial(w: &BraidWord) -> Result<JonesPoly> {
    let wr = w.writhe();
    let e = (-3 * wr) as i32;
    let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
    let v = &LaurentPoly::monomial(sign, e) * &bracket(w)?;
    JonesPoly::from_a(&v)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkovReport {
    pub trials: usize,
    pub moves: usize,
    pub invariant: JonesPoly,
    /// Move sequence that changed the polynomial, if any.
    pub failure: Option<String>,
}

impl MarkovReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Applies `trials` seeded random sequences of conjugations and
/// stabilizations to `w` and compares the polynomial after every move.
pub fn markov_invariance_test(w: &BraidWord, trials: usize, seed: u64, max_moves: usize) -> Result<MarkovReport> {
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    let target = jones_polynomial(w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut moves = 0;
    for trial in 0..trials {
        let mut cur = w.clone();
        let mut log = Vec::new();
        for _ in 0..rng.gen_range(1..=max_moves.max(1)) {
            let stabilize = cur.strands < 6 && rng.gen_bool(0.4);
            if stabilize || cur.strands < 2 {
                let positive = rng.gen_bool(0.5);
                cur = cur.stabilize(positive)?;
                log.push(format!("stabilize({})", if positive { "+" } else { "-" }));
            } else {
                let len = rng.gen_range(1..=2);
                let letters: Vec<i32> = (0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..cur.strands as i32);
                        if rng.gen_bool(0.5) {
                            g
                        } else {
                            -g
                        }
                    })
                    .collect();
                let alpha = BraidWord::new(cur.strands, letters)?;
                cur = cur.conjugate(&alpha)?;
                log.push(format!("conjugate({alpha})"));
            }
            moves += 1;
            let v = jones_polynomial(&cur)?;
            if v != target {
                return Ok(MarkovReport {
                    trials: trial + 1,
                    moves,
                    invariant: target,
                    failure: Some(format!("{w}: {} gave {v}", log.join(", "))),
                });
            }
        }
    }
    Ok(MarkovReport { trials, moves, invariant: target, failure: None })
}

/// `s₊·q^{e}·V₊ + s₋·q^{−e}·V₋ = s₀·(q^{1/2} + d·q^{−1/2})·V₀`, with the
/// coefficient of `V₊` normalized to sign `+`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkeinRelation {
    pub plus_exp: i32,
    pub minus_sign: i64,
    pub zero_sign: i64,
    pub inner_sign: i64,
}

impl SkeinRelation {
    /// Every relation of the form above.
    pub fn candidates() -> Vec<SkeinRelation> {
        let mut out = Vec::new();
        for plus_exp in [-1, 1] {
            for minus_sign in [-1, 1] {
                for zero_sign in [-1, 1] {
                    for inner_sign in [-1, 1] {
                        out.push(SkeinRelation { plus_exp, minus_sign, zero_sign, inner_sign });
                    }
                }
            }
        }
        out
    }

    pub fn holds(&self, plus: &JonesPoly, minus: &JonesPoly, zero: &JonesPoly) -> bool {
        let lhs = &(&LaurentPoly::monomial(1, 2 * self.plus_exp) * &plus.0)
            + &(&LaurentPoly::monomial(self.minus_sign, -2 * self.plus_exp) * &minus.0);
        let factor = LaurentPoly::from_terms([(1, self.zero_sign), (-1, self.zero_sign * self.inner_sign)]);
        lhs == &factor * &zero.0
    }
}

impl fmt::Display for SkeinRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = |s: i64| if s > 0 { "+" } else { "-" };
        write!(
            f,
            "q^{}V+ {} q^{}V- = {}(q^1/2 {} q^-1/2)V0",
            self.plus_exp,
            sign(self.minus_sign),
            -self.plus_exp,
            if self.zero_sign > 0 { "" } else { "-" },
            sign(self.inner_sign)
        )
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkeinReport {
    pub plus: JonesPoly,
    pub minus: JonesPoly,
    pub zero: JonesPoly,
    pub relations: Vec<SkeinRelation>,
}

/// Triple obtained by setting the letter at `pos` (0-based) to `g_i`, `g_i⁻¹`
/// or deleting it, with every candidate relation that holds.
pub fn skein_check(w: &BraidWord, pos: usize) -> Result<SkeinReport> {
    let l = *w.letters.get(pos).ok_or_else(|| Error::Domain(format!("no letter at position {pos}")))?;
    let g = l.abs();
    let plus = jones_polynomial(&w.with_letter(pos, Some(g)))?;
    let minus = jones_polynomial(&w.with_letter(pos, Some(-g)))?;
    let zero = jones_polynomial(&w.with_letter(pos, None))?;
    let relations = SkeinRelation::candidates().into_iter().filter(|r| r.holds(&plus, &minus, &zero)).collect();
    Ok(SkeinReport { plus, minus, zero, relations })
}
