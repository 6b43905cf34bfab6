//! Closed formulas for Gram determinants, kept as factor lists in `N`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::young::{diagrams, standard_tableaux_count, YoungDiagram};
use crate::algebra::numbers::binomial;
use crate::algebra::{IntPoly, Poly};
use crate::categories::CategoryId;
use crate::error::{Error, Result};
use crate::partition::ClassFilter;

/// Product `∏ p_i(N)^{e_i}` with distinct factors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Factored {
    pub factors: Vec<(IntPoly, u64)>,
}

impl Factored {
    pub fn one() -> Self {
        Factored::default()
    }

    pub fn push(&mut self, p: IntPoly, e: u64) {
        if e == 0 || p == IntPoly::one() {
            return;
        }
        match self.factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, f)) => *f += e,
            None => self.factors.push((p, e)),
        }
    }

    pub fn mul(&mut self, other: &Factored) {
        for (p, e) in &other.factors {
            self.push(p.clone(), *e);
        }
    }

    pub fn expand(&self) -> Result<IntPoly> {
        self.factors.iter().try_fold(IntPoly::one(), |acc, (p, e)| {
            let e = u32::try_from(*e).map_err(|_| Error::Capacity(format!("exponent {e}")))?;
            Ok(acc * p.pow(e))
        })
    }

    pub fn eval(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.factors {
            let v = p.eval(n);
            if v.is_zero() {
                return BigInt::zero();
            }
            acc *= num_traits::pow(v, *e as usize);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors
                .iter()
                .map(|(p, e)| json!({"factor": p.display("N").to_string(), "exponent": e}))
                .collect(),
        )
    }
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                let base = if p.coeffs().len() == 2 && p.coeff(0).is_zero() && p.coeff(1).is_one() {
                    "N".to_string()
                } else {
                    format!("({})", p.display("N"))
                };
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn var() -> IntPoly {
    IntPoly::x()
}

fn shifted(c: i64) -> IntPoly {
    Poly::linear(BigInt::from(c))
}

/// Chebyshev-type `P_0 = 1`, `P_1 = X`, `P_{r+1} = X P_r − P_{r−1}`.
pub fn chebyshev(r: usize) -> IntPoly {
    let (mut a, mut b) = (IntPoly::one(), var());
    if r == 0 {
        return a;
    }
    for _ in 1..r {
        let next = &(&var() * &b) - &a;
        a = std::mem::replace(&mut b, next);
    }
    b
}

/// `P_r(y) = y^{r mod 2} Q_r(y²)`: returns the parity and `Q_r`.
fn chebyshev_split(r: usize) -> (u64, IntPoly) {
    let p = chebyshev(r);
    let parity = (r % 2) as u64;
    let q: Vec<BigInt> = p.coeffs().iter().skip(parity as usize).step_by(2).cloned().collect();
    (parity, Poly::new(q))
}

fn f_general(mult: i64, twice_s: i64, r: i64) -> i64 {
    if twice_s % 2 != 0 {
        return 0;
    }
    let s = twice_s / 2;
    let v = binomial(mult * s, s - r) - binomial(mult * s, s - r - 1);
    v.to_i64().expect("exponent fits")
}

/// `(f_{kr}, d_{kr})` with `f_{kr} = C(2k, k−r) − C(2k, k−r−1)` and
/// `d_{kr} = f_{kr} − f_{k,r+1}`. `k` is given doubled so it may be a half
/// integer; then both vanish.
pub fn binomial_exponents(twice_k: i64, r: i64) -> (i64, i64) {
    let f = f_general(2, twice_k, r);
    (f, f - f_general(2, twice_k, r + 1))
}

/// Primed version with `C(3s, s−r) − C(3s, s−r−1)`.
pub fn primed_exponents(twice_s: i64, r: i64) -> (i64, i64) {
    let f = f_general(3, twice_s, r);
    (f, f - f_general(3, twice_s, r + 1))
}

fn nonneg(v: i64, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Internal(format!("negative exponent {v} in {what}")))
}

/// `Σ_π (2|π| − k)` over the `k`-point members of a block-structure class.
pub fn a_exponent(filter: ClassFilter, k: usize) -> Result<i64> {
    if k > crate::partition::MAX_POINTS {
        return Err(Error::Capacity(format!("{k} points")));
    }
    let mut total = 0i64;
    filter.generator().for_each(k, |labels| {
        let blocks = labels.iter().map(|&b| b as i64 + 1).max().unwrap_or(0);
        total += 2 * blocks - k as i64;
    });
    Ok(total)
}

/// Lindström: `∏_{π ∈ D(k)} N(N−1)…(N−|π|+1)` for `D = P, P_even`.
pub fn lindstrom_det(cat: CategoryId, k: usize) -> Result<Factored> {
    let filter = match cat {
        CategoryId::P => ClassFilter::All,
        CategoryId::PEven => ClassFilter::EvenBlocks,
        other => return Err(Error::Domain(format!("Lindström formula covers p and p_even, not {other}"))),
    };
    if k > crate::partition::MAX_POINTS {
        return Err(Error::Capacity(format!("{k} points")));
    }
    // count[j] = members with more than j blocks
    let mut count = vec![0u64; k + 1];
    filter.generator().for_each(k, |labels| {
        let blocks = labels.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
        for c in count.iter_mut().take(blocks) {
            *c += 1;
        }
    });
    let mut out = Factored::one();
    for (j, &c) in count.iter().enumerate() {
        out.push(shifted(-(j as i64)), c);
    }
    Ok(out)
}

/// `∏_{(i,j) ∈ λ} (N + 2j − i − shift)`.
fn content_product(lambda: &YoungDiagram, shift: i64) -> Factored {
    let mut out = Factored::one();
    for (i, j) in lambda.cells() {
        out.push(shifted(2 * j as i64 - i as i64 - shift), 1);
    }
    out
}

fn power(f: &Factored, e: u64) -> Factored {
    Factored { factors: f.factors.iter().map(|(p, x)| (p.clone(), x * e)).collect() }.normalized()
}

impl Factored {
    fn normalized(self) -> Factored {
        let mut out = Factored::one();
        for (p, e) in self.factors {
            out.push(p, e);
        }
        out
    }
}

fn tableaux(lambda: &YoungDiagram) -> Result<u64> {
    standard_tableaux_count(lambda)?.to_u64().ok_or_else(|| Error::Capacity("tableaux count".into()))
}

/// Orthogonal group: `∏_{|λ| = k/2} f_N(λ)^{f^{2λ}}`, `f_N(λ) = ∏ (N + 2j − i − 1)`.
pub fn on_det(k: usize) -> Result<Factored> {
    if k % 2 == 1 {
        return Err(Error::Domain(format!("pairings need an even number of points, got {k}")));
    }
    if k > 12 {
        return Err(Error::Capacity(format!("{k} points")));
    }
    let mut out = Factored::one();
    for lambda in diagrams(k / 2) {
        out.mul(&power(&content_product(&lambda, 1), tableaux(&lambda.doubled())?));
    }
    Ok(out)
}

/// Bistochastic group: `N^{a_k} ∏_{|λ| ≤ k/2} f_N(λ)^{C(k, 2|λ|) f^{2λ}}` with
/// `f_N(λ) = ∏ (N + 2j − i − 2)` and `a_k` summed over singletons and pairings.
pub fn bn_det(k: usize) -> Result<Factored> {
    if k > 8 {
        return Err(Error::Capacity(format!("{k} points")));
    }
    let mut out = Factored::one();
    out.push(var(), nonneg(a_exponent(ClassFilter::SingletonsAndPairings, k)?, "a_k")?);
    for size in 1..=k / 2 {
        let c = binomial(k as i64, 2 * size as i64).to_u64().expect("small binomial");
        for lambda in diagrams(size) {
            out.mul(&power(&content_product(&lambda, 2), c * tableaux(&lambda.doubled())?));
        }
    }
    Ok(out)
}

/// Accumulates `∏ P_r(√N)^{e_r}` together with a power of `√N`. The seed
/// exponent `a_k` may be negative; only the total has to be a nonnegative
/// even number.
struct SqrtProduct {
    half_exponent: i64,
    rest: Factored,
}

impl SqrtProduct {
    fn new(half_exponent: i64) -> Self {
        SqrtProduct { half_exponent, rest: Factored::one() }
    }

    fn push_chebyshev(&mut self, r: usize, e: u64) {
        let (parity, q) = chebyshev_split(r);
        self.half_exponent += (parity * e) as i64;
        self.rest.push(q, e);
    }

    fn finish(self) -> Result<Factored> {
        if self.half_exponent % 2 != 0 || self.half_exponent < 0 {
            return Err(Error::Internal(format!("power {}/2 of N is not a polynomial", self.half_exponent)));
        }
        let mut out = Factored::one();
        out.push(var(), (self.half_exponent / 2) as u64);
        out.mul(&self.rest);
        Ok(out)
    }
}

/// Free closed formulas for `NC_2`, `NC`, `NC_12` and `NC_even`. The square
/// roots of `N` are tracked as half exponents and must pair up.
pub fn difrancesco_det(cat: CategoryId, k: usize) -> Result<Factored> {
    if k > crate::partition::MAX_POINTS {
        return Err(Error::Capacity(format!("{k} points")));
    }
    let ki = k as i64;
    match cat {
        CategoryId::NC2 => {
            let mut out = Factored::one();
            for r in 1..=k / 2 {
                let (_, d) = binomial_exponents(ki, r as i64);
                out.push(chebyshev(r), nonneg(d, "d_kr")?);
            }
            Ok(out)
        }
        CategoryId::NC => {
            let mut acc = SqrtProduct::new(a_exponent(ClassFilter::Noncrossing, k)?);
            for r in 1..=k {
                let (_, d) = binomial_exponents(2 * ki, r as i64);
                acc.push_chebyshev(r, nonneg(d, "d_kr")?);
            }
            acc.finish()
        }
        CategoryId::NC12 => {
            let mut out = Factored::one();
            out.push(var(), nonneg(a_exponent(ClassFilter::NoncrossingSingletonsAndPairings, k)?, "a_k")?);
            let shift = shifted(-1);
            for r in 1..=k / 2 {
                let mut e = 0i64;
                for l in 1..=k / 2 {
                    let c = binomial(ki, 2 * l as i64).to_i64().expect("small binomial");
                    e += c * binomial_exponents(2 * l as i64, r as i64).1;
                }
                out.push(chebyshev(r).compose(&shift), nonneg(e, "exponent")?);
            }
            Ok(out)
        }
        CategoryId::NCEven => {
            if k % 2 == 1 {
                return Err(Error::Domain(format!("formula is stated for an even number of points, got {k}")));
            }
            let mut acc = SqrtProduct::new(a_exponent(ClassFilter::NoncrossingEven, k)?);
            for r in 1..=k / 2 {
                let (_, d) = primed_exponents(ki, r as i64);
                acc.push_chebyshev(r, 2 * nonneg(d, "d'_kr")?);
            }
            acc.finish()
        }
        other => Err(Error::Domain(format!("no free determinant formula for {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::int;
    use crate::algebra::Ring;

    fn poly(c: &[i64]) -> IntPoly {
        Poly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev(0), poly(&[1]));
        assert_eq!(chebyshev(2), poly(&[-1, 0, 1]));
        assert_eq!(chebyshev(3), poly(&[0, -2, 0, 1]));
        let (p, q) = chebyshev_split(3);
        assert_eq!((p, q), (1, poly(&[-2, 1])));
    }

    #[test]
    fn exponents() {
        assert_eq!(binomial_exponents(4, 1), (3, 2));
        assert_eq!(binomial_exponents(4, 2), (1, 1));
        assert_eq!(binomial_exponents(6, 1), (9, 4));
        assert_eq!(binomial_exponents(6, 2), (5, 4));
        assert_eq!(binomial_exponents(6, 3), (1, 1));
        assert_eq!(binomial_exponents(4, 3), (0, 0));
        assert_eq!(binomial_exponents(3, 1), (0, 0));
    }

    #[test]
    fn closed_values() {
        let x = IntPoly::x();
        let one = IntPoly::one();
        let nm1 = &x - &one;
        assert_eq!(on_det(2).unwrap().expand().unwrap(), x);
        let expect = x.pow(3) * nm1.pow(2) * (&x + &Poly::from_i64(2));
        assert_eq!(on_det(4).unwrap().expand().unwrap(), expect);
        assert!(on_det(3).is_err());
        assert_eq!(bn_det(1).unwrap().expand().unwrap(), x);
        assert_eq!(lindstrom_det(CategoryId::P, 2).unwrap().expand().unwrap(), x.pow(2) * nm1.clone());
        assert_eq!(lindstrom_det(CategoryId::P, 3).unwrap().eval(&int(2)), int(0));
        let nc2_6 = x.pow(5) * (&x.pow(2) - &one).pow(4) * (&x.pow(2) - &Poly::from_i64(2));
        assert_eq!(difrancesco_det(CategoryId::NC2, 6).unwrap().expand().unwrap(), nc2_6);
        let nc3 = x.pow(5) * nm1.pow(4) * (&x - &Poly::from_i64(2));
        assert_eq!(difrancesco_det(CategoryId::NC, 3).unwrap().expand().unwrap(), nc3);
        assert!(difrancesco_det(CategoryId::NCEven, 3).is_err());
    }

    #[test]
    fn a_exponent_conventions() {
        assert_eq!(a_exponent(ClassFilter::Noncrossing, 3).unwrap(), 5);
        assert_eq!(a_exponent(ClassFilter::All, 5).unwrap(), a_exponent(ClassFilter::Noncrossing, 5).unwrap());
        assert_eq!(a_exponent(ClassFilter::Noncrossing, 6).unwrap(), 132);
        assert_eq!(a_exponent(ClassFilter::All, 6).unwrap(), 130);
    }

    #[test]
    fn display() {
        let f = difrancesco_det(CategoryId::NC, 3).unwrap();
        assert_eq!(f.to_string(), "N^5 (N - 1)^4 (N - 2)");
    }
}
