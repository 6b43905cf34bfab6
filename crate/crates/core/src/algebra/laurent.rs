use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::Ring;

/// Integer Laurent polynomial in one formal variable.
///
/// Exponents are plain integers; callers choose the unit. The braid code works
/// in powers of `A` and reads `q = A^-4`, so `q^{1/2}` is `A^-2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    /// The variable itself.
    pub fn var() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot = slot.checked_add(coeff).expect("laurent coefficient overflow");
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Substitute `x -> x^factor`.
    pub fn rescale_exponents(&self, factor: i32) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e * factor, c)))
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (e + shift, c)))
    }

    /// Inverse when the value is `±x^e`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, &c) = self.terms.iter().next().unwrap();
        (c == 1 || c == -1).then(|| LaurentPoly::monomial(c, -e))
    }

    /// Exact division by a nonzero Laurent polynomial, `None` if it leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let dmin = divisor.min_exp()?;
        let dmax = divisor.max_exp().unwrap();
        let lead = divisor.coeff(dmax);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(top) = rem.max_exp() {
            if top - rem.min_exp().unwrap() < dmax - dmin {
                return None;
            }
            let c = rem.coeff(top);
            if c % lead != 0 {
                return None;
            }
            let q = LaurentPoly::monomial(c / lead, top - dmax);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Some(quot)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms().map(|(e, c)| c as f64 * x.powi(e)).sum()
    }

    /// Display with exponents divided by `unit`, e.g. `unit = 2` renders
    /// `x^3` as `v^3/2`.
    pub fn display<'a>(&'a self, var: &'a str, unit: i32) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, var, unit }
    }
}

/// Render `num/den` reduced, as `"3"` or `"1/2"`.
pub fn fmt_exponent(num: i32, den: i32) -> String {
    let g = num_integer::gcd(num, den).max(1);
    let (n, d) = (num / g, den / g);
    let (n, d) = if d < 0 { (-n, -d) } else { (n, d) };
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }
}

impl Ring for LaurentPoly {
    fn from_i64(n: i64) -> Self {
        LaurentPoly::monomial(n, 0)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("laurent coefficient overflow"));
            }
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

pub struct LaurentDisplay<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
    unit: i32,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            let exp = fmt_exponent(e, self.unit);
            if exp == "1" {
                write!(f, "{}", self.var)?;
            } else {
                write!(f, "{}^{}", self.var, exp)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display("x", 1).fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().copied())
    }

    #[test]
    fn kauffman_loop_identity() {
        // (A + A^-1 e)(A^-1 + A e) = 1 + (A^2 + A^-2 + d) e with d = -A^2 - A^-2
        let d = lp(&[(2, -1), (-2, -1)]);
        let cross = &lp(&[(2, 1), (-2, 1)]) + &d;
        assert!(cross.is_zero());
    }

    #[test]
    fn division() {
        let d = lp(&[(2, -1), (-2, -1)]);
        let p = &d * &lp(&[(-3, 2), (5, 1)]);
        assert_eq!(p.div_exact(&d), Some(lp(&[(-3, 2), (5, 1)])));
        assert_eq!(lp(&[(0, 1)]).div_exact(&d), None);
        assert_eq!(lp(&[(0, 3)]).div_exact(&lp(&[(1, 2)])), None);
    }

    #[test]
    fn units() {
        assert_eq!(lp(&[(3, -1)]).unit_inverse(), Some(lp(&[(-3, -1)])));
        assert_eq!(lp(&[(3, 2)]).unit_inverse(), None);
    }

    #[test]
    fn renders_half_exponents() {
        let p = lp(&[(-1, -1), (1, -1)]);
        assert_eq!(p.display("q", 2).to_string(), "-q^-1/2 - q^1/2");
        assert_eq!(lp(&[(2, 1), (6, 1), (8, -1)]).display("q", 2).to_string(), "q + q^3 - q^4");
    }
}
