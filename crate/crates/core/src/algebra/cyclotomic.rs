use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::ring::Ring;

/// Element of `R[x]/(Φ_s(x))`, with `x` standing for `ζ_s = exp(2πi/s)`.
///
/// Modulus `0` marks a bare scalar that has not met any root of unity yet; it
/// adopts the modulus of whatever it is combined with. This keeps `zero()` and
/// `one()` usable as ring constants.
#[derive(Clone, Debug)]
pub struct Cyclotomic<R> {
    modulus: u32,
    coeffs: Vec<R>,
}

fn cyclotomic_poly(s: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&s) {
        return p.clone();
    }
    // x^s - 1 divided by every Φ_d with d | s, d < s.
    let mut num = vec![0i64; s as usize + 1];
    num[0] = -1;
    num[s as usize] = 1;
    for d in 1..s {
        if s % d == 0 {
            let div = cyclotomic_poly(d);
            num = monic_div(&num, &div);
        }
    }
    let out = Arc::new(num);
    cache.lock().unwrap().insert(s, out.clone());
    out
}

fn monic_div(num: &[i64], div: &[i64]) -> Vec<i64> {
    let dd = div.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in div.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Euler totient, the degree of `Φ_s`.
pub fn totient(s: u32) -> usize {
    cyclotomic_poly(s).len() - 1
}

impl<R: Ring> Cyclotomic<R> {
    pub fn scalar(c: R) -> Self {
        Cyclotomic { modulus: 0, coeffs: vec![c] }
    }

    /// `c·ζ_s^k`.
    pub fn root(s: u32, k: i64, c: R) -> Self {
        assert!(s >= 1, "root of unity order must be positive");
        let e = k.rem_euclid(s as i64) as usize;
        let mut raw = vec![R::zero(); s as usize];
        raw[e] = c;
        Cyclotomic::reduce(s, raw)
    }

    fn reduce(s: u32, mut raw: Vec<R>) -> Self {
        let phi = cyclotomic_poly(s);
        let deg = phi.len() - 1;
        for d in (deg..raw.len()).rev() {
            let c = raw[d].clone();
            if c.is_zero() {
                continue;
            }
            for (j, &p) in phi.iter().enumerate() {
                if p != 0 {
                    let idx = d - deg + j;
                    raw[idx] = raw[idx].clone() - c.clone() * R::from_i64(p);
                }
            }
        }
        raw.truncate(deg);
        raw.resize(deg, R::zero());
        Cyclotomic { modulus: s, coeffs: raw }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Coefficients over the power basis `1, ζ, …, ζ^{φ(s)-1}`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn with_modulus(&self, s: u32) -> Self {
        if self.modulus == s || s == 0 {
            return self.clone();
        }
        assert_eq!(self.modulus, 0, "mixing roots of unity of orders {} and {s}", self.modulus);
        let c = self.coeffs.first().cloned().unwrap_or_else(R::zero);
        let mut raw = vec![R::zero(); totient(s).max(1)];
        raw[0] = c;
        Cyclotomic::reduce(s, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let s = a.modulus.max(b.modulus);
        (a.with_modulus(s), b.with_modulus(s))
    }

    /// Complex conjugation, `ζ -> ζ^{-1}`.
    pub fn conj(&self) -> Self {
        if self.modulus == 0 {
            return self.clone();
        }
        let s = self.modulus as usize;
        let mut raw = vec![R::zero(); s];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[(s - i) % s] = c.clone();
        }
        Cyclotomic::reduce(self.modulus, raw)
    }

    /// The value as an element of `R` when it lies there.
    pub fn as_scalar(&self) -> Option<R> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(R::zero))
        } else {
            None
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Cyclotomic<S> {
        Cyclotomic { modulus: self.modulus, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn to_complex(&self, f: impl Fn(&R) -> f64) -> Complex64 {
        let s = self.modulus.max(1) as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| Complex64::from_polar(f(c), std::f64::consts::TAU * i as f64 / s))
            .sum()
    }
}

impl<R: Ring> PartialEq for Cyclotomic<R> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl<R: Ring> Zero for Cyclotomic<R> {
    fn zero() -> Self {
        Cyclotomic::scalar(R::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<R: Ring> One for Cyclotomic<R> {
    fn one() -> Self {
        Cyclotomic::scalar(R::one())
    }
}

impl<R: Ring> Ring for Cyclotomic<R> {
    fn from_i64(n: i64) -> Self {
        Cyclotomic::scalar(R::from_i64(n))
    }
}

impl<R: Ring> Add for Cyclotomic<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = Cyclotomic::common(&self, &rhs);
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect();
        Cyclotomic { modulus: a.modulus, coeffs }
    }
}

impl<R: Ring> Sub for Cyclotomic<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Cyclotomic<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { modulus: self.modulus, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Mul for Cyclotomic<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = Cyclotomic::common(&self, &rhs);
        if a.modulus == 0 {
            return Cyclotomic::scalar(a.coeffs[0].clone() * b.coeffs[0].clone());
        }
        let mut raw = vec![R::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] = raw[i + j].clone() + x.clone() * y.clone();
            }
        }
        Cyclotomic::reduce(a.modulus, raw)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Cyclotomic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z{}", self.modulus)?,
                _ => write!(f, "({c})z{}^{i}", self.modulus)?,
            }
        }
        Ok(())
    }
}
