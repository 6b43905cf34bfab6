//! Density recovery from moments through the Cauchy transform.
//!
//! [`stieltjes_series`] sums the defining expansion of `G` directly; it only
//! converges for `|x + iε|` beyond the support radius. [`stieltjes_cf`]
//! evaluates `G` as the Jacobi continued fraction built from the same moments
//! and closes it with the fixed point of its last level, which is usable
//! inside the support.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::numbers::rational_to_f64;
use crate::algebra::{Poly, QPoly, Rational, Ring};
use crate::error::{Error, Result};

/// `-(1/π) Im Σ_{k=0}^{n} M_k (x+iε)^{-k-1}` with `M_0 = 1`.
pub fn stieltjes_series(m: &[f64], x: f64, eps: f64) -> f64 {
    let z = Complex64::new(x, eps);
    let w = z.inv();
    let mut power = w;
    let mut g = power;
    for mk in m {
        power *= w;
        g += power * mk;
    }
    -g.im / std::f64::consts::PI
}

fn functional(m: &[Rational], p: &QPoly) -> Rational {
    p.coeffs().iter().enumerate().fold(Rational::zero(), |acc, (i, c)| {
        let mi = if i == 0 { Rational::one() } else { m[i - 1].clone() };
        acc + c * mi
    })
}

/// Recurrence coefficients `(a_k, b_k)` of the monic orthogonal polynomials
/// `p_{k+1} = (x − a_k) p_k − b_k p_{k−1}` for the functional `L(x^i) = M_i`,
/// exactly. `b_0` is `1`. Stops early once `L(p_k²)` is no longer positive.
pub fn jacobi_coefficients(m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let x = Poly::x();
    let (mut a, mut b) = (Vec::new(), vec![Rational::one()]);
    let (mut prev, mut cur): (QPoly, QPoly) = (Poly::zero(), Poly::one());
    let mut norm_prev = Rational::one();
    loop {
        let k = a.len();
        if 2 * k + 1 > m.len() {
            break;
        }
        let norm = functional(m, &(&cur * &cur));
        if norm <= Rational::zero() {
            break;
        }
        if k > 0 {
            b.push(&norm / &norm_prev);
        }
        let ak = functional(m, &(&(&x * &cur) * &cur)) / &norm;
        a.push(ak.clone());
        let next = &(&(&x - &Poly::constant(ak)) * &cur) - &prev.scale(&b[k]);
        prev = cur;
        cur = next;
        norm_prev = norm;
    }
    (a, b)
}

/// `G(z)` from the continued fraction with coefficients from
/// [`jacobi_coefficients`].
pub fn stieltjes_cf(a: &[f64], b: &[f64], z: Complex64) -> Complex64 {
    let n = a.len();
    if n == 0 {
        return z.inv();
    }
    // tail T = 1/(z − a − b T), taking the branch in the lower half plane
    let (al, bl) = (a[n - 1], if n > 1 { b[n - 1] } else { 0.0 });
    let mut tail = if bl > 0.0 {
        let d = z - al;
        let root = (d * d - 4.0 * bl).sqrt();
        let t1 = (d - root) / (2.0 * bl);
        let t2 = (d + root) / (2.0 * bl);
        if t1.im <= 0.0 {
            t1
        } else {
            t2
        }
    } else {
        Complex64::zero()
    };
    let mut g = Complex64::zero();
    for k in (0..n).rev() {
        let bk1 = b.get(k + 1).copied().unwrap_or(bl);
        g = (z - a[k] - bk1 * tail).inv();
        tail = g;
    }
    g
}

/// Density estimate `−Im G(x + iε)/π` from the moments `M_1, …, M_n`.
pub fn stieltjes_invert(m: &[Rational], x: f64, eps: f64) -> Result<f64> {
    Inverter::new(m).density(x, eps)
}

/// Recurrence coefficients computed once, for inversion at many points.
#[derive(Clone, Debug)]
pub struct Inverter {
    a: Vec<f64>,
    b: Vec<f64>,
}

impl Inverter {
    pub fn new(m: &[Rational]) -> Self {
        let (a, b) = jacobi_coefficients(m);
        Inverter { a: a.iter().map(rational_to_f64).collect(), b: b.iter().map(rational_to_f64).collect() }
    }

    pub fn density(&self, x: f64, eps: f64) -> Result<f64> {
        if !(eps > 0.0) {
            return Err(Error::Domain(format!("smoothing {eps} must be positive")));
        }
        Ok(-stieltjes_cf(&self.a, &self.b, Complex64::new(x, eps)).im / std::f64::consts::PI)
    }
}

/// Reconstructs `M_1..M_n` from recurrence coefficients, the inverse of
/// [`jacobi_coefficients`] on its range: `M_j` is the top-left entry of
/// `J^j` for the tridiagonal Jacobi matrix.
pub fn moments_from_jacobi<R: Ring>(a: &[R], b: &[R], n: usize) -> Vec<R> {
    let size = a.len();
    let mut v = vec![R::zero(); size];
    if size == 0 {
        return vec![R::zero(); n];
    }
    v[0] = R::one();
    // coordinates of x^j in the basis p_0, p_1, …
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let mut w = vec![R::zero(); size];
        for i in 0..size {
            let mut s = a[i].clone() * v[i].clone();
            if i > 0 {
                s = s + v[i - 1].clone();
            }
            if i + 1 < size {
                s = s + b[i + 1].clone() * v[i + 1].clone();
            }
            w[i] = s;
        }
        v = w;
        out.push(v[0].clone());
    }
    out
}
