//! Closed densities, atoms, quadrature and Bessel mass functions.

use std::f64::consts::PI;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::LawSpec;
use crate::algebra::numbers::{fmt_rational, rational_to_f64};
use crate::algebra::Rational;
use crate::error::{Error, Result};

fn unsupported(law: &LawSpec) -> Error {
    Error::Domain(format!("{law} has no closed density"))
}

/// Closure of the absolutely continuous part, or `None` for an unbounded one.
pub fn support(law: &LawSpec) -> Result<Option<(f64, f64)>> {
    Ok(match law {
        LawSpec::Semicircle(t) => {
            let r = 2.0 * rational_to_f64(t).sqrt();
            Some((-r, r))
        }
        LawSpec::MarchenkoPastur(t) => {
            let s = rational_to_f64(t).sqrt();
            Some(((1.0 - s).powi(2), (1.0 + s).powi(2)))
        }
        LawSpec::Arcsine => Some((0.0, 4.0)),
        LawSpec::ModifiedArcsine => Some((-2.0, 2.0)),
        LawSpec::Gaussian(_) => None,
        LawSpec::Dirac(c) => {
            let c = rational_to_f64(c);
            Some((c, c))
        }
        _ => return Err(unsupported(law)),
    })
}

/// Point masses as `(location, mass)`.
pub fn atoms(law: &LawSpec) -> Result<Vec<(Rational, Rational)>> {
    Ok(match law {
        LawSpec::MarchenkoPastur(t) if t < &Rational::one() => vec![(Rational::zero(), Rational::one() - t)],
        LawSpec::Dirac(c) => vec![(c.clone(), Rational::one())],
        LawSpec::Semicircle(_)
        | LawSpec::MarchenkoPastur(_)
        | LawSpec::Arcsine
        | LawSpec::ModifiedArcsine
        | LawSpec::Gaussian(_) => vec![],
        _ => return Err(unsupported(law)),
    })
}

/// Density of the absolutely continuous part at `x`; zero outside the support.
pub fn density(law: &LawSpec, x: f64) -> Result<f64> {
    law.validate()?;
    let v = match law {
        LawSpec::Semicircle(t) => {
            let t = rational_to_f64(t);
            let r = 4.0 * t - x * x;
            if r <= 0.0 {
                0.0
            } else {
                r.sqrt() / (2.0 * PI * t)
            }
        }
        LawSpec::MarchenkoPastur(t) => {
            let t = rational_to_f64(t);
            let r = 4.0 * t - (x - 1.0 - t).powi(2);
            if r <= 0.0 || x <= 0.0 {
                0.0
            } else {
                r.sqrt() / (2.0 * PI * x)
            }
        }
        LawSpec::Arcsine => {
            if x <= 0.0 || x >= 4.0 {
                0.0
            } else {
                1.0 / (PI * (x * (4.0 - x)).sqrt())
            }
        }
        LawSpec::ModifiedArcsine => {
            if x <= -2.0 || x >= 2.0 {
                0.0
            } else {
                ((2.0 + x) / (2.0 - x)).sqrt() / (2.0 * PI)
            }
        }
        LawSpec::Gaussian(t) => {
            let t = rational_to_f64(t);
            (-x * x / (2.0 * t)).exp() / (2.0 * PI * t).sqrt()
        }
        LawSpec::Dirac(_) => 0.0,
        _ => return Err(unsupported(law)),
    };
    Ok(v)
}

/// `∫ g dμ` over the absolutely continuous part plus the atoms. Bounded
/// supports use `x = c + r cos θ`, which absorbs square-root endpoint
/// behaviour, followed by the composite midpoint rule, which never samples
/// the endpoints.
pub fn integrate(law: &LawSpec, g: impl Fn(f64) -> f64, intervals: usize) -> Result<f64> {
    let n = intervals.max(1);
    let mut total: f64 = atoms(law)?.iter().map(|(x, m)| rational_to_f64(m) * g(rational_to_f64(x))).sum();
    let (f, a, b): (Box<dyn Fn(f64) -> f64 + '_>, f64, f64) = match support(law)? {
        Some((lo, hi)) if hi > lo => {
            let (c, r) = ((lo + hi) / 2.0, (hi - lo) / 2.0);
            let d = |x: f64| density(law, x).unwrap_or(0.0);
            (Box::new(move |th: f64| d(c + r * th.cos()) * g(c + r * th.cos()) * r * th.sin()), 0.0, PI)
        }
        Some(_) => return Ok(total),
        None => {
            let w = 14.0 * rational_to_f64(law.parameter().expect("unbounded laws carry a parameter")).sqrt();
            (Box::new(move |x: f64| density(law, x).unwrap_or(0.0) * g(x)), -w, w)
        }
    };
    let h = (b - a) / n as f64;
    total += (0..n).map(|i| f(a + (i as f64 + 0.5) * h)).sum::<f64>() * h;
    Ok(total)
}

/// Bound on the neglected tail of the Bessel series.
pub const PMF_TAIL: f64 = 1e-13;

/// Mass at `k` of the `s`-Bessel law of parameter `t`, for `s ∈ {1, 2}`:
/// `e^{-t} Σ_p (t/2)^{|k|+2p} / ((|k|+p)! p!)` for `s = 2`, and the Poisson
/// mass for `s = 1`.
pub fn bessel_pmf(s: u32, t: f64, k: i64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("parameter {t} must be a nonnegative number")));
    }
    match s {
        1 => {
            if k < 0 {
                return Ok(0.0);
            }
            let mut term = (-t).exp();
            for j in 1..=k {
                term *= t / j as f64;
            }
            Ok(term)
        }
        2 => {
            let a = k.unsigned_abs() as f64;
            let h = t / 2.0;
            // first term e^{-t} h^a / a!
            let mut term = (-t).exp();
            for j in 1..=k.unsigned_abs() {
                term *= h / j as f64;
            }
            let mut sum = 0.0;
            let mut p = 0.0;
            loop {
                sum += term;
                let ratio = h * h / ((a + p + 1.0) * (p + 1.0));
                term *= ratio;
                p += 1.0;
                // ratios decrease from here on, so the tail is geometric
                if ratio < 0.5 && term / (1.0 - ratio) < PMF_TAIL {
                    break;
                }
            }
            Ok(sum)
        }
        _ => Err(Error::Domain(format!("no closed mass function for s = {s}"))),
    }
}

/// Density sampled on a grid, with the exact atoms alongside.
#[derive(Clone, PartialEq, Debug)]
pub struct DensityGrid {
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    pub atoms: Vec<(Rational, Rational)>,
}

impl DensityGrid {
    /// `points` evenly spaced abscissae from `a` to `b` inclusive.
    pub fn linspace(a: f64, b: f64, points: usize) -> Result<Vec<f64>> {
        if points < 2 || !(b > a) {
            return Err(Error::Domain(format!("grid needs a < b and at least 2 points, got [{a}, {b}] x {points}")));
        }
        Ok((0..points).map(|i| a + (b - a) * i as f64 / (points - 1) as f64).collect())
    }

    /// Abscissae `a, a + step, …` up to `b`.
    pub fn stepped(a: f64, b: f64, step: f64) -> Result<Vec<f64>> {
        if !(step > 0.0) || !(b > a) {
            return Err(Error::Domain(format!("bad grid {a}:{b}:{step}")));
        }
        let n = ((b - a) / step + 1e-9).floor() as usize;
        Ok((0..=n).map(|i| a + step * i as f64).collect())
    }

    pub fn closed_form(law: &LawSpec, xs: Vec<f64>) -> Result<DensityGrid> {
        let values = xs.iter().map(|&x| density(law, x)).collect::<Result<_>>()?;
        Ok(DensityGrid { xs, values, atoms: atoms(law)? })
    }

    pub fn rows(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.values.iter().copied())
    }

    pub fn atoms_json(&self) -> Value {
        json!(self
            .atoms
            .iter()
            .map(|(x, m)| json!({"at": fmt_rational(x), "mass": fmt_rational(m)}))
            .collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::rat;

    #[test]
    fn point_values() {
        let one = rat(1, 1);
        assert!((density(&LawSpec::Semicircle(one.clone()), 0.0).unwrap() - 1.0 / PI).abs() < 1e-12);
        assert_eq!(density(&LawSpec::MarchenkoPastur(one.clone()), 4.0).unwrap(), 0.0);
        assert!((density(&LawSpec::Arcsine, 2.0).unwrap() - 1.0 / (2.0 * PI)).abs() < 1e-12);
        assert!(density(&LawSpec::Poisson(one), 1.0).is_err());
        let mp = LawSpec::MarchenkoPastur(rat(1, 4));
        assert_eq!(atoms(&mp).unwrap(), vec![(rat(0, 1), rat(3, 4))]);
    }

    #[test]
    fn normalized() {
        for law in [
            LawSpec::Semicircle(rat(1, 1)),
            LawSpec::Semicircle(rat(3, 2)),
            LawSpec::MarchenkoPastur(rat(1, 1)),
            LawSpec::MarchenkoPastur(rat(1, 3)),
            LawSpec::Arcsine,
            LawSpec::ModifiedArcsine,
            LawSpec::Gaussian(rat(2, 1)),
            LawSpec::Dirac(rat(5, 1)),
        ] {
            let mass = integrate(&law, |_| 1.0, 4000).unwrap();
            assert!((mass - 1.0).abs() < 1e-6, "{law}: {mass}");
        }
    }

    #[test]
    fn bessel_masses() {
        assert!((bessel_pmf(2, 0.0, 0).unwrap() - 1.0).abs() < 1e-15);
        assert!((bessel_pmf(2, 1.0, 0).unwrap() - 0.465_759_607_593_640_3).abs() < 1e-12);
        for k in 0..6 {
            let poisson = (-2.5f64).exp() * 2.5f64.powi(k as i32) / (1..=k).product::<i64>() as f64;
            assert!((bessel_pmf(1, 2.5, k).unwrap() - poisson).abs() < 1e-15);
        }
        assert_eq!(bessel_pmf(1, 1.0, -1).unwrap(), 0.0);
        assert!(bessel_pmf(3, 1.0, 0).is_err());
    }

    #[test]
    fn grids() {
        let xs = DensityGrid::linspace(-1.8, 1.8, 101).unwrap();
        assert_eq!(xs.len(), 101);
        assert!((xs[100] - 1.8).abs() < 1e-12);
        assert_eq!(DensityGrid::stepped(0.0, 1.0, 0.25).unwrap().len(), 5);
        assert!(DensityGrid::linspace(1.0, 0.0, 3).is_err());
    }
}
