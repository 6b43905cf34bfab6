//! Classical and free limit laws: exact moments as partition sums, closed
//! densities, Bessel mass functions and density recovery from moments.

pub mod density;
pub mod stieltjes;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::numbers::{binomial, fmt_rational, stirling2};
use crate::algebra::{Poly, QPoly, Rational, Ring};
use crate::categories::{CategoryId, SParam};
use crate::cumulants::{classical_moments_recursive, free_moments_recursive};
use crate::error::{Error, Result};
use crate::partition::{Color, ColoredWord};

pub use density::{atoms, bessel_pmf, density, integrate, support, DensityGrid};
pub use stieltjes::{jacobi_coefficients, Inverter, stieltjes_cf, stieltjes_invert, stieltjes_series};

/// Longest word for which moments are computed by partition sums.
pub const MAX_WORD: usize = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LawSpec {
    Poisson(Rational),
    BesselReal(Rational),
    Bessel { s: u32, t: Rational },
    Gaussian(Rational),
    ComplexGaussian(Rational),
    Semicircle(Rational),
    Circular(Rational),
    MarchenkoPastur(Rational),
    FreeBessel { s: u32, t: Rational },
    Dirac(Rational),
    /// Pairs `(c_i, z_i)`: `Σ z_i α_i` with `α_i` Poisson of parameter `c_i`.
    CompoundPoisson(Vec<(Rational, Rational)>),
    /// Density `1/(π√(x(4−x)))` on `[0, 4]`.
    Arcsine,
    /// Density `√((2+x)/(2−x))/(2π)` on `[−2, 2]`.
    ModifiedArcsine,
}

impl LawSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |t: &Rational| {
            if t > &Rational::zero() {
                Ok(())
            } else {
                Err(Error::Domain(format!("parameter {} must be positive", fmt_rational(t))))
            }
        };
        match self {
            LawSpec::Poisson(t)
            | LawSpec::BesselReal(t)
            | LawSpec::Gaussian(t)
            | LawSpec::ComplexGaussian(t)
            | LawSpec::Semicircle(t)
            | LawSpec::Circular(t)
            | LawSpec::MarchenkoPastur(t) => positive(t),
            LawSpec::Bessel { s, t } | LawSpec::FreeBessel { s, t } => {
                if *s == 0 {
                    return Err(Error::Domain("s must be positive".into()));
                }
                positive(t)
            }
            LawSpec::CompoundPoisson(atoms) => atoms.iter().try_for_each(|(c, _)| positive(c)),
            LawSpec::Dirac(_) | LawSpec::Arcsine | LawSpec::ModifiedArcsine => Ok(()),
        }
    }

    /// Category whose members index the moments, `M_w = Σ_{π ∈ D(w)} t^{|π|}`.
    pub fn category(&self) -> Option<CategoryId> {
        Some(match self {
            LawSpec::Poisson(_) => CategoryId::P,
            LawSpec::BesselReal(_) => CategoryId::PEven,
            LawSpec::Bessel { s, .. } => CategoryId::Ps(SParam::Finite(*s)),
            LawSpec::Gaussian(_) => CategoryId::P2,
            LawSpec::ComplexGaussian(_) => CategoryId::CP2,
            LawSpec::Semicircle(_) => CategoryId::NC2,
            LawSpec::Circular(_) => CategoryId::CNC2,
            LawSpec::MarchenkoPastur(_) => CategoryId::NC,
            LawSpec::FreeBessel { s, .. } => CategoryId::NCs(SParam::Finite(*s)),
            _ => return None,
        })
    }

    pub fn parameter(&self) -> Option<&Rational> {
        match self {
            LawSpec::Poisson(t)
            | LawSpec::BesselReal(t)
            | LawSpec::Gaussian(t)
            | LawSpec::ComplexGaussian(t)
            | LawSpec::Semicircle(t)
            | LawSpec::Circular(t)
            | LawSpec::MarchenkoPastur(t)
            | LawSpec::Bessel { t, .. }
            | LawSpec::FreeBessel { t, .. } => Some(t),
            _ => None,
        }
    }

    /// Parses `NAME` with the parameter `t` (or `c` for a Dirac mass).
    pub fn parse(name: &str, t: Rational, s: Option<u32>) -> Result<LawSpec> {
        let law = match name.to_ascii_lowercase().as_str() {
            "poisson" => LawSpec::Poisson(t),
            "bessel-real" => LawSpec::BesselReal(t),
            "bessel" => LawSpec::Bessel { s: s.unwrap_or(2), t },
            "gaussian" => LawSpec::Gaussian(t),
            "complex-gaussian" => LawSpec::ComplexGaussian(t),
            "semicircle" => LawSpec::Semicircle(t),
            "circular" => LawSpec::Circular(t),
            "mp" | "marchenko-pastur" => LawSpec::MarchenkoPastur(t),
            "free-bessel" => LawSpec::FreeBessel { s: s.unwrap_or(2), t },
            "dirac" => LawSpec::Dirac(t),
            "arcsine" => LawSpec::Arcsine,
            "modified-arcsine" => LawSpec::ModifiedArcsine,
            _ => return Err(Error::Parse(format!("unknown law {name:?}"))),
        };
        law.validate()?;
        Ok(law)
    }

    /// Whether the law is a free one, with moments given by free cumulants.
    pub fn is_free(&self) -> bool {
        matches!(
            self,
            LawSpec::Semicircle(_) | LawSpec::Circular(_) | LawSpec::MarchenkoPastur(_) | LawSpec::FreeBessel { .. }
        )
    }
}

impl fmt::Display for LawSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |q: &Rational| fmt_rational(q);
        match self {
            LawSpec::Poisson(q) => write!(f, "poisson({})", t(q)),
            LawSpec::BesselReal(q) => write!(f, "bessel-real({})", t(q)),
            LawSpec::Bessel { s, t: q } => write!(f, "bessel(s={s}, {})", t(q)),
            LawSpec::Gaussian(q) => write!(f, "gaussian({})", t(q)),
            LawSpec::ComplexGaussian(q) => write!(f, "complex-gaussian({})", t(q)),
            LawSpec::Semicircle(q) => write!(f, "semicircle({})", t(q)),
            LawSpec::Circular(q) => write!(f, "circular({})", t(q)),
            LawSpec::MarchenkoPastur(q) => write!(f, "marchenko-pastur({})", t(q)),
            LawSpec::FreeBessel { s, t: q } => write!(f, "free-bessel(s={s}, {})", t(q)),
            LawSpec::Dirac(c) => write!(f, "dirac({})", t(c)),
            LawSpec::CompoundPoisson(a) => write!(f, "compound-poisson({} atoms)", a.len()),
            LawSpec::Arcsine => f.write_str("arcsine"),
            LawSpec::ModifiedArcsine => f.write_str("modified-arcsine"),
        }
    }
}

fn check_word(len: usize) -> Result<()> {
    if len > MAX_WORD {
        return Err(Error::Capacity(format!("moment of order {len} exceeds {MAX_WORD}")));
    }
    Ok(())
}

fn int_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `Σ_{π ∈ D(w)} t^{|π|}` as a polynomial in `t`.
pub fn block_polynomial(cat: CategoryId, word: &ColoredWord) -> Result<QPoly> {
    check_word(word.len())?;
    let counts = cat.block_counts(word)?;
    Ok(Poly::new(counts.into_iter().map(|c| int_rat(BigInt::from(c))).collect()))
}

/// Moment polynomials in `t` of a partition-sum law on `k = 1..=up_to` points.
pub fn moment_polys(law: &LawSpec, up_to: usize) -> Result<Vec<QPoly>> {
    let cat = law.category().ok_or_else(|| Error::Domain(format!("{law} has no partition-sum form")))?;
    (1..=up_to).map(|k| block_polynomial(cat, &ColoredWord::plain(k))).collect()
}

/// Exact moment on a colored word. White letters stand for `x`, black for `x̄`.
pub fn moment_word(law: &LawSpec, word: &ColoredWord) -> Result<Rational> {
    law.validate()?;
    check_word(word.len())?;
    if let (Some(cat), Some(t)) = (law.category(), law.parameter()) {
        return Ok(block_polynomial(cat, word)?.eval(t));
    }
    let k = word.len();
    match law {
        LawSpec::Dirac(c) => Ok(c.pow_u(k as u32)),
        LawSpec::CompoundPoisson(atoms) => Ok(compound_poisson_moment(atoms, |z| z.clone(), word)),
        LawSpec::Arcsine => Ok(int_rat(binomial(2 * k as i64, k as i64))),
        LawSpec::ModifiedArcsine => Ok(int_rat(binomial(k as i64, k as i64 / 2))),
        _ => Err(Error::Internal(format!("no moment rule for {law}"))),
    }
}

/// `M_1, …, M_up_to`.
pub fn moments(law: &LawSpec, up_to: usize) -> Result<Vec<Rational>> {
    (1..=up_to).map(|k| moment_word(law, &ColoredWord::plain(k))).collect()
}

/// Moments to orders beyond partition enumeration, from the cumulant
/// sequence of the law through the moment recursions.
pub fn long_moments(law: &LawSpec, up_to: usize) -> Result<Vec<Rational>> {
    law.validate()?;
    let t = law.parameter().cloned();
    let zero = Rational::zero();
    let kappa: Vec<Rational> = match (law, t) {
        (LawSpec::Semicircle(_), Some(t)) | (LawSpec::Gaussian(_), Some(t)) => {
            (1..=up_to).map(|n| if n == 2 { t.clone() } else { zero.clone() }).collect()
        }
        (LawSpec::MarchenkoPastur(_), Some(t)) | (LawSpec::Poisson(_), Some(t)) => vec![t; up_to],
        (LawSpec::FreeBessel { s, .. }, Some(t)) | (LawSpec::Bessel { s, .. }, Some(t)) => {
            (1..=up_to).map(|n| if n % *s as usize == 0 { t.clone() } else { zero.clone() }).collect()
        }
        (LawSpec::BesselReal(_), Some(t)) => {
            (1..=up_to).map(|n| if n % 2 == 0 { t.clone() } else { zero.clone() }).collect()
        }
        (LawSpec::Dirac(c), _) => (1..=up_to).map(|n| if n == 1 { c.clone() } else { zero.clone() }).collect(),
        (LawSpec::CompoundPoisson(atoms), _) => (1..=up_to)
            .map(|n| atoms.iter().fold(Rational::zero(), |acc, (c, z)| acc + c * z.pow_u(n as u32)))
            .collect(),
        _ => return moments(law, up_to),
    };
    Ok(if law.is_free() { free_moments_recursive(&kappa, up_to) } else { classical_moments_recursive(&kappa, up_to) })
}

fn touchard<R: Ring>(m: usize, c: &R) -> R {
    (0..=m).fold(R::zero(), |acc, b| {
        let s = stirling2(m, b).to_i64().expect("Stirling number fits");
        acc + R::from_i64(s) * c.pow_u(b as u32)
    })
}

fn factorial_i64(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative terms.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn multinomial(parts: &[usize]) -> i64 {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial_i64(n), |acc, &p| acc / factorial_i64(p))
}

/// `E[x^a x̄^b]` for `x = Σ z_i α_i`, `α_i` independent Poisson of parameter
/// `c_i`, by expanding both powers multinomially and using
/// `E[α^m] = Σ_b S(m, b) c^b`. Only the color counts of `word` matter.
pub fn compound_poisson_moment<R: Ring>(atoms: &[(R, R)], conj: impl Fn(&R) -> R, word: &ColoredWord) -> R {
    let a = word.0.iter().filter(|&&c| c == Color::White).count();
    let b = word.len() - a;
    let r = atoms.len();
    let bars: Vec<R> = atoms.iter().map(|(_, z)| conj(z)).collect();
    let mut total = R::zero();
    let (comp_a, comp_b) = (compositions(a, r), compositions(b, r));
    for ca in &comp_a {
        let wa = multinomial(ca);
        for cb in &comp_b {
            let mut term = R::from_i64(wa * multinomial(cb));
            for (i, (c, z)) in atoms.iter().enumerate() {
                term = term * z.pow_u(ca[i] as u32) * bars[i].pow_u(cb[i] as u32) * touchard(ca[i] + cb[i], c);
            }
            total = total + term;
        }
    }
    total
}

pub fn compound_poisson_moments(atoms: &[(Rational, Rational)], up_to: usize) -> Result<Vec<Rational>> {
    moments(&LawSpec::CompoundPoisson(atoms.to_vec()), up_to)
}

pub fn moments_to_json(m: &[Rational]) -> Value {
    json!(m.iter().map(fmt_rational).collect::<Vec<_>>())
}

/// `Σ t^{|π|}` displayed as a polynomial, e.g. `t^2 + t`.
pub fn poly_to_string(p: &QPoly) -> String {
    p.display("t").to_string()
}

/// `t/d` as a polynomial in `t`, for symbolic compound Poisson sums.
pub fn t_over(d: i64) -> QPoly {
    Poly::monomial(Rational::new(BigInt::one(), BigInt::from(d)), 1)
}
