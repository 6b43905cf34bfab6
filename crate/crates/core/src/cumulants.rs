//! Classical and free cumulants by Möbius inversion, moment-level
//! convolutions, truncated Cauchy and R-transform series, and the
//! Bercovici-Pata correspondence.
//!
//! Sequences are `[x_1, …, x_n]` over any [`Ring`], so the same code runs on
//! rationals and on polynomials in a parameter `t`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};

use crate::algebra::numbers::{binomial, fmt_rational};
use crate::algebra::{Rational, Ring};
use crate::error::{Error, Result};
use crate::partition::{enumerate, mobius, ClassFilter, ColoredWord, Partition, PosetMobius};

/// Largest order handled by lattice inversion.
pub const MAX_ORDER: usize = 10;

/// `Σ_π c_π ∏_{b∈π} x_{|b|}` grouped by block type: sorted block sizes and the
/// summed integer weight of all lattice members of that type.
type TypeTable = Vec<(Vec<usize>, i64)>;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
enum Table {
    AllCount,
    AllMobius,
    NcCount,
    NcMobius,
}

fn block_type(p: &Partition) -> Vec<usize> {
    let mut sizes = p.block_sizes();
    sizes.sort_unstable();
    sizes
}

fn build_table(kind: Table, n: usize) -> Result<TypeTable> {
    let word = ColoredWord::plain(n);
    let filter = match kind {
        Table::AllCount | Table::AllMobius => ClassFilter::All,
        Table::NcCount | Table::NcMobius => ClassFilter::Noncrossing,
    };
    let elems = enumerate(&word, filter)?;
    let weights: Vec<i64> = match kind {
        Table::AllCount | Table::NcCount => vec![1; elems.len()],
        Table::AllMobius => {
            let top = Partition::one_row(word.clone(), &vec![0; n])?;
            elems.iter().map(|p| mobius(p, &top)).collect::<Result<_>>()?
        }
        Table::NcMobius => {
            let top = elems.iter().position(|p| p.num_blocks() <= 1).unwrap_or(0);
            PosetMobius::new(elems.clone()).to_top(top)
        }
    };
    let mut grouped: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for (p, w) in elems.iter().zip(weights) {
        *grouped.entry(block_type(p)).or_default() += w;
    }
    Ok(grouped.into_iter().filter(|(_, w)| *w != 0).collect())
}

fn table(kind: Table, n: usize) -> Result<Arc<TypeTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(Table, usize), Arc<TypeTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(kind, n)) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_table(kind, n)?);
    cache.lock().unwrap().insert((kind, n), t.clone());
    Ok(t)
}

fn check_order<R>(seq: &[R], n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::Capacity(format!("order {n} exceeds {MAX_ORDER}")));
    }
    if seq.len() < n {
        return Err(Error::Shape(format!("sequence of length {} for order {n}", seq.len())));
    }
    Ok(())
}

fn apply<R: Ring>(kind: Table, seq: &[R], n: usize) -> Result<Vec<R>> {
    check_order(seq, n)?;
    (1..=n)
        .map(|m| {
            let t = table(kind, m)?;
            Ok(t.iter().fold(R::zero(), |acc, (sizes, w)| {
                let prod = sizes.iter().fold(R::one(), |p, &s| p * seq[s - 1].clone());
                acc + R::from_i64(*w) * prod
            }))
        })
        .collect()
}

/// `k_m = Σ_{π ∈ P(m)} μ(π, 1_m) M_π`.
pub fn moments_to_cumulants_classical<R: Ring>(m: &[R], n: usize) -> Result<Vec<R>> {
    apply(Table::AllMobius, m, n)
}

/// `M_m = Σ_{π ∈ P(m)} k_π`.
pub fn cumulants_to_moments_classical<R: Ring>(k: &[R], n: usize) -> Result<Vec<R>> {
    apply(Table::AllCount, k, n)
}

/// `κ_m = Σ_{π ∈ NC(m)} μ_{NC}(π, 1_m) M_π`, with the Möbius function of the
/// noncrossing poset itself.
pub fn moments_to_cumulants_free<R: Ring>(m: &[R], n: usize) -> Result<Vec<R>> {
    apply(Table::NcMobius, m, n)
}

/// `M_m = Σ_{π ∈ NC(m)} κ_π`.
pub fn cumulants_to_moments_free<R: Ring>(k: &[R], n: usize) -> Result<Vec<R>> {
    apply(Table::NcCount, k, n)
}

/// Moments from classical cumulants by `M_n = Σ_k C(n−1, k−1) k_k M_{n−k}`,
/// for orders beyond lattice enumeration.
pub fn classical_moments_recursive<R: Ring>(k: &[R], n: usize) -> Vec<R> {
    let mut m = vec![R::one()];
    for len in 1..=n {
        let mut acc = R::zero();
        for j in 1..=len.min(k.len()) {
            let c = binomial(len as i64 - 1, j as i64 - 1);
            let c = R::from_i64(i64::try_from(c).expect("binomial fits"));
            acc = acc + c * k[j - 1].clone() * m[len - j].clone();
        }
        m.push(acc);
    }
    m.split_off(1)
}

/// Moments from free cumulants through `M(z) = 1 + Σ_s κ_s z^s M(z)^s`.
/// `pow[s][d]` holds the coefficient of `z^d` in `M^s`; each step fills one
/// antidiagonal, so the cost is cubic in `n`.
pub fn free_moments_recursive<R: Ring>(k: &[R], n: usize) -> Vec<R> {
    let mut m = vec![R::one()];
    let mut pow: Vec<Vec<R>> = vec![vec![R::one()]];
    for len in 1..=n {
        pow[0].push(R::zero());
        pow.push(Vec::new());
        for s in 1..=len {
            let d = len - s;
            let v = (0..=d).fold(R::zero(), |acc, j| acc + m[j].clone() * pow[s - 1][d - j].clone());
            pow[s].push(v);
        }
        let acc = (1..=len.min(k.len())).fold(R::zero(), |acc, s| acc + k[s - 1].clone() * pow[s][len - s].clone());
        m.push(acc);
    }
    m.split_off(1)
}

pub fn classical_convolve<R: Ring>(a: &[R], b: &[R], n: usize) -> Result<Vec<R>> {
    let ka = moments_to_cumulants_classical(a, n)?;
    let kb = moments_to_cumulants_classical(b, n)?;
    let sum: Vec<R> = ka.into_iter().zip(kb).map(|(x, y)| x + y).collect();
    cumulants_to_moments_classical(&sum, n)
}

pub fn free_convolve<R: Ring>(a: &[R], b: &[R], n: usize) -> Result<Vec<R>> {
    let ka = moments_to_cumulants_free(a, n)?;
    let kb = moments_to_cumulants_free(b, n)?;
    let sum: Vec<R> = ka.into_iter().zip(kb).map(|(x, y)| x + y).collect();
    cumulants_to_moments_free(&sum, n)
}

/// Classical cumulants read as free cumulants.
pub fn bp_map<R: Ring>(m: &[R], n: usize) -> Result<Vec<R>> {
    cumulants_to_moments_free(&moments_to_cumulants_classical(m, n)?, n)
}

/// Free cumulants read as classical cumulants.
pub fn bp_inverse<R: Ring>(m: &[R], n: usize) -> Result<Vec<R>> {
    cumulants_to_moments_classical(&moments_to_cumulants_free(m, n)?, n)
}

/// Truncated power series `Σ_{i<order} c_i w^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
    order: usize,
}

impl<R: Ring> Series<R> {
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        Series { coeffs, order }
    }

    pub fn one(order: usize) -> Self {
        Series::new(vec![R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn add(&self, other: &Series<R>) -> Series<R> {
        let order = self.order.min(other.order);
        Series::new((0..order).map(|i| self.coeff(i) + other.coeff(i)).collect(), order)
    }

    pub fn mul(&self, other: &Series<R>) -> Series<R> {
        let order = self.order.min(other.order);
        let mut out = vec![R::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series::new(out, order)
    }

    /// `w^k · self`, keeping the order.
    pub fn shift(&self, k: usize) -> Series<R> {
        let mut c = vec![R::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        c.truncate(self.order);
        Series::new(c, self.order)
    }

    /// Multiplicative inverse of a series with constant term one.
    pub fn inverse_unit(&self) -> Result<Series<R>> {
        if self.coeff(0) != R::one() {
            return Err(Error::Domain("series inverse needs constant term 1".into()));
        }
        let mut inv = vec![R::one()];
        for i in 1..self.order {
            let s = (1..=i).fold(R::zero(), |acc, j| acc + self.coeff(j) * inv[i - j].clone());
            inv.push(-s);
        }
        Ok(Series::new(inv, self.order))
    }
}

impl Series<Rational> {
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "coeffs": self.coeffs.iter().map(fmt_rational).collect::<Vec<_>>(),
        })
    }
}

/// `G(ξ)/ξ^{-1} = 1 + M_1 w + M_2 w² + …` in `w = 1/ξ`, to order `n + 1`.
pub fn cauchy_series<R: Ring>(m: &[R], n: usize) -> Result<Series<R>> {
    if m.len() < n {
        return Err(Error::Shape(format!("{} moments for order {n}", m.len())));
    }
    let mut c = vec![R::one()];
    c.extend(m[..n].iter().cloned());
    Ok(Series::new(c, n + 1))
}

/// `R(ξ) = Σ_{j ≥ 1} κ_j ξ^{j−1}` to order `n`.
pub fn r_series<R: Ring>(m: &[R], n: usize) -> Result<Series<R>> {
    Ok(Series::new(moments_to_cumulants_free(m, n)?, n))
}

/// Checks `K(G(ξ)) = ξ` with `K(ξ) = 1/ξ + R(ξ)`. Writing `G = w H`, this is
/// `1/H + Σ_j κ_j w^j H^{j−1} = 1` up to `w^n`.
pub fn check_inversion<R: Ring>(m: &[R], n: usize) -> Result<bool> {
    let h = cauchy_series(m, n)?;
    let kappa = moments_to_cumulants_free(m, n)?;
    let mut total = h.inverse_unit()?;
    let mut power = Series::one(n + 1);
    for (j, k) in kappa.iter().enumerate() {
        let term = power.shift(j + 1).mul(&Series::new(vec![k.clone()], n + 1));
        total = total.add(&term);
        power = power.mul(&h);
    }
    Ok(total == Series::one(n + 1))
}

/// `M_π = ∏_{b ∈ π} M_{|b|}` for a one-row partition.
pub fn extend_to_partition<R: Ring>(seq: &[R], pi: &Partition) -> R {
    pi.block_sizes().iter().fold(R::one(), |acc, &s| acc * seq[s - 1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::rat;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(moments_to_cumulants_classical(&q(&[1, 2, 5, 15]), 4).unwrap(), q(&[1, 1, 1, 1]));
        assert_eq!(moments_to_cumulants_classical(&q(&[0, 1, 0, 3]), 4).unwrap(), q(&[0, 1, 0, 0]));
        assert_eq!(moments_to_cumulants_classical(&q(&[3, 9, 27, 81]), 4).unwrap(), q(&[3, 0, 0, 0]));
    }

    #[test]
    fn free_examples() {
        assert_eq!(moments_to_cumulants_free(&q(&[0, 1, 0, 2]), 4).unwrap(), q(&[0, 1, 0, 0]));
        assert_eq!(moments_to_cumulants_free(&q(&[1, 2, 5, 14]), 4).unwrap(), q(&[1, 1, 1, 1]));
        assert_eq!(bp_map(&q(&[1, 2, 5, 15]), 4).unwrap(), q(&[1, 2, 5, 14]));
    }

    #[test]
    fn recursions_match_lattice_sums() {
        let k = q(&[2, -1, 3, 0, 5, 1, -2, 4]);
        assert_eq!(classical_moments_recursive(&k, 8), cumulants_to_moments_classical(&k, 8).unwrap());
        assert_eq!(free_moments_recursive(&k, 8), cumulants_to_moments_free(&k, 8).unwrap());
    }

    #[test]
    fn series() {
        let r = r_series(&q(&[0, 1, 0, 2, 0, 5]), 6).unwrap();
        assert_eq!(r.coeffs(), &q(&[0, 1, 0, 0, 0, 0])[..]);
        assert!(check_inversion(&q(&[1, 2, 5, 14, 42]), 5).unwrap());
        assert!(check_inversion(&q(&[1, 2, 5, 15, 52]), 5).unwrap());
        let s = Series::new(q(&[1, -1]), 5);
        assert_eq!(s.inverse_unit().unwrap().coeffs(), &q(&[1, 1, 1, 1, 1])[..]);
    }

    #[test]
    fn order_limit() {
        assert!(matches!(moments_to_cumulants_free(&q(&[0; 11]), 11), Err(Error::Capacity(_))));
        assert!(matches!(moments_to_cumulants_free(&q(&[0; 3]), 4), Err(Error::Shape(_))));
    }
}
