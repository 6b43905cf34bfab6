//! Weingarten matrices, monomial integrals and truncated character moments.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{gram_over, members, IndexedMatrix};
use crate::algebra::numbers::{falling, stirling2};
use crate::algebra::{linalg, Matrix, Poly, QPoly, Rational};
use crate::categories::CategoryId;
use crate::diagram_maps::delta;
use crate::error::{Error, Result};
use crate::partition::{ColoredWord, Partition};

fn rational_gram(members: Vec<Partition>, n: u64) -> IndexedMatrix<Rational> {
    let g = gram_over(members, &BigInt::from(n));
    IndexedMatrix { members: g.members, matrix: linalg::to_rational(&g.matrix) }
}

/// `W = G⁻¹`, or the Moore-Penrose pseudo-inverse when `G` is singular.
pub fn weingarten_matrix(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<IndexedMatrix<Rational>> {
    if n == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let g = rational_gram(members(cat, word)?, n);
    let matrix = linalg::pseudo_inverse(&g.matrix)?;
    Ok(IndexedMatrix { members: g.members, matrix })
}

/// `∫ u_{i_1 j_1}^{e_1} … u_{i_k j_k}^{e_k} = Σ δ_π(i) δ_σ(j) W(π, σ)`,
/// indices 1-based.
pub fn integrate_monomial(cat: CategoryId, n: u64, word: &ColoredWord, i: &[usize], j: &[usize]) -> Result<Rational> {
    if i.len() != word.len() || j.len() != word.len() {
        return Err(Error::Shape(format!("{} and {} indices for a word of length {}", i.len(), j.len(), word.len())));
    }
    if let Some(bad) = i.iter().chain(j).find(|&&x| x == 0 || x as u64 > n) {
        return Err(Error::Domain(format!("index {bad} outside 1..={n}")));
    }
    let w = weingarten_matrix(cat, word, n)?;
    let di: Vec<bool> = w.members.iter().map(|p| delta(p, &[], i).map(|d| d == 1)).collect::<Result<_>>()?;
    let dj: Vec<bool> = w.members.iter().map(|p| delta(p, &[], j).map(|d| d == 1)).collect::<Result<_>>()?;
    let mut total = Rational::zero();
    for (a, _) in di.iter().enumerate().filter(|(_, &d)| d) {
        for (b, _) in dj.iter().enumerate().filter(|(_, &d)| d) {
            total += w.matrix.get(a, b);
        }
    }
    Ok(total)
}

/// `∫ χ_s^k = Tr(W_{kN} G_{ks})` for the truncated character `χ_s = Σ_{i ≤ s} u_ii`.
pub fn truncated_moment(cat: CategoryId, n: u64, word: &ColoredWord, s: u64) -> Result<Rational> {
    if s == 0 || s > n {
        return Err(Error::Domain(format!("truncation {s} outside 1..={n}")));
    }
    let w = weingarten_matrix(cat, word, n)?;
    let gs = rational_gram(w.members.clone(), s);
    Ok(w.matrix.mul(&gs.matrix)?.trace())
}

/// `Σ_{π ∈ D(k)} t^{|π|}` as a polynomial in `t`.
pub fn asymptotic_moment_poly(cat: CategoryId, word: &ColoredWord) -> Result<QPoly> {
    let counts = cat.block_counts(word)?;
    Ok(Poly::new(counts.into_iter().map(|c| Rational::from_integer(BigInt::from(c))).collect()))
}

pub fn asymptotic_moment(cat: CategoryId, word: &ColoredWord, t: &Rational) -> Result<Rational> {
    Ok(asymptotic_moment_poly(cat, word)?.eval(t))
}

/// Closed form of `∫_{S_N} χ_s^k`: `Σ_b s!/(s−b)! (N−b)!/N! S(k, b)`.
pub fn sn_truncated_closed(n: u64, s: u64, k: usize) -> Result<Rational> {
    if s > n {
        return Err(Error::Domain(format!("truncation {s} exceeds {n}")));
    }
    let (nb, sb) = (BigInt::from(n), BigInt::from(s));
    let mut total = Rational::zero();
    for b in 0..=k.min(s as usize) {
        let st = stirling2(k, b);
        if st.is_zero() {
            continue;
        }
        total += Rational::new(falling(&sb, b as u64) * st, falling(&nb, b as u64));
    }
    Ok(total)
}

/// `G W G` and `W G W`, for checking the pseudo-inverse identities.
pub fn sandwich(g: &Matrix<Rational>, w: &Matrix<Rational>) -> Result<(Matrix<Rational>, Matrix<Rational>)> {
    Ok((g.mul(w)?.mul(g)?, w.mul(g)?.mul(w)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::rat;

    fn plain(k: usize) -> ColoredWord {
        ColoredWord::plain(k)
    }

    #[test]
    fn weingarten_examples() {
        let w = weingarten_matrix(CategoryId::P2, &plain(2), 7).unwrap();
        assert_eq!(w.matrix.to_rows(), vec![vec![rat(1, 7)]]);
        let w = weingarten_matrix(CategoryId::P, &plain(2), 4).unwrap();
        assert_eq!(w.matrix.to_rows(), vec![vec![rat(1, 12), rat(-1, 12)], vec![rat(-1, 12), rat(1, 3)]]);
        let w = weingarten_matrix(CategoryId::CP2, &ColoredWord::parse("obob").unwrap(), 2).unwrap();
        assert_eq!(w.matrix.to_rows(), vec![vec![rat(1, 3), rat(-1, 6)], vec![rat(-1, 6), rat(1, 3)]]);
    }

    #[test]
    fn singular_identities() {
        let g = rational_gram(members(CategoryId::P, &plain(4)).unwrap(), 2);
        let w = weingarten_matrix(CategoryId::P, &plain(4), 2).unwrap();
        let (gwg, wgw) = sandwich(&g.matrix, &w.matrix).unwrap();
        assert_eq!(gwg, g.matrix);
        assert_eq!(wgw, w.matrix);
    }

    #[test]
    fn monomials() {
        let v = integrate_monomial(CategoryId::P, 4, &plain(2), &[1, 2], &[1, 2]).unwrap();
        assert_eq!(v, rat(1, 12));
        for n in [3u64, 5, 8] {
            let n_i = n as i64;
            let v = integrate_monomial(CategoryId::P2, n, &plain(4), &[1; 4], &[1; 4]).unwrap();
            assert_eq!(v, rat(3, n_i * (n_i + 2)));
            let v = integrate_monomial(CategoryId::CP2, n, &ColoredWord::parse("obob").unwrap(), &[1; 4], &[1; 4]).unwrap();
            assert_eq!(v, rat(2, n_i * (n_i + 1)));
        }
        assert!(integrate_monomial(CategoryId::P, 4, &plain(2), &[1], &[1, 2]).is_err());
        assert!(integrate_monomial(CategoryId::P, 4, &plain(2), &[1, 5], &[1, 2]).is_err());
    }

    #[test]
    fn truncated() {
        assert_eq!(truncated_moment(CategoryId::P, 5, &plain(1), 3).unwrap(), rat(3, 5));
        assert_eq!(truncated_moment(CategoryId::P, 3, &plain(2), 3).unwrap(), rat(2, 1));
        assert_eq!(truncated_moment(CategoryId::P, 3, &plain(1), 2).unwrap(), rat(2, 3));
        assert!(truncated_moment(CategoryId::P, 3, &plain(1), 4).is_err());
        assert_eq!(sn_truncated_closed(3, 2, 1).unwrap(), rat(2, 3));
        assert_eq!(sn_truncated_closed(5, 5, 2).unwrap(), rat(2, 1));
        assert_eq!(sn_truncated_closed(4, 1, 0).unwrap(), rat(1, 1));
    }

    #[test]
    fn asymptotic() {
        assert_eq!(asymptotic_moment(CategoryId::P, &plain(3), &rat(1, 1)).unwrap(), rat(5, 1));
        let p = asymptotic_moment_poly(CategoryId::P, &plain(2)).unwrap();
        assert_eq!(p, Poly::new(vec![rat(0, 1), rat(1, 1), rat(1, 1)]));
        assert_eq!(asymptotic_moment(CategoryId::NC2, &plain(4), &rat(1, 1)).unwrap(), rat(2, 1));
    }
}
