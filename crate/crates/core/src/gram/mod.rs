//! Gram matrices of partition vectors, their determinants, Weingarten
//! matrices and the integration and moment formulas built on them.

pub mod formulas;
pub mod weingarten;
pub mod young;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::numbers::{falling, fmt_rational};
use crate::algebra::{linalg, IntPoly, Matrix, Poly, Rational};
use crate::categories::CategoryId;
use crate::error::{Error, Result};
use crate::partition::{ColoredWord, Partition};

pub use formulas::{
    a_exponent, binomial_exponents, bn_det, chebyshev, difrancesco_det, lindstrom_det, on_det, primed_exponents,
    Factored,
};
pub use weingarten::{
    asymptotic_moment, asymptotic_moment_poly, integrate_monomial, sn_truncated_closed, truncated_moment,
    weingarten_matrix,
};
pub use young::{diagrams, standard_tableaux_brute, standard_tableaux_count, YoungDiagram};

/// Most members a Gram matrix is built over.
pub const MAX_MEMBERS: usize = 256;
/// Largest matrix whose determinant is expanded with polynomial entries.
pub const MAX_SYMBOLIC: usize = 15;

/// Matrix indexed on both sides by the same canonically ordered members.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexedMatrix<T> {
    pub members: Vec<Partition>,
    pub matrix: Matrix<T>,
}

impl<T: Clone> IndexedMatrix<T> {
    pub fn position(&self, p: &Partition) -> Option<usize> {
        self.members.binary_search(p).ok()
    }

    /// Entry addressed by partitions rather than positions.
    pub fn entry(&self, pi: &Partition, sigma: &Partition) -> Option<&T> {
        Some(self.matrix.get(self.position(pi)?, self.position(sigma)?))
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl<T: Clone + ToString> IndexedMatrix<T> {
    pub fn to_json_with(&self, cell: impl Fn(&T) -> String) -> Value {
        let rows: Vec<Vec<String>> =
            (0..self.matrix.rows()).map(|i| self.matrix.row(i).iter().map(&cell).collect()).collect();
        json!({
            "index": self.members.iter().map(Partition::to_json).collect::<Vec<_>>(),
            "matrix": rows,
        })
    }
}

impl IndexedMatrix<Rational> {
    pub fn to_json(&self) -> Value {
        self.to_json_with(fmt_rational)
    }
}

/// Category members on `word`, capped at [`MAX_MEMBERS`].
pub fn members(cat: CategoryId, word: &ColoredWord) -> Result<Vec<Partition>> {
    let m = cat.members(word)?;
    if m.len() > MAX_MEMBERS {
        return Err(Error::Capacity(format!("{} members of {cat} on {} points", m.len(), word.len())));
    }
    Ok(m)
}

/// `|π ∨ σ|` for every pair of members.
pub fn join_table(members: &[Partition]) -> Matrix<usize> {
    let rows: Vec<Vec<usize>> =
        members.par_iter().map(|p| members.iter().map(|q| p.join_blocks(q)).collect()).collect();
    Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::from_fn(0, 0, |_, _| 0))
}

fn powers(n: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for i in 0..max {
        let next = &out[i] * n;
        out.push(next);
    }
    out
}

/// `G(π, σ) = N^{|π ∨ σ|}` over the members, as large integers.
pub fn gram_over(members: Vec<Partition>, n: &BigInt) -> IndexedMatrix<BigInt> {
    let joins = join_table(&members);
    let pw = powers(n, members.first().map_or(0, |p| p.num_legs()));
    let matrix = joins.map(|&e| pw[e].clone());
    IndexedMatrix { members, matrix }
}

pub fn gram_matrix(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<IndexedMatrix<BigInt>> {
    Ok(gram_over(members(cat, word)?, &BigInt::from(n)))
}

/// Gram matrix with entries `N^{|π∨σ|}` as polynomials in `N`.
pub fn gram_matrix_symbolic(cat: CategoryId, word: &ColoredWord) -> Result<IndexedMatrix<IntPoly>> {
    let members = members(cat, word)?;
    let matrix = join_table(&members).map(|&e| Poly::monomial(BigInt::one(), e));
    Ok(IndexedMatrix { members, matrix })
}

pub fn gram_det_direct(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<BigInt> {
    gram_matrix(cat, word, n)?.matrix.det_bareiss()
}

/// Determinant as a polynomial in `N`, for at most [`MAX_SYMBOLIC`] members.
pub fn gram_det_symbolic(cat: CategoryId, word: &ColoredWord) -> Result<IntPoly> {
    let g = gram_matrix_symbolic(cat, word)?;
    if g.size() > MAX_SYMBOLIC {
        return Err(Error::Capacity(format!("symbolic determinant of size {}", g.size())));
    }
    g.matrix.det_bareiss()
}

pub fn gram_rank(cat: CategoryId, word: &ColoredWord, n: u64) -> Result<usize> {
    let g = gram_matrix(cat, word, n)?;
    Ok(linalg::rank(&linalg::to_rational(&g.matrix)))
}

/// Order adjacency `A(π, σ) = [π ≤ σ]` over one-row members.
pub fn adjacency(members: &[Partition]) -> Result<Matrix<BigInt>> {
    let mut m = Matrix::zeros(members.len(), members.len());
    for (i, p) in members.iter().enumerate() {
        for (j, q) in members.iter().enumerate() {
            if p.leq(q)? {
                m.set(i, j, BigInt::one());
            }
        }
    }
    Ok(m)
}

/// `L(π, σ) = N(N-1)…(N-|π|+1)` when `σ ≤ π`, else 0, so that `G = A L`.
pub fn lower_factor(members: &[Partition], n: &BigInt) -> Result<Matrix<BigInt>> {
    let mut m = Matrix::zeros(members.len(), members.len());
    for (i, p) in members.iter().enumerate() {
        let f = falling(n, p.num_blocks() as u64);
        for (j, q) in members.iter().enumerate() {
            if q.leq(p)? && !f.is_zero() {
                m.set(i, j, f.clone());
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::int;
    use crate::algebra::Ring;

    fn n_poly(coeffs: &[i64]) -> IntPoly {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn small_gram_matrices() {
        let g = gram_matrix(CategoryId::NC2, &ColoredWord::plain(4), 3).unwrap();
        assert_eq!(g.matrix.to_rows(), vec![vec![int(9), int(3)], vec![int(3), int(9)]]);
        let g = gram_matrix(CategoryId::P2, &ColoredWord::plain(2), 5).unwrap();
        assert_eq!(g.matrix.to_rows(), vec![vec![int(5)]]);
        let g = gram_matrix_symbolic(CategoryId::P2, &ColoredWord::plain(4)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { 2 } else { 1 };
                assert_eq!(*g.matrix.get(i, j), Poly::monomial(int(1), e));
            }
        }
    }

    #[test]
    fn direct_determinants() {
        let nc2_4 = gram_det_symbolic(CategoryId::NC2, &ColoredWord::plain(4)).unwrap();
        assert_eq!(nc2_4, n_poly(&[0, 0, -1, 0, 1]));
        let nc3 = gram_det_symbolic(CategoryId::NC, &ColoredWord::plain(3)).unwrap();
        let x = IntPoly::x();
        let expected = x.pow(5) * (&x - &Poly::from_i64(1)).pow(4) * (&x - &Poly::from_i64(2));
        assert_eq!(nc3, expected);
        assert_eq!(gram_det_direct(CategoryId::NC, &ColoredWord::plain(3), 2).unwrap(), int(0));
    }

    #[test]
    fn rank_deficient_below_k() {
        assert_eq!(gram_rank(CategoryId::P, &ColoredWord::plain(3), 3).unwrap(), 5);
        // rank of G over P(k) is the number of partitions with at most N blocks
        assert_eq!(gram_rank(CategoryId::P, &ColoredWord::plain(3), 2).unwrap(), 4);
        assert_eq!(gram_rank(CategoryId::P, &ColoredWord::plain(4), 1).unwrap(), 1);
    }

    #[test]
    fn triangular_factors() {
        let m = members(CategoryId::P, &ColoredWord::plain(3)).unwrap();
        for n in [2, 3, 5] {
            let n = int(n);
            let g = gram_over(m.clone(), &n);
            let prod = adjacency(&m).unwrap().mul(&lower_factor(&m, &n).unwrap()).unwrap();
            assert_eq!(prod, g.matrix);
        }
    }

    #[test]
    fn capacity() {
        assert!(matches!(gram_matrix(CategoryId::P, &ColoredWord::plain(8), 2), Err(Error::Capacity(_))));
        assert!(matches!(gram_det_symbolic(CategoryId::P, &ColoredWord::plain(5)), Err(Error::Capacity(_))));
    }

    #[test]
    fn lookup_by_partition() {
        let g = gram_matrix(CategoryId::P, &ColoredWord::plain(2), 4).unwrap();
        let cap = Partition::from_blocks_1based(2, &[&[1, 2]]).unwrap();
        let bars = Partition::from_blocks_1based(2, &[&[1], &[2]]).unwrap();
        assert_eq!(g.entry(&bars, &bars), Some(&int(16)));
        assert_eq!(g.entry(&cap, &cap), Some(&int(4)));
        assert_eq!(g.position(&bars), Some(0));
    }
}
