use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{ExactDiv, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * rhs.get(k, j).clone();
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape("matrix sum of different shapes".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Matrix<T>) -> Matrix<T> {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            self.get(i / rhs.rows, j / rhs.cols).clone() * rhs.get(i % rhs.rows, j % rhs.cols).clone()
        })
    }

    pub fn sum(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, a| acc + a.clone())
    }
}

impl<T: Ring + ExactDiv> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination. Every intermediate
    /// quotient is exact over an integral domain.
    pub fn det_bareiss(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.to_rows();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                    a[i][j] = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::Internal("inexact Bareiss quotient".into()))?;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign { -d } else { d })
    }
}

/// Reduced row echelon form over the rationals, with pivot columns.
pub fn rref(m: &Matrix<BigRational>) -> (Matrix<BigRational>, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (Matrix::from_rows(a).unwrap_or_else(|_| Matrix::zeros(rows, cols)), pivots)
}

pub fn rank(m: &Matrix<BigRational>) -> usize {
    rref(m).1.len()
}

pub fn inverse(m: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    if !m.is_square() {
        return Err(Error::Shape("inverse of non-square matrix".into()));
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    let (red, piv) = rref(&aug);
    if n > 0 && (piv.len() < n || piv[n - 1] >= n) {
        return Err(Error::Domain("singular matrix".into()));
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(red.select(&rows, &cols))
}

/// Moore-Penrose pseudo-inverse through a full-rank factorization `A = C F`,
/// `A⁺ = Fᵀ (F Fᵀ)⁻¹ (Cᵀ C)⁻¹ Cᵀ`.
pub fn pseudo_inverse(m: &Matrix<BigRational>) -> Result<Matrix<BigRational>> {
    let (red, piv) = rref(m);
    let r = piv.len();
    if r == 0 {
        return Ok(Matrix::zeros(m.cols(), m.rows()));
    }
    if m.is_square() && r == m.rows() {
        return inverse(m);
    }
    let all_rows: Vec<usize> = (0..m.rows()).collect();
    let all_cols: Vec<usize> = (0..m.cols()).collect();
    let c = m.select(&all_rows, &piv);
    let f = red.select(&(0..r).collect::<Vec<_>>(), &all_cols);
    let ct = c.transpose();
    let ft = f.transpose();
    let ctc_inv = inverse(&ct.mul(&c)?)?;
    let fft_inv = inverse(&f.mul(&ft)?)?;
    ft.mul(&fft_inv)?.mul(&ctc_inv)?.mul(&ct)
}

pub fn to_rational(m: &Matrix<BigInt>) -> Matrix<BigRational> {
    m.map(|v| BigRational::from_integer(v.clone()))
}

impl<T: fmt::Display + Clone> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::{int, rat};
    use crate::algebra::poly::Poly;

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect()).unwrap()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = Matrix::from_rows(vec![
            vec![int(2), int(-1), int(0)],
            vec![int(-1), int(2), int(-1)],
            vec![int(0), int(-1), int(2)],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss().unwrap(), int(4));
        let swap = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(swap.det_bareiss().unwrap(), int(-1));
    }

    #[test]
    fn symbolic_determinant() {
        let n = Poly::<BigInt>::x();
        let n2 = n.pow(2);
        let m = Matrix::from_rows(vec![vec![n2.clone(), n.clone()], vec![n.clone(), n2.clone()]]).unwrap();
        let expected = &n2 * &(&n2 - &Poly::from_i64(1));
        assert_eq!(m.det_bareiss().unwrap(), expected);
    }

    #[test]
    fn inverse_and_pinv() {
        let g = qm(&[&[16, 4], &[4, 4]]);
        let w = inverse(&g).unwrap();
        assert_eq!(w, Matrix::from_rows(vec![vec![rat(1, 12), rat(-1, 12)], vec![rat(-1, 12), rat(1, 3)]]).unwrap());
        let s = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let p = pseudo_inverse(&s).unwrap();
        assert_eq!(s.mul(&p).unwrap().mul(&s).unwrap(), s);
        assert_eq!(p.mul(&s).unwrap().mul(&p).unwrap(), p);
        let sp = s.mul(&p).unwrap();
        assert_eq!(sp.transpose(), sp);
        assert_eq!(rank(&s), 2);
    }
}
