//! The linear maps `T_π : (C^N)^{⊗k} → (C^N)^{⊗l}` attached to partitions.

use num_complex::Complex64;
use rand_distr::StandardNormal;

use crate::algebra::{Matrix, Ring};
use crate::categories::{horizontal_concat, involute, vertical_concat};
use crate::error::{Error, Result};
use crate::partition::{Color, Partition};

/// Largest dense `T_π` matrix built, in entries.
pub const MAX_ENTRIES: usize = 1 << 22;

/// Kronecker symbol `δ_π(i; j)`: 1 when every block carries one index.
pub fn delta(pi: &Partition, upper: &[usize], lower: &[usize]) -> Result<u8> {
    if upper.len() != pi.k() || lower.len() != pi.l() {
        return Err(Error::Shape(format!(
            "index tuples of lengths {} and {} for P({},{})",
            upper.len(),
            lower.len(),
            pi.k(),
            pi.l()
        )));
    }
    let mut value = vec![0usize; pi.num_blocks()];
    for (&b, &idx) in pi.labels().iter().zip(upper.iter().chain(lower)) {
        let slot = &mut value[b as usize];
        if *slot == 0 {
            *slot = idx;
        } else if *slot != idx {
            return Ok(0);
        }
    }
    Ok(1)
}

fn checked_pow(n: usize, e: usize) -> Option<usize> {
    (0..e).try_fold(1usize, |acc, _| acc.checked_mul(n))
}

/// Dense `{0,1}` matrix of `T_π`, rows indexed by lower tuples and columns
/// by upper tuples, both in row-major mixed radix (first leg most significant).
pub fn t_matrix(pi: &Partition, n: usize) -> Result<Matrix<i64>> {
    if n == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let rows = checked_pow(n, pi.l());
    let cols = checked_pow(n, pi.k());
    let (rows, cols) = match (rows, cols) {
        (Some(r), Some(c)) if r.checked_mul(c).is_some_and(|e| e <= MAX_ENTRIES) => (r, c),
        _ => return Err(Error::Capacity(format!("T matrix of P({},{}) at N={n}", pi.k(), pi.l()))),
    };
    let mut m = Matrix::zeros(rows, cols);
    let labels = pi.labels();
    let k = pi.k();
    let blocks = pi.num_blocks();
    let mut assign = vec![0usize; blocks];
    loop {
        let mut r = 0;
        let mut c = 0;
        for (leg, &b) in labels.iter().enumerate() {
            if leg < k {
                c = c * n + assign[b as usize];
            } else {
                r = r * n + assign[b as usize];
            }
        }
        m.set(r, c, 1);
        // advance the block assignment odometer
        let mut t = 0;
        while t < blocks {
            assign[t] += 1;
            if assign[t] < n {
                break;
            }
            assign[t] = 0;
            t += 1;
        }
        if t == blocks {
            break;
        }
    }
    Ok(m)
}

/// The vector `ξ_π = T_π(1)` of a one-row partition.
pub fn xi(pi: &Partition, n: usize) -> Result<Vec<i64>> {
    if !pi.is_one_row() {
        return Err(Error::Shape("ξ needs a one-row partition".into()));
    }
    let m = t_matrix(pi, n)?;
    Ok((0..m.rows()).map(|r| *m.get(r, 0)).collect())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FunctorialityReport {
    pub tensor: bool,
    /// `None` when the pair is not composable.
    pub composition: Option<bool>,
    pub loops: Option<usize>,
    pub transpose: bool,
}

impl FunctorialityReport {
    pub fn passed(&self) -> bool {
        self.tensor && self.composition.unwrap_or(true) && self.transpose
    }
}

/// Check `T_π ⊗ T_σ = T_[πσ]`, `T_π T_σ = N^c T_[σ over π]` and `T_π^t = T_π*`.
/// `T_π` ignores colors, so composability only asks the middle lengths to agree.
pub fn check_functoriality(pi: &Partition, sigma: &Partition, n: usize) -> Result<FunctorialityReport> {
    let tp = t_matrix(pi, n)?;
    let ts = t_matrix(sigma, n)?;
    let tensor = tp.kron(&ts) == t_matrix(&horizontal_concat(pi, sigma), n)?;
    let (composition, loops) = match vertical_concat(&pi.uncolored(), &sigma.uncolored()) {
        Ok(c) => {
            let lhs = tp.mul(&ts)?;
            let rhs = t_matrix(&c.result, n)?.scale(&(n as i64).pow(c.loops as u32));
            (Some(lhs == rhs), Some(c.loops))
        }
        Err(Error::Shape(_)) => (None, None),
        Err(e) => return Err(e),
    };
    let transpose = tp.transpose() == t_matrix(&involute(pi), n)?;
    Ok(FunctorialityReport { tensor, composition, loops, transpose })
}

/// `(g^{c_1} ⊗ … ⊗ g^{c_k}) v` with `g^∘ = g`, `g^• = conj(g)`, applied one
/// tensor factor at a time.
pub fn apply_tensor<T: Ring>(g: &Matrix<T>, gbar: &Matrix<T>, colors: &[Color], v: &[T]) -> Result<Vec<T>> {
    let n = g.rows();
    if !g.is_square() || !gbar.is_square() || gbar.rows() != n {
        return Err(Error::Shape("g must be square".into()));
    }
    let k = colors.len();
    if checked_pow(n, k) != Some(v.len()) {
        return Err(Error::Shape(format!("vector of length {} for {k} factors of dimension {n}", v.len())));
    }
    let mut cur = v.to_vec();
    for (t, c) in colors.iter().enumerate() {
        let m = if *c == Color::White { g } else { gbar };
        let stride = n.pow((k - 1 - t) as u32);
        let mut next = vec![T::zero(); cur.len()];
        for (idx, out) in next.iter_mut().enumerate() {
            let digit = idx / stride % n;
            let base = idx - digit * stride;
            let mut acc = T::zero();
            for j in 0..n {
                let a = m.get(digit, j);
                if !a.is_zero() {
                    acc = acc + a.clone() * cur[base + j * stride].clone();
                }
            }
            *out = acc;
        }
        cur = next;
    }
    Ok(cur)
}

/// Exact test: `g^{⊗k} ξ_π == ξ_π` with colors taken from the word of π.
pub fn is_fixed_vector_exact<T: Ring>(pi: &Partition, g: &Matrix<T>, gbar: &Matrix<T>) -> Result<bool> {
    let x: Vec<T> = xi(pi, g.rows())?.into_iter().map(T::from_i64).collect();
    Ok(apply_tensor(g, gbar, &pi.lower().0, &x)? == x)
}

/// Floating-point test with a Euclidean tolerance on the difference.
pub fn is_fixed_vector_float(pi: &Partition, g: &Matrix<Complex64>, tol: f64) -> Result<bool> {
    Ok(fixed_vector_defect(pi, g)? < tol)
}

/// `‖g^{⊗k} ξ_π − ξ_π‖`.
pub fn fixed_vector_defect(pi: &Partition, g: &Matrix<Complex64>) -> Result<f64> {
    let gbar = g.map(|z| z.conj());
    let x: Vec<Complex64> = xi(pi, g.rows())?.into_iter().map(|v| Complex64::new(v as f64, 0.0)).collect();
    let y = apply_tensor(g, &gbar, &pi.lower().0, &x)?;
    Ok(y.iter().zip(&x).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt())
}

/// Unitary from Gram-Schmidt on a complex Gaussian sample.
pub fn random_unitary(n: usize, rng: &mut impl rand::Rng) -> Matrix<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> =
            (0..n).map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))).collect();
        for u in &cols {
            let proj: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, a) in v.iter_mut().zip(u) {
                *x -= proj * a;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            continue;
        }
        for x in v.iter_mut() {
            *x /= norm;
        }
        cols.push(v);
    }
    Matrix::from_fn(n, n, |i, j| cols[j][i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{ColoredWord, Partition};

    fn two_row(k: usize, l: usize, raw: &[usize]) -> Partition {
        Partition::from_labels(ColoredWord::plain(k), ColoredWord::plain(l), raw).unwrap()
    }

    #[test]
    fn eta_symbol() {
        // upper a b c, lower d e f; blocks {a,b,e,f} {c,d}
        let eta = two_row(3, 3, &[0, 0, 1, 1, 0, 0]);
        for a in 1..=2 {
            for b in 1..=2 {
                for c in 1..=2 {
                    for d in 1..=2 {
                        for e in 1..=2 {
                            for f in 1..=2 {
                                let expect = (a == b && b == e && e == f && c == d) as u8;
                                assert_eq!(delta(&eta, &[a, b, c], &[d, e, f]).unwrap(), expect);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn delta_basics() {
        let id2 = two_row(2, 2, &[0, 1, 0, 1]);
        assert_eq!(delta(&id2, &[1, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(delta(&id2, &[1, 2], &[2, 1]).unwrap(), 0);
        let one = two_row(2, 2, &[0, 0, 0, 0]);
        assert_eq!(delta(&one, &[7, 7], &[7, 7]).unwrap(), 1);
        assert!(delta(&id2, &[1], &[1, 2]).is_err());
    }

    #[test]
    fn basic_maps() {
        let bar = two_row(1, 1, &[0, 0]);
        assert_eq!(t_matrix(&bar, 3).unwrap(), Matrix::identity(3));
        let fork = two_row(2, 1, &[0, 0, 0]);
        let t = t_matrix(&fork, 2).unwrap();
        // T(e_i ⊗ e_j) = δ_ij e_i
        assert_eq!(t.to_rows(), vec![vec![1, 0, 0, 0], vec![0, 0, 0, 1]]);
        let cap = Partition::from_blocks_1based(2, &[&[1, 2]]).unwrap();
        assert_eq!(xi(&cap, 3).unwrap(), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn functoriality_examples() {
        let cap = Partition::from_blocks_1based(2, &[&[1, 2]]).unwrap();
        let cup = involute(&cap);
        let cap_bb = Partition::one_row(ColoredWord::parse("bb").unwrap(), &[0, 0]).unwrap();
        let r = check_functoriality(&cup, &cap_bb, 2).unwrap();
        assert!(r.passed());
        assert_eq!(r.loops, Some(1));
        let id2 = two_row(2, 2, &[0, 1, 0, 1]);
        let sigma = two_row(1, 2, &[0, 0, 1]);
        assert!(check_functoriality(&id2, &sigma, 3).unwrap().tensor);
        let fork = two_row(2, 1, &[0, 0, 0]);
        let r = check_functoriality(&fork, &involute(&fork), 2).unwrap();
        assert_eq!((r.composition, r.loops), (Some(true), Some(0)));
    }

    #[test]
    fn too_large() {
        let big = Partition::one_row(ColoredWord::plain(12), &[0; 12]).unwrap();
        assert!(matches!(t_matrix(&big, 5), Err(Error::Capacity(_))));
    }
}
