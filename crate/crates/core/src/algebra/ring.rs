use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with unit, as needed by the moment/cumulant machinery,
/// polynomial arithmetic and Bareiss elimination.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One + Sub<Output = Self> + Neg<Output = Self> {
    fn from_i64(n: i64) -> Self;

    fn pow_u(&self, e: u32) -> Self {
        num_traits::pow(self.clone(), e as usize)
    }
}

/// Exact division in an integral domain: `a.div_exact(b)` is `Some(q)` with
/// `q * b == a`, or `None` when `b` does not divide `a`.
pub trait ExactDiv: Sized {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Ring for i64 {
    fn from_i64(n: i64) -> Self {
        n
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!divisor.is_zero()).then(|| self / divisor)
    }
}

impl Ring for num_complex::Complex64 {
    fn from_i64(n: i64) -> Self {
        num_complex::Complex64::new(n as f64, 0.0)
    }
}
