//! Integer sequences and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Falling factorial `n (n-1) ... (n-k+1)`; zero once a factor vanishes.
pub fn falling(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - BigInt::from(j);
    }
    acc
}

/// Stirling numbers of the second kind `S(n, b)` for `0 <= b <= n <= max`,
/// from the recurrence `S(n+1, b) = b S(n, b) + S(n, b-1)`.
pub fn stirling2_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max + 1]; max + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max {
        for b in 1..=n {
            table[n][b] = &table[n - 1][b] * BigInt::from(b) + &table[n - 1][b - 1];
        }
    }
    table
}

pub fn stirling2(n: usize, b: usize) -> BigInt {
    if b > n {
        return BigInt::zero();
    }
    stirling2_table(n)[n][b].clone()
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

/// Render a rational as `p/q`, or `p` when integral.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            if let Ok(p) = s.parse::<BigInt>() {
                return Ok(BigRational::from_integer(p));
            }
            let x: f64 = s.parse().map_err(|_| bad())?;
            BigRational::from_float(x).ok_or_else(bad)
        }
    }
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
