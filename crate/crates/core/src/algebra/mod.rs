//! Exact arithmetic building blocks shared by every module: a minimal ring
//! abstraction, dense univariate polynomials, Laurent polynomials, cyclotomic
//! integers and fraction-free linear algebra.

pub mod cyclotomic;
pub mod laurent;
pub mod linalg;
pub mod numbers;
pub mod poly;
pub mod ring;

pub use cyclotomic::Cyclotomic;
pub use laurent::LaurentPoly;
pub use linalg::Matrix;
pub use poly::Poly;
pub use ring::{ExactDiv, Ring};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, the scalar carrier of every exact result.
pub type Rational = BigRational;
/// Integer-coefficient polynomial, used for determinants as functions of `N`.
pub type IntPoly = Poly<BigInt>;
/// Rational-coefficient polynomial, used for moments as functions of `t`.
pub type QPoly = Poly<Rational>;
