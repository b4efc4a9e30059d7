//! Exact rational numbers, backed by `num::BigRational`.

use num::{BigInt, BigRational};

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (the backing type canonicalises on construction).
pub type Rat = BigRational;

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}
