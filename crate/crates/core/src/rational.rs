//! The number type of the crate: exact fractions of arbitrary-precision
//! integers, always in lowest terms with positive denominator.

use num::bigint::BigInt;
use num::ToPrimitive;

/// Exact rational number. `Rational::new` reduces and normalizes the sign,
/// and every arithmetic operation preserves that form.
pub type Rational = num::BigRational;

/// The integer `n` as a rational.
pub fn rat<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` in lowest terms. Panics if `d == 0`; callers validate denominators
/// coming from user input before reaching this point.
pub fn frac<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Lossy decimal approximation, for human-readable summaries only. Exact
/// values are compared and printed as fractions everywhere that matters.
pub fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
