//! Exact rational arithmetic, dense polynomials, truncated power series,
//! harmonic numbers and combinatorial helpers.
//!
//! Everything downstream (generating functions, moments, fitted closed forms)
//! is built on [`Rational`], an arbitrary-precision fraction kept in lowest
//! terms with a positive denominator. Floating point appears only at the
//! presentation boundary, via [`to_f64`].

mod comb;
mod harmonic;
mod poly;
mod series;

pub use comb::{binomial, factorial, stirling2};
pub use harmonic::harmonic;
pub use poly::UniPoly;
pub use series::TruncSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision exact fraction, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `num/den`, omitting the denominator when it is 1.
///
/// This is the exact serialization format shared by the on-disk cache and the
/// CLI JSON output.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses the `format_rational` representation back.
pub fn parse_rational(s: &str) -> Result<Rational, num_rational::ParseRatioError> {
    s.trim().parse()
}

/// Converts an exact rational to the nearest `f64`.
///
/// The naive numerator/denominator division overflows once either side
/// exceeds the `f64` range, so the quotient is first scaled into a 52-bit
/// integer window (rounding the division half-to-even) and then rescaled by
/// the corresponding power of two.
pub fn to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let negative = q.is_negative();
    let num = q.numer().abs();
    let den = q.denom().clone();

    // shift so that num * 2^shift / den has about 52 significant bits
    let e = num.bits() as i64 - den.bits() as i64;
    let shift = 52 - e;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (num << shift as u64, den)
    } else {
        (num, den << (-shift) as u64)
    };
    let (mut quot, rem) = num_integer::Integer::div_rem(&scaled_num, &scaled_den);
    // round half to even
    let twice = &rem << 1u8;
    match twice.cmp(&scaled_den) {
        std::cmp::Ordering::Greater => quot += 1,
        std::cmp::Ordering::Equal => {
            if num_integer::Integer::is_odd(&quot) {
                quot += 1;
            }
        }
        std::cmp::Ordering::Less => {}
    }
    let magnitude = quot.to_f64().unwrap_or(f64::MAX) * (2.0f64).powi(-shift as i32);
    if negative {
        -magnitude
    } else {
        magnitude
    }
}

/// `value^exp` for a big integer base and small exponent.
pub(crate) fn bigint_pow(base: &BigInt, exp: u32) -> BigInt {
    if exp == 0 {
        return BigInt::one();
    }
    base.pow(exp)
}

/// `n^exp` as a rational, supporting negative exponents (`n` must be nonzero
/// for those).
pub fn rational_int_pow(n: i64, exp: i32) -> Rational {
    let base = BigInt::from(n);
    if exp >= 0 {
        Rational::from_integer(bigint_pow(&base, exp as u32))
    } else {
        assert!(!base.is_zero(), "zero base with negative exponent");
        Rational::new(BigInt::one(), bigint_pow(&base, (-exp) as u32))
    }
}
