//! Exact scalars.
//!
//! [`Rational`] is `num_rational::BigRational`, which already keeps the
//! denominator positive and the fraction reduced, with zero stored as `0/1`.
//! This module adds the text forms used by the printers and the JSON schema.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

pub fn from_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Always `"<num>/<den>"`, including `/1` for integers.
pub fn to_exact_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `"p/q"` with the `/1` dropped for integers.
pub fn to_display_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Accepts `"p"`, `"-p"` and `"p/q"` with an optionally signed numerator and a
/// positive or negative nonzero denominator.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let malformed = || RationalParseError::Malformed(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| malformed())?;
    let den: BigInt = den.parse().map_err(|_| malformed())?;
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
