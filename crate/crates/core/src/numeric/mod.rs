//! Exact rationals and outward-rounded interval arithmetic.
//!
//! Endpoints are binary [`Dyadic`] numbers so that rounding direction and
//! ulp reasoning stay exact. Precision (in significant bits) is passed to
//! every constructor; there is no global rounding state.

mod dyadic;
mod interval;
mod root;

pub use dyadic::{Dyadic, Rounding};
pub use interval::Interval;
pub use root::{integer_nth_root, integer_nth_root_ceil};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// Exact arbitrary-precision rational in lowest terms with a positive denominator.
pub type BigRat = num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("negative radicand: lower endpoint {lower} is below zero")]
    NegativeRadicand { lower: BigRat },
    #[error("root order must be at least 2, got {0}")]
    InvalidRootOrder(u32),
    #[error("exponent is too large to evaluate")]
    ExponentOutOfRange,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("'{0}' is not an integer or p/q fraction")]
    Malformed(String),
    #[error("'{0}' has a zero denominator")]
    ZeroDenominator(String),
    #[error("'{0}' is a decimal literal; write it as a fraction p/q")]
    Decimal(String),
}

/// Parses `n`, `-n` or `p/q` into an exact rational.
///
/// Decimal literals are refused with [`RationalParseError::Decimal`]; use
/// [`parse_decimal`] to read them exactly when the caller wants the value
/// for diagnostics.
pub fn parse_rational(text: &str) -> Result<BigRat, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    if text.contains('.') {
        return Err(RationalParseError::Decimal(text.to_string()));
    }
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let malformed = || RationalParseError::Malformed(text.to_string());
    let numer: BigInt = numer.parse().map_err(|_| malformed())?;
    let denom: BigInt = denom.parse().map_err(|_| malformed())?;
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_string()));
    }
    Ok(BigRat::new(numer, denom))
}

/// Reads a finite decimal such as `-0.125` exactly.
pub fn parse_decimal(text: &str) -> Option<BigRat> {
    let text = text.trim();
    let (sign, body) = match text.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.')?;
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole
        .chars()
        .chain(frac.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let scale = num_traits::pow(BigInt::from(10), frac.len());
    Some(BigRat::new(digits * sign, scale))
}

/// `p` or `p/q` in lowest terms.
pub fn format_rational(value: &BigRat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
