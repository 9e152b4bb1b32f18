use std::fmt;

use num_traits::{One, Signed, Zero};

use super::dyadic::{Dyadic, Rounding};
use super::root::dyadic_nth_root;
use super::{BigRat, NumericError};

/// A closed interval `[lo, hi]` with dyadic endpoints held at `precision` bits.
///
/// Every operation rounds the lower endpoint down and the upper endpoint up,
/// so the exact result of the operation on any points of the operands is
/// contained in the returned interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    precision: u32,
}

impl Interval {
    /// Builds `[lo, hi]`, rounding outward to `precision` bits.
    ///
    /// Panics if `lo > hi` or `precision` is zero.
    pub fn new(lo: Dyadic, hi: Dyadic, precision: u32) -> Self {
        assert!(precision > 0, "precision must be positive");
        assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Self {
            lo: lo.round(precision, Rounding::Floor),
            hi: hi.round(precision, Rounding::Ceil),
            precision,
        }
    }

    pub fn point(value: Dyadic, precision: u32) -> Self {
        Self::new(value.clone(), value, precision)
    }

    pub fn zero(precision: u32) -> Self {
        Self::point(Dyadic::zero(), precision)
    }

    /// Tightest `precision`-bit enclosure of an exact rational.
    pub fn from_rational(value: &BigRat, precision: u32) -> Self {
        Self {
            lo: Dyadic::from_rational(value, precision, Rounding::Floor),
            hi: Dyadic::from_rational(value, precision, Rounding::Ceil),
            precision,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn width(&self) -> BigRat {
        self.hi.sub(&self.lo).to_rational()
    }

    pub fn midpoint(&self) -> BigRat {
        (self.lo.to_rational() + self.hi.to_rational()) / BigRat::from_integer(2.into())
    }

    /// One unit in the last place at the interval's magnitude: `2^(e - p + 1)`
    /// where `2^e <= max(|lo|, |hi|) < 2^(e+1)`.
    pub fn ulp(&self) -> BigRat {
        let magnitude = self.lo.abs().max(self.hi.abs());
        let lead = magnitude.leading_exponent().unwrap_or(0);
        Dyadic::power_of_two(lead - self.precision as i64 + 1).to_rational()
    }

    pub fn contains(&self, value: &BigRat) -> bool {
        self.lo.to_rational() <= *value && *value <= self.hi.to_rational()
    }

    pub fn contains_dyadic(&self, value: &Dyadic) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// Same enclosure re-rounded (outward) to another precision.
    pub fn with_precision(&self, precision: u32) -> Self {
        Self::new(self.lo.clone(), self.hi.clone(), precision)
    }

    fn joint_precision(&self, other: &Self) -> u32 {
        self.precision.max(other.precision)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.lo.add(&other.lo),
            self.hi.add(&other.hi),
            self.joint_precision(other),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            precision: self.precision,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().cloned().unwrap_or_else(Dyadic::zero);
        let hi = products.iter().max().cloned().unwrap_or_else(Dyadic::zero);
        Self::new(lo, hi, self.joint_precision(other))
    }

    /// Integer power with the tight enclosure for intervals straddling zero.
    pub fn pow(&self, power: u32) -> Self {
        if power == 0 {
            return Self::point(Dyadic::one(), self.precision);
        }
        let lo = self.lo.pow(power);
        let hi = self.hi.pow(power);
        let (lo, hi) = if !self.lo.is_negative() || power % 2 == 1 {
            (lo, hi)
        } else if !self.hi.is_negative() && !self.hi.is_zero() {
            (Dyadic::zero(), lo.max(hi))
        } else {
            (hi, lo)
        };
        Self::new(lo, hi, self.precision)
    }

    /// Enclosure of `{ y^(1/n) : y in self }` with each endpoint correctly
    /// rounded outward.
    pub fn nth_root(&self, n: u32) -> Result<Self, NumericError> {
        if n < 2 {
            return Err(NumericError::InvalidRootOrder(n));
        }
        if self.lo.is_negative() {
            return Err(NumericError::NegativeRadicand {
                lower: self.lo.to_rational(),
            });
        }
        Ok(Self {
            lo: dyadic_nth_root(&self.lo, n, self.precision, Rounding::Floor),
            hi: dyadic_nth_root(&self.hi, n, self.precision, Rounding::Ceil),
            precision: self.precision,
        })
    }

    /// Enclosure of `2^exponent` for a rational exponent `p/q`.
    ///
    /// The denominator is split into prime factors and one root is taken per
    /// factor, so exponents like `(3/2) / 3^k` stay cheap for large `k`.
    pub fn pow2(exponent: &BigRat, precision: u32) -> Result<Self, NumericError> {
        let numer = exponent.numer();
        let shift: i64 =
            num_traits::ToPrimitive::to_i64(numer).ok_or(NumericError::ExponentOutOfRange)?;
        let mut value = Self::point(Dyadic::power_of_two(shift), precision);
        // Extra guard bits absorb the per-root rounding; the result is re-rounded at the end.
        let guard = precision + 16;
        value = value.with_precision(guard);
        for factor in prime_factors(exponent.denom())? {
            value = value.nth_root(factor)?;
        }
        Ok(value.with_precision(precision))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }
}

fn prime_factors(value: &num_bigint::BigInt) -> Result<Vec<u32>, NumericError> {
    let mut rest = value.abs();
    let mut factors = Vec::new();
    let mut candidate = 2u32;
    while !rest.is_one() && !rest.is_zero() {
        if num_bigint::BigInt::from(candidate) * num_bigint::BigInt::from(candidate) > rest {
            let last =
                num_traits::ToPrimitive::to_u32(&rest).ok_or(NumericError::ExponentOutOfRange)?;
            factors.push(last);
            break;
        }
        while (&rest % candidate).is_zero() {
            rest /= candidate;
            factors.push(candidate);
        }
        candidate = candidate
            .checked_add(1)
            .ok_or(NumericError::ExponentOutOfRange)?;
    }
    Ok(factors)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
