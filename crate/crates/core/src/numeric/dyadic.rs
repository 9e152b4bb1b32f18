use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BigRat;

/// Direction for rounding an exact value onto a coarser grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    Floor,
    Ceil,
}

/// An exact binary number `mantissa * 2^exponent`.
///
/// Canonical form keeps the mantissa odd, or the whole value at `0 * 2^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        if mantissa.is_zero() {
            return Self::zero();
        }
        let shift = mantissa.trailing_zeros().unwrap_or(0);
        Self {
            mantissa: mantissa >> shift,
            exponent: exponent + shift as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(value: BigInt) -> Self {
        Self::new(value, 0)
    }

    /// `2^exponent` exactly.
    pub fn power_of_two(exponent: i64) -> Self {
        Self {
            mantissa: BigInt::one(),
            exponent,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }

    /// Number of significant bits in the mantissa.
    pub fn significant_bits(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Exponent of the leading bit: `2^msb <= |self| < 2^(msb+1)`. `None` for zero.
    pub fn leading_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + self.mantissa.bits() as i64 - 1)
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn to_rational(&self) -> BigRat {
        if self.exponent >= 0 {
            BigRat::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            BigRat::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    /// Mantissas of both operands rescaled to the smaller exponent.
    fn aligned(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let exponent = self.exponent.min(other.exponent);
        let lhs = &self.mantissa << (self.exponent - exponent) as usize;
        let rhs = &other.mantissa << (other.exponent - exponent) as usize;
        (lhs, rhs, exponent)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (lhs, rhs, exponent) = self.aligned(other);
        Self::new(lhs + rhs, exponent)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
        )
    }

    pub fn pow(&self, power: u32) -> Self {
        if power == 0 {
            return Self::one();
        }
        Self::new(
            num_traits::pow(self.mantissa.clone(), power as usize),
            self.exponent * power as i64,
        )
    }

    /// Round to at most `precision` significant bits in the given direction.
    pub fn round(&self, precision: u32, rounding: Rounding) -> Self {
        let bits = self.mantissa.bits();
        if bits <= precision as u64 {
            return self.clone();
        }
        let shift = bits - precision as u64;
        let quantum = BigInt::one() << shift as usize;
        let mantissa = match rounding {
            Rounding::Floor => self.mantissa.div_floor(&quantum),
            Rounding::Ceil => self.mantissa.div_ceil(&quantum),
        };
        Self::new(mantissa, self.exponent + shift as i64)
    }

    /// Largest multiple of `2^exponent` not above the rational, or smallest not below.
    pub fn from_rational_at(value: &BigRat, exponent: i64, rounding: Rounding) -> Self {
        let (mut numer, mut denom) = (value.numer().clone(), value.denom().clone());
        if exponent >= 0 {
            denom <<= exponent as usize;
        } else {
            numer <<= (-exponent) as usize;
        }
        let mantissa = match rounding {
            Rounding::Floor => numer.div_floor(&denom),
            Rounding::Ceil => numer.div_ceil(&denom),
        };
        Self::new(mantissa, exponent)
    }

    /// Directed rounding of an exact rational to `precision` significant bits.
    pub fn from_rational(value: &BigRat, precision: u32, rounding: Rounding) -> Self {
        if value.is_zero() {
            return Self::zero();
        }
        let numer_bits = value.numer().bits() as i64;
        let denom_bits = value.denom().bits() as i64;
        // |value| >= 2^(numer_bits - denom_bits - 1), so the quotient below keeps >= precision bits.
        let exponent = numer_bits - denom_bits - 1 - precision as i64;
        Self::from_rational_at(value, exponent, rounding).round(precision, rounding)
    }

    /// Nearest-ish `f64`, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let keep = 60;
        let (mantissa, exponent) = if bits > keep {
            (
                &self.mantissa >> (bits - keep) as usize,
                self.exponent + bits - keep,
            )
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let m: f64 = num_traits::ToPrimitive::to_f64(&mantissa).unwrap_or(f64::NAN);
        m * 2f64.powi(exponent.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.sign(), other.sign()) {
            (a, b) if a != b => return a.cmp(&b),
            (Sign::NoSign, _) => return Ordering::Equal,
            _ => {}
        }
        let (lhs, rhs, _) = self.aligned(other);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(value: i64) -> Self {
        Self::from_int(BigInt::from(value))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.mantissa)
        } else {
            write!(f, "{}*2^{}", self.mantissa, self.exponent)
        }
    }
}
