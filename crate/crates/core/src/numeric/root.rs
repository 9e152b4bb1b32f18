//! Certified integer and dyadic nth roots.
//!
//! Every root here is computed on integers and then checked exactly:
//! the returned integer `r` satisfies `r^n <= value < (r + 1)^n`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::dyadic::{Dyadic, Rounding};

/// `floor(value^(1/n))` for `n >= 1`.
///
/// The seed comes from the bit length (a power of two at or above the root),
/// Newton steps then descend monotonically, and a final exact comparison pins
/// the result.
pub fn integer_nth_root(value: &BigUint, n: u32) -> BigUint {
    assert!(n >= 1, "root order must be positive");
    if value.is_zero() || n == 1 {
        return value.clone();
    }
    let bits = value.bits();
    if bits <= n as u64 {
        // 1 <= value < 2^n, so the root lies in [1, 2).
        return BigUint::one();
    }

    let n_big = BigUint::from(n);
    let n_minus_one = BigUint::from(n - 1);
    let mut guess = BigUint::one() << bits.div_ceil(n as u64) as usize;
    loop {
        let quotient = value / guess.pow(n - 1);
        let next = (&n_minus_one * &guess + quotient) / &n_big;
        if next >= guess {
            break;
        }
        guess = next;
    }

    while guess.pow(n) > *value {
        guess -= 1u32;
    }
    while (&guess + 1u32).pow(n) <= *value {
        guess += 1u32;
    }
    guess
}

/// `ceil(value^(1/n))`.
pub fn integer_nth_root_ceil(value: &BigUint, n: u32) -> BigUint {
    let floor = integer_nth_root(value, n);
    if floor.pow(n) == *value {
        floor
    } else {
        floor + 1u32
    }
}

/// Directed-rounded nth root of a nonnegative dyadic at `precision` bits.
///
/// The result is the correctly rounded value of the real root: the largest
/// (or smallest) `precision`-bit number not above (or not below) it.
pub(crate) fn dyadic_nth_root(
    value: &Dyadic,
    n: u32,
    precision: u32,
    rounding: Rounding,
) -> Dyadic {
    debug_assert!(!value.is_negative());
    if value.is_zero() {
        return Dyadic::zero();
    }
    let n_i = n as i64;
    let top = value.exponent() + value.significant_bits() as i64;
    // value lies in [2^(top-1), 2^top), so the root's leading exponent is
    // exactly floor((top - 1) / n) and the scaled integer root has `precision` bits.
    let grid = Integer::div_floor(&(top - 1), &n_i) - precision as i64 + 1;
    let shift = value.exponent() - n_i * grid;

    let mantissa = value.mantissa().to_biguint().expect("nonnegative mantissa");
    let root = if shift >= 0 {
        let scaled = mantissa << shift as usize;
        match rounding {
            Rounding::Floor => integer_nth_root(&scaled, n),
            Rounding::Ceil => integer_nth_root_ceil(&scaled, n),
        }
    } else {
        let quantum = BigUint::one() << (-shift) as usize;
        match rounding {
            // floor(root(floor(v))) == floor(root(v)) for integer roots
            Rounding::Floor => integer_nth_root(&(mantissa / quantum), n),
            // and ceil(root(ceil(v))) == ceil(root(v))
            Rounding::Ceil => integer_nth_root_ceil(&Integer::div_ceil(&mantissa, &quantum), n),
        }
    };
    Dyadic::new(BigInt::from(root), grid).round(precision, rounding)
}
