//! Test-only oracles and generators, independent of the library's numeric paths.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use radix::expr::RadExpr;
use radix::BigRat;

pub fn q(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

pub fn frac(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

/// `C(n, k)` by the multiplicative formula, no factorials and no polynomials.
pub fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Layer constant `sum_{k<=n-2} C(n,k) y^k` and multiplier `y^(n-1)` of the
/// order-n family at `y = x + j (n - 1)`.
pub fn general_layer_oracle(order: u32, x: &BigRat, j: u64) -> (BigRat, BigRat) {
    let y = x + BigRat::from_integer(BigInt::from(j) * BigInt::from(order - 1));
    let mut constant = BigRat::zero();
    let mut power = BigRat::one();
    for k in 0..=order - 2 {
        constant += BigRat::from_integer(binomial(order, k)) * &power;
        power *= &y;
    }
    let multiplier = num_traits::pow(y, order as usize - 1);
    (constant, multiplier)
}

/// Fixed-point evaluation of a finite radical with `bits` fractional bits,
/// using `num_integer::Roots` for the roots. Every step rounds down, so the
/// result is within a few units of `2^-bits` below the true value.
///
/// `layers` lists `(constant, multiplier)` from the outermost layer inward.
pub fn fixed_point_radical(
    order: u32,
    layers: &[(BigRat, BigRat)],
    tail: &BigRat,
    bits: u32,
) -> BigRat {
    let scale = BigInt::one() << bits as usize;
    let to_fixed = |value: &BigRat| -> BigInt {
        let scaled = value * BigRat::from_integer(scale.clone());
        scaled.floor().to_integer()
    };
    let mut inner = to_fixed(tail);
    for (constant, multiplier) in layers.iter().rev() {
        // radicand * 2^bits
        let radicand = to_fixed(constant)
            + (multiplier * BigRat::from_integer(inner.clone()))
                .floor()
                .to_integer();
        assert!(!radicand.is_negative(), "oracle hit a negative radicand");
        // root(radicand / 2^bits) * 2^bits = root(radicand * 2^(bits (order - 1)))
        let widened: BigUint = (radicand << (bits as usize * (order as usize - 1)))
            .to_biguint()
            .expect("nonnegative");
        inner = BigInt::from(widened.nth_root(order));
    }
    BigRat::new(inner, scale)
}

/// Exact evaluation for trees without roots or tails.
pub fn exact_value(expr: &RadExpr) -> BigRat {
    match expr {
        RadExpr::Number(v) => v.clone(),
        RadExpr::Sum(items) => items
            .iter()
            .map(exact_value)
            .fold(BigRat::zero(), |a, b| a + b),
        RadExpr::Product(items) => items
            .iter()
            .map(exact_value)
            .fold(BigRat::one(), |a, b| a * b),
        RadExpr::Power { base, exponent } => num_traits::pow(exact_value(base), *exponent as usize),
        RadExpr::Root { .. } | RadExpr::Tail => panic!("exact_value only handles rational trees"),
    }
}

pub fn signed_rational() -> impl Strategy<Value = BigRat> {
    (-60i64..=60, 1i64..=24).prop_map(|(n, d)| frac(n, d))
}

pub fn nonnegative_rational() -> impl Strategy<Value = BigRat> {
    (0i64..=60, 1i64..=12).prop_map(|(n, d)| frac(n, d))
}

/// Root-free arithmetic trees with signed rational leaves.
pub fn rational_tree() -> impl Strategy<Value = RadExpr> {
    signed_rational()
        .prop_map(RadExpr::Number)
        .prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..=3).prop_map(RadExpr::Sum),
                prop::collection::vec(inner.clone(), 2..=3).prop_map(RadExpr::Product),
                (inner, 0u32..=3).prop_map(|(b, e)| RadExpr::power(b, e)),
            ]
        })
}

/// Canonical trees as the parser would build them: nonnegative numbers,
/// sums and products of at least two operands, roots of degree 2..=5.
pub fn syntax_tree() -> impl Strategy<Value = RadExpr> {
    nonnegative_rational()
        .prop_map(RadExpr::Number)
        .prop_recursive(6, 48, 3, |inner| {
            prop_oneof![
                prop::collection::vec(inner.clone(), 2..=3).prop_map(RadExpr::Sum),
                prop::collection::vec(inner.clone(), 2..=3).prop_map(RadExpr::Product),
                (inner.clone(), 0u32..=4).prop_map(|(b, e)| RadExpr::power(b, e)),
                (2u32..=5, inner).prop_map(|(d, body)| RadExpr::root(d, body)),
            ]
        })
}

/// A chain of `root(d, c + m * ...)` layers ending in the tail.
pub fn tail_chain() -> impl Strategy<Value = RadExpr> {
    (
        2u32..=5,
        prop::collection::vec((nonnegative_rational(), nonnegative_rational()), 1..=5),
    )
        .prop_map(|(degree, layers)| {
            layers
                .into_iter()
                .rev()
                .fold(RadExpr::Tail, |inner, (c, m)| {
                    RadExpr::root(
                        degree,
                        RadExpr::Sum(vec![
                            RadExpr::Number(c),
                            RadExpr::Product(vec![RadExpr::Number(m), inner]),
                        ]),
                    )
                })
        })
}

pub fn any_syntax_tree() -> impl Strategy<Value = RadExpr> {
    prop_oneof![3 => syntax_tree(), 1 => tail_chain()]
}

pub const CUBE_CASE: &str = "root(3, 4 + 1^2 * root(3, 10 + 3^2 * root(3, 16 + 5^2 * ...)))";
pub const SQUARE_CASE: &str = "root(2, 1 + 2 * root(2, 1 + 3 * ...))";

pub fn corpus() -> Vec<&'static str> {
    vec![
        CUBE_CASE,
        SQUARE_CASE,
        "root(4, 11 + 1^3 * root(4, 1 + 4*4 + 6*4^2 + 4^3 * ...))",
        "root(2, 3/2 + (1 + 2) * root(3, 8))",
        "(1 + 2)^3 * root(5, 32)",
    ]
}
