//! Layer generators and truncated evaluation of infinite nested radicals.
//!
//! A nested radical of order `n` is described layer by layer: layer `j`
//! contributes `root_n(constant_j + multiplier_j * inner_j)`. Cutting the
//! radical at some depth and replacing the remaining tail with a known value
//! turns it into a finite expression that can be enclosed with interval
//! arithmetic.
//!
//! Two families are supported:
//!
//! - [`GeneralSpec`]: `x + 1 = root_n(C_n(x) + x^(n-1) root_n(C_n(x+n-1) + ...))`,
//!   with `C_n(y) = sum_{k<=n-2} binom(n,k) y^k`.
//! - [`Entry4Spec`]: the square-root family
//!   `x + n' + a = sqrt(a x + (n'+a)^2 + x sqrt(a (x+n') + (n'+a)^2 + ...))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::algebra::{layer_constant_poly, RatPolynomial};
use crate::numeric::{format_rational, BigRat, Interval, NumericError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RadicalError {
    #[error("root order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("start value {} is outside the domain x >= 1", format_rational(.0))]
    StartBelowOne(BigRat),
    #[error("truncation depth must be at least 1")]
    DepthZero,
    #[error("negative radicand at layer {layer}: lower endpoint {}", format_rational(.lower))]
    NegativeRadicand { layer: u64, lower: BigRat },
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Order-n family with start value `x >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralSpec {
    order: u32,
    start: BigRat,
    constant_poly: RatPolynomial,
}

impl GeneralSpec {
    pub fn new(order: u32, start: BigRat) -> Result<Self, RadicalError> {
        if order < 2 {
            return Err(RadicalError::OrderTooSmall(order));
        }
        if start < BigRat::one() {
            return Err(RadicalError::StartBelowOne(start));
        }
        let constant_poly = layer_constant_poly(order)
            .map_err(|_| RadicalError::OrderTooSmall(order))?
            .map(|c| BigRat::from_integer(c.clone()));
        Ok(Self {
            order,
            start,
            constant_poly,
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn start(&self) -> &BigRat {
        &self.start
    }
}

/// Ramanujan's square-root family with parameters `x`, `n'` and `a`.
///
/// Parameters are unrestricted; a negative radicand surfaces as
/// [`RadicalError::NegativeRadicand`] during evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry4Spec {
    pub x: BigRat,
    pub nprime: BigRat,
    pub a: BigRat,
}

impl Entry4Spec {
    pub fn new(x: BigRat, nprime: BigRat, a: BigRat) -> Self {
        Self { x, nprime, a }
    }
}

/// One layer `root(constant + multiplier * inner)` together with the layer's
/// argument (its shifted x-value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerTerm {
    pub constant: BigRat,
    pub multiplier: BigRat,
    pub argument: BigRat,
}

/// Anything that can produce layer terms on demand.
///
/// Layers are computed from their index, never stored, so very deep
/// truncations only hold one layer at a time.
pub trait LayerSource {
    fn order(&self) -> u32;

    fn layer(&self, index: u64) -> LayerTerm;

    /// Exact value of the infinite radical that starts at `argument`.
    fn fixed_point(&self, argument: &BigRat) -> BigRat;

    /// Value of the whole radical, i.e. the fixed point at layer 0.
    fn limit(&self) -> BigRat {
        self.fixed_point(&self.layer(0).argument)
    }
}

impl GeneralSpec {
    pub fn layer(&self, index: u64) -> LayerTerm {
        let step = BigRat::from_integer(BigInt::from(index) * BigInt::from(self.order - 1));
        let argument = &self.start + step;
        let constant = self.constant_poly.evaluate(&argument);
        let multiplier = num_traits::pow(argument.clone(), self.order as usize - 1);
        LayerTerm {
            constant,
            multiplier,
            argument,
        }
    }
}

impl LayerSource for GeneralSpec {
    fn order(&self) -> u32 {
        self.order
    }

    fn layer(&self, index: u64) -> LayerTerm {
        GeneralSpec::layer(self, index)
    }

    fn fixed_point(&self, argument: &BigRat) -> BigRat {
        argument + BigRat::one()
    }
}

impl Entry4Spec {
    pub fn layer(&self, index: u64) -> LayerTerm {
        let argument = &self.x + &self.nprime * BigRat::from_integer(BigInt::from(index));
        let shift = &self.nprime + &self.a;
        LayerTerm {
            constant: &self.a * &argument + &shift * &shift,
            multiplier: argument.clone(),
            argument,
        }
    }
}

impl LayerSource for Entry4Spec {
    fn order(&self) -> u32 {
        2
    }

    fn layer(&self, index: u64) -> LayerTerm {
        Entry4Spec::layer(self, index)
    }

    fn fixed_point(&self, argument: &BigRat) -> BigRat {
        argument + &self.nprime + &self.a
    }
}

/// Either supported family, for callers that pick one at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadicalSpec {
    General(GeneralSpec),
    Entry4(Entry4Spec),
}

impl LayerSource for RadicalSpec {
    fn order(&self) -> u32 {
        match self {
            Self::General(s) => s.order(),
            Self::Entry4(s) => LayerSource::order(s),
        }
    }

    fn layer(&self, index: u64) -> LayerTerm {
        match self {
            Self::General(s) => s.layer(index),
            Self::Entry4(s) => s.layer(index),
        }
    }

    fn fixed_point(&self, argument: &BigRat) -> BigRat {
        match self {
            Self::General(s) => s.fixed_point(argument),
            Self::Entry4(s) => s.fixed_point(argument),
        }
    }
}

/// Value substituted for the infinite tail below the truncation depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailPolicy {
    /// Drop the tail. Gives a lower bound when every multiplier is nonnegative.
    Zero,
    /// The exact value of the tail, from the family's functional equation.
    ExactFixedPoint,
    /// `2^q` times the exact tail value. With `q >= 0` this is an upper bound
    /// whenever the family satisfies `f(y) <= 2^q (y + 1)`.
    ScaledBound(BigRat),
}

impl TailPolicy {
    pub fn name(&self) -> String {
        match self {
            Self::Zero => "zero".to_string(),
            Self::ExactFixedPoint => "fixed".to_string(),
            Self::ScaledBound(q) => format!("scaled:{}", format_rational(q)),
        }
    }
}

impl fmt::Display for TailPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationResult {
    pub depth: u64,
    pub tail: TailPolicy,
    pub value: Interval,
    pub precision: u32,
}

/// Enclosure of the tail value that replaces layers `depth, depth+1, ...`.
pub fn tail_value<S: LayerSource + ?Sized>(
    source: &S,
    depth: u64,
    tail: &TailPolicy,
    precision: u32,
) -> Result<Interval, RadicalError> {
    let argument = source.layer(depth).argument;
    Ok(match tail {
        TailPolicy::Zero => Interval::zero(precision),
        TailPolicy::ExactFixedPoint => {
            Interval::from_rational(&source.fixed_point(&argument), precision)
        }
        TailPolicy::ScaledBound(exponent) => {
            let scale = Interval::pow2(exponent, precision)?;
            scale.mul(&Interval::from_rational(
                &source.fixed_point(&argument),
                precision,
            ))
        }
    })
}

/// Evaluates the radical cut after `depth` layers, innermost layer first.
pub fn truncated_eval<S: LayerSource + ?Sized>(
    source: &S,
    depth: u64,
    tail: &TailPolicy,
    precision: u32,
) -> Result<TruncationResult, RadicalError> {
    if depth < 1 {
        return Err(RadicalError::DepthZero);
    }
    let order = source.order();
    let mut inner = tail_value(source, depth, tail, precision)?;
    for index in (0..depth).rev() {
        let term = source.layer(index);
        let radicand = Interval::from_rational(&term.constant, precision)
            .add(&Interval::from_rational(&term.multiplier, precision).mul(&inner));
        inner = radicand.nth_root(order).map_err(|err| match err {
            NumericError::NegativeRadicand { lower } => RadicalError::NegativeRadicand {
                layer: index,
                lower,
            },
            other => RadicalError::Numeric(other),
        })?;
    }
    Ok(TruncationResult {
        depth,
        tail: tail.clone(),
        value: inner,
        precision,
    })
}

/// Whether an enclosure rests on a proven tail bound or an assumed one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rigor {
    /// Order 3 with the proven bound `f(y) <= 2^(3/2) (y + 1)`.
    Proven,
    /// The upper tail uses `2^q (y + 1)` without a proof that it bounds `f`.
    Conditional { assumed_exponent: BigRat },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub interval: Interval,
    pub lower: TruncationResult,
    pub upper: TruncationResult,
    pub rigor: Rigor,
}

impl Enclosure {
    pub fn is_rigorous(&self) -> bool {
        self.rigor == Rigor::Proven
    }
}

/// Default upper-tail exponent: the order-3 a-priori bound `2^(3/2) (x+1)`.
pub fn default_bound_exponent() -> BigRat {
    BigRat::new(3.into(), 2.into())
}

/// Two-sided enclosure of the limit using the zero tail below and the
/// `2^(3/2)`-scaled fixed point above.
pub fn enclose(spec: &GeneralSpec, depth: u64, precision: u32) -> Result<Enclosure, RadicalError> {
    enclose_with_bound(spec, depth, precision, &default_bound_exponent())
}

/// [`enclose`] with a caller-chosen upper-tail exponent `q >= 0`.
///
/// Only order 3 with `q >= 3/2` is backed by a proven bound; anything else is
/// reported as [`Rigor::Conditional`].
pub fn enclose_with_bound(
    spec: &GeneralSpec,
    depth: u64,
    precision: u32,
    bound_exponent: &BigRat,
) -> Result<Enclosure, RadicalError> {
    let lower = truncated_eval(spec, depth, &TailPolicy::Zero, precision)?;
    let upper = truncated_eval(
        spec,
        depth,
        &TailPolicy::ScaledBound(bound_exponent.clone()),
        precision,
    )?;
    let interval = Interval::new(
        lower.value.lo().clone(),
        upper.value.hi().clone(),
        precision,
    );
    let rigor = if spec.order() == 3 && *bound_exponent >= default_bound_exponent() {
        Rigor::Proven
    } else {
        Rigor::Conditional {
            assumed_exponent: bound_exponent.clone(),
        }
    };
    Ok(Enclosure {
        interval,
        lower,
        upper,
        rigor,
    })
}

/// Exponents `q_k` of the bracket `2^(-q_k) (x+1) <= f(x) <= 2^(q_k) (x+1)`
/// after `k` passes of the functional equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketExponents {
    pub order: u32,
    pub iteration: u32,
    pub lo_exponent: BigRat,
    pub hi_exponent: BigRat,
}

impl BracketExponents {
    /// Enclosures of `2^lo_exponent` and `2^hi_exponent`.
    pub fn constants(&self, precision: u32) -> Result<(Interval, Interval), RadicalError> {
        Ok((
            Interval::pow2(&self.lo_exponent, precision)?,
            Interval::pow2(&self.hi_exponent, precision)?,
        ))
    }

    /// Bracket around `f(x)` at a given start value.
    pub fn bracket_at(&self, x: &BigRat, precision: u32) -> Result<Interval, RadicalError> {
        let (lo, hi) = self.constants(precision)?;
        let limit = Interval::from_rational(&(x + BigRat::one()), precision);
        let lower = lo.mul(&limit);
        let upper = hi.mul(&limit);
        Ok(Interval::new(
            lower.lo().clone(),
            upper.hi().clone(),
            precision,
        ))
    }
}

/// `q_k = q_0 / n^k` with `q_0 = 3/2`.
pub fn refine_bracket(order: u32, iteration: u32) -> Result<BracketExponents, RadicalError> {
    refine_bracket_from(order, iteration, &default_bound_exponent())
}

/// Each pass through `f(x)^n = C_n(x) + x^(n-1) f(x+n-1)` maps a bracket
/// exponent `q` to `q / n`.
pub fn refine_bracket_from(
    order: u32,
    iteration: u32,
    initial: &BigRat,
) -> Result<BracketExponents, RadicalError> {
    if order < 2 {
        return Err(RadicalError::OrderTooSmall(order));
    }
    let divisor = num_traits::pow(BigInt::from(order), iteration as usize);
    let hi_exponent = initial.abs() / BigRat::from_integer(divisor);
    Ok(BracketExponents {
        order,
        iteration,
        lo_exponent: -hi_exponent.clone(),
        hi_exponent,
    })
}

/// Truncations at depths `1..=max_depth`, computed lazily one at a time.
pub fn sweep<'a, S: LayerSource + ?Sized>(
    source: &'a S,
    max_depth: u64,
    tail: &'a TailPolicy,
    precision: u32,
) -> impl Iterator<Item = Result<TruncationResult, RadicalError>> + 'a {
    (1..=max_depth).map(move |depth| truncated_eval(source, depth, tail, precision))
}

pub fn depth_sweep<S: LayerSource + ?Sized>(
    source: &S,
    max_depth: u64,
    tail: &TailPolicy,
    precision: u32,
) -> Result<Vec<TruncationResult>, RadicalError> {
    if max_depth < 1 {
        return Err(RadicalError::DepthZero);
    }
    sweep(source, max_depth, tail, precision).collect()
}
