use thiserror::Error;

use super::RadExpr;
use crate::numeric::{BigRat, Interval, NumericError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("expression contains `...` but no tail value was supplied")]
    UnresolvedTail,
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// Interval enclosure of `expr` at `precision` bits, with the tail (if any)
/// replaced by `tail`.
pub fn eval_expr(
    expr: &RadExpr,
    tail: Option<&BigRat>,
    precision: u32,
) -> Result<Interval, EvalError> {
    match expr {
        RadExpr::Number(value) => Ok(Interval::from_rational(value, precision)),
        RadExpr::Tail => tail
            .map(|value| Interval::from_rational(value, precision))
            .ok_or(EvalError::UnresolvedTail),
        RadExpr::Sum(terms) => terms
            .iter()
            .try_fold(Interval::zero(precision), |acc, term| {
                Ok(acc.add(&eval_expr(term, tail, precision)?))
            }),
        RadExpr::Product(factors) => {
            let mut factors = factors.iter();
            let first = match factors.next() {
                Some(f) => eval_expr(f, tail, precision)?,
                None => {
                    return Ok(Interval::from_rational(
                        &BigRat::from_integer(1.into()),
                        precision,
                    ))
                }
            };
            factors.try_fold(first, |acc, factor| {
                Ok(acc.mul(&eval_expr(factor, tail, precision)?))
            })
        }
        RadExpr::Power { base, exponent } => Ok(eval_expr(base, tail, precision)?.pow(*exponent)),
        RadExpr::Root { degree, body } => Ok(eval_expr(body, tail, precision)?.nth_root(*degree)?),
    }
}
