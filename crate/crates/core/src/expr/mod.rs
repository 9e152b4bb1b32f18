//! A small surface syntax for finite and tail-marked nested radicals.
//!
//! `root(3, 4 + 1^2 * root(3, 10 + 3^2 * ...))` parses into a [`RadExpr`]
//! tree, which prints back as canonical text or LaTeX and evaluates to an
//! interval enclosure once the `...` tail is given a value.

mod eval;
mod lexer;
mod parser;
mod print;

pub use eval::{eval_expr, EvalError};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;
pub use print::{print_latex, print_text};

use thiserror::Error;

use crate::numeric::BigRat;
use crate::radical::{GeneralSpec, LayerSource};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadExpr {
    Number(BigRat),
    Sum(Vec<RadExpr>),
    Product(Vec<RadExpr>),
    Power {
        base: Box<RadExpr>,
        exponent: u32,
    },
    Root {
        degree: u32,
        body: Box<RadExpr>,
    },
    /// The elided remainder `...` of an infinite radical.
    Tail,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", .expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: root degree must be at least 2, got {degree}")]
    RootDegree {
        degree: u32,
        line: usize,
        column: usize,
    },
    #[error("{line}:{column}: zero denominator")]
    ZeroDenominator { line: usize, column: usize },
    #[error("{line}:{column}: {what} does not fit in 32 bits")]
    OutOfRange {
        what: &'static str,
        line: usize,
        column: usize,
    },
    #[error("`...` must appear at most once, directly inside the innermost root: {reason}")]
    TailPlacement { reason: &'static str },
}

impl ParseError {
    pub(crate) fn syntax(line: usize, column: usize, expected: Vec<String>, found: String) -> Self {
        Self::Syntax {
            line,
            column,
            expected,
            found,
        }
    }

    fn position(&self) -> Option<(usize, usize)> {
        match self {
            Self::Syntax { line, column, .. }
            | Self::RootDegree { line, column, .. }
            | Self::ZeroDenominator { line, column }
            | Self::OutOfRange { line, column, .. } => Some((*line, *column)),
            Self::TailPlacement { .. } => None,
        }
    }

    /// Error message followed by the offending source line and a caret.
    pub fn render(&self, source: &str) -> String {
        let mut out = format!("error: {self}\n");
        if let Some((line, column)) = self.position() {
            let text = source.lines().nth(line - 1).unwrap_or("");
            out.push_str(&format!("  | {text}\n"));
            out.push_str(&format!("  | {}^\n", " ".repeat(column.saturating_sub(1))));
        }
        out
    }
}

impl RadExpr {
    pub fn number(value: BigRat) -> Self {
        Self::Number(value)
    }

    pub fn root(degree: u32, body: RadExpr) -> Self {
        Self::Root {
            degree,
            body: Box::new(body),
        }
    }

    pub fn power(base: RadExpr, exponent: u32) -> Self {
        Self::Power {
            base: Box::new(base),
            exponent,
        }
    }

    fn children(&self) -> Vec<&RadExpr> {
        match self {
            Self::Sum(items) | Self::Product(items) => items.iter().collect(),
            Self::Power { base, .. } => vec![base],
            Self::Root { body, .. } => vec![body],
            Self::Number(_) | Self::Tail => Vec::new(),
        }
    }

    pub fn contains_tail(&self) -> bool {
        matches!(self, Self::Tail) || self.children().into_iter().any(Self::contains_tail)
    }

    fn count_tails(&self) -> usize {
        usize::from(matches!(self, Self::Tail))
            + self
                .children()
                .into_iter()
                .map(Self::count_tails)
                .sum::<usize>()
    }

    fn contains_root(&self) -> bool {
        matches!(self, Self::Root { .. }) || self.children().into_iter().any(Self::contains_root)
    }

    /// Maximum nesting of roots.
    pub fn root_depth(&self) -> usize {
        let inner = self
            .children()
            .into_iter()
            .map(Self::root_depth)
            .max()
            .unwrap_or(0);
        inner + usize::from(matches!(self, Self::Root { .. }))
    }

    /// Checks the structural invariants: root degrees of at least 2, and at
    /// most one tail, sitting in the body of a root that has no root inside.
    pub fn validate(&self) -> Result<(), ParseError> {
        self.check_degrees()?;
        match self.count_tails() {
            0 => Ok(()),
            1 => self.check_tail_placement(false),
            _ => Err(ParseError::TailPlacement {
                reason: "more than one tail",
            }),
        }
    }

    fn check_degrees(&self) -> Result<(), ParseError> {
        if let Self::Root { degree, .. } = self {
            if *degree < 2 {
                return Err(ParseError::RootDegree {
                    degree: *degree,
                    line: 0,
                    column: 0,
                });
            }
        }
        self.children()
            .into_iter()
            .try_for_each(Self::check_degrees)
    }

    fn check_tail_placement(&self, inside_root: bool) -> Result<(), ParseError> {
        match self {
            Self::Tail if !inside_root => Err(ParseError::TailPlacement {
                reason: "tail outside any root",
            }),
            Self::Root { body, .. } if body.contains_tail() => {
                if body.has_root_holding_tail() {
                    return body.check_tail_placement(true);
                }
                if body.contains_root() {
                    return Err(ParseError::TailPlacement {
                        reason: "the root holding the tail has another root inside",
                    });
                }
                Ok(())
            }
            _ => self
                .children()
                .into_iter()
                .filter(|c| c.contains_tail())
                .try_for_each(|c| c.check_tail_placement(inside_root)),
        }
    }

    fn has_root_holding_tail(&self) -> bool {
        self.children().into_iter().any(|child| {
            (matches!(child, Self::Root { .. }) && child.contains_tail())
                || child.has_root_holding_tail()
        })
    }

    /// `root(n, C + m * root(n, ...))` built from the layers of a source,
    /// ending in a tail after `depth` layers. Multipliers are plain numbers.
    pub fn from_layers<S: LayerSource + ?Sized>(source: &S, depth: u64) -> Self {
        let order = source.order();
        (0..depth).rev().fold(Self::Tail, |inner, index| {
            let term = source.layer(index);
            Self::layer_node(
                order,
                Self::Number(term.constant),
                Self::Number(term.multiplier),
                inner,
            )
        })
    }

    /// Like [`RadExpr::from_layers`], but writes each multiplier as
    /// `argument^(n-1)` the way the order-n family is usually displayed.
    pub fn from_general(spec: &GeneralSpec, depth: u64) -> Self {
        let order = spec.order();
        (0..depth).rev().fold(Self::Tail, |inner, index| {
            let term = spec.layer(index);
            let multiplier = match order - 1 {
                1 => Self::Number(term.argument),
                power => Self::power(Self::Number(term.argument), power),
            };
            Self::layer_node(order, Self::Number(term.constant), multiplier, inner)
        })
    }

    fn layer_node(order: u32, constant: RadExpr, multiplier: RadExpr, inner: RadExpr) -> Self {
        Self::root(
            order,
            Self::Sum(vec![constant, Self::Product(vec![multiplier, inner])]),
        )
    }
}
