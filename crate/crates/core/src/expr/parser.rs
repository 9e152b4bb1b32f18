use num_bigint::BigInt;
use num_traits::Zero;

use super::lexer::{tokenize, Token, TokenKind};
use super::{ParseError, RadExpr};
use crate::numeric::BigRat;

/// Parses the radical expression grammar:
///
/// ```text
/// expr    := sum ;
/// sum     := product { "+" product } ;
/// product := power { "*" power } ;
/// power   := atom [ "^" integer ] ;
/// atom    := number | "root" "(" integer "," expr ")" | "(" expr ")" | "..." ;
/// number  := integer [ "/" integer ] ;
/// ```
///
/// Sums and products with a single operand collapse to that operand, and
/// parentheses only group, so the tree carries no trace of them.
pub fn parse(source: &str) -> Result<RadExpr, ParseError> {
    let tokens = tokenize(source)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.sum()?;
    parser.expect(&TokenKind::Eof, "end of input")?;
    expr.validate()?;
    Ok(expr)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

const ATOM_START: [&str; 4] = ["integer", "`root`", "`(`", "`...`"];

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let token = self.peek().clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        token
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let token = self.peek();
        ParseError::syntax(
            token.line,
            token.column,
            expected.iter().map(|s| s.to_string()).collect(),
            token.kind.to_string(),
        )
    }

    fn expect(&mut self, kind: &TokenKind, label: &str) -> Result<Token, ParseError> {
        if &self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(&[label]))
        }
    }

    fn integer(&mut self) -> Result<(BigInt, Token), ParseError> {
        match &self.peek().kind {
            TokenKind::Integer(digits) => {
                let value = digits.parse().expect("lexer only emits digits");
                Ok((value, self.bump()))
            }
            _ => Err(self.error(&["integer"])),
        }
    }

    fn small_integer(&mut self, what: &'static str) -> Result<(u32, Token), ParseError> {
        let (value, token) = self.integer()?;
        let small = u32::try_from(&value).map_err(|_| ParseError::OutOfRange {
            what,
            line: token.line,
            column: token.column,
        })?;
        Ok((small, token))
    }

    fn sum(&mut self) -> Result<RadExpr, ParseError> {
        let mut terms = vec![self.product()?];
        while self.peek().kind == TokenKind::Plus {
            self.bump();
            terms.push(self.product()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            RadExpr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<RadExpr, ParseError> {
        let mut factors = vec![self.power()?];
        while self.peek().kind == TokenKind::Star {
            self.bump();
            factors.push(self.power()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            RadExpr::Product(factors)
        })
    }

    fn power(&mut self) -> Result<RadExpr, ParseError> {
        let base = self.atom()?;
        if self.peek().kind != TokenKind::Caret {
            return Ok(base);
        }
        self.bump();
        let (exponent, _) = self.small_integer("power exponent")?;
        Ok(RadExpr::Power {
            base: Box::new(base),
            exponent,
        })
    }

    fn atom(&mut self) -> Result<RadExpr, ParseError> {
        match self.peek().kind.clone() {
            TokenKind::Integer(_) => self.number(),
            TokenKind::Ellipsis => {
                self.bump();
                Ok(RadExpr::Tail)
            }
            TokenKind::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(inner)
            }
            TokenKind::Root => {
                self.bump();
                self.expect(&TokenKind::LParen, "`(`")?;
                let (degree, token) = self.small_integer("root degree")?;
                if degree < 2 {
                    return Err(ParseError::RootDegree {
                        degree,
                        line: token.line,
                        column: token.column,
                    });
                }
                self.expect(&TokenKind::Comma, "`,`")?;
                let body = self.sum()?;
                self.expect(&TokenKind::RParen, "`)`")?;
                Ok(RadExpr::Root {
                    degree,
                    body: Box::new(body),
                })
            }
            _ => Err(self.error(&ATOM_START)),
        }
    }

    fn number(&mut self) -> Result<RadExpr, ParseError> {
        let (numer, start) = self.integer()?;
        if self.peek().kind != TokenKind::Slash {
            return Ok(RadExpr::Number(BigRat::from_integer(numer)));
        }
        self.bump();
        let (denom, _) = self.integer()?;
        if denom.is_zero() {
            return Err(ParseError::ZeroDenominator {
                line: start.line,
                column: start.column,
            });
        }
        Ok(RadExpr::Number(BigRat::new(numer, denom)))
    }
}
