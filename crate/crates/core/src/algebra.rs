//! Exact polynomial algebra behind the nested-radical identities.
//!
//! The functional equation `(x+1)^n = C_n(x) + x^(n-1) * (x+n)` is checked
//! with big-integer coefficients, the degree argument for a polynomial
//! solution is replayed as a linear equation in the degree, and the linear
//! ansatz `f(x) = a*x + b` is solved by enumerating rational roots of the
//! leading and constant coefficient constraints.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::numeric::{format_rational, BigRat};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("root order must be at least 2, got {0}")]
    OrderTooSmall(u32),
    #[error("degree equation {lhs}*d = {rhs} has no integer solution")]
    NoIntegerDegree { lhs: i64, rhs: i64 },
}

/// Dense univariate polynomial; `coefficients[k]` multiplies `x^k`.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has an
/// empty coefficient list and [`Polynomial::degree`] returns `None`
/// (standing in for degree minus infinity).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coefficients: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRat>;

impl<T> Polynomial<T>
where
    T: Clone + Zero + One + PartialEq,
{
    pub fn new(mut coefficients: Vec<T>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn constant(value: T) -> Self {
        Self::new(vec![value])
    }

    /// `coefficient * x^power`
    pub fn monomial(coefficient: T, power: usize) -> Self {
        let mut coefficients = vec![T::zero(); power + 1];
        coefficients[power] = coefficient;
        Self::new(coefficients)
    }

    /// `x + shift`
    pub fn linear_shift(shift: T) -> Self {
        Self::new(vec![shift, T::one()])
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    /// Coefficient of `x^power`, zero past the degree.
    pub fn coefficient(&self, power: usize) -> T {
        self.coefficients
            .get(power)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn scale(&self, factor: &T) -> Self
    where
        T: Mul<Output = T>,
    {
        Self::new(
            self.coefficients
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    /// Multiply by `x^power`.
    pub fn shift_up(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coefficients = vec![T::zero(); power];
        coefficients.extend(self.coefficients.iter().cloned());
        Self::new(coefficients)
    }

    /// Keep only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coefficients.iter().take(len).cloned().collect())
    }

    /// Horner evaluation.
    pub fn evaluate(&self, at: &T) -> T
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn map<U, F>(&self, f: F) -> Polynomial<U>
    where
        U: Clone + Zero + One + PartialEq,
        F: Fn(&T) -> U,
    {
        Polynomial::new(self.coefficients.iter().map(f).collect())
    }

    /// `self^power` by repeated convolution.
    pub fn pow(&self, power: u32) -> Self
    where
        T: Mul<Output = T> + Add<Output = T>,
    {
        (0..power).fold(Self::constant(T::one()), |acc, _| &acc * self)
    }
}

impl<T> Add for &Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T>,
{
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        Polynomial::new(
            (0..len)
                .map(|k| self.coefficient(k) + rhs.coefficient(k))
                .collect(),
        )
    }
}

impl<T> Neg for &Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Neg<Output = T>,
{
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coefficients.iter().map(|c| -c.clone()).collect())
    }
}

impl<T> Sub for &Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Neg<Output = T>,
{
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T> Mul for &Polynomial<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Mul<Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: fmt::Display + Zero + One + PartialEq> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let text = c.to_string();
            let coefficient = if c.is_one() {
                String::new()
            } else if text.bytes().all(|b| b.is_ascii_digit()) {
                text.clone()
            } else {
                format!("({text})")
            };
            match power {
                0 => write!(f, "{text}")?,
                1 => write!(f, "{coefficient}x")?,
                _ => write!(f, "{coefficient}x^{power}")?,
            }
        }
        Ok(())
    }
}

fn check_order(order: u32) -> Result<(), AlgebraError> {
    if order < 2 {
        Err(AlgebraError::OrderTooSmall(order))
    } else {
        Ok(())
    }
}

/// `C_n(x) = sum_{k=0}^{n-2} binom(n, k) x^k`, the part of `(x+1)^n` that
/// stays outside the inner radical at every layer.
///
/// Coefficients come from expanding `(x+1)^n` and dropping the top two terms.
pub fn layer_constant_poly(order: u32) -> Result<IntPolynomial, AlgebraError> {
    check_order(order)?;
    let binomial = IntPolynomial::linear_shift(BigInt::one()).pow(order);
    Ok(binomial.truncate(order as usize - 1))
}

/// `C_n(x) + x^(n-1) * (x + n)`: the layer identity's right side with
/// `f(x + n - 1) = x + n` substituted.
pub fn functional_rhs(order: u32) -> Result<IntPolynomial, AlgebraError> {
    let constant = layer_constant_poly(order)?;
    let tail = IntPolynomial::linear_shift(BigInt::from(order)).shift_up(order as usize - 1);
    Ok(&constant + &tail)
}

/// True iff `(x+1)^n - [C_n(x) + x^(n-1) (x+n)]` is the zero polynomial.
pub fn functional_identity_check(order: u32) -> Result<bool, AlgebraError> {
    let lhs = IntPolynomial::linear_shift(BigInt::one()).pow(order);
    let rhs = functional_rhs(order)?;
    Ok((&lhs - &rhs).is_zero())
}

/// Degree `d` of a polynomial solution of `f(x)^n = C_n(x) + x^(n-1) f(x+n-1)`.
///
/// Matching leading degrees gives `n*d = d + (n-1)`.
pub fn infer_degree(order: u32) -> Result<u32, AlgebraError> {
    check_order(order)?;
    let n = i64::from(order);
    // (n - 1) d = n - 1
    let (lhs, rhs) = (n - 1, n - 1);
    let (degree, remainder) = rhs.div_rem(&lhs);
    if remainder != 0 || degree < 0 {
        return Err(AlgebraError::NoIntegerDegree { lhs, rhs });
    }
    Ok(degree as u32)
}

/// Right side of the order-n functional equation for `f(x) = a x + b`:
/// `C_n(x) + x^(n-1) (a (x + n - 1) + b)`.
pub fn expand_rhs(order: u32, a: &BigRat, b: &BigRat) -> Result<RatPolynomial, AlgebraError> {
    let constant = layer_constant_poly(order)?.map(|c| BigRat::from_integer(c.clone()));
    let shifted = RatPolynomial::new(vec![
        a * BigRat::from_integer(BigInt::from(order - 1)) + b,
        a.clone(),
    ]);
    Ok(&constant + &shifted.shift_up(order as usize - 1))
}

/// `1 + 3x + x^2 (a (x+2) + b) = a x^3 + (2a + b) x^2 + 3x + 1`.
pub fn expand_rhs_order3(a: &BigRat, b: &BigRat) -> RatPolynomial {
    expand_rhs(3, a, b).expect("order 3 is valid")
}

/// `(a x + b)^n`
pub fn expand_lhs(order: u32, a: &BigRat, b: &BigRat) -> RatPolynomial {
    RatPolynomial::new(vec![b.clone(), a.clone()]).pow(order)
}

/// One coefficient relation `lhs = rhs` for the power `x^power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub power: usize,
    pub lhs: BigRat,
    pub rhs: BigRat,
}

impl Relation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds() { "==" } else { "!=" };
        write!(
            f,
            "x^{}: {} {} {}",
            self.power,
            format_rational(&self.lhs),
            verdict,
            format_rational(&self.rhs)
        )
    }
}

/// A candidate `(a, b)` for `f(x) = a x + b` with one relation per power of x,
/// ordered from the highest power down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzCandidate {
    pub a: BigRat,
    pub b: BigRat,
    pub relations: Vec<Relation>,
}

impl AnsatzCandidate {
    pub fn evaluate(order: u32, a: BigRat, b: BigRat) -> Result<Self, AlgebraError> {
        let lhs = expand_lhs(order, &a, &b);
        let rhs = expand_rhs(order, &a, &b)?;
        let relations = (0..=order as usize)
            .rev()
            .map(|power| Relation {
                power,
                lhs: lhs.coefficient(power),
                rhs: rhs.coefficient(power),
            })
            .collect();
        Ok(Self { a, b, relations })
    }

    pub fn satisfied(&self) -> Vec<bool> {
        self.relations.iter().map(Relation::holds).collect()
    }

    pub fn is_solution(&self) -> bool {
        self.relations.iter().all(Relation::holds)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(|r| !r.holds())
    }
}

/// Enumerates every `(a, b)` allowed by the leading-coefficient constraint
/// (`a^n = a`) and the constant-term constraint (`b^n = 1`), then checks
/// all `n + 1` coefficient relations exactly.
///
/// Both constraints are binomials whose real roots are rational (0, ±1),
/// so the rational-root enumeration finds the complete real solution set.
pub fn solve_linear_ansatz(order: u32) -> Result<Vec<AnsatzCandidate>, AlgebraError> {
    check_order(order)?;
    // a^n - a
    let leading = IntPolynomial::new({
        let mut c = vec![BigInt::zero(); order as usize + 1];
        c[1] = -BigInt::one();
        c[order as usize] = BigInt::one();
        c
    });
    // b^n - C_n(0)
    let constant_term = layer_constant_poly(order)?.coefficient(0);
    let trailing = &IntPolynomial::monomial(BigInt::one(), order as usize)
        - &IntPolynomial::constant(constant_term);

    let mut candidates = Vec::new();
    for a in rational_roots(&leading) {
        for b in rational_roots(&trailing) {
            candidates.push(AnsatzCandidate::evaluate(order, a.clone(), b)?);
        }
    }
    Ok(candidates)
}

/// All distinct rational roots of an integer polynomial, ascending.
pub fn rational_roots(poly: &IntPolynomial) -> Vec<BigRat> {
    if poly.is_zero() {
        return Vec::new();
    }
    // Factor out x^k first so the constant coefficient is nonzero.
    let zeros = poly
        .coefficients()
        .iter()
        .take_while(|c| c.is_zero())
        .count();
    let reduced = IntPolynomial::new(poly.coefficients()[zeros..].to_vec());
    let mut roots = Vec::new();
    if zeros > 0 {
        roots.push(BigRat::zero());
    }
    let as_rational = reduced.map(|c| BigRat::from_integer(c.clone()));
    if let Some(degree) = reduced.degree() {
        if degree > 0 {
            let head = reduced.coefficient(degree).abs();
            let tail = reduced.coefficient(0).abs();
            for p in divisors(&tail) {
                for q in divisors(&head) {
                    for numer in [p.clone(), -p.clone()] {
                        let candidate = BigRat::new(numer, q.clone());
                        if as_rational.evaluate(&candidate).is_zero() && !roots.contains(&candidate)
                        {
                            roots.push(candidate);
                        }
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

fn divisors(value: &BigInt) -> Vec<BigInt> {
    let value = value.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= value {
        if (&value % &d).is_zero() {
            out.push(d.clone());
            let pair = &value / &d;
            if pair != d {
                out.push(pair);
            }
        }
        d += 1;
    }
    out
}
