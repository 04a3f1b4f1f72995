//! Exact arithmetic: multivariate polynomials and rational functions over
//! the rationals, with gcd, substitution and derivatives.

mod calculus;
mod gcd;
mod interp;
mod intpoly;
mod modular;
mod monomial;
mod parse;
mod poly;
mod ratfun;
mod ring;

pub use calculus::{determinant, jacobian_det};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_rational_function, ParseError};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use ring::Ring;

/// Unbounded rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("variable index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("expected {expected} images, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("system is not square: {rows} functions in {cols} variables")]
    NotSquare { rows: usize, cols: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(alloc::string::String),
}

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `n / d`.
pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
