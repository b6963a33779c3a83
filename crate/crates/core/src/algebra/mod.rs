//! Exact sparse polynomial arithmetic over arbitrary-precision integers.
//!
//! Every class the crate computes is a [`Polynomial`] in a fixed universe of
//! variables (see [`Var`]). Exponents are signed so that the same type also
//! carries Laurent polynomials (the K-theoretic weights need `y/x`); the
//! operations that only make sense for honest polynomials say so.

mod monomial;
mod parse;
mod polynomial;
mod rational;

pub use monomial::{Monomial, Var};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Substitution};
pub use rational::RationalFunction;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("leading form of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("no value supplied for variable {0}")]
    Unbound(Var),
    #[error("cannot evaluate {0} with a negative exponent at an integer point")]
    NegativeExponent(Var),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
