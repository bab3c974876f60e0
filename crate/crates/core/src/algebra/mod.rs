//! Exact scalar and multivariate polynomial arithmetic.
//!
//! Everything downstream (operators, continuation, catalog) is built on the
//! types here. Coefficients are arbitrary-precision rationals; nothing in this
//! module rounds.

mod packed;
mod json;
mod matrix;
mod poly;
mod roots;

pub use json::{parse_rational, PolyJson, TermJson};
pub use matrix::PolyMatrix;
pub use poly::{Monomial, MultiPoly};
pub use roots::{binomial_power, binomial_profile, rational_root, BinomialProfile};

use thiserror::Error;

/// Arbitrary-precision rational; the coefficient field everywhere.
pub type ExactScalar = num_rational::BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> ExactScalar {
    ExactScalar::new(num.into(), den.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} exceeds the supported maximum of 6")]
    TooLarge(usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("scaling factor for variable {0} is zero")]
    ZeroFactor(usize),
    #[error("not an exact {0}-th power over the rationals")]
    NoExactRoot(u32),
    #[error("not of the form ±(1 + t/r)^k with rational r")]
    NotBinomialPower,
    #[error("expected a univariate polynomial, found {0} variables")]
    NotUnivariate(usize),
    #[error("invalid polynomial JSON: {0}")]
    Json(String),
}
