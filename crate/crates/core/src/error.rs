use thiserror::Error;

use crate::polyring::Var;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("variable {0} bound to 0 appears with a negative exponent")]
    Pole(Var),
    #[error("variable {0} is not bound")]
    Unbound(Var),
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("both polynomials have degree 0 in {0}: nothing to eliminate")]
    NothingToEliminate(Var),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("index {0} is negative; this form is only defined for k >= 0")]
    NegativeIndex(i64),
    #[error("W_{0} is not hyperbolic")]
    NotHyperbolic(i64),
    #[error("invalid link: {0}")]
    InvalidLink(String),
    #[error("degenerate computation: {0}")]
    Degenerate(String),
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed polynomial json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
