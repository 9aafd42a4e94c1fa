use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("degenerate integrand: {0}")]
    DegenerateIntegrand(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not a differential binomial: {0}")]
    NotABinomial(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integrand is not elementary; no rationalizing substitution exists")]
    NotElementary,
    #[error("exponent denominators too large for rationalization (bound {bound})")]
    ExponentTooComplex { bound: u32 },
    #[error("2F1 pole: third parameter is zero or a negative integer")]
    Pole,
    #[error("2F1 series diverges or converges too slowly: |z| = {z_abs}")]
    Divergence { z_abs: f64 },
    #[error("iteration did not converge within {0} steps")]
    NonConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
