use thiserror::Error;

use crate::exactpoly::SignRun;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input lies outside the region where a formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Root isolation was asked for the zero polynomial.
    #[error("the zero polynomial has no isolable roots")]
    ZeroPolynomial,

    /// A piece of a piecewise polynomial vanishes identically.
    #[error("degenerate piece {index}: polynomial is identically zero on [{lower}, {upper}]")]
    DegeneratePiece {
        index: usize,
        lower: String,
        upper: String,
    },

    /// Fewer than two non-zero coordinates: the section is not a proper slice.
    #[error("degenerate section: {0}")]
    DegenerateSection(String),

    /// A quadrature could not certify the requested accuracy.
    #[error("quadrature accuracy not met: estimated error {estimate:e} exceeds tolerance {tolerance:e}")]
    Accuracy { estimate: f64, tolerance: f64 },

    /// The sign pattern of the criterion polynomials is not the expected
    /// two-crossing / one-crossing shape.
    #[error("sign pattern violation for n = {n}: {detail}")]
    PatternViolation {
        n: u32,
        detail: String,
        s1: Vec<SignRun>,
        s2: Vec<SignRun>,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
