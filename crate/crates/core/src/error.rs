use thiserror::Error;

use crate::poly::{Monomial, Polynomial};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("algebra `{0}` has no closed-form product")]
    Unsupported(String),

    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),

    #[error("ad(x{generator}) is not nilpotent within {bound} steps")]
    NotNilpotent { generator: usize, bound: usize },

    #[error("role hypothesis failed: [{left},{right}] is {found}, expected {expected}")]
    HypothesisMismatch {
        left: String,
        right: String,
        found: String,
        expected: String,
    },

    #[error("role binding is not in decreasing generator order: {0}")]
    RoleOrder(String),

    #[error("malformed role binding: {0}")]
    BadBinding(String),

    #[error("engines disagree on {left} * {right}: closed form gives {closed}, oracle gives {oracle}")]
    Divergence {
        left: Monomial,
        right: Monomial,
        closed: Polynomial,
        oracle: Polynomial,
    },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),

    #[error("malformed rational `{0}`")]
    BadRational(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
