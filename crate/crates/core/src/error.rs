use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid braid parameters: {0}")]
    Braid(String),
    #[error(
        "Yang-Baxter equation fails on basis triple {triple}: left side {lhs}, right side {rhs}"
    )]
    YangBaxter {
        triple: String,
        lhs: String,
        rhs: String,
    },
    #[error("invalid braiding: {0}")]
    InvalidBraiding(String),
    #[error("operation requires an involutive braiding")]
    NotInvolutive,
    #[error("{op} takes {expected} arguments, got {got}")]
    Arity {
        op: String,
        expected: usize,
        got: usize,
    },
    #[error("unknown generator x{index}: the braiding has {dim} generators")]
    UnknownGenerator { index: usize, dim: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
