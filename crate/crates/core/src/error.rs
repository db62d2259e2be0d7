use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (entry ({row}, {col}) differs from the conjugate of its mirror)")]
    NotHermitian { row: usize, col: usize },

    #[error("determinant must be 1, got {0}")]
    NotUnimodular(String),

    #[error("mass must be positive, got {0}")]
    NonPositiveMass(String),

    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("cannot parse numeric literal {0:?}")]
    Parse(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
