use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("denominator vanishes at q = {0}")]
    Pole(String),
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("index out of range: {0}")]
    Index(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("operator is not skew-invertible")]
    NotSkewInvertible,
    #[error("operator is not invertible")]
    NotInvertible,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("degenerate q: {0}")]
    DegenerateQ(String),
    #[error("transposed tableau is not standard")]
    NonStandardTarget,
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Input(String),
}
