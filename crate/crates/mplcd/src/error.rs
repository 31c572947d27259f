use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("field too large: q = p^m must not exceed {max} (got {got})")]
    FieldTooLarge { max: u64, got: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("operation needs an even extension degree (Frobenius conjugation undefined)")]
    OddExtensionDegree,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has more rows than columns ({rows}x{cols})")]
    RowsExceedCols { rows: usize, cols: usize },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("{divisor} does not divide {dividend}")]
    NotADivisor { divisor: String, dividend: String },
    #[error("the zero code has no minimum distance")]
    ZeroCode,
    #[error("wrong characteristic: {0}")]
    WrongCharacteristic(String),
    #[error("matrix is not full row rank")]
    NotFullRowRank,
    #[error("matrix is not non-singular by columns")]
    NotNsc,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Schema(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
