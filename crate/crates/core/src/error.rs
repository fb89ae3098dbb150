use alloc::string::String;

/// Errors raised by the simulation core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("amplitudes are not normalized: squared norm {norm_sq}")]
    Normalization { norm_sq: f64 },
    #[error("qubit index error: {0}")]
    Index(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },
    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("invalid ensemble: {0}")]
    InvalidEnsemble(String),
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("support of the first operand is not contained in the support of the second")]
    Support,
    #[error("length error: expected {expected}, got {actual}")]
    Length { expected: usize, actual: usize },
    #[error("space too large to enumerate: {size} combinations (limit {limit})")]
    SpaceTooLarge { size: u64, limit: u64 },
    #[error("value out of range: {0}")]
    Range(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("collision pair is invalid: {0}")]
    InvalidPair(String),
    #[error("query budget exceeded: {0}")]
    QueryBudget(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
