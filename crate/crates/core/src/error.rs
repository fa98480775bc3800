use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("number of variables differs: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("matrix is not Hermitian at ({0}, {1})")]
    NotHermitian(usize, usize),

    #[error("generator is not a monomial")]
    NotMonomial,

    #[error("witness identity fails: {0}")]
    InvalidWitness(String),

    #[error("expected exactly one representation, found {0}")]
    NotUnique(usize),

    #[error("input exceeds cap: {0}")]
    CapExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
