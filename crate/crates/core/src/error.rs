use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{modulus} is not an admissible field modulus: {reason}")]
    InvalidModulus { modulus: u64, reason: &'static str },

    #[error("zero vector has no normalization")]
    ZeroVector,

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("enumeration bound exceeded: {0}")]
    BudgetExceeded(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("mu must lie in [0, 1/2], got {0}")]
    MuOutOfRange(String),

    #[error("mu grid is empty")]
    EmptyGrid,

    #[error("conditioning event has probability zero")]
    EmptyConditioning,

    #[error("decoupling requires independence: joint law is not the product of its marginals")]
    NotIndependent,

    #[error("invalid probability law: {0}")]
    InvalidLaw(String),

    #[error("expected corank {expected}, found corank {found}")]
    Corank { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("enumerate kernel lattice not supported (corank {0})")]
    KernelLattice(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown verifier '{name}'; registered verifiers: {registered}")]
    UnknownVerifier { name: String, registered: String },

    #[error("invalid parameter '{key}': {reason}")]
    Param { key: String, reason: String },

    #[error("config: {0}")]
    Config(String),

    #[error("report parse error: {0}")]
    ReportParse(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
