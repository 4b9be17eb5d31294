use thiserror::Error;

/// Errors raised by the algebraic and numeric routines of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input is not homogeneous of degree {expected} (found degrees {found:?})")]
    NonHomogeneous { expected: u32, found: Vec<u32> },

    #[error("unsupported depth {depth}: only words with at most {max} one-letters are handled")]
    UnsupportedDepth { depth: usize, max: usize },

    #[error("boundary mismatch: expected I(0;...;1), got I({left};...;{right})")]
    BoundaryMismatch { left: u8, right: u8 },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("word {0} is not admissible (must start with 1 and end with 0)")]
    NotAdmissible(String),

    #[error("cross-check failed: {0}")]
    Inconsistent(String),

    #[error("invalid usage: {0}")]
    Usage(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
