use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("matrix shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("invalid code parameters n={n}, k1={k1}, k2={k2}: {reason}")]
    InvalidParameters {
        n: usize,
        k1: usize,
        k2: usize,
        reason: &'static str,
    },

    #[error("length {0} exceeds the supported maximum of {max}", max = crate::code::MAX_LENGTH)]
    LengthTooLarge(usize),

    #[error("not a standard generator matrix: {0}")]
    NotStandardForm(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty code family")]
    EmptyFamily,

    #[error("cell ({n},{k1},{k2}) incomplete: {reason}")]
    Incomplete {
        n: usize,
        k1: usize,
        k2: usize,
        reason: String,
    },

    #[error("cell ({n},{k1},{k2}): exhaustive count {exhaustive} disagrees with closed form {closed_form}")]
    ClosedFormMismatch {
        n: usize,
        k1: usize,
        k2: usize,
        exhaustive: u64,
        closed_form: u64,
    },

    #[error("classifying length {0} requires counts for length {prev}", prev = .0 - 1)]
    MissingPrior(usize),

    #[error("prior table has length {found}, expected {expected}")]
    PriorMismatch { expected: usize, found: usize },

    #[error(
        "duality violated at length {n}: N({n},{k1},{k2}) = {count} but N({n},{dual_k1},{dual_k2}) = {dual_count}"
    )]
    DualityViolation {
        n: usize,
        k1: usize,
        k2: usize,
        count: u64,
        dual_k1: usize,
        dual_k2: usize,
        dual_count: u64,
    },

    #[error("invalid manifest {}: {reason}", path.display())]
    Manifest { path: PathBuf, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}
