//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("invalid scalar literal {literal:?}: {reason}")]
    InvalidScalar { literal: String, reason: String },
    #[error("linear system is unsolvable")]
    Unsolvable,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("not a 2-cocycle: {0}")]
    NotCocycle(String),
    #[error("not a 1-cocycle: {0}")]
    NotOneCocycle(String),
    #[error("algebra is not strict: l3 is nonzero")]
    NotStrict,
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("value escapes the fiber: {0}")]
    FiberEscape(String),
    #[error("map does not preserve the fiber: {0}")]
    FiberNotPreserved(String),
    #[error("pair is not compatible: {0}")]
    IncompatiblePair(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
