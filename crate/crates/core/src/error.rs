use thiserror::Error;

use crate::exactlin::Vector;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("{law} fails on basis tuple {witness:?}")]
    LawViolation {
        law: &'static str,
        witness: Vec<usize>,
        residual: Vector,
    },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation requires a Lie algebra, got flavor `{0}`")]
    NotLie(String),

    #[error("not an L-submodule: e_{h_index} moves basis map {phi_index} out of the subspace")]
    NotSubmodule { h_index: usize, phi_index: usize },

    #[error("torus action is not split over the rationals")]
    NonSplitAction,

    #[error("ad({0}) is not nilpotent")]
    NotNilpotent(String),

    #[error("window too small: N = {0}, need N >= 2")]
    WindowTooSmall(i64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
