//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Csv { path: PathBuf, message: String },
    #[error("price at row {row}, column {column} must be a positive number, got {value:?}")]
    BadPrice {
        row: usize,
        column: usize,
        value: String,
    },
    #[error("ragged row {row}: expected {expected} fields, got {got}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },
    #[error("at least 2 price rows required")]
    TooFewPriceRows,
    #[error("at least 2 assets required, got {0}")]
    TooFewAssets(usize),
    #[error("at least 2 return rows required to estimate a covariance")]
    TooFewReturnRows,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("covariance matrix is not symmetric at ({i},{j})")]
    AsymmetricCovariance { i: usize, j: usize },
    #[error("negative variance on the covariance diagonal at index {0}")]
    NegativeVariance(usize),
    #[error("repair needs at least one strictly positive weight")]
    AllZeroWeights,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("empty sample")]
    EmptySample,
    #[error("empty front")]
    EmptyFront,
    #[error("front has no portfolio links")]
    NoPortfolios,
}

pub type Result<T> = std::result::Result<T, Error>;
