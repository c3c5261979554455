use thiserror::Error;

use crate::series::SeriesError;
use crate::tables::Statistic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),

    #[error("k-crank needs k >= 2, got {0}")]
    InvalidColors(usize),

    #[error("{statistic} has no generating-function backend")]
    NoGeneratingFunction { statistic: Statistic },

    #[error("{statistic} enumeration is capped at n = {ceiling}, requested {requested}")]
    OracleCeiling {
        statistic: Statistic,
        requested: usize,
        ceiling: usize,
    },

    #[error("{statistic} row n = {n} is not symmetric in m")]
    Asymmetric { statistic: Statistic, n: usize },

    #[error("table mismatch: {0}")]
    TableMismatch(String),

    #[error("n = {requested} is beyond the table (n_max = {n_max})")]
    OutOfRange { requested: usize, n_max: usize },

    #[error("m must be at least 1 for a difference column, got {0}")]
    InvalidDifferenceIndex(i64),

    #[error("statistic undefined for the empty partition")]
    EmptyPartition,

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
