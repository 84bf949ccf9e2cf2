//! Crate-wide error type.

use thiserror::Error;

use crate::ItemId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("metric {metric} is not defined for this point representation")]
    MetricMismatch { metric: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("wrong answer cardinality: expected {expected}, got {actual}")]
    WrongCardinality { expected: usize, actual: usize },

    #[error("unknown item id {0}")]
    UnknownItem(ItemId),

    #[error("no cover exists for the required item set")]
    NoCover,

    #[error(
        "exact cover budget exceeded ({blocks} blocks, {required} required items); \
         use cover_set_greedy"
    )]
    CoverBudgetExceeded { blocks: usize, required: usize },

    #[error("query is not covered by the certification set; answer not guaranteed")]
    UncertifiedQuery,

    #[error("retries exhausted after {retries} attempts: {detail}")]
    RetriesExhausted { retries: usize, detail: String },

    #[error("expander is not certified")]
    NotCertified,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
