//! Workbench for static external-memory indexing schemes for exact and
//! approximate k-nearest-neighbor workloads.
//!
//! A scheme stores a set of blocks, each holding at most `B` item
//! identifiers; the cost of a query is the minimum number of blocks whose
//! union contains a valid answer, and locating those blocks is free. On top
//! of that cost model this crate provides:
//!
//! * exact distance arithmetic for Hamming, l1, l2 and l-infinity points
//!   ([`metrics`]),
//! * workloads, blocks, cover sets and answer-validity rules ([`model`]),
//! * a brute-force ground-truth oracle for k-NN and approximation
//!   certification ([`oracle`]),
//! * a 3-approximate scheme for arbitrary metrics ([`general`]),
//! * a c-approximate Hamming scheme built from randomized parity maps
//!   ([`hamming`]),
//! * hard workload generators: unit-vector constructions and certified
//!   bipartite expanders ([`hard`]),
//! * exact counting bounds and the matching subset scheme ([`tradeoff`]).
//!
//! All distance comparisons and approximation ratios are carried out on
//! scaled integers or exact rationals; no floating point enters a
//! correctness decision.

pub mod error;
pub mod format;
pub mod general;
pub mod hamming;
pub mod hard;
pub mod metrics;
pub mod model;
pub mod oracle;
pub mod ratio;
pub mod rng;
pub mod tradeoff;

pub use error::Error;
pub use metrics::{distance, BitPoint, DensePoint, Metric, Point, PointSet};
pub use model::{IndexingScheme, QuerySpec};
pub use oracle::{certify_ck_answer, knn_exact};
pub use ratio::Ratio;

/// Identifier of a stored item. Instances use the ids `1..=n`.
pub type ItemId = u32;

/// Result alias for fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
