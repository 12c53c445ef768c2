//! Exact set algebra on the rational line, named quasi-metrics, admissible
//! families and the real-line generalized topologies built from them.

pub mod checkers;
pub mod covers;
pub mod lines;
pub mod qmetric;
pub mod rat;
pub mod realset;

pub use rat::{int, rat, Cut, ExtRat, Rat};
pub use realset::{Interval, RealSet, TopologyKind};

/// Errors raised by constructors and by operations outside their supported range.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("truncated: {0}")]
    Truncated(String),
}
