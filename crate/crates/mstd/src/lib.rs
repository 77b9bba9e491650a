//! Sumset and difference-set computation for finite integer sets, with a
//! focus on MSTD ("more sums than differences") sets.
//!
//! A finite set `A` of integers is MSTD, or sum-dominated, when
//! `|A+A| > |A-A|`. Most sets are not: subtraction is non-commutative, so a
//! generic pair of elements contributes one sum but two differences. The
//! smallest classical counterexample is Conway's set
//! `{0, 2, 3, 4, 7, 11, 12, 14}` with 26 sums against 25 differences.
//!
//! The crate provides:
//!
//! - [`IntegerSet`]: a canonical sorted integer set with sumset, difference
//!   set, classification, and the affine transforms that preserve MSTD
//!   status, backed by a dense bit-row engine for small spans and a hash
//!   fallback for the rest ([`set`]).
//! - [`verify`]: a literal pairwise verifier instrumented with exact
//!   addition/subtraction/comparison counters, plus two bit-cost models
//!   ([`verify()`], [`bit_cost_estimate`]).
//! - [`search`]: exact enumeration of all subsets of `[0, N-1]`, a
//!   descending-cardinality search for the largest MSTD subset, and a
//!   seeded Monte Carlo estimator of the MSTD probability.
//! - [`corpus`]: embedded fixtures for fourteen published MSTD examples
//!   and a validator that audits their printed element lists.
//!
//! ```
//! use mstd::{IntegerSet, Label};
//!
//! let (conway, _) = IntegerSet::parse("{0, 2, 3, 4, 7, 11, 12, 14}").unwrap();
//! let c = conway.classify().unwrap();
//! assert_eq!((c.sum_cardinality, c.diff_cardinality), (26, 25));
//! assert_eq!(c.label, Label::Mstd);
//! ```

pub mod corpus;
mod dense;
mod mask;
pub mod search;
pub mod set;
pub mod verify;

pub use search::{
    enumerate_interval, largest_mstd_cardinality, mstd_probability_monte_carlo,
    probability_series, EnumerationReport, LargestResult, MonteCarloReport, SearchOptions,
    SeriesRow,
};
pub use set::{Classification, IntegerSet, Label};
pub use verify::{bit_cost_estimate, verify, OpCounts, VerificationReport};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Set text or corpus data failed to parse.
    #[error("parse error: {0}")]
    Parse(String),

    /// An arithmetic result left the signed 64-bit range. Cardinality counts
    /// are only meaningful over exact arithmetic, so this is a hard error,
    /// never a wraparound.
    #[error("{context}: result leaves the signed 64-bit integer range")]
    Overflow {
        /// Which computation overflowed, e.g. `"sumset"`.
        context: &'static str,
    },

    /// An operation that needs at least one element was given the empty set.
    #[error("{operation} requires a nonempty set")]
    EmptySet { operation: &'static str },

    /// Exact enumeration refused: 2^N subsets is past the configured cap.
    #[error("exact enumeration covers N <= {cap} (got N = {n}); use the Monte Carlo estimator beyond the cap")]
    ExactCapExceeded { n: u32, cap: u32 },

    /// A requested enumeration cap exceeds the hard cap; the cap is only
    /// configurable downward.
    #[error("exact-enumeration cap {requested} exceeds the hard cap {hard}")]
    CapTooHigh { requested: u32, hard: u32 },

    /// Subsets of `[0, N-1]` are handled as N-bit machine words.
    #[error("interval length N = {n} exceeds the {max}-bit subset-mask engine")]
    IntervalTooWide { n: u32, max: u32 },

    /// N was zero where an interval `[0, N-1]` is required.
    #[error("interval length N must be at least 1")]
    EmptyInterval,

    /// Monte Carlo estimation needs at least one trial.
    #[error("trials must be at least 1")]
    NoTrials,

    /// A probability series was requested over an empty or inverted range.
    #[error("invalid series range: need 1 <= N_min <= N_max, got {n_min}..{n_max}")]
    InvalidRange { n_min: u32, n_max: u32 },

    /// The descending-cardinality search ran out of its node budget. This is
    /// a partial result: every cardinality in `(next_cardinality, n]` was
    /// fully scanned and holds no MSTD subset.
    #[error(
        "node budget {budget} exhausted for N = {n} after charging {charged} candidate \
         subsets: no MSTD subset of cardinality above {next_cardinality} exists, and \
         scanning cardinality {next_cardinality} would exceed the budget"
    )]
    BudgetExhausted {
        n: u32,
        budget: u64,
        /// Subsets charged against the budget before the abort.
        charged: u64,
        /// The first cardinality level that was not scanned.
        next_cardinality: u32,
    },

    /// The embedded corpus failed its checksum or structural checks.
    #[error("corpus data: {0}")]
    CorpusData(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
