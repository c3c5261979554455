//! Exact crank and rank tables for partitions, overpartitions and k-colored
//! partitions.
//!
//! Tables come from truncated bivariate generating functions
//! ([`bivariate`]) and are cross-checked against brute-force enumeration
//! ([`enumerate`]). The [`verify`] module turns them into pass/fail reports for
//! the unimodality and monotonicity inequalities and for a catalog of q-series
//! identities.

pub mod bivariate;
pub mod enumerate;
mod error;
pub mod series;
pub mod tables;
pub mod verify;

pub use bivariate::{BivariateSeries, LaurentPoly};
pub use enumerate::{KColoredPartition, Overpartition, Partition, WeightedContribution};
pub use error::{Error, Result};
pub use series::{FactorSign, SeriesError, TruncSeries};
pub use tables::{CrankTable, Provenance, Statistic};
pub use verify::{CheckReport, Exception, Verdict, VerifyConfig};
