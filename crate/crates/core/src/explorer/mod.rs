//! Exhaustive exploration of small ultrametric spaces.
//!
//! Weak-similarity classes of `n`-point spaces are enumerated as canonical
//! [`Dendrogram`]s. Campaigns run theorem checks and conjecture searches
//! over those classes (or over random tree-generated spaces) and summarize
//! the outcome in a [`CampaignReport`].

mod campaigns;
mod dendrogram;
mod partition;
mod random;
mod report;
mod ut;

pub use campaigns::{
    check_closed_balls, check_con3, check_hol, check_suite, check_theorem_suite, log2_bound, ClosedBallSource,
};
pub use dendrogram::{dendrogram_to_space, enumerate_dendrograms, Dendrogram};
pub use partition::merge_parts;
pub use random::{random_labeled_tree, random_tree_corpus};
pub use report::{CampaignReport, CheckTally, Verdict, Witness, REPORT_SCHEMA};
pub use ut::is_ut;

use crate::metric::MetricError;
use crate::tree::TreeError;

/// Largest `n` for which classes are enumerated.
pub const ENUMERATION_LIMIT: usize = 10;
/// Largest `n` for the all-subsets campaign.
pub const HOL_LIMIT: usize = 8;
/// Largest space handed to the tree search in [`is_ut`].
pub const IS_UT_LIMIT: usize = 6;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExplorerError {
    #[error("{what} is limited to n <= {limit}, got {found}")]
    TooLarge { what: &'static str, limit: usize, found: usize },
    #[error("{what} needs n >= {needed}, got {found}")]
    TooSmall { what: &'static str, needed: usize, found: usize },
    #[error("label pool is empty")]
    EmptyPool,
    #[error("label pool contains the negative value {0}")]
    NegativePoolValue(String),
    #[error("label pool has no positive value, so no tree with an edge can be non-degenerate")]
    NoPositiveLabel,
    #[error("a partition needs at least two blocks, got {0}")]
    FewerThanTwoBlocks(usize),
    #[error("partition block {0} is empty")]
    EmptyBlock(usize),
    #[error("invalid dendrogram: {0}")]
    InvalidDendrogram(String),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

fn fence(what: &'static str, n: usize, min: usize, limit: usize) -> Result<(), ExplorerError> {
    if n < min {
        return Err(ExplorerError::TooSmall { what, needed: min, found: n });
    }
    if n > limit {
        return Err(ExplorerError::TooLarge { what, limit, found: n });
    }
    Ok(())
}
