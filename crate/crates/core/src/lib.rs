//! Exact analysis of finite ultrametric spaces generated by labeled trees.
//!
//! The crate is organized by task:
//!
//! - [`tree`]: labeled trees, the path-maximum ultrametric and its
//!   canonical relabeling.
//! - [`metric`]: finite ultrametric spaces as exact distance matrices,
//!   centers of distances, balls, centered spheres, diametrical graphs and
//!   weak similarity.
//! - [`padic`]: the p-adic valuation and the two example ultrametrics on
//!   rationals, with builders for finite samples.
//! - [`explorer`]: enumeration of all finite ultrametric spaces up to weak
//!   similarity, theorem checks and conjecture campaigns.
//! - [`io`]: tree JSON, matrix CSV, DOT and report formats.
//! - [`cli`]: the `ultratree` command line.
//!
//! All arithmetic is exact: distances and labels are [`Rational`]s.

pub mod cli;
pub mod explorer;
pub mod fixtures;
pub mod io;
pub mod metric;
pub mod padic;
pub mod pointset;
pub mod rational;
pub mod tree;

pub use metric::FiniteUltrametricSpace;
pub use pointset::PointSet;
pub use rational::Rational;
pub use tree::LabeledTree;
