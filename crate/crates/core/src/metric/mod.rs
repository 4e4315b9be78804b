//! Finite ultrametric spaces and their distance-based structure.
//!
//! Everything here works on a validated [`FiniteUltrametricSpace`]: distance
//! sets and the center of distances, open and closed balls, centered spheres,
//! the diametrical graph with its multipartite parts and spanning star, and
//! weak similarity between spaces.

mod balls;
mod graph;
mod similarity;
mod space;

pub use balls::{
    all_subsets_are_spheres, ball, enumerate_balls, enumerate_centered_spheres, is_centered_sphere, scan_subsets, Ball,
    BallKind, SphereCertificate, SUBSET_SCAN_LIMIT,
};
pub use graph::{
    diametrical_graph, multipartite_parts, spanning_star, DiametricalGraph, MultipartiteDecomposition, StarCertificate,
};
pub use similarity::{is_equidistant, weak_similarity, WeakSimilarityWitness};
pub(crate) use space::center_ranks;
pub use space::{
    center_of_distances, diameter, distance_set, pointwise_distance_set, restrict, validate_ultrametric, DistanceSet,
    FiniteUltrametricSpace,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum MetricError {
    #[error("a space needs at least one point")]
    Empty,
    #[error("matrix shape mismatch: expected {expected} entries, found {found}{}", row.map(|r| format!(" in row {r}")).unwrap_or_default())]
    Shape { expected: usize, row: Option<usize>, found: usize },
    #[error("duplicate point identifier {0:?}")]
    DuplicatePoint(String),
    #[error("matrix is not symmetric at ({x}, {y})")]
    NotSymmetric { x: String, y: String },
    #[error("nonzero diagonal entry at {x}")]
    NonzeroDiagonal { x: String },
    #[error("distance between distinct points {x} and {y} is not positive")]
    NonpositiveOffDiagonal { x: String, y: String },
    #[error("strong triangle inequality fails: d({x},{y}) > max(d({x},{z}), d({z},{y}))")]
    StrongTriangleViolation { x: String, y: String, z: String },
    #[error("unknown point {0}")]
    UnknownPoint(String),
    #[error("open balls need a positive radius and closed balls a non-negative one")]
    NonpositiveRadius,
    #[error("subset is empty")]
    EmptySubset,
    #[error("operation needs at least {needed} points, got {found}")]
    TooSmall { needed: usize, found: usize },
    #[error("diametrical graph is not complete multipartite: {0}")]
    NotCompleteMultipartite(String),
    #[error("{what} is limited to {limit} points, got {found}")]
    CapacityExceeded { what: &'static str, limit: usize, found: usize },
}
