//! Vertex-labeled trees and the ultrametric they generate.
//!
//! A [`LabeledTree`] carries a non-negative rational label on every vertex.
//! The distance between two distinct vertices is the largest label on the
//! path joining them; it is an ultrametric exactly when every edge has at
//! least one positively labeled endpoint.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::metric::FiniteUltrametricSpace;
use crate::pointset::PointSet;
use crate::rational::{ParseRationalError, Rational};

mod path_max;

pub use path_max::PathMaxIndex;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("vertex {0:?} has no label")]
    MissingLabel(String),
    #[error("label of vertex {vertex:?} is not a valid rational: {source}")]
    BadLabel { vertex: String, source: ParseRationalError },
    #[error("vertex {0:?} has a negative label")]
    NegativeLabel(String),
    #[error("edge {0:?} does not have exactly two endpoints")]
    MalformedEdge(Vec<String>),
    #[error("edge {{{0}, {0}}} is a loop")]
    SelfLoop(String),
    #[error("edge {{{u}, {v}}} closes a cycle")]
    HasCycle { u: String, v: String },
    #[error("graph is not connected: {vertex:?} is unreachable from {root:?}")]
    NotConnected { root: String, vertex: String },
    #[error("labeling is degenerate: both ends of edge {{{u}, {v}}} are labeled 0")]
    DegenerateLabeling { u: String, v: String },
    #[error("vertex set is not an open ball of the tree's ultrametric")]
    NotABall,
}

/// Unvalidated tree description, exactly as stored in tree JSON files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTree {
    pub vertices: Vec<String>,
    pub labels: BTreeMap<String, String>,
    pub edges: Vec<Vec<String>>,
}

/// A validated, immutable labeled tree. Vertices are addressed by dense
/// index; the original identifiers are kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    labels: Vec<Rational>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl LabeledTree {
    /// Validates a tree given by identifiers, labels and index-pair edges.
    pub fn from_parts(
        ids: Vec<String>,
        labels: Vec<Rational>,
        edges: Vec<(usize, usize)>,
    ) -> Result<LabeledTree, TreeError> {
        let n = ids.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        assert_eq!(labels.len(), n, "one label per vertex");
        let mut index = HashMap::with_capacity(n);
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(TreeError::DuplicateVertex(id.clone()));
            }
        }
        if let Some(i) = labels.iter().position(Rational::is_negative) {
            return Err(TreeError::NegativeLabel(ids[i].clone()));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(TreeError::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(TreeError::SelfLoop(ids[u].clone()));
            }
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return Err(TreeError::HasCycle { u: ids[u].clone(), v: ids[v].clone() });
            }
            parent[a] = b;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let root = find(&mut parent, 0);
        if let Some(w) = (1..n).find(|&w| find(&mut parent, w) != root) {
            return Err(TreeError::NotConnected { root: ids[0].clone(), vertex: ids[w].clone() });
        }
        Ok(LabeledTree { ids, index, labels, edges, adjacency })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, TreeError> {
        self.index.get(id).copied().ok_or_else(|| TreeError::UnknownVertex(id.to_owned()))
    }

    pub fn label(&self, v: usize) -> &Rational {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Rational] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Same shape, new labels.
    pub fn relabeled(&self, labels: Vec<Rational>) -> Result<LabeledTree, TreeError> {
        assert_eq!(labels.len(), self.len());
        if let Some(i) = labels.iter().position(Rational::is_negative) {
            return Err(TreeError::NegativeLabel(self.ids[i].clone()));
        }
        Ok(LabeledTree { labels, ..self.clone() })
    }

    pub fn to_raw(&self) -> RawTree {
        RawTree {
            vertices: self.ids.clone(),
            labels: self.ids.iter().cloned().zip(self.labels.iter().map(ToString::to_string)).collect(),
            edges: self.edges.iter().map(|&(u, v)| vec![self.ids[u].clone(), self.ids[v].clone()]).collect(),
        }
    }
}

/// Turns a parsed tree description into a [`LabeledTree`].
pub fn validate_tree(raw: &RawTree) -> Result<LabeledTree, TreeError> {
    let mut index = HashMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            return Err(TreeError::DuplicateVertex(v.clone()));
        }
    }
    if let Some(stray) = raw.labels.keys().find(|k| !index.contains_key(k.as_str())) {
        return Err(TreeError::UnknownVertex(stray.clone()));
    }
    let labels = raw
        .vertices
        .iter()
        .map(|v| {
            let text = raw.labels.get(v).ok_or_else(|| TreeError::MissingLabel(v.clone()))?;
            text.parse::<Rational>().map_err(|source| TreeError::BadLabel { vertex: v.clone(), source })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let edges = raw
        .edges
        .iter()
        .map(|e| {
            let [a, b] = e.as_slice() else {
                return Err(TreeError::MalformedEdge(e.clone()));
            };
            let ia = *index.get(a.as_str()).ok_or_else(|| TreeError::UnknownVertex(a.clone()))?;
            let ib = *index.get(b.as_str()).ok_or_else(|| TreeError::UnknownVertex(b.clone()))?;
            Ok((ia, ib))
        })
        .collect::<Result<Vec<_>, _>>()?;
    LabeledTree::from_parts(raw.vertices.clone(), labels, edges)
}

/// First edge (in input order) whose endpoints are both labeled 0.
pub fn degenerate_edge(t: &LabeledTree) -> Option<(usize, usize)> {
    t.edges.iter().copied().find(|&(u, v)| t.labels[u].is_zero() && t.labels[v].is_zero())
}

pub fn is_nondegenerate(t: &LabeledTree) -> bool {
    degenerate_edge(t).is_none()
}

fn require_nondegenerate(t: &LabeledTree) -> Result<(), TreeError> {
    match degenerate_edge(t) {
        Some((u, v)) => Err(TreeError::DegenerateLabeling { u: t.ids[u].clone(), v: t.ids[v].clone() }),
        None => Ok(()),
    }
}

/// The space `(V(T), d_l)`, rows computed in parallel.
pub fn distance_matrix(t: &LabeledTree) -> Result<FiniteUltrametricSpace, TreeError> {
    require_nondegenerate(t)?;
    let idx = PathMaxIndex::new(t);
    let n = t.len();
    let mut values = idx.label_values().to_vec();
    let offset = if values[0].is_zero() { 0 } else { 1 };
    if offset == 1 {
        values.insert(0, Rational::zero());
    }
    let ranks: Vec<u32> = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let idx = &idx;
            (0..n).map(move |v| if u == v { 0 } else { idx.query_rank(u, v) + offset })
        })
        .collect();
    Ok(FiniteUltrametricSpace::from_sparse_ranks(t.ids.clone(), &values, ranks))
}

/// Labels that occur as `max(l(u), l(v))` on some edge; together with 0
/// these are exactly the distances of the generated space.
fn edge_maxima(t: &LabeledTree) -> Vec<&Rational> {
    let mut m: Vec<&Rational> = t.edges.iter().map(|&(u, v)| std::cmp::max(&t.labels[u], &t.labels[v])).collect();
    m.sort();
    m.dedup();
    m
}

/// Zeroes every label that is not itself a distance of the generated space.
///
/// The result generates the same ultrametric, stays non-degenerate, and its
/// labels together with 0 are exactly the distance set.
pub fn canonical_labeling(t: &LabeledTree) -> Result<LabeledTree, TreeError> {
    require_nondegenerate(t)?;
    let distances = edge_maxima(t);
    let labels = t
        .labels
        .iter()
        .map(|l| if distances.binary_search(&l).is_ok() { l.clone() } else { Rational::zero() })
        .collect();
    t.relabeled(labels)
}

/// The subtree induced by an open ball of the generated space.
///
/// `ball` is given by vertex identifiers. Fails with [`TreeError::NotABall`]
/// when the set is not `{x : d_l(a, x) < r}` for any `a` and `r > 0`.
pub fn ball_subtree<'a, I>(t: &LabeledTree, ball: I) -> Result<LabeledTree, TreeError>
where
    I: IntoIterator<Item = &'a str>,
{
    require_nondegenerate(t)?;
    let members = ball.into_iter().map(|id| t.index_of(id)).collect::<Result<Vec<_>, _>>()?;
    let set = PointSet::from_indices(t.len(), members);
    let Some(a) = set.first() else {
        return Err(TreeError::NotABall);
    };
    let idx = PathMaxIndex::new(t);
    let dist_rank = |x: usize| if x == a { None } else { Some(idx.query_rank(a, x)) };
    // an open ball around any member is every point within its largest member distance
    let reach = set.iter().map(dist_rank).max().flatten();
    let is_ball = (0..t.len()).all(|x| set.contains(x) == (dist_rank(x) <= reach));
    if !is_ball {
        return Err(TreeError::NotABall);
    }

    let kept = set.to_vec();
    let mut local = vec![usize::MAX; t.len()];
    for (i, &v) in kept.iter().enumerate() {
        local[v] = i;
    }
    let edges = t
        .edges
        .iter()
        .filter(|&&(u, v)| set.contains(u) && set.contains(v))
        .map(|&(u, v)| (local[u], local[v]))
        .collect();
    LabeledTree::from_parts(
        kept.iter().map(|&v| t.ids[v].clone()).collect(),
        kept.iter().map(|&v| t.labels[v].clone()).collect(),
        edges,
    )
}
