use super::random::prufer_trees;
use super::{fence, ExplorerError, IS_UT_LIMIT};
use crate::metric::{center_ranks, FiniteUltrametricSpace};
use crate::rational::Rational;
use crate::tree::{distance_matrix, LabeledTree};

/// A labeled tree on the points of `s` generating exactly `s`, or `None`
/// if the space is not tree-generated.
///
/// `limit` may only tighten the built-in fence of six points. Spaces whose
/// center of distances is not `{0, diam}` are rejected immediately. Every
/// other space is searched over all trees on its own points with labels in
/// `D(X)`, where a vertex label never exceeds the vertex's smallest distance
/// and every edge must satisfy `max(l(u), l(v)) = d(u, v)`. A certificate is
/// replayed through [`distance_matrix`] before it is returned.
pub fn is_ut(s: &FiniteUltrametricSpace, limit: usize) -> Result<Option<LabeledTree>, ExplorerError> {
    let n = s.len();
    fence("tree-generation search", n, 1, limit.min(IS_UT_LIMIT))?;
    if n == 1 {
        let t = LabeledTree::from_parts(s.points().to_vec(), vec![Rational::zero()], Vec::new())?;
        return Ok(Some(t));
    }
    let top = s.values().len() as u32 - 1;
    if center_ranks(s) != [0, top] {
        return Ok(None);
    }
    let row_min: Vec<u32> =
        (0..n).map(|v| (0..n).filter(|&u| u != v).map(|u| s.rank(u, v)).min().expect("n >= 2")).collect();
    for edges in prufer_trees(n) {
        // an edge's distance must be realized by one endpoint's label
        if edges.iter().any(|&(u, v)| s.rank(u, v) != row_min[u] && s.rank(u, v) != row_min[v]) {
            continue;
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut labels = vec![u32::MAX; n];
        if assign(s, &adjacency, &row_min, 0, &mut labels) {
            let labels = labels.iter().map(|&r| s.values()[r as usize].clone()).collect();
            let t = LabeledTree::from_parts(s.points().to_vec(), labels, edges)?;
            if distance_matrix(&t).is_ok_and(|m| &m == s) {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

fn assign(s: &FiniteUltrametricSpace, adjacency: &[Vec<usize>], row_min: &[u32], v: usize, labels: &mut [u32]) -> bool {
    if v == labels.len() {
        let n = labels.len();
        return matches_space(s, adjacency, labels, n);
    }
    for l in 0..=row_min[v] {
        let ok = adjacency[v].iter().all(|&u| labels[u] == u32::MAX || labels[u].max(l) == s.rank(u, v));
        if ok {
            labels[v] = l;
            if assign(s, adjacency, row_min, v + 1, labels) {
                return true;
            }
        }
    }
    labels[v] = u32::MAX;
    false
}

/// Checks all path maxima against the space by a walk from every vertex.
fn matches_space(s: &FiniteUltrametricSpace, adjacency: &[Vec<usize>], labels: &[u32], n: usize) -> bool {
    (0..n).all(|a| {
        let mut best = vec![u32::MAX; n];
        best[a] = labels[a];
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &w in &adjacency[u] {
                if best[w] == u32::MAX {
                    best[w] = best[u].max(labels[w]);
                    stack.push(w);
                }
            }
        }
        (0..n).all(|b| b == a || best[b] == s.rank(a, b))
    })
}
