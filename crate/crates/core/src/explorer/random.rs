use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ExplorerError;
use crate::rational::Rational;
use crate::tree::LabeledTree;

/// Edges of the tree encoded by a Prüfer sequence over `0..n`.
fn decode_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains");
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.push(Reverse(a));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    edges
}

pub(super) fn prufer_trees(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let len = n.saturating_sub(2);
    let count = if n < 2 { 0 } else { n.pow(len as u32) };
    (0..count).map(move |mut code| {
        let mut seq = vec![0; len];
        for s in seq.iter_mut().rev() {
            *s = code % n;
            code /= n;
        }
        decode_prufer(n, &seq)
    })
}

/// A random tree on vertices `v1, …, vn`, deterministic in `seed`.
///
/// The shape comes from a uniform Prüfer sequence and each label is drawn
/// uniformly from `pool`. Edges left with two zero labels get one endpoint
/// redrawn from the positive pool values, which keeps the labeling
/// non-degenerate.
pub fn random_labeled_tree(n: usize, pool: &[Rational], seed: u64) -> Result<LabeledTree, ExplorerError> {
    if n == 0 {
        return Err(ExplorerError::TooSmall { what: "random tree", needed: 1, found: 0 });
    }
    if pool.is_empty() {
        return Err(ExplorerError::EmptyPool);
    }
    if let Some(v) = pool.iter().find(|v| v.is_negative()) {
        return Err(ExplorerError::NegativePoolValue(v.to_string()));
    }
    let positive: Vec<&Rational> = pool.iter().filter(|v| v.is_positive()).collect();
    if n >= 2 && positive.is_empty() {
        return Err(ExplorerError::NoPositiveLabel);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = if n >= 2 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        decode_prufer(n, &seq)
    } else {
        Vec::new()
    };
    let mut labels: Vec<Rational> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    for &(u, v) in &edges {
        if labels[u].is_zero() && labels[v].is_zero() {
            let w = if rng.gen_bool(0.5) { u } else { v };
            labels[w] = positive[rng.gen_range(0..positive.len())].clone();
        }
    }
    let ids = (1..=n).map(|i| format!("v{i}")).collect();
    Ok(LabeledTree::from_parts(ids, labels, edges)?)
}

/// `count` random trees with sizes uniform in `min_n..=max_n`; tree `i`
/// depends only on `seed` and `i`.
pub fn random_tree_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    pool: &[Rational],
    seed: u64,
) -> Result<Vec<LabeledTree>, ExplorerError> {
    assert!(min_n <= max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_labeled_tree(n, pool, rng.gen())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_list;
    use crate::tree::{distance_matrix, is_nondegenerate};

    #[test]
    fn prufer_round_trip_count() {
        assert_eq!(prufer_trees(4).count(), 16);
        assert_eq!(prufer_trees(2).collect::<Vec<_>>(), vec![vec![(0, 1)]]);
        assert_eq!(decode_prufer(4, &[3, 3]), vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(decode_prufer(4, &[1, 2]), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn deterministic_and_nondegenerate() {
        let pool = parse_list("0,1,2,3").unwrap();
        for seed in 0..50 {
            let a = random_labeled_tree(12, &pool, seed).unwrap();
            assert_eq!(a, random_labeled_tree(12, &pool, seed).unwrap());
            assert!(is_nondegenerate(&a));
            assert!(distance_matrix(&a).is_ok());
        }
        assert_eq!(random_labeled_tree(1, &pool, 7).unwrap().len(), 1);
    }

    #[test]
    fn pool_errors() {
        assert_eq!(random_labeled_tree(3, &[], 0), Err(ExplorerError::EmptyPool));
        assert_eq!(random_labeled_tree(3, &parse_list("0").unwrap(), 0), Err(ExplorerError::NoPositiveLabel));
        assert!(random_labeled_tree(1, &parse_list("0").unwrap(), 0).is_ok());
        assert!(matches!(
            random_labeled_tree(2, &parse_list("1,-1").unwrap(), 0),
            Err(ExplorerError::NegativePoolValue(_))
        ));
    }
}
