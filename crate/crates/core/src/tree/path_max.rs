use std::collections::VecDeque;

use super::{LabeledTree, TreeError};
use crate::rational::Rational;

/// Binary-lifting table answering "largest label on the path from `u` to `v`".
///
/// The tree is rooted at vertex 0. `jump[k][v]` is the ancestor `2^k` steps
/// above `v` (clamped at the root) and `span_max[k][v]` is the largest label
/// rank among the `2^k` vertices starting at `v` and walking up, the jump
/// target itself excluded. Labels are compared by rank so queries never touch
/// big integers.
#[derive(Debug, Clone)]
pub struct PathMaxIndex<'t> {
    tree: &'t LabeledTree,
    values: Vec<Rational>,
    label_rank: Vec<u32>,
    depth: Vec<u32>,
    jump: Vec<Vec<u32>>,
    span_max: Vec<Vec<u32>>,
}

impl<'t> PathMaxIndex<'t> {
    pub fn new(tree: &'t LabeledTree) -> Self {
        let n = tree.len();
        let mut values: Vec<Rational> = tree.labels().to_vec();
        values.sort();
        values.dedup();
        let label_rank: Vec<u32> =
            tree.labels().iter().map(|l| values.binary_search(l).expect("label present") as u32).collect();

        let mut parent = vec![0u32; n];
        let mut depth = vec![0u32; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in tree.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = u as u32;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }

        let levels = (usize::BITS - n.max(1).leading_zeros()) as usize;
        let mut jump = Vec::with_capacity(levels);
        let mut span_max = Vec::with_capacity(levels);
        jump.push(parent);
        span_max.push(label_rank.clone());
        for k in 1..levels {
            let (prev_jump, prev_max): (&Vec<u32>, &Vec<u32>) = (&jump[k - 1], &span_max[k - 1]);
            let next_jump: Vec<u32> = (0..n).map(|v| prev_jump[prev_jump[v] as usize]).collect();
            let next_max: Vec<u32> = (0..n).map(|v| prev_max[v].max(prev_max[prev_jump[v] as usize])).collect();
            jump.push(next_jump);
            span_max.push(next_max);
        }
        PathMaxIndex { tree, values, label_rank, depth, jump, span_max }
    }

    pub fn tree(&self) -> &'t LabeledTree {
        self.tree
    }

    /// Sorted distinct labels; [`query_rank`](Self::query_rank) indexes into this.
    pub fn label_values(&self) -> &[Rational] {
        &self.values
    }

    /// Rank of the largest label on the path between `u` and `v`, endpoints
    /// included. For `u == v` this is the rank of `u`'s own label.
    pub fn query_rank(&self, mut u: usize, mut v: usize) -> u32 {
        let mut best = self.label_rank[u].max(self.label_rank[v]);
        if self.depth[u] < self.depth[v] {
            std::mem::swap(&mut u, &mut v);
        }
        let mut diff = self.depth[u] - self.depth[v];
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                best = best.max(self.span_max[k][u]);
                u = self.jump[k][u] as usize;
            }
            diff >>= 1;
            k += 1;
        }
        if u == v {
            return best.max(self.label_rank[u]);
        }
        for k in (0..self.jump.len()).rev() {
            let (ju, jv) = (self.jump[k][u], self.jump[k][v]);
            if ju != jv {
                best = best.max(self.span_max[k][u]).max(self.span_max[k][v]);
                u = ju as usize;
                v = jv as usize;
            }
        }
        let lca = self.jump[0][u] as usize;
        best.max(self.label_rank[u]).max(self.label_rank[v]).max(self.label_rank[lca])
    }

    /// The tree ultrametric: 0 on the diagonal, otherwise the path maximum.
    pub fn dl(&self, u: usize, v: usize) -> Result<Rational, TreeError> {
        for w in [u, v] {
            if w >= self.tree.len() {
                return Err(TreeError::UnknownVertex(format!("#{w}")));
            }
        }
        if u == v {
            return Ok(Rational::zero());
        }
        Ok(self.values[self.query_rank(u, v) as usize].clone())
    }

    pub fn dl_by_id(&self, u: &str, v: &str) -> Result<Rational, TreeError> {
        self.dl(self.tree.index_of(u)?, self.tree.index_of(v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::path_tree;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn path_tree_distances() {
        let t = path_tree();
        let idx = PathMaxIndex::new(&t);
        assert_eq!(idx.dl_by_id("x1", "x2").unwrap(), r(2));
        assert_eq!(idx.dl_by_id("x3", "x4").unwrap(), r(1));
        assert_eq!(idx.dl_by_id("x1", "x4").unwrap(), r(2));
        assert_eq!(idx.dl_by_id("x2", "x2").unwrap(), r(0));
        assert!(matches!(idx.dl_by_id("x1", "nope"), Err(TreeError::UnknownVertex(_))));
        assert!(matches!(idx.dl(0, 4), Err(TreeError::UnknownVertex(_))));
    }

    #[test]
    fn lca_label_counts() {
        // star centered at c with a heavy center label: every leaf pair passes c
        let t = LabeledTree::from_parts(
            vec!["c".into(), "a".into(), "b".into(), "d".into()],
            vec![r(5), r(1), r(2), r(0)],
            vec![(0, 1), (0, 2), (0, 3)],
        )
        .unwrap();
        let idx = PathMaxIndex::new(&t);
        assert_eq!(idx.dl(1, 2).unwrap(), r(5));
        assert_eq!(idx.dl(3, 1).unwrap(), r(5));
        assert_eq!(idx.dl(0, 3).unwrap(), r(5));
    }

    #[test]
    fn single_vertex() {
        let t = LabeledTree::from_parts(vec!["v".into()], vec![r(3)], vec![]).unwrap();
        let idx = PathMaxIndex::new(&t);
        assert_eq!(idx.dl(0, 0).unwrap(), r(0));
    }
}
