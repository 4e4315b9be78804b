//! Reference implementations used as oracles. They are deliberately naive
//! and share no code with the library beyond its public data types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ultratree::metric::{validate_ultrametric, weak_similarity};
use ultratree::{FiniteUltrametricSpace, LabeledTree, Rational};

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).collect()
}

/// Largest label on the path between `u` and `v`, found by DFS.
pub fn dfs_path_max(t: &LabeledTree, u: usize, v: usize) -> Rational {
    fn walk(t: &LabeledTree, at: usize, from: usize, target: usize, best: &Rational) -> Option<Rational> {
        let best = best.max(t.label(at)).clone();
        if at == target {
            return Some(best);
        }
        t.neighbors(at).iter().filter(|&&w| w != from).find_map(|&w| walk(t, w, at, target, &best))
    }
    if u == v {
        return Rational::zero();
    }
    walk(t, u, usize::MAX, v, t.label(u)).expect("tree is connected")
}

/// Iterative variant for large trees.
pub fn dfs_path_max_iterative(t: &LabeledTree, u: usize, v: usize) -> Rational {
    if u == v {
        return Rational::zero();
    }
    let n = t.len();
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![u];
    parent[u] = u;
    while let Some(x) = stack.pop() {
        if x == v {
            break;
        }
        for &w in t.neighbors(x) {
            if parent[w] == usize::MAX {
                parent[w] = x;
                stack.push(w);
            }
        }
    }
    let mut best = t.label(v).clone();
    let mut x = v;
    while x != u {
        x = parent[x];
        best = best.max(t.label(x).clone());
    }
    best
}

/// The plain O(n^3) check of every ultrametric axiom.
pub fn triple_scan(m: &[Vec<Rational>]) -> bool {
    let n = m.len();
    for x in 0..n {
        if m[x].len() != n || !m[x][x].is_zero() {
            return false;
        }
        for y in 0..n {
            if m[x][y] != m[y][x] || (x != y && !m[x][y].is_positive()) {
                return false;
            }
            for z in 0..n {
                if m[x][y] > std::cmp::max(&m[x][z], &m[z][y]).clone() {
                    return false;
                }
            }
        }
    }
    true
}

/// Intersection of the distance rows, computed over sets of rationals.
pub fn naive_center(s: &FiniteUltrametricSpace) -> BTreeSet<Rational> {
    let rows: Vec<BTreeSet<Rational>> =
        (0..s.len()).map(|p| (0..s.len()).map(|x| s.dist(p, x).clone()).collect()).collect();
    rows[0].iter().filter(|v| rows.iter().all(|row| row.contains(v))).cloned().collect()
}

/// Every weak-similarity class of `n`-point spaces, by brute force: all
/// symmetric matrices with entries in `1..n` that pass the triple scan,
/// deduplicated with `weak_similarity`.
pub fn brute_force_classes(n: usize) -> Vec<FiniteUltrametricSpace> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let k = (n as u64).saturating_sub(1).max(1);
    let total = k.pow(pairs.len() as u32);
    let mut reps: Vec<FiniteUltrametricSpace> = Vec::new();
    let mut m = vec![vec![0i64; n]; n];
    for code in 0..total {
        let mut c = code;
        for &(i, j) in &pairs {
            let v = (c % k) as i64 + 1;
            c /= k;
            m[i][j] = v;
            m[j][i] = v;
        }
        let ultra = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m[x][y] <= m[x][z].max(m[z][y]))));
        if !ultra {
            continue;
        }
        let matrix: Vec<Vec<Rational>> = m.iter().map(|row| row.iter().map(|&v| r(v)).collect()).collect();
        let s = validate_ultrametric(ids(n), matrix).unwrap();
        if !reps.iter().any(|rep| weak_similarity(rep, &s).is_some()) {
            reps.push(s);
        }
    }
    reps
}

/// Tree-generation test that never builds a tree: a finite ultrametric
/// space is tree-generated iff every closed ball with two or more points
/// contains a point at the ball's diameter from all its other points.
pub fn ut_by_balls(s: &FiniteUltrametricSpace) -> bool {
    let n = s.len();
    for a in 0..n {
        for radius in s.values() {
            let ball: Vec<usize> = (0..n).filter(|&x| s.dist(a, x) <= radius).collect();
            if ball.len() < 2 {
                continue;
            }
            let diam = ball.iter().flat_map(|&x| ball.iter().map(move |&y| s.dist(x, y))).max().unwrap();
            let has_apex = ball.iter().any(|&c| ball.iter().all(|&x| x == c || s.dist(c, x) == diam));
            if !has_apex {
                return false;
            }
        }
    }
    true
}

/// Random tree built by attaching each vertex to an earlier one; labels
/// come from `0..=max_label` with zero-zero edges bumped to 1.
pub fn random_tree(n: usize, max_label: i64, seed: u64) -> LabeledTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_label)).collect();
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        if labels[u] == 0 && labels[v] == 0 {
            labels[v] = 1;
        }
        edges.push((u, v));
    }
    LabeledTree::from_parts(ids(n), labels.into_iter().map(r).collect(), edges).unwrap()
}

/// Random rational with small numerator and denominator.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}
