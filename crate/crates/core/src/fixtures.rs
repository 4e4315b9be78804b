//! Small reference spaces used throughout the examples and tests.

use crate::metric::{validate_ultrametric, FiniteUltrametricSpace};
use crate::rational::Rational;
use crate::tree::LabeledTree;

/// Identifiers `x1, …, xn`.
pub fn ids(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn space(n: usize, entries: &[(usize, usize, i64)]) -> FiniteUltrametricSpace {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for &(i, j, d) in entries {
        m[i][j] = Rational::from_integer(d);
        m[j][i] = Rational::from_integer(d);
    }
    validate_ultrametric(ids(n), m).expect("fixture is ultrametric")
}

/// The labeled path `x1 - x2 - x3 - x4` with labels `2, 2, 1, 1`.
pub fn path_tree() -> LabeledTree {
    LabeledTree::from_parts(
        ids(4),
        [2, 2, 1, 1].into_iter().map(Rational::from_integer).collect(),
        vec![(0, 1), (1, 2), (2, 3)],
    )
    .expect("fixture is a tree")
}

/// Four points, `d(x3, x4) = 1` and every other pair at distance 2.
pub fn path_space() -> FiniteUltrametricSpace {
    space(4, &[(0, 1, 2), (0, 2, 2), (0, 3, 2), (1, 2, 2), (1, 3, 2), (2, 3, 1)])
}

/// Three points with `d(x1, x3) = 1` and `d(x1, x2) = d(x2, x3) = 2`.
pub fn x3() -> FiniteUltrametricSpace {
    space(3, &[(0, 2, 1), (0, 1, 2), (1, 2, 2)])
}

/// `n` points pairwise at distance `k`.
pub fn equidistant(n: usize, k: i64) -> FiniteUltrametricSpace {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((i, j, k));
        }
    }
    space(n, &entries)
}
