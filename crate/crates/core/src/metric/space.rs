use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::MetricError;
use crate::pointset::PointSet;
use crate::rational::Rational;

/// A finite ultrametric space stored as an exact distance matrix.
///
/// Distances are kept as ranks into the sorted distance set `D(X)`, so every
/// comparison between matrix entries is an integer comparison while the
/// exact values stay available through [`dist`](Self::dist).
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteUltrametricSpace {
    points: Vec<String>,
    index: HashMap<String, usize>,
    values: Vec<Rational>,
    ranks: Vec<u32>,
}

impl fmt::Debug for FiniteUltrametricSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteUltrametricSpace")
            .field("points", &self.points)
            .field("matrix", &self.to_matrix())
            .finish()
    }
}

/// Sorted set of distances; always contains 0 when produced from a space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DistanceSet(Vec<Rational>);

impl DistanceSet {
    pub fn new(mut values: Vec<Rational>) -> Self {
        values.sort();
        values.dedup();
        DistanceSet(values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.0.binary_search(r).is_ok()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn intersection(&self, other: &DistanceSet) -> DistanceSet {
        DistanceSet(self.0.iter().filter(|v| other.contains(v)).cloned().collect())
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn index_points(points: &[String]) -> Result<HashMap<String, usize>, MetricError> {
    let mut index = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if index.insert(p.clone(), i).is_some() {
            return Err(MetricError::DuplicatePoint(p.clone()));
        }
    }
    Ok(index)
}

/// Checks every axiom of an ultrametric on a rational matrix and freezes it.
///
/// Failures name the offending pair or triple by point identifier. The strong
/// triangle scan reports the lexicographically least violating `(x, y, z)`.
pub fn validate_ultrametric(
    points: Vec<String>,
    matrix: Vec<Vec<Rational>>,
) -> Result<FiniteUltrametricSpace, MetricError> {
    let n = points.len();
    if n == 0 {
        return Err(MetricError::Empty);
    }
    if matrix.len() != n {
        return Err(MetricError::Shape { expected: n, row: None, found: matrix.len() });
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(MetricError::Shape { expected: n, row: Some(i), found: row.len() });
        }
    }
    let index = index_points(&points)?;
    for i in 0..n {
        if !matrix[i][i].is_zero() {
            return Err(MetricError::NonzeroDiagonal { x: points[i].clone() });
        }
        for j in i + 1..n {
            if matrix[i][j] != matrix[j][i] {
                return Err(MetricError::NotSymmetric { x: points[i].clone(), y: points[j].clone() });
            }
            if !matrix[i][j].is_positive() {
                return Err(MetricError::NonpositiveOffDiagonal { x: points[i].clone(), y: points[j].clone() });
            }
        }
    }

    let mut values: Vec<Rational> = matrix.iter().flatten().cloned().collect();
    values.sort();
    values.dedup();
    let ranks: Vec<u32> =
        matrix.iter().flatten().map(|v| values.binary_search(v).expect("value collected above") as u32).collect();

    if let Some((x, y, z)) = first_triangle_violation(n, &ranks) {
        return Err(MetricError::StrongTriangleViolation {
            x: points[x].clone(),
            y: points[y].clone(),
            z: points[z].clone(),
        });
    }
    Ok(FiniteUltrametricSpace { points, index, values, ranks })
}

fn first_triangle_violation(n: usize, ranks: &[u32]) -> Option<(usize, usize, usize)> {
    (0..n).into_par_iter().find_map_first(|x| {
        let row_x = &ranks[x * n..(x + 1) * n];
        for y in 0..n {
            if y == x {
                continue;
            }
            let dxy = row_x[y];
            let row_y = &ranks[y * n..(y + 1) * n];
            for z in 0..n {
                if z != x && z != y && dxy > row_x[z].max(row_y[z]) {
                    return Some((x, y, z));
                }
            }
        }
        None
    })
}

impl FiniteUltrametricSpace {
    /// Builds a space from a rank matrix already known to be ultrametric.
    ///
    /// `values` must be strictly increasing with `values[0] == 0`, and every
    /// rank must be used. Debug builds re-check the axioms on small inputs.
    pub(crate) fn from_ranks_unchecked(points: Vec<String>, values: Vec<Rational>, ranks: Vec<u32>) -> Self {
        let n = points.len();
        debug_assert_eq!(ranks.len(), n * n);
        debug_assert!(values.first().is_some_and(Rational::is_zero));
        debug_assert!(n > 64 || first_triangle_violation(n, &ranks).is_none());
        let index = index_points(&points).expect("point identifiers must be distinct");
        FiniteUltrametricSpace { points, index, values, ranks }
    }

    /// Builds a space from arbitrary (not necessarily surjective) ranks into
    /// `values`, dropping unused values.
    pub(crate) fn from_sparse_ranks(points: Vec<String>, values: &[Rational], ranks: Vec<u32>) -> Self {
        let mut used = vec![false; values.len()];
        for &r in &ranks {
            used[r as usize] = true;
        }
        used[0] = true;
        let mut remap = vec![0u32; values.len()];
        let mut kept = Vec::new();
        for (i, v) in values.iter().enumerate() {
            if used[i] {
                remap[i] = kept.len() as u32;
                kept.push(v.clone());
            }
        }
        let ranks = ranks.into_iter().map(|r| remap[r as usize]).collect();
        Self::from_ranks_unchecked(points, kept, ranks)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize, MetricError> {
        self.index.get(id).copied().ok_or_else(|| MetricError::UnknownPoint(id.to_owned()))
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<(), MetricError> {
        if i < self.len() {
            Ok(())
        } else {
            Err(MetricError::UnknownPoint(format!("#{i}")))
        }
    }

    pub fn dist(&self, i: usize, j: usize) -> &Rational {
        &self.values[self.rank(i, j) as usize]
    }

    /// Position of `d(i, j)` in the ascending distance set.
    pub fn rank(&self, i: usize, j: usize) -> u32 {
        self.ranks[i * self.len() + j]
    }

    pub fn rank_row(&self, i: usize) -> &[u32] {
        let n = self.len();
        &self.ranks[i * n..(i + 1) * n]
    }

    /// The ascending distance set `D(X)` as a slice; index = rank.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn to_matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.len()).map(|i| (0..self.len()).map(|j| self.dist(i, j).clone()).collect()).collect()
    }

    pub fn all(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn subset_of<I: IntoIterator<Item = usize>>(&self, it: I) -> PointSet {
        PointSet::from_indices(self.len(), it)
    }

    pub fn subset_by_ids<'a, I: IntoIterator<Item = &'a str>>(&self, ids: I) -> Result<PointSet, MetricError> {
        let idx = ids.into_iter().map(|id| self.index_of(id)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.subset_of(idx))
    }

    pub fn ids_of(&self, set: &PointSet) -> Vec<&str> {
        set.iter().map(|i| self.point(i)).collect()
    }

    /// Rank of the diameter, i.e. the largest rank in use.
    pub(crate) fn diameter_rank(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// Same points with every distance replaced by its rank; weakly similar
    /// to `self` by construction.
    pub fn rank_space(&self) -> FiniteUltrametricSpace {
        let values = (0..self.values.len() as i64).map(Rational::from_integer).collect();
        Self::from_ranks_unchecked(self.points.clone(), values, self.ranks.clone())
    }
}

/// Sorted set of all pairwise distances, including 0.
pub fn distance_set(s: &FiniteUltrametricSpace) -> DistanceSet {
    DistanceSet(s.values.clone())
}

/// `D_p(X) = {d(p, x) : x ∈ X}`.
pub fn pointwise_distance_set(s: &FiniteUltrametricSpace, p: usize) -> Result<DistanceSet, MetricError> {
    s.check_index(p)?;
    let mut seen = vec![false; s.values.len()];
    for &r in s.rank_row(p) {
        seen[r as usize] = true;
    }
    Ok(DistanceSet(seen.iter().zip(&s.values).filter(|(b, _)| **b).map(|(_, v)| v.clone()).collect()))
}

pub fn diameter(s: &FiniteUltrametricSpace) -> Rational {
    s.values.last().cloned().unwrap_or_else(Rational::zero)
}

/// Ranks belonging to every row.
pub(crate) fn center_ranks(s: &FiniteUltrametricSpace) -> Vec<u32> {
    let k = s.values.len();
    let mut count = vec![0usize; k];
    let mut seen = vec![usize::MAX; k];
    for p in 0..s.len() {
        for &r in s.rank_row(p) {
            if seen[r as usize] != p {
                seen[r as usize] = p;
                count[r as usize] += 1;
            }
        }
    }
    (0..k as u32).filter(|&r| count[r as usize] == s.len()).collect()
}

/// The center of distances: values realized as `d(p, x)` from every point `p`.
pub fn center_of_distances(s: &FiniteUltrametricSpace) -> DistanceSet {
    DistanceSet(center_ranks(s).into_iter().map(|r| s.values[r as usize].clone()).collect())
}

/// The subspace on `subset`, keeping original identifiers.
pub fn restrict(s: &FiniteUltrametricSpace, subset: &PointSet) -> Result<FiniteUltrametricSpace, MetricError> {
    if subset.is_empty() {
        return Err(MetricError::EmptySubset);
    }
    let idx = subset.to_vec();
    if let Some(&bad) = idx.iter().find(|&&i| i >= s.len()) {
        return Err(MetricError::UnknownPoint(format!("#{bad}")));
    }
    let points = idx.iter().map(|&i| s.points[i].clone()).collect();
    let ranks = idx.iter().flat_map(|&i| idx.iter().map(move |&j| s.rank(i, j))).collect();
    Ok(FiniteUltrametricSpace::from_sparse_ranks(points, &s.values, ranks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn path_space_is_valid() {
        let s = path_space();
        assert_eq!(s.len(), 4);
        assert_eq!(distance_set(&s).to_string(), "{0, 1, 2}");
        assert_eq!(diameter(&s), r(2));
    }

    #[test]
    fn rejects_strong_triangle_violation() {
        let m = vec![vec![r(0), r(1), r(3)], vec![r(1), r(0), r(2)], vec![r(3), r(2), r(0)]];
        let err = validate_ultrametric(ids(3), m).unwrap_err();
        assert!(matches!(err, MetricError::StrongTriangleViolation { .. }), "{err:?}");
    }

    #[test]
    fn rejects_axiom_failures() {
        let asym = vec![vec![r(0), r(1)], vec![r(2), r(0)]];
        assert!(matches!(validate_ultrametric(ids(2), asym), Err(MetricError::NotSymmetric { .. })));
        let diag = vec![vec![r(1), r(1)], vec![r(1), r(0)]];
        assert!(matches!(validate_ultrametric(ids(2), diag), Err(MetricError::NonzeroDiagonal { .. })));
        let zero = vec![vec![r(0), r(0)], vec![r(0), r(0)]];
        assert!(matches!(validate_ultrametric(ids(2), zero), Err(MetricError::NonpositiveOffDiagonal { .. })));
        let ragged = vec![vec![r(0), r(1)], vec![r(1)]];
        assert!(matches!(validate_ultrametric(ids(2), ragged), Err(MetricError::Shape { .. })));
        let dup = vec!["a".to_owned(), "a".to_owned()];
        let m = vec![vec![r(0), r(1)], vec![r(1), r(0)]];
        assert!(matches!(validate_ultrametric(dup, m), Err(MetricError::DuplicatePoint(_))));
        assert!(matches!(validate_ultrametric(vec![], vec![]), Err(MetricError::Empty)));
    }

    #[test]
    fn pointwise_sets_of_path_space() {
        let s = path_space();
        let x1 = s.index_of("x1").unwrap();
        let x3 = s.index_of("x3").unwrap();
        assert_eq!(pointwise_distance_set(&s, x3).unwrap().to_string(), "{0, 1, 2}");
        assert_eq!(pointwise_distance_set(&s, x1).unwrap().to_string(), "{0, 2}");
        assert!(matches!(pointwise_distance_set(&s, 9), Err(MetricError::UnknownPoint(_))));
    }

    #[test]
    fn centers_of_small_spaces() {
        assert_eq!(center_of_distances(&path_space()).to_string(), "{0, 2}");
        assert_eq!(center_of_distances(&x3()).to_string(), "{0, 2}");
        assert_eq!(center_of_distances(&equidistant(1, 4)).to_string(), "{0}");
        assert_eq!(distance_set(&equidistant(5, 3)).to_string(), "{0, 3}");
        assert_eq!(diameter(&equidistant(1, 3)), r(0));
    }

    #[test]
    fn restriction() {
        let s = path_space();
        let b = s.subset_by_ids(["x3", "x4"]).unwrap();
        let sub = restrict(&s, &b).unwrap();
        assert_eq!(sub.points(), &["x3".to_owned(), "x4".to_owned()]);
        assert_eq!(sub.dist(0, 1), &r(1));
        assert_eq!(distance_set(&sub).to_string(), "{0, 1}");
        assert_eq!(restrict(&s, &s.all()).unwrap(), s);
        let single = restrict(&s, &s.subset_of([2])).unwrap();
        assert_eq!(single.to_matrix(), vec![vec![r(0)]]);
        assert!(matches!(restrict(&s, &PointSet::empty(4)), Err(MetricError::EmptySubset)));
    }
}
