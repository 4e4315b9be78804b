use super::space::FiniteUltrametricSpace;
use super::MetricError;
use crate::rational::Rational;

/// The constant `k` when all distinct points are at distance `k`.
pub fn is_equidistant(s: &FiniteUltrametricSpace) -> Result<Option<Rational>, MetricError> {
    if s.len() < 2 {
        return Err(MetricError::TooSmall { needed: 2, found: s.len() });
    }
    Ok((s.values().len() == 2).then(|| s.values()[1].clone()))
}

/// A weak similarity `Φ: X → Y` with its scale map `f: D(Y) → D(X)`.
///
/// `point_bijection[x]` is the index of `Φ(x)` in `Y`; `scale_map` lists the
/// pairs `(ρ-value, d-value)` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakSimilarityWitness {
    pub point_bijection: Vec<usize>,
    pub scale_map: Vec<(Rational, Rational)>,
}

impl WeakSimilarityWitness {
    /// Checks the defining identity `d(x, y) = f(ρ(Φx, Φy))` from scratch.
    pub fn verify(&self, x: &FiniteUltrametricSpace, y: &FiniteUltrametricSpace) -> bool {
        let n = x.len();
        if y.len() != n || self.point_bijection.len() != n {
            return false;
        }
        let mut hit = vec![false; n];
        for &j in &self.point_bijection {
            if j >= n || std::mem::replace(&mut hit[j], true) {
                return false;
            }
        }
        let strictly_increasing = self.scale_map.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 < w[1].1);
        let covers = self.scale_map.iter().map(|p| &p.0).eq(y.values().iter())
            && self.scale_map.iter().map(|p| &p.1).eq(x.values().iter());
        if !strictly_increasing || !covers {
            return false;
        }
        let f = |rho: &Rational| -> &Rational {
            let k = self.scale_map.binary_search_by(|p| p.0.cmp(rho)).expect("ρ-value in D(Y)");
            &self.scale_map[k].1
        };
        (0..n).all(|a| (0..n).all(|b| x.dist(a, b) == f(y.dist(self.point_bijection[a], self.point_bijection[b]))))
    }

    /// The witness for `Φ⁻¹: Y → X`.
    pub fn inverse(&self) -> WeakSimilarityWitness {
        let mut inv = vec![0; self.point_bijection.len()];
        for (a, &b) in self.point_bijection.iter().enumerate() {
            inv[b] = a;
        }
        WeakSimilarityWitness {
            point_bijection: inv,
            scale_map: self.scale_map.iter().map(|(r, d)| (d.clone(), r.clone())).collect(),
        }
    }

    /// Given `self: X → Y` and `next: Y → Z`, the witness for `X → Z`.
    pub fn compose(&self, next: &WeakSimilarityWitness) -> WeakSimilarityWitness {
        WeakSimilarityWitness {
            point_bijection: self.point_bijection.iter().map(|&b| next.point_bijection[b]).collect(),
            scale_map: next
                .scale_map
                .iter()
                .zip(&self.scale_map)
                .map(|((z, _), (_, x))| (z.clone(), x.clone()))
                .collect(),
        }
    }
}

fn signatures(s: &FiniteUltrametricSpace) -> Vec<Vec<u32>> {
    (0..s.len())
        .map(|i| {
            let mut row = s.rank_row(i).to_vec();
            row.sort_unstable();
            row
        })
        .collect()
}

/// Searches for a weak similarity from `a` onto `b`.
///
/// Distance sets of finite spaces force `f` to pair values rank for rank, so
/// the search only has to match rank matrices under a point bijection.
/// Candidates are pruned by sorted rank rows and checked against every
/// already-placed point.
pub fn weak_similarity(a: &FiniteUltrametricSpace, b: &FiniteUltrametricSpace) -> Option<WeakSimilarityWitness> {
    let n = a.len();
    if b.len() != n || a.values().len() != b.values().len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    let candidates: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| sig_a[i] == sig_b[j]).collect()).collect();
    // place the most constrained points first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !place(a, b, &order, &candidates, 0, &mut phi, &mut used) {
        return None;
    }
    Some(WeakSimilarityWitness {
        point_bijection: phi,
        scale_map: b.values().iter().cloned().zip(a.values().iter().cloned()).collect(),
    })
}

fn place(
    a: &FiniteUltrametricSpace,
    b: &FiniteUltrametricSpace,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&i) = order.get(depth) else {
        return true;
    };
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&k| a.rank(i, k) == b.rank(j, phi[k]));
        if !consistent {
            continue;
        }
        phi[i] = j;
        used[j] = true;
        if place(a, b, order, candidates, depth + 1, phi, used) {
            return true;
        }
        used[j] = false;
        phi[i] = usize::MAX;
    }
    false
}
