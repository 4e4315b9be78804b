use std::collections::HashSet;

use serde::Serialize;

use super::space::FiniteUltrametricSpace;
use super::MetricError;
use crate::pointset::PointSet;
use crate::rational::Rational;

/// Largest space on which exhaustive subset scans are allowed.
pub const SUBSET_SCAN_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BallKind {
    Open,
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub kind: BallKind,
    pub center: usize,
    pub radius: Rational,
    pub members: PointSet,
}

/// Evidence that `subset = {x : d(x, center) = radius} ∪ {center}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereCertificate {
    pub center: usize,
    pub radius: Rational,
    pub subset: PointSet,
}

impl SphereCertificate {
    /// Recomputes the sphere from `(center, radius)` and compares.
    pub fn verify(&self, s: &FiniteUltrametricSpace) -> bool {
        self.center < s.len()
            && sphere(s, self.center, &self.radius) == self.subset
            && self.subset.contains(self.center)
    }
}

fn sphere(s: &FiniteUltrametricSpace, c: usize, r: &Rational) -> PointSet {
    s.subset_of((0..s.len()).filter(|&x| x == c || s.dist(c, x) == r))
}

/// Number of distance values strictly below `r` (open) or at most `r`
/// (closed); a point is in the ball iff its rank is below this cut.
fn rank_cut(s: &FiniteUltrametricSpace, r: &Rational, kind: BallKind) -> u32 {
    let values = s.values();
    let cut = match kind {
        BallKind::Open => values.partition_point(|v| v < r),
        BallKind::Closed => values.partition_point(|v| v <= r),
    };
    cut as u32
}

fn members_below(s: &FiniteUltrametricSpace, c: usize, cut: u32) -> PointSet {
    s.subset_of(s.rank_row(c).iter().enumerate().filter(|(_, &r)| r < cut).map(|(x, _)| x))
}

pub fn ball(s: &FiniteUltrametricSpace, center: usize, radius: &Rational, kind: BallKind) -> Result<Ball, MetricError> {
    s.check_index(center)?;
    match kind {
        BallKind::Open if !radius.is_positive() => return Err(MetricError::NonpositiveRadius),
        BallKind::Closed if radius.is_negative() => return Err(MetricError::NonpositiveRadius),
        _ => {}
    }
    let members = members_below(s, center, rank_cut(s, radius, kind));
    Ok(Ball { kind, center, radius: radius.clone(), members })
}

/// Radii that realize every ball of the given kind.
///
/// Open-ball membership only changes as the radius crosses a value of
/// `D(X)`, so the positive distances plus one value above the diameter are
/// exhaustive. Closed balls use every distance, including 0.
fn sweep_radii(s: &FiniteUltrametricSpace, kind: BallKind) -> Vec<Rational> {
    let values = s.values();
    match kind {
        BallKind::Open => {
            let mut radii: Vec<Rational> = values.iter().filter(|v| v.is_positive()).cloned().collect();
            radii.push(values.last().expect("non-empty") + &Rational::one());
            radii
        }
        BallKind::Closed => values.to_vec(),
    }
}

/// All distinct balls, each reported once under its least `(center, radius)`.
pub fn enumerate_balls(s: &FiniteUltrametricSpace, kind: BallKind) -> Vec<Ball> {
    let radii = sweep_radii(s, kind);
    let cuts: Vec<u32> = radii.iter().map(|r| rank_cut(s, r, kind)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in 0..s.len() {
        for (radius, &cut) in radii.iter().zip(&cuts) {
            let members = members_below(s, c, cut);
            if seen.insert(members.clone()) {
                out.push(Ball { kind, center: c, radius: radius.clone(), members });
            }
        }
    }
    out
}

/// Least `(center, radius)` certifying `subset` as a centered sphere, if any.
pub fn is_centered_sphere(
    s: &FiniteUltrametricSpace,
    subset: &PointSet,
) -> Result<Option<SphereCertificate>, MetricError> {
    if subset.is_empty() {
        return Err(MetricError::EmptySubset);
    }
    if let Some(bad) = subset.iter().find(|&i| i >= s.len()) {
        return Err(MetricError::UnknownPoint(format!("#{bad}")));
    }
    if subset.len() == 1 {
        let c = subset.first().expect("non-empty");
        return Ok(Some(SphereCertificate { center: c, radius: Rational::zero(), subset: subset.clone() }));
    }
    for c in subset.iter() {
        let row = s.rank_row(c);
        let other = subset.iter().find(|&x| x != c).expect("at least two members");
        let r = row[other];
        let exact = (0..s.len()).all(|x| x == c || (row[x] == r) == subset.contains(x));
        if exact {
            return Ok(Some(SphereCertificate {
                center: c,
                radius: s.values()[r as usize].clone(),
                subset: subset.clone(),
            }));
        }
    }
    Ok(None)
}

/// Every centered sphere, deduplicated by member set, each under its least
/// `(center, radius)`.
pub fn enumerate_centered_spheres(s: &FiniteUltrametricSpace) -> Vec<SphereCertificate> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for c in 0..s.len() {
        let row = s.rank_row(c);
        let mut present = vec![false; s.values().len()];
        for &r in row {
            present[r as usize] = true;
        }
        for (r, _) in present.iter().enumerate().filter(|(_, &p)| p) {
            let subset = s.subset_of((0..s.len()).filter(|&x| x == c || row[x] as usize == r));
            if seen.insert(subset.clone()) {
                out.push(SphereCertificate { center: c, radius: s.values()[r].clone(), subset });
            }
        }
    }
    out
}

/// Every non-empty subset paired with its sphere certificate (if any).
///
/// Exponential in `|X|`; refused above [`SUBSET_SCAN_LIMIT`] points.
pub fn scan_subsets(s: &FiniteUltrametricSpace) -> Result<Vec<(PointSet, Option<SphereCertificate>)>, MetricError> {
    let n = s.len();
    if n > SUBSET_SCAN_LIMIT {
        return Err(MetricError::CapacityExceeded { what: "subset scan", limit: SUBSET_SCAN_LIMIT, found: n });
    }
    (1u64..1 << n)
        .map(|mask| {
            let subset = PointSet::from_mask(n, mask);
            let cert = is_centered_sphere(s, &subset)?;
            Ok((subset, cert))
        })
        .collect()
}

/// True when every non-empty subset is a centered sphere.
pub fn all_subsets_are_spheres(s: &FiniteUltrametricSpace) -> Result<bool, MetricError> {
    let n = s.len();
    if n > SUBSET_SCAN_LIMIT {
        return Err(MetricError::CapacityExceeded { what: "subset scan", limit: SUBSET_SCAN_LIMIT, found: n });
    }
    // distinct spheres are distinct non-empty subsets, so a full count suffices
    Ok(enumerate_centered_spheres(s).len() == (1usize << n) - 1)
}
