//! Subsets of a finite point set, addressed by dense index.

use std::cmp::Ordering;
use std::fmt;

/// Largest universe that uses the single-word representation.
pub const BITSET_LIMIT: usize = 64;

/// A subset of `{0, …, n-1}`.
///
/// Universes of at most 64 points use a `u64` mask; larger ones use a sorted
/// index list. Two sets built over the same universe always share a
/// representation, so derived equality and hashing are sound. Ordering is
/// lexicographic on the sorted member list regardless of representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PointSet {
    Bits(u64),
    List(Vec<usize>),
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        if universe <= BITSET_LIMIT {
            PointSet::Bits(0)
        } else {
            PointSet::List(Vec::new())
        }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_indices(universe, 0..universe)
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        Self::from_indices(universe, [i])
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        if universe <= BITSET_LIMIT {
            let mut mask = 0u64;
            for i in it {
                debug_assert!(i < universe);
                mask |= 1 << i;
            }
            PointSet::Bits(mask)
        } else {
            let mut v: Vec<usize> = it.into_iter().collect();
            v.sort_unstable();
            v.dedup();
            PointSet::List(v)
        }
    }

    /// Interprets the low `universe` bits of `mask` as a subset.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= BITSET_LIMIT);
        PointSet::Bits(mask)
    }

    pub fn contains(&self, i: usize) -> bool {
        match self {
            PointSet::Bits(m) => i < 64 && m >> i & 1 == 1,
            PointSet::List(v) => v.binary_search(&i).is_ok(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            PointSet::Bits(m) => m.count_ones() as usize,
            PointSet::List(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> PointSetIter<'_> {
        match self {
            PointSet::Bits(m) => PointSetIter::Bits(*m),
            PointSet::List(v) => PointSetIter::List(v.iter()),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        match (self, other) {
            (PointSet::Bits(a), PointSet::Bits(b)) => a & !b == 0,
            _ => self.iter().all(|i| other.contains(i)),
        }
    }

    pub fn mask(&self) -> Option<u64> {
        match self {
            PointSet::Bits(m) => Some(*m),
            PointSet::List(_) => None,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub enum PointSetIter<'a> {
    Bits(u64),
    List(std::slice::Iter<'a, usize>),
}

impl Iterator for PointSetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            PointSetIter::Bits(m) => {
                if *m == 0 {
                    None
                } else {
                    let i = m.trailing_zeros() as usize;
                    *m &= *m - 1;
                    Some(i)
                }
            }
            PointSetIter::List(it) => it.next().copied(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_large_agree_on_membership() {
        let small = PointSet::from_indices(10, [3, 1, 7]);
        let large = PointSet::from_indices(100, [3, 1, 7, 7]);
        assert_eq!(small.to_vec(), vec![1, 3, 7]);
        assert_eq!(large.to_vec(), vec![1, 3, 7]);
        assert_eq!(small.cmp(&large), Ordering::Equal);
        assert!(small.contains(3) && large.contains(3));
        assert!(!small.contains(2) && !large.contains(2));
        assert_eq!(small.len(), 3);
    }

    #[test]
    fn ordering_is_lexicographic_on_members() {
        let a = PointSet::from_indices(8, [0, 5]);
        let b = PointSet::from_indices(8, [1]);
        let c = PointSet::from_indices(8, [0]);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn subset_test() {
        let a = PointSet::from_indices(70, [2, 65]);
        let b = PointSet::from_indices(70, [1, 2, 65]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
    }
}
