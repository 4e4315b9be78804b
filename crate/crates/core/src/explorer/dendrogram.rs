use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{fence, ExplorerError, ENUMERATION_LIMIT};
use crate::fixtures::ids;
use crate::metric::FiniteUltrametricSpace;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Shape {
    level: u32,
    leaves: usize,
    children: Vec<Shape>,
    encoding: String,
}

impl Shape {
    fn leaf() -> Shape {
        Shape { level: 0, leaves: 1, children: Vec::new(), encoding: "*".to_owned() }
    }

    fn node(level: u32, mut children: Vec<Shape>) -> Shape {
        children.sort_by(|a, b| a.encoding.cmp(&b.encoding));
        let leaves = children.iter().map(|c| c.leaves).sum();
        let inner: Vec<&str> = children.iter().map(|c| c.encoding.as_str()).collect();
        let encoding = format!("{level}({})", inner.join(","));
        Shape { level, leaves, children, encoding }
    }
}

/// A leveled rooted tree whose leaves are the points of a finite
/// ultrametric space: the distance of two leaves is the level of their
/// lowest common ancestor.
///
/// Dendrograms are always kept canonical. Children are sorted by encoding
/// and levels are exactly `1..=height`, so two spaces are weakly similar iff
/// their dendrograms are equal. The text form is the encoding, e.g.
/// `2(*,1(*,*))`, with `*` for a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dendrogram {
    root: Shape,
}

/// Splits `members` by the maximum rank among them and recurses.
fn shape_of(members: &[usize], rank: &impl Fn(usize, usize) -> u32) -> Shape {
    if members.len() == 1 {
        return Shape::leaf();
    }
    let a = members[0];
    let top = members.iter().map(|&x| rank(a, x)).max().expect("non-empty");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &x in members {
        match classes.iter_mut().find(|c| rank(c[0], x) < top) {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    Shape::node(top, classes.iter().map(|c| shape_of(c, rank)).collect())
}

/// Canonical shape of a rank matrix whose values are exactly `0..=k`.
fn canonical_shape(n: usize, ranks: &[u32]) -> Shape {
    let members: Vec<usize> = (0..n).collect();
    shape_of(&members, &|i, j| ranks[i * n + j])
}

/// Relabels arbitrary ranks onto `0..=k` preserving order.
fn compress(ranks: &mut [u32]) {
    let mut used: Vec<u32> = ranks.to_vec();
    used.sort_unstable();
    used.dedup();
    for r in ranks.iter_mut() {
        *r = used.binary_search(r).expect("present") as u32;
    }
}

impl Dendrogram {
    pub fn from_space(s: &FiniteUltrametricSpace) -> Dendrogram {
        let members: Vec<usize> = (0..s.len()).collect();
        Dendrogram { root: shape_of(&members, &|i, j| s.rank(i, j)) }
    }

    /// The one-point dendrogram.
    pub fn point() -> Dendrogram {
        Dendrogram { root: Shape::leaf() }
    }

    /// Root at level 1 over `n` leaves; the equidistant class.
    pub fn star(n: usize) -> Dendrogram {
        assert!(n >= 1);
        if n == 1 {
            return Self::point();
        }
        Dendrogram { root: Shape::node(1, vec![Shape::leaf(); n]) }
    }

    /// The balanced binary dendrogram with `2^depth` leaves.
    pub fn perfect_binary(depth: u32) -> Dendrogram {
        fn build(level: u32) -> Shape {
            if level == 0 {
                Shape::leaf()
            } else {
                Shape::node(level, vec![build(level - 1), build(level - 1)])
            }
        }
        Dendrogram { root: build(depth) }
    }

    /// A caterpillar: each internal node at level `k` has one leaf child and
    /// the node at level `k - 1` (two leaves at level 1).
    pub fn chain(n: usize) -> Dendrogram {
        assert!(n >= 1);
        let mut shape = Shape::leaf();
        for level in 1..n as u32 {
            shape = Shape::node(level, vec![Shape::leaf(), shape]);
        }
        Dendrogram { root: shape }
    }

    pub fn leaves(&self) -> usize {
        self.root.leaves
    }

    /// Level of the root, which is the number of distinct positive distances.
    pub fn height(&self) -> u32 {
        self.root.level
    }

    pub fn encoding(&self) -> &str {
        &self.root.encoding
    }

    /// Rank matrix of lowest-common-ancestor levels, leaves in encoding order.
    pub fn level_matrix(&self) -> Vec<u32> {
        let n = self.leaves();
        let mut m = vec![0u32; n * n];
        fill_levels(&self.root, 0, n, &mut m);
        m
    }

    /// The space on points `x1, …, xn` with `d(xi, xj)` the LCA level.
    pub fn to_space(&self) -> FiniteUltrametricSpace {
        let values = (0..=self.height() as i64).map(Rational::from_integer).collect();
        FiniteUltrametricSpace::from_ranks_unchecked(ids(self.leaves()), values, self.level_matrix())
    }

    /// Every way of adding one leaf, as rank matrices over doubled levels.
    fn one_point_extensions(&self) -> Vec<Dendrogram> {
        let n = self.leaves();
        let m = n + 1;
        let base = self.level_matrix();
        let mut spots = Vec::new();
        collect_spots(&self.root, 0, None, &mut spots);
        let mut out = Vec::new();
        for spot in spots {
            let low = if spot.level == 0 { 1 } else { 2 * spot.level };
            let high = match spot.parent_level {
                Some(p) => 2 * p - 1,
                None => 2 * spot.level + 1,
            };
            for l in low..=high {
                let mut ranks = vec![0u32; m * m];
                for i in 0..n {
                    for j in 0..n {
                        ranks[i * m + j] = 2 * base[i * n + j];
                    }
                    let d = if spot.range.contains(&i) { l } else { 2 * base[spot.range.start * n + i] };
                    ranks[i * m + n] = d;
                    ranks[n * m + i] = d;
                }
                compress(&mut ranks);
                out.push(Dendrogram { root: canonical_shape(m, &ranks) });
            }
        }
        out
    }
}

fn fill_levels(shape: &Shape, start: usize, n: usize, m: &mut [u32]) {
    let mut offset = start;
    let mut ranges = Vec::with_capacity(shape.children.len());
    for c in &shape.children {
        fill_levels(c, offset, n, m);
        ranges.push(offset..offset + c.leaves);
        offset += c.leaves;
    }
    for (a, ra) in ranges.iter().enumerate() {
        for rb in &ranges[a + 1..] {
            for i in ra.clone() {
                for j in rb.clone() {
                    m[i * n + j] = shape.level;
                    m[j * n + i] = shape.level;
                }
            }
        }
    }
}

struct Spot {
    range: std::ops::Range<usize>,
    level: u32,
    parent_level: Option<u32>,
}

fn collect_spots(shape: &Shape, start: usize, parent_level: Option<u32>, out: &mut Vec<Spot>) {
    out.push(Spot { range: start..start + shape.leaves, level: shape.level, parent_level });
    let mut offset = start;
    for c in &shape.children {
        collect_spots(c, offset, Some(shape.level), out);
        offset += c.leaves;
    }
}

impl fmt::Display for Dendrogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.encoding())
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> ExplorerError {
        ExplorerError::InvalidDendrogram(format!("{what} at byte {}", self.pos))
    }

    fn shape(&mut self) -> Result<Shape, ExplorerError> {
        if self.text.get(self.pos) == Some(&b'*') {
            self.pos += 1;
            return Ok(Shape::leaf());
        }
        let digits = self.text[self.pos..].iter().take_while(|b| b.is_ascii_digit()).count();
        if digits == 0 {
            return Err(self.error("expected a level or '*'"));
        }
        let level: u32 = std::str::from_utf8(&self.text[self.pos..self.pos + digits])
            .expect("ascii")
            .parse()
            .map_err(|_| self.error("level out of range"))?;
        self.pos += digits;
        if level == 0 {
            return Err(self.error("internal nodes need a level of at least 1"));
        }
        if self.text.get(self.pos) != Some(&b'(') {
            return Err(self.error("expected '('"));
        }
        self.pos += 1;
        let mut children = vec![self.shape()?];
        loop {
            match self.text.get(self.pos) {
                Some(b',') => {
                    self.pos += 1;
                    children.push(self.shape()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.error("expected ',' or ')'")),
            }
        }
        if children.len() < 2 {
            return Err(self.error("internal node with a single child"));
        }
        if children.iter().any(|c| c.level >= level) {
            return Err(self.error("child level not below its parent"));
        }
        Ok(Shape::node(level, children))
    }
}

fn collect_levels(shape: &Shape, out: &mut Vec<u32>) {
    if !shape.children.is_empty() {
        out.push(shape.level);
        shape.children.iter().for_each(|c| collect_levels(c, out));
    }
}

impl FromStr for Dendrogram {
    type Err = ExplorerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { text: compact.as_bytes(), pos: 0 };
        let root = p.shape()?;
        if p.pos != compact.len() {
            return Err(p.error("trailing input"));
        }
        let mut levels = Vec::new();
        collect_levels(&root, &mut levels);
        levels.sort_unstable();
        levels.dedup();
        if levels.iter().enumerate().any(|(i, &l)| l != i as u32 + 1) {
            return Err(ExplorerError::InvalidDendrogram(format!("levels {levels:?} are not 1..={}", root.level)));
        }
        Ok(Dendrogram { root })
    }
}

/// Every weak-similarity class of `n`-point ultrametric spaces, once each,
/// sorted by encoding.
///
/// Classes on `n` points are grown from those on `n - 1` by inserting a
/// leaf anywhere: under an existing node, on an edge at a fresh or reused
/// level, or above the root. Extensions are canonicalized and deduplicated.
pub fn enumerate_dendrograms(n: usize) -> Result<Vec<Dendrogram>, ExplorerError> {
    fence("class enumeration", n, 1, ENUMERATION_LIMIT)?;
    let mut classes = vec![Dendrogram::point()];
    for _ in 1..n {
        let extended: Vec<Vec<Dendrogram>> = classes.par_iter().map(Dendrogram::one_point_extensions).collect();
        let mut unique = BTreeMap::new();
        for d in extended.into_iter().flatten() {
            unique.entry(d.root.encoding.clone()).or_insert(d);
        }
        classes = unique.into_values().collect();
    }
    Ok(classes)
}

pub fn dendrogram_to_space(d: &Dendrogram) -> FiniteUltrametricSpace {
    d.to_space()
}
