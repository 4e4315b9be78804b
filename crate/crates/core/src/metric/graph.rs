use super::space::FiniteUltrametricSpace;
use super::MetricError;
use crate::rational::Rational;

/// Graph on the points of a space joining pairs at distance exactly `diam X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiametricalGraph {
    n: usize,
    diameter: Rational,
    adjacent: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl DiametricalGraph {
    #[cfg(test)]
    pub(crate) fn from_edges(n: usize, diameter: Rational, edges: &[(usize, usize)]) -> Self {
        let mut adjacent = vec![false; n * n];
        for &(u, v) in edges {
            adjacent[u * n + v] = true;
            adjacent[v * n + u] = true;
        }
        let mut edges: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        DiametricalGraph { n, diameter, adjacent, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> &Rational {
        &self.diameter
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.adjacent[u * self.n + v]
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.is_edge(u, v)).count()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub fn diametrical_graph(s: &FiniteUltrametricSpace) -> DiametricalGraph {
    let n = s.len();
    let top = s.diameter_rank();
    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && s.rank(u, v) == top {
                adjacent[u * n + v] = true;
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    DiametricalGraph { n, diameter: super::space::diameter(s), adjacent, edges }
}

/// Parts of a complete multipartite graph, each sorted, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteDecomposition {
    pub parts: Vec<Vec<usize>>,
}

impl MultipartiteDecomposition {
    pub fn has_singleton_part(&self) -> bool {
        self.parts.iter().any(|p| p.len() == 1)
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&v))
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Recovers the parts as connected components of the complement graph and
/// verifies the complete multipartite structure.
pub fn multipartite_parts(g: &DiametricalGraph) -> Result<MultipartiteDecomposition, MetricError> {
    let n = g.n;
    if n < 2 {
        return Err(MetricError::TooSmall { needed: 2, found: n });
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !g.is_edge(u, v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut part_index = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        if part_index[root] == usize::MAX {
            part_index[root] = parts.len();
            parts.push(Vec::new());
        }
        parts[part_index[root]].push(v);
    }
    if parts.len() < 2 {
        return Err(MetricError::NotCompleteMultipartite("the complement graph is connected".into()));
    }
    for u in 0..n {
        for v in u + 1..n {
            let same = find(&mut parent, u) == find(&mut parent, v);
            if same == g.is_edge(u, v) {
                let why = if same { "an edge inside a part" } else { "a missing edge across parts" };
                return Err(MetricError::NotCompleteMultipartite(format!("{why}: {{{u}, {v}}}")));
            }
        }
    }
    Ok(MultipartiteDecomposition { parts })
}

/// Center of a spanning star: a vertex adjacent to all others.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarCertificate {
    pub center: usize,
}

/// Least-index vertex adjacent to every other vertex, if any.
pub fn spanning_star(g: &DiametricalGraph) -> Option<StarCertificate> {
    if g.n < 2 {
        return None;
    }
    (0..g.n).find(|&c| g.degree(c) == g.n - 1).map(|center| StarCertificate { center })
}
