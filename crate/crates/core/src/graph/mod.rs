//! Simple undirected graphs on at most 64 vertices stored as adjacency bitsets.

mod catalog;
mod families;
mod graph6;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub use catalog::{canonical_code, nonisomorphic_graphs, MAX_CATALOG_N};
pub use families::{petersen, FamilySpec};
pub use graph6::MAX_GRAPH6_N;

/// Bitset width; vertex labels are `0..n` with `n <= MAX_VERTICES`.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex labels packed in a `u64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Two disjoint vertex sets such that every edge of the graph they induce joins them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn vertices(&self) -> VertexSet {
        self.left.union(self.right)
    }
}

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

/// Induced subgraph relabeled to `0..k`; `map[i]` is the host label of vertex `i`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub map: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, m: 0, adj: vec![0; n] })
    }

    /// Builds a graph from unordered pairs; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn from_adjacency(adj: Vec<u64>) -> Self {
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Graph { n: adj.len(), m, adj }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s.0).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.0 & !(1u64 << v) & !self.adj[v] == 0)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1u64 << v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect()).collect()
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if let Some(v) = s.difference(self.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Subgraph induced by `s`, relabeled in increasing host-label order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph> {
        self.check_set(s)?;
        let map = s.to_vec();
        let adj = map
            .iter()
            .map(|&u| {
                map.iter().enumerate().filter(|&(_, &v)| self.has_edge(u, v)).fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(InducedSubgraph { graph: Graph::from_adjacency(adj), map })
    }

    /// Breadth-first 2-colouring of each component. Isolated vertices and the
    /// lowest vertex of every component go on the left.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        two_colour(self, self.vertices()).map(|components| {
            components.iter().fold(Bipartition { left: VertexSet::EMPTY, right: VertexSet::EMPTY }, |acc, c| {
                Bipartition { left: acc.left.union(c.left), right: acc.right.union(c.right) }
            })
        })
    }

    /// Cartesian product; vertex `(v, w)` gets label `v * n2 + w`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        if self.n == 0 || other.n == 0 {
            return Err(Error::EmptyFactor);
        }
        let n = self.n * other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let label = |v: usize, w: usize| v * other.n + w;
        let mut g = Graph::empty(n)?;
        for v in 0..self.n {
            for (w1, w2) in other.edges() {
                g.add_edge(label(v, w1), label(v, w2));
            }
        }
        for w in 0..other.n {
            for (v1, v2) in self.edges() {
                g.add_edge(label(v1, w), label(v2, w));
            }
        }
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

/// 2-colours `G[s]` component by component. Returns `None` on an odd cycle.
/// Each component's colour class containing its lowest vertex is `left`.
pub(crate) fn two_colour(g: &Graph, s: VertexSet) -> Option<Vec<Bipartition>> {
    let mut components = Vec::new();
    let mut remaining = s.0;
    while remaining != 0 {
        let start = remaining & remaining.wrapping_neg();
        let mut sides = [start, 0u64];
        let mut frontier = start;
        let mut side = 0;
        while frontier != 0 {
            let mut reached = 0u64;
            for v in VertexSet(frontier).iter() {
                reached |= g.adj[v];
            }
            reached &= s.0;
            if reached & sides[side] != 0 {
                return None;
            }
            let other = 1 - side;
            frontier = reached & !sides[other];
            sides[other] |= reached;
            side = other;
        }
        remaining &= !(sides[0] | sides[1]);
        components.push(Bipartition { left: VertexSet(sides[0]), right: VertexSet(sides[1]) });
    }
    Some(components)
}
