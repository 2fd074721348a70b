//! Induced bipartite subgraphs: enumeration, η and ι.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exact::{Rational, SqrtRatio};
use crate::graph::{two_colour, Bipartition, Graph, VertexSet};
use crate::{limits, Error, Result};

/// An induced bipartite subgraph `G[S]` with a bipartition `(V1, V2)` of `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub subset: VertexSet,
    pub bipartition: Bipartition,
    /// `|E(G[S])|`.
    pub edges: usize,
}

impl BipartiteWitness {
    /// Witness with sides `left` and `right`, both independent in `g`.
    pub fn new(g: &Graph, left: VertexSet, right: VertexSet) -> Result<Self> {
        let subset = left.union(right);
        if let Some(v) = subset.difference(g.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if !left.is_disjoint(right) {
            return Err(Error::InvalidWitness("sides overlap".into()));
        }
        if !g.is_independent(left) || !g.is_independent(right) {
            return Err(Error::InvalidWitness("a side contains an edge".into()));
        }
        let edges = g.edges_within(subset);
        if edges > 0 && (left.is_empty() || right.is_empty()) {
            return Err(Error::EmptySide);
        }
        Ok(BipartiteWitness { subset, bipartition: Bipartition { left, right }, edges })
    }

    /// Recomputes the witness from `g` and checks it matches.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fresh = BipartiteWitness::new(g, self.bipartition.left, self.bipartition.right)?;
        if fresh != *self {
            return Err(Error::InvalidWitness(format!(
                "stored edge count {} but the graph induces {}",
                self.edges, fresh.edges
            )));
        }
        Ok(())
    }

    /// Aligns the larger colour class of every component on the left, which
    /// minimises `|V1||V2|` over all bipartitions of `G[S]`.
    fn aligned(g: &Graph, subset: VertexSet, components: &[Bipartition]) -> Self {
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for c in components {
            let (big, small) = if c.left.len() >= c.right.len() { (c.left, c.right) } else { (c.right, c.left) };
            left = left.union(big);
            right = right.union(small);
        }
        BipartiteWitness { subset, bipartition: Bipartition { left, right }, edges: g.edges_within(subset) }
    }

    /// `|V1| · |V2|`.
    pub fn side_product(&self) -> u64 {
        (self.bipartition.left.len() * self.bipartition.right.len()) as u64
    }

    /// `|E(H)| / √(|V1||V2|)`; zero when the witness has no edges.
    pub fn ratio(&self) -> SqrtRatio {
        match self.side_product() {
            0 => SqrtRatio::ZERO,
            p => SqrtRatio::new(self.edges as u64, p),
        }
    }

    /// Average degree `2|E(H)| / |V(H)|`.
    pub fn average_degree(&self) -> Rational {
        match self.subset.len() {
            0 => Rational::from_integer(0),
            k => Rational::new(2 * self.edges as i64, k as i64),
        }
    }
}

impl Serialize for BipartiteWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(5))?;
        map.serialize_entry("subset", &self.subset)?;
        map.serialize_entry("left", &self.bipartition.left)?;
        map.serialize_entry("right", &self.bipartition.right)?;
        map.serialize_entry("e", &self.edges)?;
        map.serialize_entry("p", &self.side_product())?;
        map.end()
    }
}

/// Lexicographic backtracking over vertex subsets. A subset whose induced
/// graph has an odd cycle is pruned together with all of its supersets.
pub struct InducedBipartite<'a> {
    g: &'a Graph,
    /// `(subset, next vertex to try adding)`.
    stack: Vec<(u64, usize)>,
}

impl Iterator for InducedBipartite<'_> {
    type Item = BipartiteWitness;

    fn next(&mut self) -> Option<BipartiteWitness> {
        let n = self.g.n();
        loop {
            let top = self.stack.last_mut()?;
            if top.1 >= n {
                self.stack.pop();
                continue;
            }
            let v = top.1;
            top.1 += 1;
            let subset = VertexSet(top.0 | 1 << v);
            let Some(components) = two_colour(self.g, subset) else {
                continue;
            };
            self.stack.push((subset.bits(), v + 1));
            let isolated = subset.iter().any(|u| self.g.adj_bits(u) & subset.bits() == 0);
            if !isolated {
                return Some(BipartiteWitness::aligned(self.g, subset, &components));
            }
        }
    }
}

/// Every induced bipartite subgraph with at least one edge and no isolated
/// vertex, each with its `|V1||V2|`-minimising bipartition.
pub fn enumerate_induced_bipartite(g: &Graph) -> Result<InducedBipartite<'_>> {
    limits::check("induced bipartite enumeration", g.n(), limits::SUBSET_LIMIT)?;
    Ok(InducedBipartite { g, stack: vec![(0, 0)] })
}

fn check_pair(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { what, min: 2, n: g.n() });
    }
    Ok(())
}

fn edgeless_witness() -> BipartiteWitness {
    BipartiteWitness {
        subset: VertexSet(0b11),
        bipartition: Bipartition { left: VertexSet(0b01), right: VertexSet(0b10) },
        edges: 0,
    }
}

/// η(G) with an optimal witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Eta {
    pub value: SqrtRatio,
    pub witness: BipartiteWitness,
}

impl Serialize for Eta {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("e", &self.value.e)?;
        map.serialize_entry("p", &self.value.p)?;
        map.serialize_entry("value", &self.value.to_f64())?;
        map.serialize_entry("witness", &self.witness)?;
        map.end()
    }
}

/// A rational invariant (ι or mad) with its optimiser.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalWitness<W> {
    pub value: Rational,
    pub witness: W,
}

impl<W: Serialize> Serialize for RationalWitness<W> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("num", self.value.numer())?;
        map.serialize_entry("den", self.value.denom())?;
        map.serialize_entry("witness", &self.witness)?;
        map.end()
    }
}

/// η(G) = max |E(H)| / √(|V1||V2|) over induced bipartite `H`, compared exactly.
/// Edgeless graphs give 0 with the witness `({0}, {1})`.
pub fn eta(g: &Graph) -> Result<Eta> {
    check_pair(g, "eta")?;
    let mut best: Option<BipartiteWitness> = None;
    for w in enumerate_induced_bipartite(g)? {
        if best.is_none_or(|b| w.ratio() > b.ratio()) {
            best = Some(w);
        }
    }
    let witness = best.unwrap_or_else(edgeless_witness);
    Ok(Eta { value: witness.ratio(), witness })
}

/// ι(G) = max average degree over induced bipartite subgraphs.
pub fn iota(g: &Graph) -> Result<RationalWitness<BipartiteWitness>> {
    check_pair(g, "iota")?;
    let mut best: Option<BipartiteWitness> = None;
    for w in enumerate_induced_bipartite(g)? {
        if best.is_none_or(|b| w.average_degree() > b.average_degree()) {
            best = Some(w);
        }
    }
    let witness = best.unwrap_or_else(edgeless_witness);
    Ok(RationalWitness { value: witness.average_degree(), witness })
}
