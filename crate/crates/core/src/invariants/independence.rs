use crate::graph::{Graph, VertexSet};
use crate::{limits, Error, Result};

fn degree_in(g: &Graph, v: usize, cand: u64) -> u32 {
    (g.adj_bits(v) & cand).count_ones()
}

/// `α(G[cand]) <= |cand| - ceil(m / Δ)`: every edge needs an endpoint outside
/// a maximum independent set and each such vertex covers at most Δ edges.
fn upper_bound(g: &Graph, cand: u64) -> usize {
    let (mut twice_m, mut delta) = (0u32, 0u32);
    for v in VertexSet(cand).iter() {
        let d = degree_in(g, v, cand);
        twice_m += d;
        delta = delta.max(d);
    }
    let k = cand.count_ones() as usize;
    if delta == 0 {
        return k;
    }
    let m = twice_m / 2;
    k - m.div_ceil(delta) as usize
}

/// Minimum-degree greedy independent set.
fn greedy(g: &Graph, mut cand: u64) -> u64 {
    let mut set = 0u64;
    while cand != 0 {
        let v = VertexSet(cand).iter().min_by_key(|&v| degree_in(g, v, cand)).expect("nonempty");
        set |= 1 << v;
        cand &= !(g.adj_bits(v) | 1 << v);
    }
    set
}

fn branch(g: &Graph, mut cand: u64, mut current: u64, best: &mut u64) {
    // isolated vertices of G[cand] belong to some maximum independent set
    for v in VertexSet(cand).iter() {
        if g.adj_bits(v) & cand == 0 {
            current |= 1 << v;
            cand &= !(1 << v);
        }
    }
    if cand == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() as usize + upper_bound(g, cand) <= best.count_ones() as usize {
        return;
    }
    let pivot =
        VertexSet(cand).iter().max_by_key(|&v| (degree_in(g, v, cand), std::cmp::Reverse(v))).expect("nonempty");
    branch(g, cand & !(g.adj_bits(pivot) | 1 << pivot), current | 1 << pivot, best);
    branch(g, cand & !(1 << pivot), current, best);
}

/// Exact independence number α(G) with a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    limits::check("independence number", g.n(), limits::INDEPENDENCE_LIMIT)?;
    let all = g.vertices().bits();
    let mut best = greedy(g, all);
    branch(g, all, 0, &mut best);
    Ok((best.count_ones() as usize, VertexSet(best)))
}

/// Clique number ω(G) with a maximum clique, via α of the complement.
pub fn maximum_clique(g: &Graph) -> Result<(usize, VertexSet)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    limits::check("clique number", g.n(), limits::INDEPENDENCE_LIMIT)?;
    independence_number(&g.complement())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    maximum_clique(g).map(|(size, _)| size)
}
