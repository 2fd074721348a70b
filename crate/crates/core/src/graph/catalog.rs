//! Isomorph-free enumeration of all graphs on a few vertices.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighbourhood, then deduplicated by a canonical code:
//! the largest upper-triangle bit string over all relabelings that list
//! vertices by non-increasing degree.

use std::collections::BTreeSet;

use super::Graph;
use crate::{Error, Result};

pub const MAX_CATALOG_N: usize = 8;

fn code(g: &Graph, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            c = c << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

fn permute_classes(g: &Graph, classes: &mut [Vec<usize>], depth: usize, order: &mut Vec<usize>, best: &mut u64) {
    if depth == classes.len() {
        *best = (*best).max(code(g, order));
        return;
    }
    let k = classes[depth].len();
    permute_within(g, classes, depth, k, order, best);
}

// Heap's algorithm over class `depth`, recursing into the next class at each leaf.
fn permute_within(
    g: &Graph,
    classes: &mut [Vec<usize>],
    depth: usize,
    k: usize,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    if k <= 1 {
        let len = order.len();
        order.extend_from_slice(&classes[depth]);
        permute_classes(g, classes, depth + 1, order, best);
        order.truncate(len);
        return;
    }
    permute_within(g, classes, depth, k - 1, order, best);
    for i in 0..k - 1 {
        let swap = if k.is_multiple_of(2) { i } else { 0 };
        classes[depth].swap(swap, k - 1);
        permute_within(g, classes, depth, k - 1, order, best);
    }
}

/// Isomorphism-invariant code of `g`.
pub fn canonical_code(g: &Graph) -> u64 {
    let mut vertices: Vec<usize> = (0..g.n()).collect();
    vertices.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in vertices {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = 0;
    permute_classes(g, &mut classes, 0, &mut Vec::with_capacity(g.n()), &mut best);
    best
}

fn from_code(n: usize, mut c: u64) -> Graph {
    let mut edges = Vec::new();
    for j in (1..n).rev() {
        for i in (0..j).rev() {
            if c & 1 == 1 {
                edges.push((i, j));
            }
            c >>= 1;
        }
    }
    Graph::from_edges(n, edges).expect("in-range code")
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// ordered by canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOG_N {
        return Err(Error::SizeLimit { what: "graph catalogue", n, limit: MAX_CATALOG_N });
    }
    let mut codes = BTreeSet::from([0u64]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for &c in &codes {
            let base = from_code(k - 1, c);
            for nbrs in 0u64..1 << (k - 1) {
                let edges = base.edges().chain((0..k - 1).filter(|&v| nbrs >> v & 1 == 1).map(|v| (v, k - 1)));
                let g = Graph::from_edges(k, edges).expect("in range");
                next.insert(canonical_code(&g));
            }
        }
        codes = next;
    }
    Ok(codes.into_iter().map(|c| from_code(n, c)).collect())
}
