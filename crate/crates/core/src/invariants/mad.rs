use super::bipartite::RationalWitness;
use crate::exact::Rational;
use crate::graph::{Graph, VertexSet};
use crate::{limits, Error, Result};

struct Best {
    edges: usize,
    size: usize,
    set: u64,
}

fn walk(g: &Graph, v: usize, set: u64, size: usize, edges: usize, best: &mut Best) {
    if v == g.n() {
        // 2e/k > 2e*/k*  <=>  e k* > e* k
        if size > 0 && edges * best.size > best.edges * size {
            *best = Best { edges, size, set };
        }
        return;
    }
    let added = (g.adj_bits(v) & set).count_ones() as usize;
    walk(g, v + 1, set | 1 << v, size + 1, edges + added, best);
    walk(g, v + 1, set, size, edges, best);
}

/// Maximum average degree over nonempty vertex subsets (induced subgraphs
/// suffice), by exhaustive enumeration.
pub fn mad(g: &Graph) -> Result<RationalWitness<VertexSet>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    limits::check("maximum average degree", g.n(), limits::SUBSET_LIMIT)?;
    let mut best = Best { edges: 0, size: 1, set: 1 };
    walk(g, 0, 0, 0, 0, &mut best);
    Ok(RationalWitness { value: Rational::new(2 * best.edges as i64, best.size as i64), witness: VertexSet(best.set) })
}
