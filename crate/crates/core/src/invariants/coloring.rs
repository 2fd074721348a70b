use super::independence::clique_number;
use crate::graph::{Graph, VertexSet};
use crate::{limits, Error, Result};

/// Largest-first greedy colouring; ties go to the lower vertex index.
fn greedy_largest_first(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colour = vec![usize::MAX; g.n()];
    for v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).expect("unbounded range");
    }
    colour
}

struct ColouringSearch<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
    colour: Vec<usize>,
}

impl ColouringSearch<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.classes.iter().filter(|&&c| c & self.g.adj_bits(v) != 0).count()
    }

    /// Picks the uncoloured vertex of highest saturation, then degree, then lowest index.
    fn next_vertex(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colour[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn solve(&mut self) -> bool {
        let Some(v) = self.next_vertex() else {
            return true;
        };
        let opened = self.classes.len();
        for c in 0..self.k.min(opened + 1) {
            if c < opened && self.classes[c] & self.g.adj_bits(v) != 0 {
                continue;
            }
            if c == opened {
                self.classes.push(0);
            }
            self.classes[c] |= 1 << v;
            self.colour[v] = c;
            if self.solve() {
                return true;
            }
            self.colour[v] = usize::MAX;
            self.classes[c] &= !(1 << v);
            if c == opened {
                self.classes.pop();
            }
        }
        false
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut search = ColouringSearch { g, k, classes: Vec::new(), colour: vec![usize::MAX; g.n()] };
    search.solve().then_some(search.colour)
}

/// Exact chromatic number χ(G) with a proper colouring using `χ` colours.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    limits::check("chromatic number", g.n(), limits::CHROMATIC_LIMIT)?;
    let lower = clique_number(g)?;
    let greedy = greedy_largest_first(g);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    if upper == lower {
        return Ok((upper, greedy));
    }
    for k in lower..upper {
        if let Some(colouring) = k_colouring(g, k) {
            return Ok((k, colouring));
        }
    }
    Ok((upper, greedy))
}

/// Whether `colour` is a proper colouring of `g`.
pub fn is_proper_colouring(g: &Graph, colour: &[usize]) -> bool {
    colour.len() == g.n() && g.edges().all(|(u, v)| colour[u] != colour[v])
}

/// Vertices of colour class `c`.
pub fn colour_class(colour: &[usize], c: usize) -> VertexSet {
    colour.iter().enumerate().filter(|&(_, &x)| x == c).map(|(v, _)| v).collect()
}
