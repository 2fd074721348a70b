//! Desk-scale planarity via exhaustive K5 / K3,3 minor search.
//!
//! A minor model is a family of disjoint connected branch sets with the
//! required adjacencies between them. Branch sets are enumerated as restricted
//! growth labelings (vertex -> deleted | block index), so each unordered
//! family of blocks is visited once.

#![allow(clippy::needless_range_loop)]

use crate::graph::{Graph, VertexSet};
use crate::{limits, Result};

fn connected(g: &Graph, set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut grown = seen;
        for v in VertexSet(seen).iter() {
            grown |= g.adj_bits(v) & set;
        }
        if grown == seen {
            return seen == set;
        }
        seen = grown;
    }
}

fn touches(g: &Graph, a: u64, b: u64) -> bool {
    VertexSet(a).iter().any(|v| g.adj_bits(v) & b != 0)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Target {
    K5,
    K33,
}

impl Target {
    fn blocks(self) -> usize {
        match self {
            Target::K5 => 5,
            Target::K33 => 6,
        }
    }

    fn quotient_matches(self, adjacent: &[[bool; 6]; 6]) -> bool {
        match self {
            Target::K5 => (0..5).all(|i| (i + 1..5).all(|j| adjacent[i][j])),
            // the side holding block 0 picks two of blocks 1..6
            Target::K33 => (1..6).any(|a| {
                (a + 1..6).any(|b| {
                    let side = [0, a, b];
                    let other: Vec<usize> = (1..6).filter(|x| *x != a && *x != b).collect();
                    side.iter().all(|&i| other.iter().all(|&j| adjacent[i][j]))
                })
            }),
        }
    }
}

struct MinorSearch<'a> {
    g: &'a Graph,
    target: Target,
    blocks: Vec<u64>,
}

impl MinorSearch<'_> {
    fn found(&self) -> bool {
        if !self.blocks.iter().all(|&b| connected(self.g, b)) {
            return false;
        }
        let mut adjacent = [[false; 6]; 6];
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                let t = touches(self.g, self.blocks[i], self.blocks[j]);
                adjacent[i][j] = t;
                adjacent[j][i] = t;
            }
        }
        self.target.quotient_matches(&adjacent)
    }

    fn assign(&mut self, v: usize) -> bool {
        let k = self.target.blocks();
        let n = self.g.n();
        if self.blocks.len() + (n - v) < k {
            return false;
        }
        if v == n {
            return self.found();
        }
        // delete v
        if self.assign(v + 1) {
            return true;
        }
        for i in 0..self.blocks.len() {
            self.blocks[i] |= 1 << v;
            let hit = self.assign(v + 1);
            self.blocks[i] &= !(1 << v);
            if hit {
                return true;
            }
        }
        if self.blocks.len() < k {
            self.blocks.push(1 << v);
            let hit = self.assign(v + 1);
            self.blocks.pop();
            if hit {
                return true;
            }
        }
        false
    }
}

fn has_minor(g: &Graph, target: Target) -> bool {
    MinorSearch { g, target, blocks: Vec::with_capacity(6) }.assign(0)
}

/// Whether `g` is planar, i.e. has neither a K5 nor a K3,3 minor.
pub fn is_planar_small(g: &Graph) -> Result<bool> {
    limits::check("planarity", g.n(), limits::PLANAR_LIMIT)?;
    let n = g.n();
    if n <= 4 {
        return Ok(true);
    }
    if g.m() > 3 * n - 6 {
        return Ok(false);
    }
    Ok(!has_minor(g, Target::K5) && !has_minor(g, Target::K33))
}
