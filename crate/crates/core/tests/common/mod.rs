//! Naive reference implementations shared by the integration tests. Every
//! oracle works from the raw edge list and tries all candidates.
#![allow(dead_code)]

use num_rational::Ratio;
use specbounds::Graph;

pub const UPTO7: &str = include_str!("../data/graphs_upto7.g6");
pub const CONNECTED5: &str = include_str!("../data/connected5.g6");

pub fn corpus(text: &str) -> Vec<Graph> {
    text.lines().map(|l| Graph::parse_graph6(l).expect("fixture line")).collect()
}

/// All graphs on at most `max_n` vertices, up to isomorphism.
pub fn upto(max_n: usize) -> Vec<Graph> {
    corpus(UPTO7).into_iter().filter(|g| g.n() <= max_n).collect()
}

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn edges_in(a: &[Vec<bool>], vs: &[usize]) -> usize {
    let mut e = 0;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            e += usize::from(a[u][v]);
        }
    }
    e
}

pub fn alpha(g: &Graph) -> usize {
    let a = matrix(g);
    (0..1u64 << g.n()).map(|s| members(s, g.n())).filter(|vs| edges_in(&a, vs) == 0).map(|vs| vs.len()).max().unwrap()
}

pub fn omega(g: &Graph) -> usize {
    let a = matrix(g);
    (0..1u64 << g.n())
        .map(|s| members(s, g.n()))
        .filter(|vs| edges_in(&a, vs) == vs.len() * vs.len().saturating_sub(1) / 2)
        .map(|vs| vs.len())
        .max()
        .unwrap()
}

/// Tries every map `V -> {0..k}` for growing `k`.
pub fn chi(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = vec![0; n];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = x % k;
                x /= k;
            }
            if g.edges().all(|(u, v)| c[u] != c[v]) {
                return k;
            }
        }
    }
    unreachable!()
}

/// η as `(e, p)` with the largest `e/√p`, over every ordered pair of
/// disjoint nonempty independent sets `(L, R)`.
pub fn eta(g: &Graph) -> (u64, u64) {
    let n = g.n();
    let a = matrix(g);
    let independent: Vec<u64> = (1..1u64 << n).filter(|&mask| edges_in(&a, &members(mask, n)) == 0).collect();
    let mut best = (0u64, 1u64);
    for &l in &independent {
        for &r in independent.iter().filter(|&&r| r & l == 0) {
            let mut e = 0;
            for u in members(l, n) {
                e += members(r, n).into_iter().filter(|&v| a[u][v]).count() as u64;
            }
            let p = (l.count_ones() * r.count_ones()) as u64;
            if e * e * best.1 > best.0 * best.0 * p {
                best = (e, p);
            }
        }
    }
    best
}

pub fn eta_f64(g: &Graph) -> f64 {
    let (e, p) = eta(g);
    e as f64 / (p as f64).sqrt()
}

/// Whether the vertices of `mask` induce a bipartite graph, by trying every
/// 2-colouring.
pub fn induces_bipartite(a: &[Vec<bool>], mask: u64) -> bool {
    let vs = members(mask, a.len());
    (0..1u64 << vs.len().saturating_sub(1)).any(|colour| {
        (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| !a[vs[i]][vs[j]] || (colour >> i & 1) != (colour >> j & 1)))
    })
}

/// Largest average degree `2e/|S|` of an induced bipartite subgraph.
pub fn iota(g: &Graph) -> Ratio<i64> {
    let a = matrix(g);
    let mut best = Ratio::from_integer(0);
    for mask in 1..1u64 << g.n() {
        let vs = members(mask, g.n());
        let e = edges_in(&a, &vs);
        let avg = Ratio::new(2 * e as i64, vs.len() as i64);
        if avg > best && induces_bipartite(&a, mask) {
            best = avg;
        }
    }
    best
}

/// ι for larger graphs: bipartiteness by BFS instead of trying colourings.
pub fn iota_bfs(g: &Graph) -> Ratio<i64> {
    let n = g.n();
    let a = matrix(g);
    let mut best = Ratio::from_integer(0);
    for mask in 1..1u64 << n {
        let vs = members(mask, n);
        let e = edges_in(&a, &vs);
        let avg = Ratio::new(2 * e as i64, vs.len() as i64);
        if avg <= best {
            continue;
        }
        let mut colour = vec![u8::MAX; n];
        let mut ok = true;
        'outer: for &start in &vs {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &v in &vs {
                    if a[u][v] {
                        if colour[v] == u8::MAX {
                            colour[v] = 1 - colour[u];
                            queue.push(v);
                        } else if colour[v] == colour[u] {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        if ok {
            best = avg;
        }
    }
    best
}

pub fn mad(g: &Graph) -> Ratio<i64> {
    let a = matrix(g);
    (1..1u64 << g.n())
        .map(|mask| {
            let vs = members(mask, g.n());
            Ratio::new(2 * edges_in(&a, &vs) as i64, vs.len() as i64)
        })
        .max()
        .unwrap_or_else(|| Ratio::from_integer(0))
}

/// Whether some vertex sequence closes an odd cycle (`v0 ... v_{2k} v0`).
pub fn has_odd_cycle(g: &Graph) -> bool {
    let a = matrix(g);
    let n = g.n();
    // odd closed walks exist iff odd cycles do; check walk parity reachability
    // by powers of the adjacency matrix.
    let mut reach = vec![vec![false; n]; n];
    for (v, row) in reach.iter_mut().enumerate() {
        row[v] = true;
    }
    for len in 1..=2 * n + 1 {
        let mut next = vec![vec![false; n]; n];
        for s in 0..n {
            for u in 0..n {
                if reach[s][u] {
                    for v in 0..n {
                        if a[u][v] {
                            next[s][v] = true;
                        }
                    }
                }
            }
        }
        reach = next;
        if len % 2 == 1 && (0..n).any(|v| reach[v][v]) {
            return true;
        }
    }
    false
}

pub fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}
