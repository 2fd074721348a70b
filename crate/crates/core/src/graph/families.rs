use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Graph;
use crate::{Error, Result};

/// The graph families used by the sharpness and comparison checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    /// `k` parts of `t` vertices each.
    CompleteMultipartite {
        k: usize,
        t: usize,
    },
    /// Circulant `d`-regular bipartite graph on `2t` vertices.
    RegularBipartite {
        d: usize,
        t: usize,
    },
    /// `2K_s` joined with `2K_s`.
    JoinFamilyH {
        s: usize,
    },
    Grid {
        a: usize,
        b: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidFamily(msg));
        match *self {
            FamilySpec::Complete { n } | FamilySpec::Path { n } if n == 0 => bad(format!("{self}: n must be positive")),
            FamilySpec::Cycle { n } if n < 3 => bad(format!("{self}: a cycle needs n >= 3")),
            FamilySpec::CompleteMultipartite { k, t } if k == 0 || t == 0 => {
                bad(format!("{self}: parameters must be positive"))
            }
            FamilySpec::RegularBipartite { d, t } if d == 0 || d > t => bad(format!("{self}: requires 1 <= d <= t")),
            FamilySpec::JoinFamilyH { s: 0 } => bad(format!("{self}: s must be positive")),
            FamilySpec::Grid { a, b } if a == 0 || b == 0 => bad(format!("{self}: parameters must be positive")),
            _ => Ok(()),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            FamilySpec::Complete { n } => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
            FamilySpec::Cycle { n } => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            FamilySpec::CompleteMultipartite { k, t } => Graph::from_edges(
                k * t,
                (0..k * t).flat_map(|u| (u + 1..k * t).filter(move |v| u / t != v / t).map(move |v| (u, v))),
            ),
            FamilySpec::RegularBipartite { d, t } => {
                Graph::from_edges(2 * t, (0..t).flat_map(|i| (0..d).map(move |j| (i, t + (i + j) % t))))
            }
            FamilySpec::JoinFamilyH { s } => {
                let ks = FamilySpec::Complete { n: s }.generate()?;
                let two = ks.disjoint_union(&ks)?;
                two.join(&two)
            }
            FamilySpec::Grid { a, b } => {
                let label = |i: usize, j: usize| i * b + j;
                let mut edges = Vec::new();
                for i in 0..a {
                    for j in 0..b {
                        if i + 1 < a {
                            edges.push((label(i, j), label(i + 1, j)));
                        }
                        if j + 1 < b {
                            edges.push((label(i, j), label(i, j + 1)));
                        }
                    }
                }
                Graph::from_edges(a * b, edges)
            }
        }
    }

    /// Planar by construction.
    pub fn is_planar_by_construction(&self) -> bool {
        match *self {
            FamilySpec::Cycle { .. } | FamilySpec::Path { .. } | FamilySpec::Grid { .. } => true,
            FamilySpec::Complete { n } => n <= 4,
            _ => false,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::CompleteMultipartite { k, t } => write!(f, "multipartite:{k},{t}"),
            FamilySpec::RegularBipartite { d, t } => write!(f, "regular-bipartite:{d},{t}"),
            FamilySpec::JoinFamilyH { s } => write!(f, "join-h:{s}"),
            FamilySpec::Grid { a, b } => write!(f, "grid:{a},{b}"),
        }
    }
}

/// Parses `name:p1[,p2]`, e.g. `multipartite:3,2` or `join-h:4`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || {
            Error::InvalidFamily(format!(
                "`{s}`: expected complete:N, cycle:N, path:N, multipartite:K,T, \
                 regular-bipartite:D,T, join-h:S or grid:A,B"
            ))
        };
        let (name, params) = s.trim().split_once(':').ok_or_else(err)?;
        let params = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        let spec = match (name.to_ascii_lowercase().as_str(), params.as_slice()) {
            ("complete", &[n]) => FamilySpec::Complete { n },
            ("cycle", &[n]) => FamilySpec::Cycle { n },
            ("path", &[n]) => FamilySpec::Path { n },
            ("multipartite", &[k, t]) => FamilySpec::CompleteMultipartite { k, t },
            ("regular-bipartite", &[d, t]) => FamilySpec::RegularBipartite { d, t },
            ("join-h", &[s]) => FamilySpec::JoinFamilyH { s },
            ("grid", &[a, b]) => FamilySpec::Grid { a, b },
            _ => return Err(err()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid edge list")
}
