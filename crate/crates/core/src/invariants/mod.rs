//! Exact combinatorial invariants: α, ω, χ, θ, η, ι, mad and planarity.
//!
//! All argmax decisions are made in integer or rational arithmetic, so ties
//! resolve deterministically (first optimum in search order wins).

mod bipartite;
mod coloring;
mod independence;
mod mad;
mod planar;

use serde::Serialize;

use crate::exact::{serialize_rational, Rational};
use crate::graph::{Graph, VertexSet};
use crate::Result;

pub use bipartite::{enumerate_induced_bipartite, eta, iota, BipartiteWitness, Eta, InducedBipartite, RationalWitness};
pub use coloring::{chromatic_number, colour_class, is_proper_colouring, k_colouring};
pub use independence::{clique_number, independence_number, maximum_clique};
pub use mad::mad;
pub use planar::is_planar_small;

/// θ(G) = min(n/2, α(G)).
pub fn theta(g: &Graph) -> Result<Rational> {
    let (alpha, _) = independence_number(g)?;
    Ok(theta_from(g.n(), alpha))
}

pub(crate) fn theta_from(n: usize, alpha: usize) -> Rational {
    Rational::new(n as i64, 2).min(Rational::from_integer(alpha as i64))
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub alpha_witness: VertexSet,
    pub omega: usize,
    pub omega_witness: VertexSet,
    pub chi: usize,
    pub colouring: Vec<usize>,
    #[serde(serialize_with = "serialize_rational")]
    pub theta: Rational,
    pub eta: Eta,
    pub iota: RationalWitness<BipartiteWitness>,
    pub mad: RationalWitness<VertexSet>,
}

/// Every invariant of `g` (needs `n >= 2`).
pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    let (alpha, alpha_witness) = independence_number(g)?;
    let (omega, omega_witness) = maximum_clique(g)?;
    let (chi, colouring) = chromatic_number(g)?;
    Ok(InvariantReport {
        n: g.n(),
        m: g.m(),
        alpha,
        alpha_witness,
        omega,
        omega_witness,
        chi,
        colouring,
        theta: theta_from(g.n(), alpha),
        eta: eta(g)?,
        iota: iota(g)?,
        mad: mad(g)?,
    })
}
