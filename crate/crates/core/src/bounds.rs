//! Upper bounds on λ(G), all carried as exact values.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use serde::Serialize;

use crate::exact::{ExactValue, Rational};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number, clique_number, eta, independence_number, iota, is_planar_small, theta_from, BipartiteWitness,
};
use crate::{limits, spectral, Error, Result};

/// Float slack on the λ side of bound comparisons.
pub const CHAIN_TOLERANCE: f64 = 1e-8;

fn big(x: usize) -> BigInt {
    BigInt::from(x)
}

fn big_rational(q: Rational) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

fn require_edges(g: &Graph, what: &'static str) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::Edgeless { what });
    }
    Ok(())
}

/// `-|E(H)| / √(|V1||V2|)` for one induced bipartite witness.
pub fn bound_witness(w: &BipartiteWitness) -> Result<ExactValue> {
    if w.bipartition.left.is_empty() || w.bipartition.right.is_empty() {
        return Err(Error::EmptySide);
    }
    Ok(ExactValue::neg_sqrt_ratio(w.ratio()))
}

/// `-η(G)`.
pub fn bound_eta(g: &Graph) -> Result<ExactValue> {
    Ok(ExactValue::neg_sqrt_ratio(eta(g)?.value))
}

/// `-ι(G)`.
pub fn bound_iota(g: &Graph) -> Result<ExactValue> {
    Ok(ExactValue::from_small(-iota(g)?.value))
}

pub(crate) fn explicit_value(m: usize, chi: usize, theta: Rational) -> BigRational {
    let pairs = big(chi * (chi - 1) / 2);
    -BigRational::from_integer(big(m)) / (BigRational::from_integer(pairs) * big_rational(theta))
}

/// `-m / (C(χ, 2) θ(G))`.
pub fn bound_explicit(g: &Graph) -> Result<ExactValue> {
    require_edges(g, "the chromatic/independence bound")?;
    let (chi, _) = chromatic_number(g)?;
    let (alpha, _) = independence_number(g)?;
    Ok(ExactValue::Rational(explicit_value(g.m(), chi, theta_from(g.n(), alpha))))
}

pub(crate) fn nikiforov_value(n: usize, m: usize, r: u32) -> BigRational {
    let num = BigInt::from(2u32).pow(r + 1) * big(m).pow(r);
    let den = BigInt::from(r) * big(n).pow(2 * r - 1);
    -BigRational::new(num, den)
}

/// Nikiforov's bound `-2^{r+1} m^r / (r n^{2r-1})` for a `K_{r+1}`-free graph.
pub fn bound_nikiforov(g: &Graph, r: u32) -> Result<ExactValue> {
    if r < 2 {
        return Err(Error::InvalidR(r));
    }
    require_edges(g, "Nikiforov's bound")?;
    let omega = clique_number(g)?;
    if omega > r as usize {
        return Err(Error::ContainsClique { omega, clique: r + 1 });
    }
    Ok(ExactValue::Rational(nikiforov_value(g.n(), g.m(), r)))
}

/// `n^{2r-1} >= (r-1) θ 2^r m^{r-1}`, with θ's denominator cleared.
pub fn density_inequality(n: usize, m: usize, theta: Rational, r: u32) -> bool {
    let lhs = BigInt::from(*theta.denom()) * big(n).pow(2 * r - 1);
    let rhs = BigInt::from(r - 1) * BigInt::from(*theta.numer()) * BigInt::from(2u32).pow(r) * big(m).pow(r - 1);
    lhs >= rhs
}

/// Turán's edge bound `m <= (1 - 1/r) n² / 2` for a `K_{r+1}`-free graph.
pub fn turan_edge_check(g: &Graph, r: u32) -> Result<bool> {
    if r == 0 {
        return Err(Error::InvalidR(r));
    }
    let omega = if g.n() == 0 { 0 } else { clique_number(g)? };
    if omega > r as usize {
        return Err(Error::ContainsClique { omega, clique: r + 1 });
    }
    let (n, m, r) = (g.n() as u128, g.m() as u128, r as u128);
    Ok(2 * r * m <= (r - 1) * n * n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComparisonCase {
    /// χ ∈ {2, 3}, r = χ.
    ChromaticTwoOrThree,
    /// Planar, r = 4.
    Planar,
}

/// Whether the chromatic/independence bound is at least as strong as Nikiforov's.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub case: Option<ComparisonCase>,
    pub r: Option<u32>,
    /// `bound_explicit <= bound_nikiforov(r)`.
    pub headline_ok: Option<bool>,
    pub density_inequality_ok: Option<bool>,
}

impl ComparisonReport {
    pub fn applicable(&self) -> bool {
        self.case.is_some()
    }

    /// Both inequalities hold; `None` when the comparison does not apply.
    pub fn ok(&self) -> Option<bool> {
        self.case.map(|_| self.headline_ok == Some(true) && self.density_inequality_ok == Some(true))
    }

    fn inapplicable() -> Self {
        ComparisonReport { case: None, r: None, headline_ok: None, density_inequality_ok: None }
    }
}

fn compare(g: &Graph, chi: usize, theta: Rational, planar: Option<bool>) -> ComparisonReport {
    let (case, r) = match chi {
        2 | 3 => (ComparisonCase::ChromaticTwoOrThree, chi as u32),
        _ if planar == Some(true) => (ComparisonCase::Planar, 4),
        _ => return ComparisonReport::inapplicable(),
    };
    let explicit = explicit_value(g.m(), chi, theta);
    let nikiforov = nikiforov_value(g.n(), g.m(), r);
    ComparisonReport {
        case: Some(case),
        r: Some(r),
        headline_ok: Some(explicit <= nikiforov),
        density_inequality_ok: Some(density_inequality(g.n(), g.m(), theta, r)),
    }
}

/// Comparison with planarity decided by [`is_planar_small`] when `n` is within
/// its ceiling (larger graphs only qualify through χ ∈ {2, 3}).
pub fn comparison_check(g: &Graph) -> Result<ComparisonReport> {
    comparison_check_with(g, None)
}

/// Comparison with an optional planarity assertion, e.g. from a generator.
pub fn comparison_check_with(g: &Graph, planar: Option<bool>) -> Result<ComparisonReport> {
    require_edges(g, "the Nikiforov comparison")?;
    let (chi, _) = chromatic_number(g)?;
    let (alpha, _) = independence_number(g)?;
    let planar = match planar {
        Some(p) => Some(p),
        None if chi > 3 && g.n() <= limits::ceiling(limits::PLANAR_LIMIT) => Some(is_planar_small(g)?),
        None => None,
    };
    Ok(compare(g, chi, theta_from(g.n(), alpha), planar))
}

#[derive(Clone, Debug, Serialize)]
pub struct NikiforovBound {
    pub r: u32,
    pub value: ExactValue,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub lambda_min: f64,
    /// `-e/√p` from the η-optimal witness, unreduced.
    pub witness_bound: ExactValue,
    pub witness: BipartiteWitness,
    pub eta_bound: ExactValue,
    pub iota_bound: ExactValue,
    pub explicit_bound: Option<ExactValue>,
    pub nikiforov: Option<NikiforovBound>,
    pub chain_ok: bool,
    pub comparison_applicable: bool,
    pub comparison_ok: Option<bool>,
    pub comparison: ComparisonReport,
    #[serde(skip)]
    pub chi: usize,
    #[serde(skip)]
    pub omega: usize,
}

/// Every bound for `g`. Nikiforov's bound uses `r = max(2, ω)` unless `r` is
/// given, and is omitted when the graph has no edges or contains `K_{r+1}`.
pub fn bound_report(g: &Graph, nikiforov_r: Option<u32>) -> Result<BoundReport> {
    bound_report_with(g, nikiforov_r, None)
}

/// As [`bound_report`], with an optional planarity assertion for the comparison.
pub fn bound_report_with(g: &Graph, nikiforov_r: Option<u32>, planar: Option<bool>) -> Result<BoundReport> {
    if let Some(r) = nikiforov_r.filter(|&r| r < 2) {
        return Err(Error::InvalidR(r));
    }
    let lambda_min = spectral::lambda_min(g)?;
    let eta = eta(g)?;
    let iota = iota(g)?;
    let (chi, _) = chromatic_number(g)?;
    let (alpha, _) = independence_number(g)?;
    let omega = clique_number(g)?;
    let theta = theta_from(g.n(), alpha);

    let witness_bound =
        ExactValue::Surd { num: -big(eta.witness.edges), radicand: BigInt::from(eta.witness.side_product().max(1)) };
    let eta_bound = ExactValue::neg_sqrt_ratio(eta.value);
    let iota_bound = ExactValue::from_small(-iota.value);
    let has_edges = g.m() > 0;
    let explicit_bound = has_edges.then(|| ExactValue::Rational(explicit_value(g.m(), chi, theta)));
    let r = nikiforov_r.unwrap_or(omega.max(2) as u32);
    let nikiforov = (has_edges && omega <= r as usize)
        .then(|| NikiforovBound { r, value: ExactValue::Rational(nikiforov_value(g.n(), g.m(), r)) });

    let chain_ok = lambda_min <= eta_bound.to_f64() + CHAIN_TOLERANCE
        && eta_bound <= iota_bound
        && explicit_bound.as_ref().is_none_or(|e| iota_bound <= *e);

    let comparison = if has_edges {
        let planar = match planar {
            Some(p) => Some(p),
            None if chi > 3 && g.n() <= limits::ceiling(limits::PLANAR_LIMIT) => Some(is_planar_small(g)?),
            None => None,
        };
        compare(g, chi, theta, planar)
    } else {
        ComparisonReport::inapplicable()
    };

    Ok(BoundReport {
        n: g.n(),
        m: g.m(),
        lambda_min,
        witness_bound,
        witness: eta.witness,
        eta_bound,
        iota_bound,
        explicit_bound,
        nikiforov,
        chain_ok,
        comparison_applicable: comparison.applicable(),
        comparison_ok: comparison.ok(),
        comparison,
        chi,
        omega,
    })
}
