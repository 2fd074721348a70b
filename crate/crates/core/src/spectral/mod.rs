//! Adjacency spectra, Rayleigh-quotient witnesses, divisor matrices of
//! equitable partitions and interlacing checks.

mod jacobi;
mod poly;

use serde::{Serialize, Serializer};

use crate::exact::{serialize_rational, Rational};
use crate::graph::{Graph, VertexSet};
use crate::invariants::BipartiteWitness;
use crate::{Error, Result};

/// Adjacency eigenvalues sorted descending, with the solver's worst residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub residual: f64,
}

impl Spectrum {
    /// λ_1, the largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// λ_n, the smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }
}

/// Serializes as the sorted array of eigenvalues.
impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.eigenvalues.serialize(s)
    }
}

/// Eigenvalues of a dense real symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Spectrum> {
    if matrix.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let eigen = jacobi::jacobi_eigen(matrix)?;
    let residual = jacobi::max_residual(matrix, &eigen);
    let mut eigenvalues = eigen.values;
    eigenvalues.sort_by(|a, b| b.total_cmp(a));
    let tolerance = 1e-9 * eigenvalues[0].abs().max(1.0);
    if residual > tolerance {
        return Err(Error::Residual { residual, tolerance });
    }
    Ok(Spectrum { eigenvalues, residual })
}

/// All adjacency eigenvalues of `g`, sorted descending.
pub fn eigenvalues_sym(g: &Graph) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    symmetric_eigenvalues(&g.adjacency_matrix())
}

/// Smallest adjacency eigenvalue λ(G).
pub fn lambda_min(g: &Graph) -> Result<f64> {
    eigenvalues_sym(g).map(|s| s.smallest())
}

/// Test vector that is `1/√|V1|` on `V1`, `-1/√|V2|` on `V2` and zero elsewhere.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessVector {
    pub entries: Vec<f64>,
    /// Rayleigh quotient `xᵀAx / xᵀx`.
    pub value: f64,
    /// `xᵀx`, summed exactly.
    #[serde(serialize_with = "serialize_rational")]
    pub norm_squared: Rational,
    pub lambda_min: f64,
}

/// Builds the Rayleigh test vector of `w` in `g` and evaluates its quotient.
///
/// The quotient must reproduce `-e/√(|V1||V2|)` to `1e-12` relative and sit at
/// or above λ(G) (within `1e-9`).
pub fn rayleigh_witness(g: &Graph, w: &BipartiteWitness) -> Result<WitnessVector> {
    let (left, right) = (w.bipartition.left, w.bipartition.right);
    if left.is_empty() || right.is_empty() {
        return Err(Error::EmptySide);
    }
    w.validate(g)?;

    let (a, b) = (left.len(), right.len());
    let mut entries = vec![0.0; g.n()];
    let mut norm_squared = Rational::from_integer(0);
    for v in left.iter() {
        entries[v] = 1.0 / (a as f64).sqrt();
        norm_squared += Rational::new(1, a as i64);
    }
    for v in right.iter() {
        entries[v] = -1.0 / (b as f64).sqrt();
        norm_squared += Rational::new(1, b as i64);
    }
    let quadratic: f64 = g.edges().map(|(u, v)| 2.0 * entries[u] * entries[v]).sum();
    let norm: f64 = entries.iter().map(|x| x * x).sum();
    let value = quadratic / norm;

    let expected = -(w.edges as f64) / ((a * b) as f64).sqrt();
    if (value - expected).abs() > (1e-12 * expected.abs()).max(1e-15) {
        return Err(Error::InvalidWitness(format!("Rayleigh quotient {value} differs from -e/sqrt(p) = {expected}")));
    }
    let lambda_min = lambda_min(g)?;
    if value < lambda_min - 1e-9 {
        return Err(Error::InvalidWitness(format!(
            "Rayleigh quotient {value} lies below the smallest eigenvalue {lambda_min}"
        )));
    }
    Ok(WitnessVector { entries, value, norm_squared, lambda_min })
}

/// An equitable partition with its divisor (quotient) matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquitablePartition {
    pub cells: Vec<VertexSet>,
    /// `divisor[i][j]` = neighbours in cell `j` of any vertex of cell `i`.
    pub divisor: Vec<Vec<usize>>,
}

impl EquitablePartition {
    /// Checks that `cells` partition `V(g)` and that neighbour counts are
    /// constant on every cell.
    pub fn new(g: &Graph, cells: &[VertexSet]) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, &cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::NotAPartition(format!("cell {i} is empty")));
            }
            if let Some(v) = cell.difference(g.vertices()).first() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if !cell.is_disjoint(seen) {
                return Err(Error::NotAPartition(format!("cell {i} overlaps an earlier cell")));
            }
            seen = seen.union(cell);
        }
        if let Some(v) = g.vertices().difference(seen).first() {
            return Err(Error::NotAPartition(format!("vertex {v} is in no cell")));
        }

        let count = |v: usize, cell: VertexSet| g.neighbors(v).intersection(cell).len();
        let mut divisor = vec![vec![0; cells.len()]; cells.len()];
        for (i, &cell) in cells.iter().enumerate() {
            let u = cell.first().expect("nonempty cell");
            for (j, &target) in cells.iter().enumerate() {
                let count_u = count(u, target);
                if let Some(v) = cell.iter().find(|&v| count(v, target) != count_u) {
                    return Err(Error::NotEquitable { cell: i, target: j, u, v, count_u, count_v: count(v, target) });
                }
                divisor[i][j] = count_u;
            }
        }
        Ok(EquitablePartition { cells: cells.to_vec(), divisor })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DivisorSpectrum {
    pub partition: EquitablePartition,
    /// Divisor-matrix eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
}

impl DivisorSpectrum {
    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty partition")
    }
}

/// Largest divisor matrix accepted by [`divisor_spectrum`].
pub const MAX_DIVISOR_DIM: usize = 8;

/// Divisor matrix of the equitable partition `cells` and its eigenvalues,
/// found as the real roots of its characteristic polynomial.
pub fn divisor_spectrum(g: &Graph, cells: &[VertexSet]) -> Result<DivisorSpectrum> {
    if cells.len() > MAX_DIVISOR_DIM {
        return Err(Error::UnsupportedDimension(cells.len()));
    }
    let partition = EquitablePartition::new(g, cells)?;
    let matrix: Vec<Vec<i64>> = partition.divisor.iter().map(|row| row.iter().map(|&x| x as i64).collect()).collect();
    let mut eigenvalues = poly::Poly::characteristic(&matrix).real_roots();
    eigenvalues.reverse();
    Ok(DivisorSpectrum { partition, eigenvalues })
}

/// Coefficients of `det(xI - M)`, constant term first.
pub fn characteristic_polynomial(matrix: &[Vec<i64>]) -> Vec<num_rational::BigRational> {
    poly::Poly::characteristic(matrix).coeffs().to_vec()
}

/// λ(G) against λ(G[S]).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InterlaceReport {
    pub host: f64,
    pub induced: f64,
    /// `host <= induced + 1e-9`.
    pub holds: bool,
}

pub fn interlace_check(g: &Graph, s: VertexSet) -> Result<InterlaceReport> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let sub = g.induced_subgraph(s)?;
    let host = lambda_min(g)?;
    let induced = lambda_min(&sub.graph)?;
    Ok(InterlaceReport { host, induced, holds: host <= induced + 1e-9 })
}
