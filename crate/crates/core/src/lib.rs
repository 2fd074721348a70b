//! Smallest adjacency eigenvalue of small simple graphs, together with the
//! combinatorial upper bounds built from induced bipartite subgraphs.
//!
//! The crate is split along the computation pipeline:
//!
//! - [`graph`]: bitset graphs, graph6 I/O, products, joins and the graph families
//!   used by the sharpness checks.
//! - [`spectral`]: dense Jacobi eigensolver, Rayleigh witnesses, divisor matrices
//!   of equitable partitions and interlacing checks.
//! - [`invariants`]: exact α, ω, χ, θ, η, ι, mad and a small planarity certifier.
//! - [`bounds`]: every upper bound evaluated exactly, plus Nikiforov's bound and
//!   the comparison inequality.
//! - [`harness`]: batch corpus runner and the sharpness/comparison claim suite.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod limits;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Bipartition, FamilySpec, Graph, VertexSet};
