use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("cartesian product needs two nonempty factors")]
    EmptyFactor,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("{what} needs at least {min} vertices, graph has {n}")]
    TooFewVertices { what: &'static str, min: usize, n: usize },

    #[error("{what} needs at least one edge")]
    Edgeless { what: &'static str },

    #[error("{what}: n = {n} exceeds the size ceiling {limit} (override with SPECBOUNDS_MAX_N)")]
    SizeLimit { what: &'static str, n: usize, limit: usize },

    #[error("eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("eigenpair residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("cells do not partition the vertex set: {0}")]
    NotAPartition(String),

    #[error(
        "partition is not equitable: vertices {u} and {v} of cell {cell} have {count_u} and {count_v} \
         neighbours in cell {target}"
    )]
    NotEquitable { cell: usize, target: usize, u: usize, v: usize, count_u: usize, count_v: usize },

    #[error("divisor matrix of dimension {0} is not supported (at most 8)")]
    UnsupportedDimension(usize),

    #[error("witness has an empty side")]
    EmptySide,

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("Nikiforov bound needs r >= 2, got {0}")]
    InvalidR(u32),

    #[error("graph contains K_{clique} (clique number {omega}), so it is not K_{clique}-free")]
    ContainsClique { omega: usize, clique: u32 },

    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Error> },

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
