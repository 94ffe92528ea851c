use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameter tuple has a negative entry: {0}")]
    NegativeParameter(String),

    #[error("eigenvalue multiplicities are not positive integers for {0}")]
    BadMultiplicity(String),

    #[error("subconstituent N_{distance}({vertex}) is empty")]
    EmptySubconstituent { vertex: usize, distance: usize },

    #[error("vertex {vertex} has eccentricity {eccentricity}, expected 2")]
    Eccentricity { vertex: usize, eccentricity: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("vector is not an eigenvector of the quotient matrix")]
    NotEigenvector,

    #[error("point {0} lies in no block")]
    PointInNoBlock(usize),

    #[error("design would have no blocks")]
    EmptyDesign,

    #[error("design is not quasi-symmetric (intersection sizes {0:?})")]
    NotQuasiSymmetric(Vec<usize>),

    #[error("inner product of vectors {0} and {1} is not an integer")]
    NonIntegral(usize, usize),

    #[error("inner product with a0 is odd for vector {0}")]
    OddInnerProduct(usize),

    #[error("vertex {vertex} label {label:?} does not describe a vector of the expected kind")]
    LabelMismatch { vertex: usize, label: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("edge {0}-{1} is covered {2} times by the clique family")]
    EdgeCover(usize, usize, usize),

    #[error("clique {0} is invalid: {1}")]
    BadClique(usize, String),

    #[error("rank must be positive")]
    ZeroRank,

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("integer overflow in exact computation")]
    Overflow,

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
