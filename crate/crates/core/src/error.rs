use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("determinant size {size} exceeds the configured limit {limit}")]
    DeterminantLimit { size: usize, limit: usize },

    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSize { k: usize, rows: usize, cols: usize },

    #[error("evaluation point has {got} coordinates but the ring has {want} variables")]
    PointLength { got: usize, want: usize },

    #[error("directed part has a cycle: {0}")]
    Cycle(String),

    #[error("vertex sets overlap: {0}")]
    Overlap(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },

    #[error("unsupported graph class: {0}")]
    UnsupportedGraph(String),

    #[error("resource limit exceeded in {what}: {detail}")]
    ResourceLimit { what: String, detail: String },

    #[error("invalid input: {0}")]
    Invalid(String),
}
