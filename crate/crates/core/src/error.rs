use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("cannot mix exact and float matrices")]
    ModeMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("basis is not closed: [g{i}, g{j}] leaves the span")]
    NotClosed { i: usize, j: usize },
    #[error("generators are linearly dependent (rank {rank} < {count})")]
    LinearlyDependent { rank: usize, count: usize },
    #[error("Killing form is degenerate")]
    DegenerateForm,
    #[error("J is not a quaternionic structure (J J* != -I)")]
    NotQuaternionicStructure,
    #[error("matrix is singular")]
    Singular,
    #[error("operation requires a {expected} basis")]
    RealizationMismatch { expected: &'static str },
    #[error("Clifford relation violated for generators {i}, {j}")]
    CliffordViolation { i: usize, j: usize },
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
