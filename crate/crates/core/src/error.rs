use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("vector is not homogeneous")]
    NotHomogeneous,

    #[error("bilinear form is degenerate; kernel vector {kernel:?}")]
    Degenerate { kernel: Vec<String> },

    #[error("invalid bilinear form: {0}")]
    InvalidForm(String),

    #[error("form is not cyclic: {0}")]
    NotCyclic(String),

    #[error("map or form is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("not vanishing on shuffle products: {0}")]
    NotVsp(String),

    #[error("invalid algebra structure: {0}")]
    InvalidStructure(String),

    #[error("module axiom fails: {0}")]
    ModuleAxiom(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
