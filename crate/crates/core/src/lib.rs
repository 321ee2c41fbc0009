//! Exact computations with cyclic multilinear forms, the Pinczon bracket,
//! coderivation brackets and the cohomology of quadratic associative,
//! commutative, Lie and pre-Lie algebras over the rationals.

pub mod bilinear;
pub mod bisym;
pub mod builtins;
pub mod cli;
pub mod cochain;
pub mod coderiv;
pub mod coefficient;
pub mod cohomology;
pub mod error;
pub mod forms;
pub mod graded;
pub mod linalg;
pub mod scalar;
pub mod structures;

pub use error::{Error, Result};
pub use scalar::Scalar;
