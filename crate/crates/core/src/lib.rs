//! Exact construction and verification of the quaternionic orthogonal
//! algebras so*(2n) and their low-dimensional isomorphisms.

pub mod clifford;
pub mod error;
pub mod hmatrix;
pub mod isogeny;
pub mod liealg;
pub mod linalg;
pub mod matrix;
pub mod quaternion;
pub mod report;
pub mod scalar;
pub mod triality;

pub use error::{Error, Result};
pub use matrix::{CMatrix, ExactMatrix, FloatMatrix, HMatrix, Matrix, Mode};
pub use quaternion::Quaternion;
pub use scalar::{ExactComplex, ExactScalar};

/// Default entry-wise tolerance for float comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
