//! Dense complex linear algebra: the matrix type, LU with partial pivoting
//! and a complex Schur decomposition (Hessenberg reduction followed by
//! shifted QR with deflation).

mod lu;
mod matrix;
mod schur;

pub use lu::{determinant, LuFactors};
pub use matrix::{commutator_norm, Matrix};

/// Inverse via LU with partial pivoting.
pub fn inverse(a: &Matrix) -> Result<Matrix, MatrixError> {
    LuFactors::new(a)?.inverse()
}
pub use schur::{
    canonical_cmp, canonical_sort, eigenvalues, hessenberg, schur, schur_default, SchurDecomposition, DEFAULT_MAX_ITER,
    DEFAULT_SCHUR_TOL,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix data has {got} entries, expected {expected}")]
    DataLength { expected: usize, got: usize },
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyShape { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("Schur iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },
    #[error("matrix is singular to working precision")]
    Singular,
}
