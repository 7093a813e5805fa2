//! Polynomials over C.
//!
//! [`MultiPoly`] is a sparse homogeneous polynomial in a fixed number of
//! variables, stored in graded-lex order. [`UniPoly`] is a dense
//! univariate polynomial (constant term first). Homogeneous polynomials
//! known only through an evaluation oracle are recovered with
//! [`interpolate_homogeneous`].

mod interp;
mod multi;
mod projective;
mod uni;

pub use interp::{
    interpolate_homogeneous, interpolate_homogeneous_with, interpolation_nodes, InterpolationOptions,
};
pub use multi::{all_monomials, monomial_count, Monomial, MultiPoly, PRUNE_REL};
pub use projective::ProjectivePoint;
pub use uni::{discriminant, uni_roots, UniPoly};

use thiserror::Error;

use crate::matkernel::MatrixError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("line direction is zero")]
    ZeroDirection,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("{op} requires degree >= {required}, got {degree}")]
    DegreeTooLow {
        op: &'static str,
        degree: usize,
        required: usize,
    },
    #[error("monomial {exponents:?} has degree {got}, polynomial degree is {expected}")]
    NotHomogeneous {
        exponents: Vec<u32>,
        expected: u32,
        got: u32,
    },
    #[error("interpolation system is singular (condition estimate {condition:e})")]
    SingularInterpolation { condition: f64 },
    #[error("oracle is inconsistent with a homogeneous polynomial of degree {degree}: held-out residual {residual:e} exceeds {tol:e}")]
    InconsistentOracle { degree: u32, residual: f64, tol: f64 },
    #[error("non-finite value encountered")]
    NonFinite,
    #[error("all projective coordinates are zero")]
    ZeroPoint,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
