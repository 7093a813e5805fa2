//! Spectral covers over a base chart.
//!
//! A [`ChartFamily`] gives the components `Φ_j(z)` of a Higgs field as
//! polynomial matrices in the base coordinates `z¹, …, z^d`. Sweeping a
//! grid of base points yields one joint spectrum per point, i.e. one fiber
//! of the `n`-sheeted spectral cover; [`detect_ramification`] flags the
//! grid points where sheets collide.

mod family;
mod grid;
mod sheets;
mod sweep;

pub use family::{evaluate_family, BasePoly, BaseTerm, ChartFamily, PRECHECK_POINTS};
pub use grid::{AxisSpec, GridSpec};
pub use sheets::{match_sheets, SheetMatching, AMBIGUITY_TOL, EXHAUSTIVE_MAX};
pub use sweep::{
    detect_ramification, normalized_discriminant, sweep_grid, CoverSlice, FlaggedPoint,
    RamificationPoint, RamificationReport, DEFAULT_PROBES, DEFAULT_RAMIFICATION_THRESHOLD,
};

use thiserror::Error;

use crate::higgs::HiggsError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoverError {
    #[error("family needs n >= 1 and d >= 1, got n = {n}, d = {d}")]
    EmptyFamily { n: usize, d: usize },
    #[error("family has {got} components, expected d = {expected}")]
    ComponentCount { expected: usize, got: usize },
    #[error("component {component} has {got} entries, expected n*n = {expected}")]
    EntryCount {
        component: usize,
        expected: usize,
        got: usize,
    },
    #[error("component {component}, entry ({row}, {col}): monomial {exponents:?} has {got} exponents, expected {expected}")]
    ExponentLength {
        component: usize,
        row: usize,
        col: usize,
        exponents: Vec<u32>,
        expected: usize,
        got: usize,
    },
    #[error("coefficient is not finite in component {component}, entry ({row}, {col})")]
    NonFinite {
        component: usize,
        row: usize,
        col: usize,
    },
    #[error("base point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("grid has {got} axes, expected {expected}")]
    AxisCount { expected: usize, got: usize },
    #[error("grid axis {axis} is empty")]
    EmptyAxis { axis: usize },
    #[error("grid axis {axis}: {message}")]
    BadAxis { axis: usize, message: String },
    #[error("complex axes are limited to d <= 2, got d = {d}")]
    ComplexAxesTooMany { d: usize },
    #[error("probe count must be at least 1")]
    NoProbes,
    #[error("sheet sets differ in size: {left} vs {right}")]
    SheetCount { left: usize, right: usize },
    #[error("at z = {z:?}: {source}")]
    AtPoint {
        z: Vec<crate::C64>,
        #[source]
        source: HiggsError,
    },
    #[error(transparent)]
    Higgs(#[from] HiggsError),
}
