//! Projective duality between the pencil hypersurface and the spectral
//! cover.
//!
//! A hyperplane `Σ α_i ξ^i = 0` in `P(V)` is dual to the point `[α]` in
//! `P(V*)`. For a hypersurface `{F = 0}` the dual is swept out by the Gauss
//! map `ξ ↦ [∇F(ξ)]`. When `F` is the pencil determinant of a commuting
//! tuple, `F` factors into the linear forms `ξ⁰ + Σ_j w^a_j ξʲ` and every
//! smooth point maps to one of the spectral points `[1 : w^a]`;
//! [`verify_dual_cover`] checks exactly that by sampling.

mod gauss;
mod hitchin;
mod verify;

pub use gauss::{
    gauss_map, gauss_map_with, sample_hypersurface, sample_hypersurface_with, GaussOptions, SampleSet,
    DEFAULT_ON_SURFACE_TOL, DEFAULT_SMOOTH_TOL, ROOT_SEPARATION_REL,
};
pub use hitchin::{hitchin_check, HitchinReport};
pub use verify::{
    chart_distance, verify_dual_cover, verify_dual_cover_with, DualityReport, UnmatchedSample,
    Verdict, VerifyOptions, CHART_FLOOR, DEFAULT_MATCH_TOL,
};

use serde::Serialize;
use thiserror::Error;

use crate::higgs::{HiggsError, JointSpectrum};
use crate::poly::{PolyError, ProjectivePoint};
use crate::C64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DualityError {
    #[error("point is not on the hypersurface: |F| = {value:e} exceeds {threshold:e}")]
    NotOnHypersurface { value: f64, threshold: f64 },
    #[error("singular point: gradient norm {gradient_norm:e} below {threshold:e}")]
    SingularPoint { gradient_norm: f64, threshold: f64 },
    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Higgs(#[from] HiggsError),
}

/// Hyperplane `Σ α_i ξ^i = 0`, coefficients canonically scaled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hyperplane {
    alpha: ProjectivePoint,
}

impl Hyperplane {
    pub fn new(alpha: Vec<C64>) -> Result<Self, DualityError> {
        Ok(Hyperplane {
            alpha: ProjectivePoint::new(alpha)?,
        })
    }

    pub fn from_real(alpha: &[f64]) -> Result<Self, DualityError> {
        Hyperplane::new(alpha.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn alpha(&self) -> &[C64] {
        self.alpha.coords()
    }

    pub fn num_vars(&self) -> usize {
        self.alpha.num_vars()
    }
}

/// The point `[α₀ : … : α_d]` of the dual space.
pub fn dual_point(hp: &Hyperplane) -> ProjectivePoint {
    hp.alpha.clone()
}

/// `Σ α_i η_i`.
pub fn pairing(hp: &Hyperplane, pt: &ProjectivePoint) -> Result<C64, DualityError> {
    if hp.num_vars() != pt.num_vars() {
        return Err(DualityError::LengthMismatch {
            expected: hp.num_vars(),
            got: pt.num_vars(),
        });
    }
    Ok(hp.alpha().iter().zip(pt.coords()).map(|(a, b)| a * b).sum())
}

/// `|Σ α_i η_i| ≤ tol · ‖α‖ · ‖η‖`.
pub fn incidence(hp: &Hyperplane, pt: &ProjectivePoint, tol: f64) -> Result<bool, DualityError> {
    let s = pairing(hp, pt)?;
    Ok(s.norm() <= tol * hp.alpha.norm() * pt.norm())
}

/// The hyperplanes `ξ⁰ + Σ_j w^a_j ξʲ = 0` whose union (with multiplicity)
/// is the pencil hypersurface; their dual points are `[1 : w^a]`.
pub fn linear_factorization(spectrum: &JointSpectrum) -> Result<Vec<(Hyperplane, usize)>, DualityError> {
    spectrum
        .points
        .iter()
        .map(|p| {
            let mut alpha = vec![C64::new(1.0, 0.0)];
            alpha.extend_from_slice(&p.w);
            Ok((Hyperplane::new(alpha)?, p.multiplicity))
        })
        .collect()
}
