use rand::Rng;
use serde::Serialize;

use super::{HiggsError, HiggsTuple};
use crate::matkernel::determinant;
use crate::poly::{all_monomials, interpolate_homogeneous_with, InterpolationOptions, MultiPoly};
use crate::seed::{disc, rng_for};
use crate::C64;

/// Below `1e-6·B`, with `B` bounding |det| on the unit torus, oracle values
/// are treated as rounding noise by the held-out consistency check.
fn options_for(bound: f64) -> InterpolationOptions {
    InterpolationOptions {
        value_floor: 1e-6 * bound,
        ..InterpolationOptions::default()
    }
}

/// `F(ξ) = det(ξ⁰·I + Σ_j ξʲ·Φ_j)`, homogeneous of degree `n` in `d + 1`
/// variables, recovered from LU determinant evaluations.
pub fn pencil_determinant(h: &HiggsTuple) -> Result<MultiPoly, HiggsError> {
    let n = h.n();
    let bound = (1.0 + h.components().iter().map(|m| m.frobenius_norm()).sum::<f64>())
        .powi(n as i32);
    let oracle = |xi: &[C64]| {
        let m = h.pencil_matrix(xi).expect("node length is d + 1");
        determinant(&m).expect("square")
    };
    Ok(interpolate_homogeneous_with(
        h.d() + 1,
        n as u32,
        oracle,
        &options_for(bound),
    )?)
}

/// Coefficients of `v ↦ det(Σ_j v_j (Φ_j − w_j·I))`, one per monomial of
/// degree `n` in `d` variables.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralResiduals {
    /// `(exponents, coefficient)` in graded-lex order, zeros included.
    pub coefficients: Vec<(Vec<u32>, C64)>,
    pub magnitudes: Vec<f64>,
    pub max_magnitude: f64,
    pub equation_count: usize,
}

pub fn spectral_residuals(h: &HiggsTuple, w: &[C64]) -> Result<SpectralResiduals, HiggsError> {
    let d = h.d();
    if w.len() != d {
        return Err(HiggsError::LengthMismatch {
            expected: d,
            got: w.len(),
        });
    }
    let n = h.n();
    let shifted: Vec<_> = h
        .components()
        .iter()
        .zip(w)
        .map(|(m, &wj)| m.shift(-wj))
        .collect();
    let bound = shifted
        .iter()
        .map(|m| m.frobenius_norm())
        .sum::<f64>()
        .powi(n as i32);
    let oracle = |v: &[C64]| {
        let m = crate::matkernel::Matrix::linear_combination(v, &shifted).expect("shapes");
        determinant(&m).expect("square")
    };
    let poly = interpolate_homogeneous_with(d, n as u32, oracle, &options_for(bound))?;
    let coefficients: Vec<(Vec<u32>, C64)> = all_monomials(d, n as u32)
        .into_iter()
        .map(|m| {
            let c = poly.coeff(m.exponents());
            (m.exponents().to_vec(), c)
        })
        .collect();
    let magnitudes: Vec<f64> = coefficients.iter().map(|(_, c)| c.norm()).collect();
    let max_magnitude = magnitudes.iter().copied().fold(0.0, f64::max);
    Ok(SpectralResiduals {
        equation_count: coefficients.len(),
        coefficients,
        magnitudes,
        max_magnitude,
    })
}

/// Radius of the disc from which reference and off-cover probe points are
/// drawn: `1 + max_j ‖Φ_j‖_F`, which bounds every joint eigenvalue.
pub fn probe_radius(h: &HiggsTuple) -> f64 {
    1.0 + h.max_component_norm()
}

/// Draws a point with each coordinate uniform in the probe disc.
pub fn random_probe_point<R: Rng + ?Sized>(h: &HiggsTuple, rng: &mut R) -> Vec<C64> {
    let r = probe_radius(h);
    (0..h.d()).map(|_| disc(rng, r)).collect()
}

/// Normalization for residual magnitudes: the largest coefficient of the
/// expansion at a seeded random reference point.
pub fn residual_scale(h: &HiggsTuple, seed: u64) -> Result<f64, HiggsError> {
    let mut rng = rng_for(seed, "residual-scale", 0);
    let w = random_probe_point(h, &mut rng);
    Ok(spectral_residuals(h, &w)?.max_magnitude)
}
