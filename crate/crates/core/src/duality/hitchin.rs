use serde::Serialize;

use super::DualityError;
use crate::higgs::characteristic_polynomial;
use crate::matkernel::{determinant, Matrix};
use crate::poly::{interpolate_homogeneous_with, InterpolationOptions, MultiPoly, UniPoly};
use crate::C64;

/// The curve case `d = 1`: the dual of `det(ξ¹·Φ + ξ⁰) = 0` is
/// `det(η₁·I − η₀·Φ) = 0`, which in the chart `η₀ = 1, η₁ = w` is the
/// characteristic polynomial of `Φ`.
#[derive(Debug, Clone, Serialize)]
pub struct HitchinReport {
    pub dual_curve: MultiPoly,
    /// `dual_curve` at `η₀ = 1`, as a polynomial in `w = η₁`.
    pub dehomogenized: UniPoly,
    /// `det(w·I − Φ)` computed directly.
    pub characteristic: UniPoly,
    pub max_deviation: f64,
}

pub fn hitchin_check(phi: &Matrix) -> Result<HitchinReport, DualityError> {
    let n = phi
        .require_square("hitchin_check")
        .map_err(crate::higgs::HiggsError::from)?;
    let bound = (1.0 + phi.frobenius_norm()).powi(n as i32);
    let opts = InterpolationOptions {
        value_floor: 1e-6 * bound,
        ..InterpolationOptions::default()
    };
    let dual_curve = interpolate_homogeneous_with(
        2,
        n as u32,
        |eta: &[C64]| determinant(&phi.scale(-eta[0]).shift(eta[1])).expect("square"),
        &opts,
    )?;
    let dehomogenized = UniPoly::new(
        (0..=n as u32)
            .map(|k| dual_curve.coeff(&[n as u32 - k, k]))
            .collect(),
    );
    let characteristic = characteristic_polynomial(phi)?;
    let max_deviation = dehomogenized.relative_distance(&characteristic);
    Ok(HitchinReport {
        dual_curve,
        dehomogenized,
        characteristic,
        max_deviation,
    })
}
