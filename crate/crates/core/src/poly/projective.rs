use serde::Serialize;

use super::PolyError;
use crate::C64;

/// Point of projective space, stored as the representative whose
/// largest-magnitude coordinate equals 1 (first such index on ties).
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ProjectivePoint {
    coords: Vec<C64>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<C64>) -> Result<Self, PolyError> {
        if coords.iter().any(|z| !z.is_finite()) {
            return Err(PolyError::NonFinite);
        }
        let (idx, max) = coords
            .iter()
            .enumerate()
            .map(|(i, z)| (i, z.norm()))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if max == 0.0 {
            return Err(PolyError::ZeroPoint);
        }
        let pivot = coords[idx];
        let mut coords: Vec<C64> = coords.iter().map(|&z| z / pivot).collect();
        coords[idx] = C64::new(1.0, 0.0);
        Ok(ProjectivePoint { coords })
    }

    pub fn from_real(coords: &[f64]) -> Result<Self, PolyError> {
        ProjectivePoint::new(coords.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn coords(&self) -> &[C64] {
        &self.coords
    }

    pub fn num_vars(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Affine coordinates `(η₁/η₀, …, η_d/η₀)` when `|η₀| ≥ floor·‖η‖`.
    pub fn affine_chart(&self, floor: f64) -> Option<Vec<C64>> {
        let h0 = self.coords[0];
        if h0.norm() < floor * self.norm() {
            return None;
        }
        Some(self.coords[1..].iter().map(|&z| z / h0).collect())
    }

    /// `1 − |⟨u, v⟩| / (‖u‖‖v‖)`, zero iff the points coincide.
    pub fn fubini_study_gap(&self, other: &ProjectivePoint) -> f64 {
        let dot: C64 = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.conj() * b)
            .sum();
        (1.0 - dot.norm() / (self.norm() * other.norm())).max(0.0)
    }
}
