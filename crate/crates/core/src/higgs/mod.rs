//! Commuting matrix tuples (Higgs fields at a base point).
//!
//! The components `Φ_1, …, Φ_d` of a tuple pairwise commute, so a single
//! unitary brings them all to upper-triangular form. The `n` tuples of
//! matched diagonal entries form the joint spectrum, which is the fiber of
//! the spectral cover. Everything else here is a characteristic invariant
//! of the tuple: the pencil determinant, directional characteristic
//! polynomials, exterior and power traces, and the overdetermined residual
//! system whose common zeros are the joint spectrum.

mod ensemble;
mod invariants;
mod pencil;
mod spectrum;

pub use ensemble::{random_unitary, random_well_conditioned, DiagonalizableSample};
pub use invariants::{
    char_poly_direction, characteristic_polynomial, exterior_trace, power_traces,
};
pub use pencil::{
    pencil_determinant, probe_radius, random_probe_point, residual_scale, spectral_residuals,
    SpectralResiduals,
};
pub use spectrum::{joint_spectrum, JointSpectrum, SpectrumPoint, CLUSTER_REL, LEAKAGE_TOL};

use serde::Serialize;
use thiserror::Error;

use crate::matkernel::{commutator_norm, inverse, Matrix, MatrixError};
use crate::poly::PolyError;
use crate::C64;

/// Default relative commutativity tolerance.
pub const DEFAULT_COMMUTE_TOL: f64 = 1e-8;
/// Default number of re-randomizations in [`joint_spectrum`].
pub const DEFAULT_RETRIES: usize = 5;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HiggsError {
    #[error("a Higgs tuple needs at least one component")]
    Empty,
    #[error("component {index} has shape {shape:?}, expected {expected}x{expected}")]
    Shape {
        index: usize,
        shape: (usize, usize),
        expected: usize,
    },
    #[error("components do not commute: max normalized commutator {max_commutator:e} > {tol:e}")]
    NotCommuting { max_commutator: f64, tol: f64 },
    #[error("expected {expected} direction components, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exterior power {m} out of range 0..={n}")]
    OutOfRange { m: usize, n: usize },
    #[error("simultaneous triangularization not certified after {attempts} attempts (best leakage {best_residual:e})")]
    SpectrumNotCertified { attempts: usize, best_residual: f64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Outcome of a pairwise commutativity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommutingReport {
    /// `max_{i<j} ‖[Φ_i, Φ_j]‖_F / max(1, ‖Φ_i‖_F·‖Φ_j‖_F)`.
    pub max_commutator: f64,
    pub worst_pair: Option<(usize, usize)>,
    pub tol: f64,
    pub pass: bool,
}

fn check_shapes(components: &[Matrix]) -> Result<usize, HiggsError> {
    let first = components.first().ok_or(HiggsError::Empty)?;
    let n = first.rows();
    for (index, m) in components.iter().enumerate() {
        if m.shape() != (n, n) {
            return Err(HiggsError::Shape {
                index,
                shape: m.shape(),
                expected: n,
            });
        }
    }
    Ok(n)
}

pub fn check_commuting(components: &[Matrix], tol: f64) -> Result<CommutingReport, HiggsError> {
    check_shapes(components)?;
    let norms: Vec<f64> = components.iter().map(Matrix::frobenius_norm).collect();
    let mut max_commutator = 0.0;
    let mut worst_pair = None;
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            let c = commutator_norm(&components[i], &components[j])?
                / (norms[i] * norms[j]).max(1.0);
            if worst_pair.is_none() || c > max_commutator {
                max_commutator = c;
                worst_pair = Some((i, j));
            }
        }
    }
    Ok(CommutingReport {
        max_commutator,
        worst_pair,
        tol,
        pass: max_commutator <= tol,
    })
}

/// `d` pairwise-commuting `n × n` matrices.
#[derive(Debug, Clone)]
pub struct HiggsTuple {
    n: usize,
    components: Vec<Matrix>,
    certification: CommutingReport,
}

impl HiggsTuple {
    /// Validates shapes and certifies commutativity at `tol`.
    pub fn new(components: Vec<Matrix>, tol: f64) -> Result<Self, HiggsError> {
        let h = HiggsTuple::new_unchecked(components, tol)?;
        if !h.certification.pass {
            return Err(HiggsError::NotCommuting {
                max_commutator: h.certification.max_commutator,
                tol,
            });
        }
        Ok(h)
    }

    /// Shape checks only; the commutativity report is kept but not enforced.
    pub fn new_unchecked(components: Vec<Matrix>, tol: f64) -> Result<Self, HiggsError> {
        let n = check_shapes(&components)?;
        let certification = check_commuting(&components, tol)?;
        Ok(HiggsTuple {
            n,
            components,
            certification,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn certification(&self) -> &CommutingReport {
        &self.certification
    }

    pub fn is_certified(&self) -> bool {
        self.certification.pass
    }

    pub fn max_component_norm(&self) -> f64 {
        self.components
            .iter()
            .map(Matrix::frobenius_norm)
            .fold(0.0, f64::max)
    }

    /// `ι_vΦ = Σ_j v_j Φ_j`.
    pub fn contract(&self, v: &[C64]) -> Result<Matrix, HiggsError> {
        if v.len() != self.d() {
            return Err(HiggsError::LengthMismatch {
                expected: self.d(),
                got: v.len(),
            });
        }
        Ok(Matrix::linear_combination(v, &self.components)?)
    }

    /// `ξ⁰·I + Σ_j ξʲ·Φ_j`.
    pub fn pencil_matrix(&self, xi: &[C64]) -> Result<Matrix, HiggsError> {
        if xi.len() != self.d() + 1 {
            return Err(HiggsError::LengthMismatch {
                expected: self.d() + 1,
                got: xi.len(),
            });
        }
        Ok(self.contract(&xi[1..])?.shift(xi[0]))
    }

    /// Gauge transform `Φ_j ↦ g·Φ_j·g⁻¹`, re-certified at the original tolerance.
    pub fn conjugated(&self, g: &Matrix) -> Result<HiggsTuple, HiggsError> {
        let g_inv = inverse(g)?;
        let comps = self
            .components
            .iter()
            .map(|m| &(g * m) * &g_inv)
            .collect();
        HiggsTuple::new_unchecked(comps, self.certification.tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> Matrix {
        Matrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()
    }

    #[test]
    fn commuting_examples() {
        let r = check_commuting(
            &[Matrix::diag_real(&[1.0, 2.0]), Matrix::diag_real(&[3.0, 4.0])],
            1e-8,
        )
        .unwrap();
        assert_eq!(r.max_commutator, 0.0);
        assert!(r.pass);

        let m = Matrix::from_real(&[&[1.0, 2.0, 0.5], &[-1.0, 0.3, 2.0], &[0.0, 1.0, 1.0]]).unwrap();
        let r = check_commuting(&[m.clone(), &m * &m], 1e-8).unwrap();
        assert!(r.max_commutator < 1e-15 && r.pass);

        let a = Matrix::diag_real(&[1.0, 2.0]);
        let r = check_commuting(&[a.clone(), swap()], 1e-8).unwrap();
        // ‖[a, swap]‖ = √2, ‖a‖‖swap‖ = √5·√2
        let expect = 2f64.sqrt() / (5f64.sqrt() * 2f64.sqrt());
        assert!((r.max_commutator - expect).abs() < 1e-15);
        assert!(!r.pass);
        assert_eq!(r.worst_pair, Some((0, 1)));
    }

    #[test]
    fn tuple_construction_enforces_commutativity() {
        let a = Matrix::diag_real(&[1.0, 2.0]);
        let err = HiggsTuple::new(vec![a.clone(), swap()], DEFAULT_COMMUTE_TOL).unwrap_err();
        assert!(matches!(err, HiggsError::NotCommuting { .. }));
        let forced = HiggsTuple::new_unchecked(vec![a, swap()], DEFAULT_COMMUTE_TOL).unwrap();
        assert!(!forced.is_certified());
        let err = HiggsTuple::new(vec![Matrix::identity(2), Matrix::identity(3)], 1e-8).unwrap_err();
        assert!(matches!(err, HiggsError::Shape { index: 1, .. }));
        assert_eq!(HiggsTuple::new(vec![], 1e-8).unwrap_err(), HiggsError::Empty);
    }
}
