use rayon::prelude::*;
use serde::Serialize;

use super::family::{evaluate_family, ChartFamily};
use super::grid::GridSpec;
use super::CoverError;
use crate::higgs::{characteristic_polynomial, joint_spectrum, HiggsError, HiggsTuple, JointSpectrum, DEFAULT_RETRIES};
use crate::poly::discriminant;
use crate::seed::{complex_gaussian_vec, derive_seed, rng_for};
use crate::C64;

pub const DEFAULT_RAMIFICATION_THRESHOLD: f64 = 1e-6;
pub const DEFAULT_PROBES: usize = 3;

/// One fiber of the cover. Exactly one of `spectrum` and `failure` is set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverSlice {
    pub index: usize,
    pub z: Vec<C64>,
    pub spectrum: Option<JointSpectrum>,
    pub residual: Option<f64>,
    pub failure: Option<String>,
}

impl CoverSlice {
    pub fn is_ok(&self) -> bool {
        self.spectrum.is_some()
    }
}

/// Joint spectrum at every grid point. A point whose tuple fails
/// certification or whose spectrum cannot be computed yields a slice with a
/// failure message; the sweep itself only fails on an invalid grid.
pub fn sweep_grid(
    fam: &ChartFamily,
    grid: &GridSpec,
    seed: u64,
    commute_tol: f64,
) -> Result<Vec<CoverSlice>, CoverError> {
    grid.validate(fam.d())?;
    Ok(grid
        .points()
        .into_par_iter()
        .enumerate()
        .map(|(index, z)| {
            let result = evaluate_family(fam, &z, commute_tol).and_then(|h| {
                joint_spectrum(&h, derive_seed(seed, "sweep", index as u64), DEFAULT_RETRIES)
                    .map_err(CoverError::from)
            });
            match result {
                Ok(s) => CoverSlice {
                    index,
                    residual: Some(s.residual),
                    spectrum: Some(s),
                    failure: None,
                    z,
                },
                Err(e) => CoverSlice {
                    index,
                    z,
                    spectrum: None,
                    residual: None,
                    failure: Some(e.to_string()),
                },
            }
        })
        .collect())
}

/// `|disc det(w − A)|` for `A = Σ v_j Φ_j / ‖Σ v_j Φ_j‖_F`, invariant under
/// `Φ → λΦ`. Zero when `A` vanishes; one when `n = 1`.
pub fn normalized_discriminant(h: &HiggsTuple, v: &[C64]) -> Result<f64, HiggsError> {
    let a = h.contract(v)?;
    if h.n() == 1 {
        return Ok(1.0);
    }
    let s = a.frobenius_norm();
    if s == 0.0 {
        return Ok(0.0);
    }
    let p = characteristic_polynomial(&a.scale(C64::new(1.0 / s, 0.0)))?;
    Ok(discriminant(&p)?.norm())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RamificationPoint {
    pub index: usize,
    pub z: Vec<C64>,
    /// Minimum of [`normalized_discriminant`] over the probes.
    pub value: Option<f64>,
    pub flagged: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FlaggedPoint {
    pub index: usize,
    pub z: Vec<C64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RamificationReport {
    pub directions: Vec<Vec<C64>>,
    pub threshold: f64,
    pub flagged: Vec<FlaggedPoint>,
    pub points: Vec<RamificationPoint>,
}

/// Flags grid points where the directional characteristic polynomial has a
/// (numerically) repeated root for every probe direction.
pub fn detect_ramification(
    fam: &ChartFamily,
    grid: &GridSpec,
    probe_count: usize,
    seed: u64,
    threshold: f64,
    commute_tol: f64,
) -> Result<RamificationReport, CoverError> {
    if probe_count == 0 {
        return Err(CoverError::NoProbes);
    }
    grid.validate(fam.d())?;
    let directions: Vec<Vec<C64>> = (0..probe_count)
        .map(|k| complex_gaussian_vec(&mut rng_for(seed, "ramify-probe", k as u64), fam.d()))
        .collect();
    let points: Vec<RamificationPoint> = grid
        .points()
        .into_par_iter()
        .enumerate()
        .map(|(index, z)| {
            let value = evaluate_family(fam, &z, commute_tol).and_then(|h| {
                directions.iter().try_fold(f64::INFINITY, |m, v| {
                    Ok(m.min(normalized_discriminant(&h, v).map_err(|e| CoverError::AtPoint {
                        z: z.clone(),
                        source: e,
                    })?))
                })
            });
            match value {
                Ok(v) => RamificationPoint {
                    index,
                    z,
                    value: Some(v),
                    flagged: v < threshold,
                    failure: None,
                },
                Err(e) => RamificationPoint {
                    index,
                    z,
                    value: None,
                    flagged: false,
                    failure: Some(e.to_string()),
                },
            }
        })
        .collect();
    let flagged = points
        .iter()
        .filter(|p| p.flagged)
        .map(|p| FlaggedPoint {
            index: p.index,
            z: p.z.clone(),
            value: p.value.unwrap_or(0.0),
        })
        .collect();
    Ok(RamificationReport {
        directions,
        threshold,
        flagged,
        points,
    })
}
