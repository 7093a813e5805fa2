use rayon::prelude::*;
use serde::Serialize;

use super::DualityError;
use crate::poly::{uni_roots, MultiPoly, PolyError, ProjectivePoint};
use crate::seed::{complex_gaussian_vec, rng_for};
use crate::C64;

pub const DEFAULT_ON_SURFACE_TOL: f64 = 1e-8;
pub const DEFAULT_SMOOTH_TOL: f64 = 1e-8;
/// Roots of a restricted polynomial closer than this (relative) are
/// treated as a tangency or non-reduced intersection and dropped.
pub const ROOT_SEPARATION_REL: f64 = 1e-6;

const LINE_BATCH: usize = 32;

#[derive(Debug, Clone, Copy)]
pub struct GaussOptions {
    /// `|F(ξ)| ≤ on_surface_tol · ‖F‖₁ · ‖ξ‖^n`.
    pub on_surface_tol: f64,
    /// `‖∇F(ξ)‖ ≥ smooth_tol · ‖F‖₁ · ‖ξ‖^{n−1}`.
    pub smooth_tol: f64,
}

impl Default for GaussOptions {
    fn default() -> Self {
        GaussOptions {
            on_surface_tol: DEFAULT_ON_SURFACE_TOL,
            smooth_tol: DEFAULT_SMOOTH_TOL,
        }
    }
}

fn coefficient_scale(f: &MultiPoly) -> f64 {
    f.terms().map(|(_, c)| c.norm()).sum()
}

pub fn gauss_map(f: &MultiPoly, xi: &ProjectivePoint) -> Result<ProjectivePoint, DualityError> {
    gauss_map_with(f, xi, &GaussOptions::default())
}

/// `[∂F/∂ξ⁰ : … : ∂F/∂ξ^d]` at a smooth point of `{F = 0}`.
pub fn gauss_map_with(
    f: &MultiPoly,
    xi: &ProjectivePoint,
    opts: &GaussOptions,
) -> Result<ProjectivePoint, DualityError> {
    if f.degree() == 0 {
        return Err(PolyError::DegreeTooLow {
            op: "gauss_map",
            degree: 0,
            required: 1,
        }
        .into());
    }
    let x = xi.coords();
    let n = f.degree() as i32;
    let scale = coefficient_scale(f);
    let norm = xi.norm();
    let value = f.evaluate(x)?.norm();
    let on_threshold = opts.on_surface_tol * scale * norm.powi(n);
    if value > on_threshold {
        return Err(DualityError::NotOnHypersurface {
            value,
            threshold: on_threshold,
        });
    }
    let grad = f.gradient_at(x)?;
    let gradient_norm = grad.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let threshold = opts.smooth_tol * scale * norm.powi(n - 1);
    if !(gradient_norm >= threshold) || gradient_norm == 0.0 {
        return Err(DualityError::SingularPoint {
            gradient_norm,
            threshold,
        });
    }
    Ok(ProjectivePoint::new(grad)?)
}

/// Smooth points of a hypersurface, possibly fewer than requested.
#[derive(Debug, Clone, Serialize)]
pub struct SampleSet {
    pub points: Vec<ProjectivePoint>,
    pub requested: usize,
    pub lines_used: usize,
    /// Set when the retry budget ran out before `requested` points were found.
    pub partial: bool,
}

fn points_on_line(f: &MultiPoly, seed: u64, index: usize, opts: &GaussOptions) -> Vec<ProjectivePoint> {
    let nv = f.num_vars();
    let mut rng = rng_for(seed, "sample-line", index as u64);
    let base = complex_gaussian_vec(&mut rng, nv);
    let dir = complex_gaussian_vec(&mut rng, nv);
    let q = match f.restrict_to_line(&base, &dir) {
        Ok(q) => q,
        Err(_) => return Vec::new(),
    };
    let roots = match uni_roots(&q) {
        Ok(r) => r,
        Err(_) => return Vec::new(),
    };
    let mut out = Vec::new();
    for (i, &t) in roots.iter().enumerate() {
        let crowded = roots
            .iter()
            .enumerate()
            .any(|(j, &s)| j != i && (s - t).norm() <= ROOT_SEPARATION_REL * (1.0 + t.norm()));
        if crowded {
            continue;
        }
        let coords: Vec<C64> = base.iter().zip(&dir).map(|(&b, &v)| b + t * v).collect();
        let Ok(pt) = ProjectivePoint::new(coords) else {
            continue;
        };
        if gauss_map_with(f, &pt, opts).is_ok() {
            out.push(pt);
        }
    }
    out
}

/// Intersects `{F = 0}` with seeded random lines through pairs of Gaussian
/// points and keeps smooth, well-separated intersection points. Line `i`
/// depends only on `(seed, i)`, so the output is schedule independent.
pub fn sample_hypersurface(f: &MultiPoly, count: usize, seed: u64) -> Result<SampleSet, DualityError> {
    sample_hypersurface_with(f, count, seed, &GaussOptions::default())
}

pub fn sample_hypersurface_with(
    f: &MultiPoly,
    count: usize,
    seed: u64,
    opts: &GaussOptions,
) -> Result<SampleSet, DualityError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial.into());
    }
    if f.degree() == 0 {
        return Err(PolyError::DegreeTooLow {
            op: "sample_hypersurface",
            degree: 0,
            required: 1,
        }
        .into());
    }
    let budget = 2 * count + 16;
    let mut points = Vec::with_capacity(count);
    let mut lines_used = 0;
    while points.len() < count && lines_used < budget {
        let end = (lines_used + LINE_BATCH).min(budget);
        let batch: Vec<Vec<ProjectivePoint>> = (lines_used..end)
            .into_par_iter()
            .map(|i| points_on_line(f, seed, i, opts))
            .collect();
        for line_points in batch {
            lines_used += 1;
            for p in line_points {
                if points.len() < count {
                    points.push(p);
                }
            }
            if points.len() >= count {
                break;
            }
        }
    }
    Ok(SampleSet {
        partial: points.len() < count,
        points,
        requested: count,
        lines_used,
    })
}
