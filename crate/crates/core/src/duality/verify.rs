use serde::Serialize;

use super::gauss::{gauss_map_with, sample_hypersurface_with, GaussOptions};
use super::DualityError;
use crate::higgs::{joint_spectrum, pencil_determinant, HiggsTuple, JointSpectrum, DEFAULT_RETRIES};
use crate::poly::ProjectivePoint;
use crate::seed::derive_seed;
use crate::C64;

/// Points with `|η₀| < CHART_FLOOR · ‖η‖` are compared chart-free.
pub const CHART_FLOOR: f64 = 1e-6;
pub const DEFAULT_MATCH_TOL: f64 = 1e-6;

/// Euclidean distance in the `η₀ = 1` chart when both points lie in it,
/// otherwise `1 − |⟨u, v⟩| / (‖u‖‖v‖)`.
pub fn chart_distance(a: &ProjectivePoint, b: &ProjectivePoint) -> f64 {
    match (a.affine_chart(CHART_FLOOR), b.affine_chart(CHART_FLOOR)) {
        (Some(x), Some(y)) => x
            .iter()
            .zip(&y)
            .map(|(p, q)| (p - q).norm_sqr())
            .sum::<f64>()
            .sqrt(),
        _ => a.fubini_study_gap(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Every sample matched and every simple spectrum point was hit.
    Verified,
    /// No mismatch, but sampling could not reach the requested count
    /// (non-reduced or everywhere-singular hypersurface).
    Flagged,
    Failed,
}

#[derive(Debug, Clone, Serialize)]
pub struct UnmatchedSample {
    pub point: ProjectivePoint,
    pub image: ProjectivePoint,
    pub nearest_distance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub samples_requested: usize,
    pub samples_used: usize,
    pub matched: usize,
    pub max_match_distance: f64,
    pub spectrum: JointSpectrum,
    /// Samples matched per spectrum point, aligned with `spectrum.points`.
    pub spectrum_hit_counts: Vec<usize>,
    pub unmatched_samples: Vec<UnmatchedSample>,
    pub sampling_partial: bool,
    pub lines_used: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub match_tol: f64,
    pub gauss: GaussOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            match_tol: DEFAULT_MATCH_TOL,
            gauss: GaussOptions::default(),
        }
    }
}

pub fn verify_dual_cover(
    h: &HiggsTuple,
    samples: usize,
    seed: u64,
    match_tol: f64,
) -> Result<DualityReport, DualityError> {
    verify_dual_cover_with(
        h,
        samples,
        seed,
        &VerifyOptions {
            match_tol,
            ..VerifyOptions::default()
        },
    )
}

/// Samples the pencil hypersurface, pushes each sample through the Gauss
/// map and matches the image against the spectral points `[1 : w^a]`.
pub fn verify_dual_cover_with(
    h: &HiggsTuple,
    samples: usize,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<DualityReport, DualityError> {
    let f = pencil_determinant(h)?;
    let spectrum = joint_spectrum(h, derive_seed(seed, "dual-verify-spectrum", 0), DEFAULT_RETRIES)?;
    let targets: Vec<ProjectivePoint> = spectrum
        .points
        .iter()
        .map(|p| {
            let mut coords = vec![C64::new(1.0, 0.0)];
            coords.extend_from_slice(&p.w);
            ProjectivePoint::new(coords)
        })
        .collect::<Result<_, _>>()?;

    let set = sample_hypersurface_with(&f, samples, derive_seed(seed, "dual-verify-sample", 0), &opts.gauss)?;
    let mut hits = vec![0usize; targets.len()];
    let mut matched = 0;
    let mut max_match_distance = 0.0f64;
    let mut unmatched = Vec::new();
    for pt in &set.points {
        let image = gauss_map_with(&f, pt, &opts.gauss)?;
        let (best, dist) = targets
            .iter()
            .enumerate()
            .map(|(i, t)| (i, chart_distance(&image, t)))
            .fold((usize::MAX, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
        if dist <= opts.match_tol {
            matched += 1;
            hits[best] += 1;
            max_match_distance = max_match_distance.max(dist);
        } else {
            unmatched.push(UnmatchedSample {
                point: pt.clone(),
                image,
                nearest_distance: dist,
            });
        }
    }

    let simple_all_hit = spectrum
        .points
        .iter()
        .zip(&hits)
        .all(|(p, &k)| p.multiplicity > 1 || k > 0);
    let verdict = if !unmatched.is_empty() {
        Verdict::Failed
    } else if set.partial {
        Verdict::Flagged
    } else if simple_all_hit {
        Verdict::Verified
    } else {
        Verdict::Failed
    };
    Ok(DualityReport {
        samples_requested: samples,
        samples_used: set.points.len(),
        matched,
        max_match_distance,
        spectrum,
        spectrum_hit_counts: hits,
        unmatched_samples: unmatched,
        sampling_partial: set.partial,
        lines_used: set.lines_used,
        verdict,
    })
}
