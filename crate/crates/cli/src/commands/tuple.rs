use higgs_cover::higgs::{joint_spectrum, pencil_determinant, residual_scale, spectral_residuals, DEFAULT_RETRIES};
use higgs_cover::C64;
use serde::Serialize;
use serde_json::json;

use super::{commuting_payload, Command, Context, Outcome};
use crate::error::CliError;

/// Scaled residual above which a spectrum point fails the `residuals` check.
pub const RESIDUAL_TOL: f64 = 1e-8;

pub struct Check;

impl Command for Check {
    fn name(&self) -> &'static str {
        "check"
    }

    fn about(&self) -> &'static str {
        "certify that the components pairwise commute"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        commuting_payload(ctx)
    }
}

pub struct Spectrum;

impl Command for Spectrum {
    fn name(&self) -> &'static str {
        "spectrum"
    }

    fn about(&self) -> &'static str {
        "joint spectrum by simultaneous triangularization"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let h = ctx.tuple()?;
        let s = joint_spectrum(&h, ctx.seed("spectrum"), DEFAULT_RETRIES)?;
        Ok(Outcome::ok(json!({
            "certification": h.certification(),
            "points": s.points,
            "residual": s.residual,
            "sheets": s.sheets(),
        })))
    }
}

pub struct Pencil;

impl Command for Pencil {
    fn name(&self) -> &'static str {
        "pencil"
    }

    fn about(&self) -> &'static str {
        "pencil determinant det(ξ⁰ + Σ ξ^j Φ_j) in canonical text form"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let h = ctx.tuple()?;
        let f = pencil_determinant(&h)?;
        Ok(Outcome::ok(json!({
            "num_vars": f.num_vars(),
            "degree": f.degree(),
            "canonical_text": f.to_canonical_text(),
            "polynomial": f,
        })))
    }
}

#[derive(Serialize)]
struct PointResiduals {
    w: Vec<C64>,
    multiplicity: usize,
    max_magnitude: f64,
    scaled_max: f64,
    coefficients: Vec<(Vec<u32>, C64)>,
}

pub struct Residuals;

impl Command for Residuals {
    fn name(&self) -> &'static str {
        "residuals"
    }

    fn about(&self) -> &'static str {
        "overdetermined residual system at each joint-spectrum point"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let h = ctx.tuple()?;
        let s = joint_spectrum(&h, ctx.seed("spectrum"), DEFAULT_RETRIES)?;
        let scale = residual_scale(&h, ctx.seed("residuals"))?;
        let norm = if scale > 0.0 { scale } else { 1.0 };
        let mut equation_count = 0;
        let mut points = Vec::with_capacity(s.points.len());
        for p in &s.points {
            let r = spectral_residuals(&h, &p.w)?;
            equation_count = r.equation_count;
            points.push(PointResiduals {
                w: p.w.clone(),
                multiplicity: p.multiplicity,
                max_magnitude: r.max_magnitude,
                scaled_max: r.max_magnitude / norm,
                coefficients: r.coefficients,
            });
        }
        let worst = points.iter().map(|p| p.scaled_max).fold(0.0, f64::max);
        Ok(Outcome::judged(
            json!({
                "equation_count": equation_count,
                "scale": scale,
                "tolerance": RESIDUAL_TOL,
                "max_scaled_residual": worst,
                "points": points,
            }),
            worst <= RESIDUAL_TOL,
        ))
    }
}
