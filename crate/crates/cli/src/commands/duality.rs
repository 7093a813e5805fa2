use higgs_cover::duality::{hitchin_check, verify_dual_cover_with, GaussOptions, Verdict, VerifyOptions};
use serde_json::json;

use super::{Command, Context, Outcome};
use crate::error::{exit, CliError};

/// Relative deviation above which `hitchin` fails.
pub const HITCHIN_TOL: f64 = 1e-10;

pub struct DualVerify;

impl Command for DualVerify {
    fn name(&self) -> &'static str {
        "dual-verify"
    }

    fn about(&self) -> &'static str {
        "match Gauss-map images of pencil hypersurface samples to the joint spectrum"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        if ctx.config.samples == 0 {
            return Err(CliError::field("samples", "samples must be at least 1"));
        }
        let h = ctx.tuple()?;
        let t = &ctx.config.tolerances;
        let opts = VerifyOptions {
            match_tol: t.matching,
            gauss: GaussOptions {
                smooth_tol: t.smooth,
                ..GaussOptions::default()
            },
        };
        let r = verify_dual_cover_with(&h, ctx.config.samples, ctx.config.seed, &opts)?;
        let (verdict, status) = match r.verdict {
            Verdict::Verified => ("verified", exit::OK),
            Verdict::Flagged => ("flagged", exit::OK),
            Verdict::Failed => ("failed", exit::VERIFICATION_FAILED),
        };
        Ok(Outcome {
            payload: serde_json::to_value(r).expect("serializable"),
            verdict: Some(verdict),
            status,
        })
    }
}

pub struct Hitchin;

impl Command for Hitchin {
    fn name(&self) -> &'static str {
        "hitchin"
    }

    fn about(&self) -> &'static str {
        "compare the dual curve in the chart η₀ = 1 with det(w − Φ) (d = 1)"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let mats = ctx.matrices()?;
        if mats.len() != 1 {
            return Err(CliError::field("d", format!("hitchin needs d = 1, got d = {}", mats.len())));
        }
        let r = hitchin_check(&mats[0])?;
        let pass = r.max_deviation <= HITCHIN_TOL;
        Ok(Outcome::judged(
            json!({
                "tolerance": HITCHIN_TOL,
                "max_deviation": r.max_deviation,
                "dual_curve_text": r.dual_curve.to_canonical_text(),
                "report": r,
            }),
            pass,
        ))
    }
}
