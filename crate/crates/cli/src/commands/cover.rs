use higgs_cover::cover::{detect_ramification, sweep_grid, DEFAULT_PROBES};
use higgs_cover::C64;
use serde::Serialize;
use serde_json::json;

use super::{Command, Context, Outcome};
use crate::error::CliError;

/// One line of the cover format.
#[derive(Serialize)]
struct CoverRecord {
    index: usize,
    z: Vec<C64>,
    sheets: Vec<Vec<C64>>,
    multiplicities: Vec<usize>,
    residual: Option<f64>,
    failed: bool,
    failure: Option<String>,
}

pub struct Sweep;

impl Command for Sweep {
    fn name(&self) -> &'static str {
        "sweep"
    }

    fn about(&self) -> &'static str {
        "joint spectrum at every point of a base grid"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let fam = ctx.family()?;
        let grid = ctx.grid()?;
        let slices = sweep_grid(&fam, grid, ctx.config.seed, ctx.config.tolerances.commute)?;
        let records: Vec<CoverRecord> = slices
            .into_iter()
            .map(|s| CoverRecord {
                index: s.index,
                z: s.z,
                sheets: s.spectrum.as_ref().map(|p| p.sheets()).unwrap_or_default(),
                multiplicities: s
                    .spectrum
                    .as_ref()
                    .map(|p| p.points.iter().map(|q| q.multiplicity).collect())
                    .unwrap_or_default(),
                residual: s.residual,
                failed: s.failure.is_some(),
                failure: s.failure,
            })
            .collect();
        let failed = records.iter().filter(|r| r.failed).count();
        Ok(Outcome::ok(json!({
            "n": fam.n(),
            "d": fam.d(),
            "label": fam.label(),
            "grid": grid,
            "failed_points": failed,
            "records": records,
        })))
    }
}

pub struct Ramify;

impl Command for Ramify {
    fn name(&self) -> &'static str {
        "ramify"
    }

    fn about(&self) -> &'static str {
        "flag grid points where sheets of the cover collide"
    }

    fn run(&self, ctx: &Context) -> Result<Outcome, CliError> {
        let fam = ctx.family()?;
        let grid = ctx.grid()?;
        let r = detect_ramification(
            &fam,
            grid,
            DEFAULT_PROBES,
            ctx.config.seed,
            ctx.config.tolerances.threshold,
            ctx.config.tolerances.commute,
        )?;
        Ok(Outcome::ok(json!({
            "grid": grid,
            "probes": DEFAULT_PROBES,
            "report": r,
        })))
    }
}
