use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use higgs_cover_cli::commands::Registry;
use higgs_cover_cli::config::{parse_grid, JobConfig, Tolerances, DEFAULT_SAMPLES};
use higgs_cover_cli::error::exit;
use higgs_cover_cli::run_with;

/// Spectral covers of commuting matrix tuples and their projective duals.
#[derive(Parser, Debug)]
#[command(name = "higgs-cover", version)]
struct Args {
    /// check | spectrum | pencil | residuals | dual-verify | hitchin | sweep | ramify
    command: String,
    /// JSON input document.
    #[arg(long)]
    input: String,
    /// Report destination (default: standard output).
    #[arg(long)]
    output: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Hypersurface samples for dual-verify.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long)]
    tol_commute: Option<f64>,
    #[arg(long)]
    tol_match: Option<f64>,
    #[arg(long)]
    tol_smooth: Option<f64>,
    /// Normalized discriminant below which ramify flags a point.
    #[arg(long)]
    threshold: Option<f64>,
    /// Base grid: `center:half_width:points` or `re:im:half_width:points[:c]` per axis, `;`-separated.
    #[arg(long)]
    grid: Option<String>,
    /// Proceed with non-commuting input.
    #[arg(long)]
    force: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let defaults = Tolerances::default();
    let mut config = JobConfig::new(args.command, args.input);
    config.output = args.output;
    config.seed = args.seed;
    config.samples = args.samples;
    config.force = args.force;
    config.tolerances = Tolerances {
        commute: args.tol_commute.unwrap_or(defaults.commute),
        matching: args.tol_match.unwrap_or(defaults.matching),
        smooth: args.tol_smooth.unwrap_or(defaults.smooth),
        threshold: args.threshold.unwrap_or(defaults.threshold),
    };
    if let Some(g) = &args.grid {
        match parse_grid(g) {
            Ok(g) => config.grid = Some(g),
            Err(e) => {
                eprintln!("error: --grid: {e}");
                return ExitCode::from(exit::INVALID_INPUT as u8);
            }
        }
    }

    let report = run_with(&Registry::standard(), &config);
    if let Some(e) = &report.error {
        eprintln!("error: {}", e.message);
    }
    let text = report.to_json();
    let written = match &config.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(exit::INVALID_INPUT as u8);
    }
    ExitCode::from(report.status as u8)
}
