//! Command-line front end for `higgs-cover`.
//!
//! A job reads one JSON input document (constant matrices or a polynomial
//! family), runs one named command from the [`commands::Registry`] and
//! produces a JSON report with the resolved configuration, a payload, a
//! verdict and an exit status:
//!
//! | status | meaning |
//! |---|---|
//! | 0 | computed, all checks passed |
//! | 1 | computed, a verification failed |
//! | 2 | invalid input |
//! | 3 | numerical failure |

pub mod commands;
pub mod config;
pub mod error;
pub mod input;

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use commands::{Context, Registry};
use config::{JobConfig, Tolerances};
use error::{CliError, ErrorInfo};
use input::{parse_input, InputBody, InputDocument};

pub const TOOL: &str = "higgs-cover";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub d: usize,
    pub kind: &'static str,
    pub label: Option<String>,
}

impl InputSummary {
    fn of(doc: &InputDocument) -> Self {
        InputSummary {
            n: doc.n,
            d: doc.d,
            kind: match doc.body {
                InputBody::Matrices(_) => "matrices",
                InputBody::Family(_) => "family",
            },
            label: doc.label.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: JobConfig,
    pub tolerances: Tolerances,
    pub input: Option<InputSummary>,
    pub status: i32,
    pub verdict: Option<&'static str>,
    pub payload: Option<Value>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report is serializable");
        s.push('\n');
        s
    }
}

fn execute(registry: &Registry, config: &JobConfig) -> Result<(InputSummary, commands::Outcome), (Option<InputSummary>, CliError)> {
    let cmd = registry.get(&config.command).ok_or_else(|| {
        (
            None,
            CliError::field(
                "command",
                format!("unknown command {:?}; expected one of {}", config.command, registry.names().join(", ")),
            ),
        )
    })?;
    config.tolerances.validate().map_err(|e| (None, e))?;
    let doc = parse_input(Path::new(&config.input)).map_err(|e| (None, e))?;
    let summary = InputSummary::of(&doc);
    if let Some(g) = &config.grid {
        g.validate(doc.d)
            .map_err(|e| (Some(summary.clone()), CliError::field("grid", e.to_string())))?;
    }
    let ctx = Context { config, input: &doc };
    match cmd.run(&ctx) {
        Ok(o) => Ok((summary, o)),
        Err(e) => Err((Some(summary), e)),
    }
}

/// Runs a job with the given registry. Never panics on bad input; every
/// failure is encoded in the report's `status` and `error`.
pub fn run_with(registry: &Registry, config: &JobConfig) -> Report {
    let base = Report {
        tool: TOOL,
        version: VERSION,
        config: config.clone(),
        tolerances: config.tolerances,
        input: None,
        status: error::exit::OK,
        verdict: None,
        payload: None,
        error: None,
    };
    match execute(registry, config) {
        Ok((summary, o)) => Report {
            input: Some(summary),
            status: o.status,
            verdict: o.verdict,
            payload: Some(o.payload),
            ..base
        },
        Err((summary, e)) => Report {
            input: summary,
            status: e.exit_code(),
            error: Some(e.info()),
            ..base
        },
    }
}

pub fn run(config: &JobConfig) -> Report {
    run_with(&Registry::standard(), config)
}
