use higgs_cover::cover::{AxisSpec, GridSpec, DEFAULT_RAMIFICATION_THRESHOLD};
use higgs_cover::duality::{DEFAULT_MATCH_TOL, DEFAULT_SMOOTH_TOL};
use higgs_cover::higgs::DEFAULT_COMMUTE_TOL;
use higgs_cover::C64;
use serde::Serialize;

use crate::error::CliError;

pub const DEFAULT_SAMPLES: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    pub commute: f64,
    pub matching: f64,
    pub smooth: f64,
    pub threshold: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            commute: DEFAULT_COMMUTE_TOL,
            matching: DEFAULT_MATCH_TOL,
            smooth: DEFAULT_SMOOTH_TOL,
            threshold: DEFAULT_RAMIFICATION_THRESHOLD,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<(), CliError> {
        for (name, v) in [
            ("tol-commute", self.commute),
            ("tol-match", self.matching),
            ("tol-smooth", self.smooth),
            ("threshold", self.threshold),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::field(name, format!("tolerance must be positive and finite, got {v}")));
            }
        }
        Ok(())
    }
}

/// Fully resolved job, echoed verbatim into the report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobConfig {
    pub command: String,
    pub input: String,
    pub output: Option<String>,
    pub seed: u64,
    pub samples: usize,
    pub tolerances: Tolerances,
    pub grid: Option<GridSpec>,
    pub force: bool,
}

impl JobConfig {
    pub fn new(command: impl Into<String>, input: impl Into<String>) -> Self {
        JobConfig {
            command: command.into(),
            input: input.into(),
            output: None,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            tolerances: Tolerances::default(),
            grid: None,
            force: false,
        }
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64, CliError> {
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| CliError::field("grid", format!("{what}: expected a finite number, got {s:?}")))
}

fn parse_axis(spec: &str) -> Result<AxisSpec, CliError> {
    let f: Vec<&str> = spec.split(':').map(str::trim).collect();
    let (center, hw, pts, complex) = match f.as_slice() {
        [c, hw, p] => (C64::new(parse_f64(c, "center")?, 0.0), *hw, *p, false),
        [re, im, hw, p] => (C64::new(parse_f64(re, "center re")?, parse_f64(im, "center im")?), *hw, *p, false),
        [re, im, hw, p, "c"] => (C64::new(parse_f64(re, "center re")?, parse_f64(im, "center im")?), *hw, *p, true),
        _ => {
            return Err(CliError::field(
                "grid",
                format!("axis {spec:?}: expected center:half_width:points or re:im:half_width:points[:c]"),
            ))
        }
    };
    let half_width = parse_f64(hw, "half_width")?;
    let points = pts
        .parse::<usize>()
        .map_err(|_| CliError::field("grid", format!("axis {spec:?}: points must be a non-negative integer, got {pts:?}")))?;
    Ok(AxisSpec {
        center,
        half_width,
        points,
        complex,
    })
}

/// Parses `axis;axis;…` where each axis is `center:half_width:points` (real
/// center) or `re:im:half_width:points`, with a trailing `:c` for a complex
/// two-parameter axis.
pub fn parse_grid(text: &str) -> Result<GridSpec, CliError> {
    let axes = text
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_axis)
        .collect::<Result<Vec<_>, _>>()?;
    if axes.is_empty() {
        return Err(CliError::field("grid", "grid has no axes"));
    }
    Ok(GridSpec::new(axes))
}
