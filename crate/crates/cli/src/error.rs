use higgs_cover::cover::CoverError;
use higgs_cover::duality::DualityError;
use higgs_cover::higgs::HiggsError;
use higgs_cover::matkernel::MatrixError;
use higgs_cover::poly::PolyError;
use serde::Serialize;
use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const NUMERICAL_FAILURE: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{message}")]
    Input { field: Option<String>, message: String },
    #[error("{0}")]
    Numerical(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError::Input {
            field: None,
            message: message.into(),
        }
    }

    pub fn field(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Input {
            field: Some(field.into()),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input { .. } => exit::INVALID_INPUT,
            CliError::Numerical(_) => exit::NUMERICAL_FAILURE,
        }
    }

    pub fn info(&self) -> ErrorInfo {
        match self {
            CliError::Input { field, message } => ErrorInfo {
                kind: "invalid_input",
                field: field.clone(),
                message: message.clone(),
            },
            CliError::Numerical(message) => ErrorInfo {
                kind: "numerical_failure",
                field: None,
                message: message.clone(),
            },
        }
    }
}

fn matrix_is_input(e: &MatrixError) -> bool {
    !matches!(e, MatrixError::NoConvergence { .. } | MatrixError::Singular)
}

fn poly_is_input(e: &PolyError) -> bool {
    match e {
        PolyError::SingularInterpolation { .. }
        | PolyError::InconsistentOracle { .. }
        | PolyError::NonFinite => false,
        PolyError::Matrix(m) => matrix_is_input(m),
        _ => true,
    }
}

fn higgs_is_input(e: &HiggsError) -> bool {
    match e {
        HiggsError::SpectrumNotCertified { .. } => false,
        HiggsError::Matrix(m) => matrix_is_input(m),
        HiggsError::Poly(p) => poly_is_input(p),
        _ => true,
    }
}

impl From<HiggsError> for CliError {
    fn from(e: HiggsError) -> Self {
        if higgs_is_input(&e) {
            CliError::input(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        if poly_is_input(&e) {
            CliError::input(e.to_string())
        } else {
            CliError::Numerical(e.to_string())
        }
    }
}

impl From<DualityError> for CliError {
    fn from(e: DualityError) -> Self {
        match e {
            DualityError::Higgs(h) => h.into(),
            DualityError::Poly(p) => p.into(),
            other => CliError::Numerical(other.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Higgs(h) => h.into(),
            CoverError::AtPoint { ref source, .. } if !higgs_is_input(source) => {
                CliError::Numerical(e.to_string())
            }
            other => CliError::input(other.to_string()),
        }
    }
}
