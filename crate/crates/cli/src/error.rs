//! Error families and their process exit codes.

use omnf_core::Error as CoreError;
use std::fmt;

/// parse/validation = 2, failed mathematical hypothesis = 3,
/// failed runtime certificate = 4.
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Validation(String),
    Hypothesis(String),
    Certificate(String),
}

impl CliError {
    pub fn parse(e: impl fmt::Display) -> Self {
        CliError::Parse(e.to_string())
    }

    pub fn validation(msg: String) -> Self {
        CliError::Validation(msg)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::Certificate(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Hypothesis(m) => write!(f, "hypothesis failed: {m}"),
            CliError::Certificate(m) => write!(f, "certificate failed: {m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match &e {
            CoreError::SNotSymplectic
            | CoreError::NotHamiltonianMatrix { .. }
            | CoreError::NotSemisymplectic { .. }
            | CoreError::SigmaMismatch { .. }
            | CoreError::SymmetryHypothesisFailed { .. }
            | CoreError::NonEquilibriumInput => CliError::Hypothesis(e.to_string()),
            CoreError::ComplementCertificateFailed { .. }
            | CoreError::DecompositionCertificateFailed { .. }
            | CoreError::EquivariantSolveFailed { .. }
            | CoreError::CertificateViolation { .. } => CliError::Certificate(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}
