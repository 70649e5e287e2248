use std::fmt;

use orthology_core::doc::DocError;
use orthology_core::Error;

/// Exit codes: 0 computed, 1 internal or generation failure, 2 invalid input.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        Failure::invalid(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::GenerationFailed(_) | Error::InvariantViolated(_) => {
                Failure::internal(e.to_string())
            }
            Error::OutsideOrOnCircle => Failure::invalid(format!("OutsideOrOnCircle: {e}")),
            Error::VertexPoint => Failure::invalid(format!("VertexPoint: {e}")),
            _ => Failure::invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(format!("io error: {e}"))
    }
}

pub type CliResult<T> = Result<T, Failure>;
