//! Error type carrying the process exit code.
//!
//! Exit codes: 0 success, 2 validation failure (the inputs are well-formed
//! but mathematically rejected), 3 computation abort (a verified
//! construction or bounded search could not finish), 4 I/O or schema error
//! (the inputs could not be read as valid files at all).

use std::fmt;

pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;
pub const EXIT_SCHEMA: i32 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl CliError {
    pub fn schema(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_SCHEMA,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_SCHEMA,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }

    /// Wraps a core error raised while loading a file: descriptor-level
    /// failures there are schema errors, not validation verdicts.
    pub fn schema_from_core(err: fc_core::Error) -> CliError {
        CliError::schema(err.to_string())
    }
}

impl From<fc_core::Error> for CliError {
    fn from(err: fc_core::Error) -> CliError {
        use fc_core::Error as E;
        let code = match &err {
            // The input file describes something that is not a group.
            E::InvalidDescriptor(_) => EXIT_SCHEMA,
            // Well-formed inputs rejected on mathematical grounds.
            E::NotAMember { .. }
            | E::GroupMismatch(_)
            | E::MalformedWord(_)
            | E::NotNormalized { .. }
            | E::Precondition(_)
            | E::HypothesisFailed { .. }
            | E::ChainInvalid { .. } => EXIT_VALIDATION,
            // The engine could not complete or certify the computation.
            E::StepVerificationFailed { .. }
            | E::InternalVerification(_)
            | E::TooLarge(_)
            | E::SearchExhausted(_) => EXIT_COMPUTATION,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        CliError::io(err.to_string())
    }
}
