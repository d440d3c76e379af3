use std::process::ExitCode;

use logbehave_core::Error as CoreError;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CONFIG: u8 = 2;
pub const EXIT_COMPUTE: u8 = 3;
pub const EXIT_VERIFICATION: u8 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("computation error: {0}")]
    Compute(#[source] CoreError),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Compute(_) | CliError::Io { .. } => EXIT_COMPUTE,
        }
    }
}

/// Errors caused by bad input are config errors; everything else is a
/// computation error.
impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidRange { .. }
            | CoreError::InvalidIndex { .. }
            | CoreError::InvalidLadder(_)
            | CoreError::SpecInvalid(_)
            | CoreError::InvalidRecurrence(_) => CliError::Config(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

/// Final status of a successful invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => EXIT_OK,
            Status::VerificationFailed => EXIT_VERIFICATION,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::VerificationFailed
        }
    }
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s.code())
    }
}
