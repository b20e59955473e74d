use std::fmt;
use std::process::ExitCode;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or inputs outside a routine's domain (exit 2).
    Usage(String),
    /// Reading or writing files failed (exit 3).
    Io(String),
    /// A computation could not produce a result (exit 1).
    Compute(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Compute(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Io(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Compute(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<vcjones::Error> for CliError {
    fn from(e: vcjones::Error) -> Self {
        use vcjones::Error::*;
        match e {
            Domain(_) | InvalidTorusKnot { .. } | VanishingDenominator(_) | Refused(_) => {
                CliError::Usage(e.to_string())
            }
            FieldMismatch { .. } | RankDeficient => CliError::Compute(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            CliError::Io(e.to_string())
        } else {
            CliError::Usage(format!("malformed CSV: {e}"))
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
