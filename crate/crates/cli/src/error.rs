use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: usize, message: String },
    #[error("stream inconsistency: {0}")]
    Stream(String),
    #[error("verification failed: {0}")]
    Verify(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(path: &str, line: usize, message: impl Into<String>) -> Self {
        CliError::Parse {
            path: path.to_owned(),
            line,
            message: message.into(),
        }
    }

    pub fn io(path: &str, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_owned(),
            source,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Parse { .. } => 2,
            CliError::Stream(_) => 3,
            CliError::Verify(_) => 4,
        })
    }
}
