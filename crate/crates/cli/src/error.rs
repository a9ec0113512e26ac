use thiserror::Error;

/// Failures surfaced by the command layer, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] rainbowtri_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for bad input or parameters, 4 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(rainbowtri_core::Error::Invariant(_)) => 4,
            _ => 2,
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
