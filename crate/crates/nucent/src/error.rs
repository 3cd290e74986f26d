use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the CLI, each mapped to an exit status.
#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] nucent_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {source}")]
    Config {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl AppError {
    /// 1 usage, 2 numeric failure, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) | AppError::Config { .. } => 1,
            AppError::Numeric(_) => 2,
            AppError::Io { .. } | AppError::Csv { .. } | AppError::Json(_) => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        AppError::Io { path: path.into(), source }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
