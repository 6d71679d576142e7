use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

/// A single violated configuration invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Dotted path of the offending field, e.g. `time.energy_fraction`.
    pub path: String,
    pub reason: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.reason)
    }
}

/// Every invariant a configuration violates, not just the first.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ConfigErrors(pub Vec<Violation>);

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} configuration error(s)", self.0.len())?;
        for v in &self.0 {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

impl ConfigErrors {
    pub fn violations(&self) -> &[Violation] {
        &self.0
    }

    pub fn mentions(&self, needle: &str) -> bool {
        self.0.iter().any(|v| v.reason.contains(needle) || v.path.contains(needle))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("degenerate geometry: {0} positions coincide")]
    DegenerateGeometry(&'static str),
    #[error("realization carries {actual} cascade pairs but the panel has {expected} elements")]
    ElementCountMismatch { expected: usize, actual: usize },
    #[error("uplink rate is zero but {0} bits must be offloaded")]
    UplinkOutage(u64),
    #[error("gain-to-consumption ratio is ill-posed: total consumption is zero")]
    IllPosedRatio,
    #[error("sweep needs at least one data size")]
    EmptySweep,
    #[error(transparent)]
    Config(#[from] ConfigErrors),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("unknown preset `{0}` (expected one of fig3, fig4, fig6)")]
    UnknownPreset(String),
    #[error("bad override `{0}`: {1}")]
    BadOverride(String, String),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error in {path}: {source}")]
    Parse {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("unsupported config schema `{found}` (expected `{expected}`)")]
    Schema { found: String, expected: &'static str },
    #[error("malformed CSV at row {row}, column `{column}`: {reason}")]
    MalformedCsv {
        row: usize,
        column: String,
        reason: String,
    },
    #[error("chart has no data: {0}")]
    EmptySeries(String),
    #[error("worker pool: {0}")]
    WorkerPool(String),
    #[error("chart rendering failed: {0}")]
    Chart(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl IoError {
    /// Process exit code: 2 config, 3 IO, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            IoError::Model(ModelError::IllPosedRatio) | IoError::Model(ModelError::UplinkOutage(_)) => 4,
            IoError::Model(_)
            | IoError::UnknownPreset(_)
            | IoError::BadOverride(..)
            | IoError::Parse { .. }
            | IoError::Schema { .. } => 2,
            _ => 3,
        }
    }
}
