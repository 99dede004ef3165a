use std::path::PathBuf;

use renyi_flow_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("solver aborted: {0}")]
    Solver(CoreError),
    #[error("{0}")]
    Numerics(CoreError),
    #[error("empty sweep")]
    EmptySweep,
    #[error("sweep value {0:?} is not a number")]
    BadValue(String),
    #[error("unknown sweep parameter {0:?} (expected p, points, t_end or E0)")]
    UnknownParam(String),
    #[error("unknown preset {0:?} (available: {list})", list = crate::presets::NAMES.join(", "))]
    UnknownPreset(String),
}

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

/// Exit status for a run whose checks did not all pass.
pub const EXIT_CHECK_FAILED: u8 = 1;

impl HarnessError {
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::EmptySweep
            | HarnessError::BadValue(_)
            | HarnessError::UnknownParam(_)
            | HarnessError::UnknownPreset(_) => 2,
            HarnessError::Config(_)
            | HarnessError::Io { .. }
            | HarnessError::Json { .. }
            | HarnessError::Csv { .. } => 3,
            HarnessError::Inadmissible(_) => 4,
            HarnessError::Solver(_) => 5,
            HarnessError::Numerics(_) => 6,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> HarnessError {
        let path = path.into();
        move |source| HarnessError::Io { path, source }
    }

    pub(crate) fn json(path: impl Into<PathBuf>) -> impl FnOnce(serde_json::Error) -> HarnessError {
        let path = path.into();
        move |source| HarnessError::Json { path, source }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>) -> impl FnOnce(csv::Error) -> HarnessError {
        let path = path.into();
        move |source| HarnessError::Csv { path, source }
    }
}

impl From<CoreError> for HarnessError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InadmissibleExponent { .. } => HarnessError::Inadmissible(e.to_string()),
            CoreError::InvalidConfig(msg) => HarnessError::Config(msg.to_string()),
            // the configured grid cannot hold the experiment
            CoreError::TooCoarse { .. }
            | CoreError::NonPositiveExtent(_)
            | CoreError::InvalidDimension { .. }
            | CoreError::GridTooSmall { .. }
            | CoreError::SupportOverflow { .. } => HarnessError::Config(e.to_string()),
            e => HarnessError::Numerics(e),
        }
    }
}

/// Classifies an error raised by the PDE solver.
pub(crate) fn solver_error(e: CoreError) -> HarnessError {
    match e {
        CoreError::MassDrift(_) | CoreError::SupportOverflow { .. } | CoreError::InvalidValue { .. } => {
            HarnessError::Solver(e)
        }
        e => e.into(),
    }
}
