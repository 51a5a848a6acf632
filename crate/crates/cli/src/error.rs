use std::io;
use std::path::PathBuf;

use hamsub_core::Error as CoreError;

/// Everything a command can fail with, mapped onto process exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("golden check failed")]
    GoldenFail,
}

impl CliError {
    /// 0 ok, 1 golden fail, 2 parse/validation, 3 assumption violation,
    /// 4 convergence failure, 5 endpoint not attainable.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::GoldenFail => 1,
            CliError::Input(_) | CliError::Read { .. } | CliError::Write(_) => 2,
            CliError::Core(e) => match e {
                CoreError::DimensionMismatch { .. }
                | CoreError::NonFinite { .. }
                | CoreError::TerminalMismatch { .. } => 2,
                CoreError::NotStabilizable
                | CoreError::NotStable { .. }
                | CoreError::SingularWeight { .. }
                | CoreError::SingularMatrix { .. }
                | CoreError::EmptyReachablePart => 3,
                CoreError::ConvergenceFailure { .. } => 4,
                CoreError::BoundaryInconsistent { .. } | CoreError::Infeasible { .. } => 5,
            },
        }
    }
}
