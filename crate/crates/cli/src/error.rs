use hopfmin_core::shapovalov::ShapovalovError;
use thiserror::Error;

/// Failure of a command, carrying the process exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or invalid input.
    #[error("{0}")]
    Input(String),
    /// A block exceeded the word limit.
    #[error("{0}")]
    Guard(String),
    /// Specialization hit a pole.
    #[error("{0}")]
    Pole(String),
    /// At least one self-test suite failed; `report` is the full summary.
    #[error("{failed} self-test suite(s) failed")]
    Selftest { report: String, failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Guard(_) => 2,
            CliError::Pole(_) => 3,
            CliError::Selftest { .. } => 4,
        }
    }
}

impl From<ShapovalovError> for CliError {
    fn from(e: ShapovalovError) -> Self {
        match e {
            ShapovalovError::SizeGuard { .. } => CliError::Guard(format!("{e}; raise --max-words to allow it")),
            other => CliError::Input(other.to_string()),
        }
    }
}
