use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
    #[error("{0}")]
    Core(ramlab_core::error::Error),
}

impl From<ramlab_core::error::Error> for CliError {
    fn from(e: ramlab_core::error::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    /// What to change before rerunning, when the failure is one of precision.
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(e) if e.is_precision() => {
                Some("raise the working precision (RAMLAB_PRECISION or --precision) and retry")
            }
            CliError::Core(ramlab_core::error::Error::InconclusiveRootSearch(_)) => {
                Some("raise f_ur so that the residue field holds the needed roots of unity, or raise the precision")
            }
            _ => None,
        }
    }
}
