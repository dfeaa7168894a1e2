use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hopfmotives_core::Error),
    #[error("schema error at `{path}` (line {line}): {message}")]
    Schema { path: String, line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    /// An object that parsed but failed its axioms; carries the report.
    #[error("{subject} failed verification:\n{report}")]
    Verification { subject: String, report: String },
}

impl CliError {
    /// 1 for verification failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification { .. } | CliError::Core(hopfmotives_core::Error::CatalogVerification { .. }) => 1,
            _ => 2,
        }
    }
}
