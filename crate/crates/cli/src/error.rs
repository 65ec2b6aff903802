use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub enum CliError {
    Core(lrs_core::Error),
    Usage(String),
    Io { path: PathBuf, message: String },
    SpecFile(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::SpecFile(_) => "spec-file",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(lrs_core::Error::SingularSystem) => f.write_str(
                "the Toeplitz system has determinant 0; the shifted values of this sequence are \
                 linearly dependent, so the IRS has no representation in terms of them",
            ),
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
            CliError::SpecFile(msg) => write!(f, "bad spec file: {msg}"),
        }
    }
}

impl From<lrs_core::Error> for CliError {
    fn from(e: lrs_core::Error) -> Self {
        CliError::Core(e)
    }
}
