use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coefficient set must have at least one entry.
    EmptyCoefficients,
    /// `p[r]` is zero: the IRS and the backward extension are undefined.
    ZeroLeadingCoefficient,
    InitialsLength {
        expected: usize,
        found: usize,
    },
    IndexBelowFloor {
        index: i64,
        floor: i64,
    },
    InvalidRange {
        lo: i64,
        hi: i64,
    },
    OrderMismatch {
        expected: usize,
        found: usize,
    },
    CoefficientMismatch,
    ParseRational(String),
    /// Root iteration did not settle; a higher working precision may help.
    NotConverged {
        iterations: usize,
        precision_bits: usize,
    },
    /// Two distinct roots fall within the clustering radius.
    AmbiguousClustering {
        precision_bits: usize,
    },
    /// The linear system has determinant zero, so no unique solution exists.
    SingularSystem,
    Precondition(String),
    UnknownIdentity(String),
    NonInteger(String),
    /// The requested rows cannot cover the requested bound.
    InsufficientRows {
        rows: usize,
        bound: u64,
    },
}

impl Error {
    /// Stable, machine-readable code for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyCoefficients => "empty-coefficients",
            Error::ZeroLeadingCoefficient => "zero-leading-coefficient",
            Error::InitialsLength { .. } => "initials-length",
            Error::IndexBelowFloor { .. } => "index-below-floor",
            Error::InvalidRange { .. } => "invalid-range",
            Error::OrderMismatch { .. } => "order-mismatch",
            Error::CoefficientMismatch => "coefficient-mismatch",
            Error::ParseRational(_) => "parse-rational",
            Error::NotConverged { .. } => "not-converged",
            Error::AmbiguousClustering { .. } => "ambiguous-clustering",
            Error::SingularSystem => "singular-system",
            Error::Precondition(_) => "precondition",
            Error::UnknownIdentity(_) => "unknown-identity",
            Error::NonInteger(_) => "non-integer",
            Error::InsufficientRows { .. } => "insufficient-rows",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyCoefficients => write!(f, "coefficient set is empty"),
            Error::ZeroLeadingCoefficient => {
                write!(f, "last coefficient p_r is zero; the impulse response sequence is undefined")
            }
            Error::InitialsLength { expected, found } => {
                write!(f, "expected {expected} initial values, found {found}")
            }
            Error::IndexBelowFloor { index, floor } => {
                write!(f, "index {index} is below the backward-extension floor {floor}")
            }
            Error::InvalidRange { lo, hi } => write!(f, "invalid range {lo}..{hi}"),
            Error::OrderMismatch { expected, found } => {
                write!(f, "expected a recurrence of order {expected}, found order {found}")
            }
            Error::CoefficientMismatch => write!(f, "sequences use different coefficient sets"),
            Error::ParseRational(s) => write!(f, "malformed rational {s:?}"),
            Error::NotConverged { iterations, precision_bits } => write!(
                f,
                "root iteration did not converge after {iterations} iterations at {precision_bits} bits; raise the precision"
            ),
            Error::AmbiguousClustering { precision_bits } => write!(
                f,
                "distinct roots are closer than the clustering radius at {precision_bits} bits"
            ),
            Error::SingularSystem => write!(f, "linear system is singular (determinant 0)"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::UnknownIdentity(name) => write!(f, "unknown identity {name:?}"),
            Error::NonInteger(msg) => write!(f, "integer input required: {msg}"),
            Error::InsufficientRows { rows, bound } => {
                write!(f, "{rows} rows cannot cover every integer up to {bound}")
            }
        }
    }
}

impl core::error::Error for Error {}
