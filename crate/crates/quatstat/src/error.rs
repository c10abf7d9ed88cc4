//! Error type shared across the crate.

use std::fmt;

use crate::quat::Axis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug)]
pub enum Error {
    /// Incompatible matrix/vector dimensions.
    Shape(String),
    /// Input violates a required matrix structure (Hermitian, symmetric, ...).
    Structure(String),
    /// A matrix is not factorable under the requested scheme.
    NotFactorable(String),
    /// An iterative kernel failed to converge or a spectral pairing broke down.
    Numeric(String),
    /// Argument outside the operation's domain.
    Domain(String),
    /// Generator configuration that would produce a degenerate signal class.
    DegenerateConfig(String),
    /// Positive-definiteness required; carries the offending eigenvalue.
    RankDeficient { eigenvalue: f64 },
    /// Cayley-Dickson plane and wing axes must differ.
    InvalidAxes { plane: Axis, wing: Axis },
    /// A complex matrix does not carry the adjoint block structure.
    NotAdjoint(String),
    /// Text format violation (QMAT or CSV), with 1-based line number.
    Parse { line: usize, message: String },
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape(m) => write!(f, "shape error: {m}"),
            Error::Structure(m) => write!(f, "structure error: {m}"),
            Error::NotFactorable(m) => write!(f, "not factorable: {m}"),
            Error::Numeric(m) => write!(f, "numeric failure: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::DegenerateConfig(m) => write!(f, "degenerate configuration: {m}"),
            Error::RankDeficient { eigenvalue } => {
                write!(f, "rank deficiency: eigenvalue {eigenvalue:e} not positive")
            }
            Error::InvalidAxes { plane, wing } => {
                write!(f, "invalid axes: plane {plane} equals wing {wing}")
            }
            Error::NotAdjoint(m) => write!(f, "not an adjoint matrix: {m}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}
