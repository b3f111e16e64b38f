use thiserror::Error;

/// Errors produced by the solvers, detectors and scenario machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("root in bracket [{lo}, {hi}] did not converge after {iterations} iterations")]
    RootNonConvergence { lo: f64, hi: f64, iterations: usize },

    #[error("quadrature on [{a}, {b}] did not reach tolerance (estimate {value:e}, error {error:e})")]
    QuadratureNonConvergence {
        a: f64,
        b: f64,
        value: f64,
        error: f64,
    },

    #[error("ambiguous revival window [{lo}, {hi}]: peaks at {first} and {second} are within 1% in height")]
    AmbiguousWindow {
        lo: f64,
        hi: f64,
        first: f64,
        second: f64,
    },

    #[error("no interior peak in window [{lo}, {hi}]")]
    NoInteriorPeak { lo: f64, hi: f64 },

    #[error("detection needs grid step <= {required}, series has {actual}")]
    GridTooCoarse { required: f64, actual: f64 },

    #[error("scan horizon {horizon} too short: {reason}")]
    HorizonTooShort { horizon: f64, reason: String },

    #[error("Fock cutoff {cutoff} leaves tail mass {tail:e} (> 1e-10)")]
    CutoffTooSmall { cutoff: usize, tail: f64 },

    #[error("scenario: {0}")]
    Scenario(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter(_) | Error::Scenario(_) | Error::CutoffTooSmall { .. } | Error::Io(_) => 2,
            Error::RootNonConvergence { .. } | Error::QuadratureNonConvergence { .. } => 3,
            Error::AmbiguousWindow { .. }
            | Error::NoInteriorPeak { .. }
            | Error::GridTooCoarse { .. }
            | Error::HorizonTooShort { .. } => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
