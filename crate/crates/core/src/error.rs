use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building spectra or solving for KS-times.
#[derive(Debug, Clone, PartialEq, Error, Serialize, Deserialize)]
pub enum Error {
    #[error("invalid unit system: {0}")]
    InvalidUnits(String),

    #[error("non-finite pole at index {index}: omega={omega}, gamma={gamma}")]
    NonFinitePole {
        index: usize,
        omega: f64,
        gamma: f64,
    },

    #[error("spectrum must contain at least one pole")]
    EmptySpectrum,

    #[error("Gamow spectrum needs at least one bath level, got N=0")]
    NoBathLevels,

    #[error("initial volume must lie in (0, 1], got {0}")]
    InvalidVolume(f64),

    #[error(
        "no positive KS-time: every pole width is <= 0 so the volume only contracts; \
         apply time_reverse to the spectrum and solve the time-reversed system"
    )]
    NoPositiveRoot,

    #[error("bisection did not converge within {iterations} iterations, bracket [{lo}, {hi}]")]
    NonConvergence { iterations: usize, lo: f64, hi: f64 },

    #[error("volume not representable as f64 at t={time}: ln(dV)={log_volume}")]
    VolumeOutOfRange { time: f64, log_volume: f64 },

    #[error("KS-entropy undefined for t0 = 0 (initial volume already spread)")]
    ZeroKsTime,

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("spectrum parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Short machine-readable tag, used in the `status` column of sweep output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidUnits(_) => "invalid_units",
            Error::NonFinitePole { .. } => "non_finite_pole",
            Error::EmptySpectrum => "empty_spectrum",
            Error::NoBathLevels => "no_bath_levels",
            Error::InvalidVolume(_) => "invalid_volume",
            Error::NoPositiveRoot => "no_positive_root",
            Error::NonConvergence { .. } => "non_convergence",
            Error::VolumeOutOfRange { .. } => "volume_out_of_range",
            Error::ZeroKsTime => "zero_ks_time",
            Error::InvalidConfig(_) => "invalid_config",
            Error::Parse { .. } => "parse_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
