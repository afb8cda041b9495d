//! Crate-wide error type.
//!
//! Every variant's display string starts with the variant name so that a
//! one-line diagnostic (e.g. from the CLI) is grep-able back to the failing
//! contract.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("InvalidOmega0: carrier frequency {0} rad/sample is outside (0, pi)")]
    InvalidOmega0(f64),

    /// The discrete phase increment between two consecutive samples left the
    /// open interval (0, pi). `index` is the first offending step, i.e. the
    /// increment from sample `index` to `index + 1`.
    #[error("DerivativeOutOfRange: phase increment {increment} from step {index} to {next} is outside (0, pi)", next = index + 1)]
    DerivativeOutOfRange { index: usize, increment: f64 },

    #[error("LengthMismatch: expected {expected} samples, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("TooFewSteps: need at least {required} steps, got {actual}")]
    TooFewSteps { required: usize, actual: usize },

    #[error("NonpositiveG: gaussian window sharpness must be > 0, got {0}")]
    NonpositiveG(f64),

    #[error("NegativeDensity: noise spectral density must be >= 0, got {0}")]
    NegativeDensity(f64),

    #[error("NegativeParameter: {name} must be >= 0, got {value}")]
    NegativeParameter { name: &'static str, value: f64 },

    #[error("NonFiniteParameter: {name} must be finite, got {value}")]
    NonFiniteParameter { name: &'static str, value: f64 },

    #[error("InfeasibleConstraints: the zero-leakage system admits no nontrivial solution")]
    InfeasibleConstraints,

    #[error("GridTooCoarse: frequency grid needs at least {required} points, got {actual}")]
    GridTooCoarse { required: usize, actual: usize },

    #[error("EmptySpectrum: the spectrum holds no samples")]
    EmptySpectrum,

    #[error("InvalidGrid: {0}")]
    InvalidGrid(String),

    #[error("ZeroNormalizer: the fundamental response is zero, harmonic response undefined")]
    ZeroNormalizer,

    #[error("InvalidHarmonic: harmonic order must be a nonzero integer")]
    InvalidHarmonic,

    #[error("NotLinearReference: operation requires a linear-reference PSA")]
    NotLinearReference,

    #[error("ZeroSum: piston would be the argument of a numerically zero sum")]
    ZeroSum,

    #[error("LowAmplitude: demodulated amplitude {amplitude:.3e} is unreliable (floor {floor:.3e}); phase undefined")]
    LowAmplitude { amplitude: f64, floor: f64 },

    #[error("NonpositiveInput: {name} must be > 0, got {value}")]
    NonpositiveInput { name: &'static str, value: f64 },

    #[error("TooFewProbes: phase-error sweep needs at least {required} probes, got {actual}")]
    TooFewProbes { required: usize, actual: usize },

    #[error("TooFewTrials: Monte Carlo estimate needs at least {required} trials, got {actual}")]
    TooFewTrials { required: usize, actual: usize },

    #[error("CsvFormat: record {record}: {message}")]
    CsvFormat { record: usize, message: String },

    #[error("Csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("Io: {0}")]
    Io(#[from] std::io::Error),
}
