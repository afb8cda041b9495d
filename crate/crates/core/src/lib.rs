//! Synthesis of nonlinear phase-shifted interferometric fringes and design
//! of the phase-stepping algorithms (PSAs) that demodulate them.
//!
//! Temporal fringes `I(n) = a + b cos(phi + omega0*n + delta(n))` acquired
//! with an open-loop phase shifter carry a nonlinear phase trajectory
//! `delta(n)`. Demodulating them against a plain linear reference leaves a
//! spurious constant (piston) in the recovered phase; following the carrier
//! with a synchronous reference `exp(-i(omega0*n + delta(n)))` removes it.
//! This crate provides:
//!
//! - fringe models with seeded additive white Gaussian noise
//!   ([`fringe`]);
//! - windowed synchronous and linear-reference PSAs, their leakage
//!   residuals, and null-space design of zero-leakage coefficient sets
//!   ([`psa`], [`design`]);
//! - frequency transfer functions, fringe spectra, quadrature diagnostics
//!   and harmonic response ([`spectral`]);
//! - demodulation, piston prediction/measurement, phase-error sweeps,
//!   closed-form SNR and Monte-Carlo noise checks ([`demod`]);
//! - CSV import/export of every artifact ([`io`]).
//!
//! Everything is immutable after construction; all operations are pure
//! functions safe for concurrent use. Sweeps and Monte-Carlo loops
//! parallelise internally with deterministic per-probe/per-trial state, so
//! results never depend on scheduling.

pub mod demod;
pub mod design;
pub mod error;
pub mod fringe;
pub mod io;
pub mod psa;
pub mod spectral;

// Complex coefficients and analytic signals appear throughout the public
// API, so re-export the crate that defines them.
pub use num_complex;

pub use demod::{
    demodulate, measure_piston, monte_carlo_phase_variance, phase_error_sweep, predict_piston, snr,
    DemodResult, SnrReport, SweepResult,
};
pub use design::{design_linear_coefficients, design_window};
pub use error::{Error, Result};
pub use fringe::{
    DeltaSpec, FringeParams, FringeSequence, NoiseModel, PhaseShiftProfile, MIN_STEPS,
};
pub use psa::{LeakageResiduals, Psa, ReferenceKind, Window, WindowKind};
pub use spectral::{
    fringe_spectrum, ftf, harmonic_response, quadrature_check, FtfSpectrum, SpectrumReport,
    MIN_GRID,
};

use std::f64::consts::PI;

/// Wrap an angle to (-pi, pi].
pub fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}
