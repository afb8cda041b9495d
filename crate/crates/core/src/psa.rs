//! Phase-stepping algorithms: apodizing windows and complex coefficient sets.
//!
//! A PSA is a set of N complex coefficients `c_n` applied to the intensity
//! samples, producing the analytic signal `sum_n c_n * I(n)`. The reference
//! phase enters conjugated: a synchronous (nonlinear-reference) PSA uses
//! `c_n = w_n * exp(-i * (omega0*n + delta(n)))` with a real window `w_n`,
//! and a linear-reference PSA uses `c_n = d_n * exp(-i * omega0 * n)` with
//! free complex `d_n`. With that convention the analytic signal of
//! `a + b cos(phi + theta_n)` expands to
//!
//! ```text
//! a * sum c_n  +  (b/2) e^{i phi} sum c_n e^{i theta_n}
//!              +  (b/2) e^{-i phi} sum c_n e^{-i theta_n}
//! ```
//!
//! so the first and third sums are the dc and conjugate leakage residuals;
//! both must vanish for exact recovery of `phi`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::fringe::{PhaseShiftProfile, MIN_STEPS};

/// Window family tag, kept for provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowKind {
    Square,
    Gaussian { sharpness: f64 },
    Custom,
}

/// Real apodizing weights shaping a PSA's frequency response.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    weights: Vec<f64>,
    kind: WindowKind,
}

impl Window {
    /// All weights 1.
    pub fn square(n_steps: usize) -> Result<Self> {
        if n_steps < MIN_STEPS {
            return Err(Error::TooFewSteps {
                required: MIN_STEPS,
                actual: n_steps,
            });
        }
        Ok(Self {
            weights: vec![1.0; n_steps],
            kind: WindowKind::Square,
        })
    }

    /// `w_n = exp(-sharpness * (n - (N-1)/2)^2)`, symmetric about the centre;
    /// the centre weight is exactly 1 for odd N.
    ///
    /// Typical sharpness values are below 1; larger values are permitted but
    /// flagged by [`Window::sharpness_warning`].
    pub fn gaussian(n_steps: usize, sharpness: f64) -> Result<Self> {
        if n_steps < MIN_STEPS {
            return Err(Error::TooFewSteps {
                required: MIN_STEPS,
                actual: n_steps,
            });
        }
        if sharpness <= 0.0 || sharpness.is_nan() {
            return Err(Error::NonpositiveG(sharpness));
        }
        let centre = 0.5 * (n_steps - 1) as f64;
        let weights = (0..n_steps)
            .map(|n| {
                let x = n as f64 - centre;
                (-sharpness * x * x).exp()
            })
            .collect();
        Ok(Self {
            weights,
            kind: WindowKind::Gaussian { sharpness },
        })
    }

    /// Arbitrary real weights. Negative weights are legal (the weights only
    /// need to be real); non-finite ones are not.
    pub fn custom(weights: Vec<f64>) -> Result<Self> {
        if weights.len() < MIN_STEPS {
            return Err(Error::TooFewSteps {
                required: MIN_STEPS,
                actual: weights.len(),
            });
        }
        for &w in &weights {
            if !w.is_finite() {
                return Err(Error::NonFiniteParameter {
                    name: "window weight",
                    value: w,
                });
            }
        }
        Ok(Self {
            weights,
            kind: WindowKind::Custom,
        })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> WindowKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// True for Gaussian windows with sharpness >= 1, where so few samples
    /// carry weight that the effective step count collapses.
    pub fn sharpness_warning(&self) -> bool {
        matches!(self.kind, WindowKind::Gaussian { sharpness } if sharpness >= 1.0)
    }
}

/// Which reference phase a PSA's coefficients embed.
#[derive(Debug, Clone, PartialEq)]
pub enum ReferenceKind {
    Linear { omega0: f64 },
    Nonlinear { profile: PhaseShiftProfile },
}

/// Complex leakage residuals of a PSA against a profile: `dc = sum c_n` and
/// `conjugate = sum c_n exp(-i total_phase[n])`. Exact phase recovery
/// requires both to vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeakageResiduals {
    pub dc: Complex64,
    pub conjugate: Complex64,
}

/// A phase-stepping algorithm: N demodulation coefficients plus provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Psa {
    coefficients: Vec<Complex64>,
    reference: ReferenceKind,
    window: Option<Window>,
    d: Option<Vec<Complex64>>,
}

impl Psa {
    /// Synchronous nonlinear-reference PSA:
    /// `c_n = w_n * exp(-i total_phase[n])`.
    pub fn nonlinear(profile: &PhaseShiftProfile, window: &Window) -> Result<Self> {
        if window.len() != profile.n_steps() {
            return Err(Error::LengthMismatch {
                expected: profile.n_steps(),
                actual: window.len(),
            });
        }
        let coefficients = window
            .weights()
            .iter()
            .zip(profile.total_phase())
            .map(|(&w, &tp)| w * Complex64::cis(-tp))
            .collect();
        Ok(Self {
            coefficients,
            reference: ReferenceKind::Nonlinear {
                profile: profile.clone(),
            },
            window: Some(window.clone()),
            d: None,
        })
    }

    /// Linear-reference PSA: `c_n = d_n * exp(-i omega0 n)` with free complex
    /// coefficients `d_n`.
    pub fn linear(omega0: f64, d: Vec<Complex64>) -> Result<Self> {
        if !(omega0 > 0.0 && omega0 < PI) {
            return Err(Error::InvalidOmega0(omega0));
        }
        if d.len() < MIN_STEPS {
            return Err(Error::TooFewSteps {
                required: MIN_STEPS,
                actual: d.len(),
            });
        }
        let coefficients = d
            .iter()
            .enumerate()
            .map(|(n, dn)| dn * Complex64::cis(-omega0 * n as f64))
            .collect();
        Ok(Self {
            coefficients,
            reference: ReferenceKind::Linear { omega0 },
            window: None,
            d: Some(d),
        })
    }

    /// Linear-reference PSA whose `d_n` are a real window's weights. Keeps
    /// the window as provenance so like-for-like comparisons against
    /// [`Psa::nonlinear`] share the same envelope.
    pub fn linear_windowed(omega0: f64, window: &Window) -> Result<Self> {
        let d: Vec<Complex64> = window
            .weights()
            .iter()
            .map(|&w| Complex64::new(w, 0.0))
            .collect();
        let mut psa = Self::linear(omega0, d)?;
        psa.window = Some(window.clone());
        Ok(psa)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn reference(&self) -> &ReferenceKind {
        &self.reference
    }

    pub fn window(&self) -> Option<&Window> {
        self.window.as_ref()
    }

    /// The free complex coefficients of a linear-reference PSA.
    pub fn d_complex(&self) -> Option<&[Complex64]> {
        self.d.as_deref()
    }

    /// Leakage residuals against `profile`: `(sum c_n, sum c_n e^{-i tp_n})`.
    ///
    /// For a linear-reference PSA these equal
    /// `(sum d_n e^{-i omega0 n}, sum d_n e^{-i(2 omega0 n + delta_n)})`;
    /// for a windowed synchronous PSA they equal
    /// `(sum w_n e^{-i tp_n}, sum w_n e^{-2i tp_n})`.
    pub fn zero_leakage_residuals(&self, profile: &PhaseShiftProfile) -> Result<LeakageResiduals> {
        if self.len() != profile.n_steps() {
            return Err(Error::LengthMismatch {
                expected: profile.n_steps(),
                actual: self.len(),
            });
        }
        let dc = self.coefficients.iter().sum();
        let conjugate = self
            .coefficients
            .iter()
            .zip(profile.total_phase())
            .map(|(c, &tp)| c * Complex64::cis(-tp))
            .sum();
        Ok(LeakageResiduals { dc, conjugate })
    }
}
