//! Phase-shift profiles and temporal fringe synthesis.
//!
//! A fringe sequence is the sampled interferometric intensity
//! `I(n) = a + b cos(phi + omega0*n + delta(n))` for `n = 0..N-1`, where
//! `phi` is the measurand, `omega0` the linear carrier frequency in radians
//! per sample and `delta(n)` the phase-shifter nonlinearity. All types here
//! are immutable after construction, so every operation is a pure function
//! that is safe to call concurrently.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::wrap_phase;

/// Smallest number of temporal samples any profile or window may have.
pub const MIN_STEPS: usize = 3;

/// The phase-shifter nonlinearity, either as polynomial coefficients in the
/// sample index (`delta(n) = sum_k coeffs[k] * n^k`) or as explicit samples.
///
/// Explicit samples cover the case where the nonlinearity was measured
/// rather than modelled; polynomials are expanded to samples at profile
/// construction, so downstream code never sees the distinction.
#[derive(Debug, Clone, PartialEq)]
pub enum DeltaSpec {
    Polynomial(Vec<f64>),
    Samples(Vec<f64>),
}

impl DeltaSpec {
    /// No nonlinearity: a purely linear carrier.
    pub fn zero() -> Self {
        DeltaSpec::Polynomial(vec![])
    }

    /// Quadratic nonlinearity `delta(n) = curvature * n^2`, the usual model
    /// for an open-loop piezo phase shifter.
    pub fn quadratic(curvature: f64) -> Self {
        DeltaSpec::Polynomial(vec![0.0, 0.0, curvature])
    }

    fn expand(&self, n_steps: usize) -> Result<Vec<f64>> {
        match self {
            DeltaSpec::Polynomial(coeffs) => Ok((0..n_steps)
                .map(|n| {
                    let x = n as f64;
                    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
                })
                .collect()),
            DeltaSpec::Samples(values) => {
                if values.len() != n_steps {
                    return Err(Error::LengthMismatch {
                        expected: n_steps,
                        actual: values.len(),
                    });
                }
                Ok(values.clone())
            }
        }
    }
}

/// The sampled carrier phase `omega0*n + delta(n)`, validated so that every
/// discrete phase increment stays inside the open interval (0, pi).
///
/// `delta(0)` is forced to zero at construction by subtracting the leading
/// sample from the whole sequence: a constant offset in the nonlinearity is
/// indistinguishable from the measurand, and normalising it out keeps piston
/// attribution unambiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseShiftProfile {
    omega0: f64,
    delta: Vec<f64>,
    total_phase: Vec<f64>,
}

impl PhaseShiftProfile {
    pub fn new(omega0: f64, delta: &DeltaSpec, n_steps: usize) -> Result<Self> {
        if n_steps < MIN_STEPS {
            return Err(Error::TooFewSteps {
                required: MIN_STEPS,
                actual: n_steps,
            });
        }
        if !(omega0 > 0.0 && omega0 < PI) {
            return Err(Error::InvalidOmega0(omega0));
        }
        let mut delta = delta.expand(n_steps)?;
        let offset = delta[0];
        for d in &mut delta {
            *d -= offset;
        }
        let total_phase: Vec<f64> = delta
            .iter()
            .enumerate()
            .map(|(n, d)| omega0 * n as f64 + d)
            .collect();
        // Discrete derivative constraint; NaN increments fail both comparisons.
        for n in 0..n_steps - 1 {
            let increment = total_phase[n + 1] - total_phase[n];
            if !(increment > 0.0 && increment < PI) {
                return Err(Error::DerivativeOutOfRange {
                    index: n,
                    increment,
                });
            }
        }
        Ok(Self {
            omega0,
            delta,
            total_phase,
        })
    }

    /// Purely linear carrier at `omega0`.
    pub fn linear(omega0: f64, n_steps: usize) -> Result<Self> {
        Self::new(omega0, &DeltaSpec::zero(), n_steps)
    }

    pub fn n_steps(&self) -> usize {
        self.total_phase.len()
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    /// Nonlinearity samples, `delta[0] == 0` by construction.
    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    /// Precomputed `omega0*n + delta(n)`.
    pub fn total_phase(&self) -> &[f64] {
        &self.total_phase
    }
}

/// Background, modulation and measurand of a fringe signal.
///
/// The measurand is stored wrapped to (-pi, pi]; unwrapped values are
/// accepted at input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeParams {
    background: f64,
    modulation: f64,
    phi: f64,
}

impl FringeParams {
    pub fn new(background: f64, modulation: f64, phi: f64) -> Result<Self> {
        if background < 0.0 || background.is_nan() {
            return Err(Error::NegativeParameter {
                name: "background",
                value: background,
            });
        }
        if modulation < 0.0 || modulation.is_nan() {
            return Err(Error::NegativeParameter {
                name: "modulation",
                value: modulation,
            });
        }
        if !phi.is_finite() {
            return Err(Error::NonFiniteParameter {
                name: "phi",
                value: phi,
            });
        }
        Ok(Self {
            background,
            modulation,
            phi: wrap_phase(phi),
        })
    }

    pub fn background(&self) -> f64 {
        self.background
    }

    pub fn modulation(&self) -> f64 {
        self.modulation
    }

    /// The measurand, wrapped to (-pi, pi].
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Additive white Gaussian noise with flat two-sided spectral density
/// `density/2` over [-pi, pi], i.e. per-sample variance `density/2`.
///
/// Generation is fully determined by the 64-bit seed: a ChaCha8 stream
/// feeding the standard-normal sampler. Bit-compatibility across library
/// versions is not guaranteed, only the statistical contract and
/// same-build determinism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    density: f64,
    seed: u64,
}

impl NoiseModel {
    pub fn new(density: f64, seed: u64) -> Result<Self> {
        if density < 0.0 || density.is_nan() {
            return Err(Error::NegativeDensity(density));
        }
        Ok(Self { density, seed })
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Same density, different seed. Used to advance Monte-Carlo trials.
    pub fn reseeded(&self, seed: u64) -> Self {
        Self {
            density: self.density,
            seed,
        }
    }

    /// Per-sample standard deviation, `sqrt(density/2)`.
    pub fn sigma(&self) -> f64 {
        (self.density() / 2.0).sqrt()
    }
}

/// A sampled fringe signal together with everything that generated it.
#[derive(Debug, Clone, PartialEq)]
pub struct FringeSequence {
    samples: Vec<f64>,
    profile: PhaseShiftProfile,
    params: FringeParams,
    noise: Option<NoiseModel>,
}

impl FringeSequence {
    /// Noiseless synthesis: `samples[n] = a + b cos(phi + total_phase[n])`.
    pub fn synthesize(profile: &PhaseShiftProfile, params: FringeParams) -> Self {
        let samples = profile
            .total_phase()
            .iter()
            .map(|&tp| params.background + params.modulation * (params.phi + tp).cos())
            .collect();
        Self {
            samples,
            profile: profile.clone(),
            params,
            noise: None,
        }
    }

    /// Wrap externally sourced intensity samples (e.g. CSV import) with the
    /// profile and parameters they are known to correspond to. No bound
    /// check is applied to the samples, since imported data may be noisy.
    pub fn from_parts(
        profile: &PhaseShiftProfile,
        params: FringeParams,
        samples: Vec<f64>,
    ) -> Result<Self> {
        if samples.len() != profile.n_steps() {
            return Err(Error::LengthMismatch {
                expected: profile.n_steps(),
                actual: samples.len(),
            });
        }
        Ok(Self {
            samples,
            profile: profile.clone(),
            params,
            noise: None,
        })
    }

    /// Return a new sequence with i.i.d. zero-mean Gaussian noise of variance
    /// `density/2` added to every sample; the original is untouched. The
    /// output is a pure function of `(self, noise)`.
    pub fn add_awgn(&self, noise: &NoiseModel) -> FringeSequence {
        let mut rng = ChaCha8Rng::seed_from_u64(noise.seed());
        let sigma = noise.sigma();
        let samples = self
            .samples
            .iter()
            .map(|&s| {
                let z: f64 = StandardNormal.sample(&mut rng);
                s + sigma * z
            })
            .collect();
        Self {
            samples,
            profile: self.profile.clone(),
            params: self.params,
            noise: Some(*noise),
        }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn profile(&self) -> &PhaseShiftProfile {
        &self.profile
    }

    pub fn params(&self) -> &FringeParams {
        &self.params
    }

    /// The noise model actually applied, if any.
    pub fn noise(&self) -> Option<&NoiseModel> {
        self.noise.as_ref()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}
