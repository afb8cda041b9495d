//! CSV import/export for fringes, PSAs, spectra and sweeps.
//!
//! All writers emit a header row and full round-trip decimal precision
//! (Rust's shortest round-trip float formatting), so files regenerate
//! byte-identically from identical inputs.

use std::io::{Read, Write};

use csv::{ReaderBuilder, Trim, WriterBuilder};

use crate::demod::SweepResult;
use crate::error::{Error, Result};
use crate::fringe::{FringeParams, FringeSequence, PhaseShiftProfile};
use crate::psa::Psa;
use crate::spectral::FtfSpectrum;

/// One fringe record: columns `n, delta, total_phase, intensity`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FringeRow {
    pub n: usize,
    pub delta: f64,
    pub total_phase: f64,
    pub intensity: f64,
}

/// Write a fringe sequence as `n, delta, total_phase, intensity`.
pub fn write_fringe_csv<W: Write>(writer: W, fringes: &FringeSequence) -> Result<()> {
    let mut out = WriterBuilder::new().from_writer(writer);
    out.write_record(["n", "delta", "total_phase", "intensity"])?;
    let profile = fringes.profile();
    for (n, &intensity) in fringes.samples().iter().enumerate() {
        out.write_record([
            n.to_string(),
            profile.delta()[n].to_string(),
            profile.total_phase()[n].to_string(),
            intensity.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Read fringe records written by [`write_fringe_csv`].
pub fn read_fringe_csv<R: Read>(reader: R) -> Result<Vec<FringeRow>> {
    let mut input = ReaderBuilder::new()
        .has_headers(true)
        .trim(Trim::All)
        .from_reader(reader);
    let mut rows = Vec::new();
    for (idx, record) in input.records().enumerate() {
        let record = record?;
        if record.len() != 4 {
            return Err(Error::CsvFormat {
                record: idx + 1,
                message: format!("expected 4 fields, got {}", record.len()),
            });
        }
        let field = |j: usize| -> Result<f64> {
            record[j].parse::<f64>().map_err(|e| Error::CsvFormat {
                record: idx + 1,
                message: format!("field {}: {e}", j + 1),
            })
        };
        let n = record[0].parse::<usize>().map_err(|e| Error::CsvFormat {
            record: idx + 1,
            message: format!("field 1: {e}"),
        })?;
        rows.push(FringeRow {
            n,
            delta: field(1)?,
            total_phase: field(2)?,
            intensity: field(3)?,
        });
    }
    Ok(rows)
}

/// Reconstruct a profile from imported fringe rows.
///
/// Rows must be complete and ordered (`n = 0, 1, ..`). The carrier frequency
/// is recovered from the second row (`total_phase[1] - delta[1]`) and every
/// row is checked against `total_phase = omega0 * n + delta` to 1e-9.
pub fn profile_from_rows(rows: &[FringeRow]) -> Result<PhaseShiftProfile> {
    for (idx, row) in rows.iter().enumerate() {
        if row.n != idx {
            return Err(Error::CsvFormat {
                record: idx + 1,
                message: format!("expected n={idx}, got n={}", row.n),
            });
        }
    }
    if rows.len() < 2 {
        return Err(Error::TooFewSteps {
            required: crate::fringe::MIN_STEPS,
            actual: rows.len(),
        });
    }
    let omega0 = rows[1].total_phase - rows[1].delta;
    for (idx, row) in rows.iter().enumerate() {
        let expected = omega0 * idx as f64 + row.delta;
        if (row.total_phase - expected).abs() > 1e-9 {
            return Err(Error::CsvFormat {
                record: idx + 1,
                message: format!(
                    "total_phase {} inconsistent with omega0*n + delta = {expected}",
                    row.total_phase
                ),
            });
        }
    }
    let delta: Vec<f64> = rows.iter().map(|r| r.delta).collect();
    PhaseShiftProfile::new(
        omega0,
        &crate::fringe::DeltaSpec::Samples(delta),
        rows.len(),
    )
}

/// Reconstruct a full fringe sequence from imported rows plus the fringe
/// parameters the intensities are known to correspond to.
pub fn fringes_from_rows(rows: &[FringeRow], params: FringeParams) -> Result<FringeSequence> {
    let profile = profile_from_rows(rows)?;
    let samples: Vec<f64> = rows.iter().map(|r| r.intensity).collect();
    FringeSequence::from_parts(&profile, params, samples)
}

/// Write a PSA as `n, weight, re_c, im_c`. The weight column holds the
/// window weight when the PSA carries one, otherwise the coefficient
/// modulus.
pub fn write_psa_csv<W: Write>(writer: W, psa: &Psa) -> Result<()> {
    let mut out = WriterBuilder::new().from_writer(writer);
    out.write_record(["n", "weight", "re_c", "im_c"])?;
    for (n, c) in psa.coefficients().iter().enumerate() {
        let weight = match psa.window() {
            Some(window) => window.weights()[n],
            None => c.norm(),
        };
        out.write_record([
            n.to_string(),
            weight.to_string(),
            c.re.to_string(),
            c.im.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Write a sampled spectrum as `omega, re, im, abs`.
pub fn write_spectrum_csv<W: Write>(writer: W, spec: &FtfSpectrum) -> Result<()> {
    let mut out = WriterBuilder::new().from_writer(writer);
    out.write_record(["omega", "re", "im", "abs"])?;
    for (&omega, value) in spec.omegas().iter().zip(spec.values()) {
        out.write_record([
            omega.to_string(),
            value.re.to_string(),
            value.im.to_string(),
            value.norm().to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Write a phase-error sweep as `phi, error`.
pub fn write_sweep_csv<W: Write>(writer: W, sweep: &SweepResult) -> Result<()> {
    let mut out = WriterBuilder::new().from_writer(writer);
    out.write_record(["phi", "error"])?;
    for (&phi, &error) in sweep.phis().iter().zip(sweep.errors()) {
        out.write_record([phi.to_string(), error.to_string()])?;
    }
    out.flush()?;
    Ok(())
}
