//! Autocorrelation series, revival and superrevival detection, Taylor
//! timescales of a discrete spectrum, and revival-time reports.
//!
//! Everything here works on a generic discrete spectrum: level weights `w_n`
//! and phase rates `theta_n` (phase per unit of scaled time), so the same code
//! serves the finite well (`8 alpha_n^2 / pi`), the infinite well (`2 pi n^2`)
//! and the cubic oscillator (`2 pi n^2 + 2 pi beta n^3`).

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::spectrum::{barker, solve_spectrum, WellConfig, DEFAULT_ROOT_TOL};
use crate::wavepacket::{project, GaussianSpec};

/// Finest spacing detection windows must be sampled at.
pub const DETECTION_STEP: f64 = 1e-4;
/// Default spacing for long-horizon superrevival scans.
pub const SCAN_STEP: f64 = 1e-3;
/// Envelope fraction that counts as a (super)revival.
pub const SUPERREVIVAL_THRESHOLD: f64 = 0.95;
/// Peaks closer than this in relative height make a window ambiguous.
pub const AMBIGUITY_MARGIN: f64 = 0.01;
pub const DEFAULT_REFINE_TOL: f64 = 1e-9;

/// Weights and phase rates of a discrete spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscreteSpectrum {
    pub weights: Vec<f64>,
    pub phase_rates: Vec<f64>,
}

impl DiscreteSpectrum {
    pub fn new(weights: Vec<f64>, phase_rates: Vec<f64>) -> Result<Self> {
        if weights.len() != phase_rates.len() {
            return Err(invalid(format!(
                "{} weights but {} phase rates",
                weights.len(),
                phase_rates.len()
            )));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= 0.0)) {
            return Err(invalid("weights must be finite and nonnegative"));
        }
        if phase_rates.iter().any(|t| !t.is_finite()) {
            return Err(invalid("phase rates must be finite"));
        }
        Ok(DiscreteSpectrum {
            weights,
            phase_rates,
        })
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `sum_n w_n exp(-i theta_n tau)`.
    pub fn amplitude(&self, tau: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (w, theta) in self.weights.iter().zip(&self.phase_rates) {
            if *w != 0.0 {
                let (s, c) = (theta * tau).sin_cos();
                acc.re += w * c;
                acc.im -= w * s;
            }
        }
        acc
    }

    /// `|A(tau)|^2`.
    pub fn value(&self, tau: f64) -> f64 {
        self.amplitude(tau).norm_sqr()
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        DiscreteSpectrum::new(
            self.weights.iter().map(|w| w * factor).collect(),
            self.phase_rates.clone(),
        )
    }
}

/// Which system produced a series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "system", rename_all = "snake_case")]
pub enum Provenance {
    FiniteWell { epsilon: f64 },
    InfiniteWell,
    Oscillator { beta: f64 },
    Custom,
}

/// `|A(tau)|^2` sampled on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutocorrSeries {
    pub tau: Vec<f64>,
    pub values: Vec<f64>,
    pub provenance: Provenance,
    pub spectrum: DiscreteSpectrum,
}

impl AutocorrSeries {
    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn horizon(&self) -> f64 {
        *self.tau.last().unwrap_or(&0.0)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest spacing between consecutive samples within `[lo, hi]`.
    pub fn max_step_in(&self, lo: f64, hi: f64) -> f64 {
        let (a, b) = self.index_range(lo, hi);
        if b <= a {
            return f64::INFINITY;
        }
        self.tau[a..=b]
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(0.0, f64::max)
    }

    /// Inclusive index range of samples with `lo <= tau <= hi`.
    fn index_range(&self, lo: f64, hi: f64) -> (usize, usize) {
        let a = self.tau.partition_point(|t| *t < lo);
        let b = self.tau.partition_point(|t| *t <= hi);
        (a, b.saturating_sub(1))
    }

    /// Maximum over samples in `[lo, hi]`.
    pub fn max_in(&self, lo: f64, hi: f64) -> Option<f64> {
        let (a, b) = self.index_range(lo, hi);
        (a <= b && b < self.len()).then(|| self.values[a..=b].iter().copied().fold(f64::NEG_INFINITY, f64::max))
    }

    /// Minimum over samples in `[lo, hi]`.
    pub fn min_in(&self, lo: f64, hi: f64) -> Option<f64> {
        let (a, b) = self.index_range(lo, hi);
        (a <= b && b < self.len()).then(|| self.values[a..=b].iter().copied().fold(f64::INFINITY, f64::min))
    }
}

/// `start, start + step, ...` up to `end` (inclusive within rounding).
pub fn uniform_grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(invalid(format!("time step must be positive, got {step}")));
    }
    if !(start.is_finite() && end.is_finite() && end >= start) {
        return Err(invalid(format!("empty time range [{start}, {end}]")));
    }
    let n = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| start + i as f64 * step).collect())
}

/// Samples `|sum_n w_n exp(-i theta_n tau)|^2` over `tau_grid`.
pub fn autocorrelation(
    weights: &[f64],
    phase_rates: &[f64],
    tau_grid: &[f64],
    provenance: Provenance,
) -> Result<AutocorrSeries> {
    let spectrum = DiscreteSpectrum::new(weights.to_vec(), phase_rates.to_vec())?;
    series_from_spectrum(spectrum, tau_grid, provenance)
}

pub fn series_from_spectrum(
    spectrum: DiscreteSpectrum,
    tau_grid: &[f64],
    provenance: Provenance,
) -> Result<AutocorrSeries> {
    if tau_grid.is_empty() {
        return Err(invalid("empty time grid"));
    }
    if tau_grid.iter().any(|t| !t.is_finite()) || tau_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(invalid("time grid must be finite and strictly increasing"));
    }
    // drop empty levels once, they dominate squeezed-vacuum spectra
    let packed = DiscreteSpectrum {
        weights: spectrum.weights.iter().copied().filter(|w| *w != 0.0).collect(),
        phase_rates: spectrum
            .weights
            .iter()
            .zip(&spectrum.phase_rates)
            .filter(|(w, _)| **w != 0.0)
            .map(|(_, t)| *t)
            .collect(),
    };
    let values = tau_grid.par_iter().map(|&t| packed.value(t)).collect();
    Ok(AutocorrSeries {
        tau: tau_grid.to_vec(),
        values,
        provenance,
        spectrum,
    })
}

/// Successive parabolic refinement of a maximum near `tau`, bracket
/// half-width starting at `h` and shrinking until below `tol`.
fn refine_peak(spectrum: &DiscreteSpectrum, mut tau: f64, mut h: f64, tol: f64) -> f64 {
    for _ in 0..64 {
        if h < tol {
            break;
        }
        let (y0, y1, y2) = (spectrum.value(tau - h), spectrum.value(tau), spectrum.value(tau + h));
        let curvature = y0 - 2.0 * y1 + y2;
        if curvature < 0.0 {
            let shift = 0.5 * h * (y0 - y2) / curvature;
            tau += shift.clamp(-h, h);
        } else if y0 > y1 || y2 > y1 {
            tau += if y2 > y0 { h } else { -h };
            continue;
        }
        h *= 0.25;
    }
    tau
}

fn parabolic_vertex(series: &AutocorrSeries, i: usize) -> f64 {
    let (y0, y1, y2) = (series.values[i - 1], series.values[i], series.values[i + 1]);
    let curvature = y0 - 2.0 * y1 + y2;
    let t = series.tau[i];
    if curvature >= 0.0 {
        return t;
    }
    let left = t - series.tau[i - 1];
    let right = series.tau[i + 1] - t;
    let h = 0.5 * (left + right);
    t + (0.5 * h * (y0 - y2) / curvature).clamp(-left, right)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RevivalPeak {
    pub tau: f64,
    pub height: f64,
    /// Grid index of the sampled maximum.
    pub grid_index: usize,
    pub grid_step: f64,
    pub refine_tol: f64,
}

/// Locates the principal revival: the highest interior local maximum of the
/// series in `window`, refined by parabolic interpolation down to `refine_tol`.
///
/// Fails if a second peak in the window comes within 1% of the highest.
pub fn detect_revival(series: &AutocorrSeries, window: (f64, f64), refine_tol: f64) -> Result<RevivalPeak> {
    let (lo, hi) = window;
    if !(lo < hi) || series.is_empty() || lo < series.tau[0] || hi > series.horizon() {
        return Err(invalid(format!(
            "window [{lo}, {hi}] outside series range [{}, {}]",
            series.tau.first().copied().unwrap_or(f64::NAN),
            series.horizon()
        )));
    }
    if !(refine_tol > 0.0) {
        return Err(invalid("refinement tolerance must be positive"));
    }
    let step = series.max_step_in(lo, hi);
    if step > DETECTION_STEP * (1.0 + 1e-6) {
        return Err(Error::GridTooCoarse {
            required: DETECTION_STEP,
            actual: step,
        });
    }
    let (a, b) = series.index_range(lo, hi);
    let v = &series.values;
    let peaks: Vec<usize> = (a + 1..b).filter(|&i| v[i] > v[i - 1] && v[i] >= v[i + 1]).collect();
    let best = *peaks
        .iter()
        .max_by(|&&i, &&j| v[i].total_cmp(&v[j]))
        .ok_or(Error::NoInteriorPeak { lo, hi })?;
    if let Some(&rival) = peaks
        .iter()
        .filter(|&&i| i != best && v[i] >= (1.0 - AMBIGUITY_MARGIN) * v[best])
        .max_by(|&&i, &&j| v[i].total_cmp(&v[j]))
    {
        return Err(Error::AmbiguousWindow {
            lo,
            hi,
            first: series.tau[best],
            second: series.tau[rival],
        });
    }
    let coarse = parabolic_vertex(series, best);
    let tau = refine_peak(&series.spectrum, coarse, 0.5 * step, refine_tol);
    Ok(RevivalPeak {
        tau,
        height: series.spectrum.value(tau),
        grid_index: best,
        grid_step: step,
        refine_tol,
    })
}

/// Peak height of one revival cycle `[(k - 1/2) P, (k + 1/2) P)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopePoint {
    pub cycle: usize,
    pub tau: f64,
    pub height: f64,
    pub grid_index: usize,
}

/// Per-cycle peak heights over every complete cycle of period `period`.
pub fn revival_envelope(series: &AutocorrSeries, period: f64) -> Result<Vec<EnvelopePoint>> {
    if !(period > 0.0 && period.is_finite()) {
        return Err(invalid(format!("revival period must be positive, got {period}")));
    }
    let mut envelope = Vec::new();
    let mut start = 0;
    for cycle in 0.. {
        let end_tau = (cycle as f64 + 0.5) * period;
        if end_tau > series.horizon() {
            break;
        }
        let end = series.tau.partition_point(|t| *t < end_tau);
        if end > start {
            let (offset, height) = series.values[start..end]
                .iter()
                .enumerate()
                .fold((0, f64::NEG_INFINITY), |acc, (i, v)| if *v > acc.1 { (i, *v) } else { acc });
            envelope.push(EnvelopePoint {
                cycle,
                tau: series.tau[start + offset],
                height,
                grid_index: start + offset,
            });
        }
        start = end;
    }
    Ok(envelope)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Superrevival {
    pub tau: f64,
    pub height: f64,
    pub cycle: usize,
    /// First cycle whose peak fell below the threshold.
    pub dip_cycle: usize,
    pub envelope_max: f64,
    pub period: f64,
}

/// Finds the first revival cycle that, after at least one cycle below 95% of
/// the envelope maximum, climbs back to 95% or more.
///
/// `Ok(None)` when the envelope never dips. A dip without recovery, or fewer
/// than three complete cycles, is [`Error::HorizonTooShort`].
pub fn detect_superrevival(series: &AutocorrSeries, revival_period: f64) -> Result<Option<Superrevival>> {
    let envelope = revival_envelope(series, revival_period)?;
    if envelope.len() < 3 {
        return Err(Error::HorizonTooShort {
            horizon: series.horizon(),
            reason: format!("{} complete revival cycles, need at least 3", envelope.len()),
        });
    }
    let envelope_max = envelope.iter().map(|p| p.height).fold(f64::NEG_INFINITY, f64::max);
    let threshold = SUPERREVIVAL_THRESHOLD * envelope_max;
    let Some(dip) = envelope.iter().skip(1).find(|p| p.height < threshold) else {
        return Ok(None);
    };
    let Some(peak) = envelope.iter().find(|p| p.cycle > dip.cycle && p.height >= threshold) else {
        return Err(Error::HorizonTooShort {
            horizon: series.horizon(),
            reason: format!("envelope dipped at cycle {} and had not recovered", dip.cycle),
        });
    };
    let i = peak.grid_index;
    let tau = if i > 0 && i + 1 < series.len() {
        let step = 0.5 * (series.tau[i + 1] - series.tau[i - 1]);
        refine_peak(&series.spectrum, parabolic_vertex(series, i), 0.5 * step, DEFAULT_REFINE_TOL)
    } else {
        peak.tau
    };
    Ok(Some(Superrevival {
        tau,
        height: series.spectrum.value(tau),
        cycle: peak.cycle,
        dip_cycle: dip.cycle,
        envelope_max,
        period: revival_period,
    }))
}

/// Classical, revival and superrevival times of a spectrum around its mean level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimescaleHierarchy {
    pub mean_index: f64,
    pub first_derivative: f64,
    pub second_derivative: f64,
    pub third_derivative: f64,
    pub t_classical: f64,
    pub t_revival: f64,
    pub t_superrevival: f64,
}

// Relative size below which a difference counts as zero.
const DEGENERATE: f64 = 1e-14;

/// Derivatives of the level energies `E(n)` at the weighted mean level
/// `n_bar`, from the cubic through the four consecutive levels nearest
/// `n_bar`, and the timescales `2 pi / |E'|`, `2 pi / (|E''| / 2)`,
/// `2 pi / (|E'''| / 6)`.
///
/// `energies[i]` is the level `first_index + i`, in phase-per-unit-time units.
/// Exact for spectra up to cubic in `n`; vanishing derivatives give infinite
/// timescales.
pub fn timescales(weights: &[f64], energies: &[f64], first_index: usize) -> Result<TimescaleHierarchy> {
    if weights.len() != energies.len() {
        return Err(invalid("weights and energies must be aligned"));
    }
    if energies.len() < 4 {
        return Err(invalid(format!("need at least 4 levels, got {}", energies.len())));
    }
    let total: f64 = weights.iter().sum();
    if !(total > 0.0) || weights.iter().any(|w| *w < 0.0) {
        return Err(invalid("weights must be nonnegative with positive sum"));
    }
    let pos = weights.iter().enumerate().map(|(i, w)| i as f64 * w).sum::<f64>() / total;
    let k0 = ((pos.floor() as isize) - 1).clamp(0, energies.len() as isize - 4) as usize;
    let e = &energies[k0..k0 + 4];
    let t = pos - k0 as f64;
    let d1 = e[1] - e[0];
    let d2 = e[2] - 2.0 * e[1] + e[0];
    let d3 = e[3] - 3.0 * e[2] + 3.0 * e[1] - e[0];
    let first = d1 + 0.5 * (2.0 * t - 1.0) * d2 + (3.0 * t * t - 6.0 * t + 2.0) / 6.0 * d3;
    let second = d2 + (t - 1.0) * d3;
    let third = d3;

    let scale = e.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let time = |d: f64, factor: f64| {
        if d.abs() <= DEGENERATE * scale {
            f64::INFINITY
        } else {
            2.0 * PI / (factor * d.abs())
        }
    };
    Ok(TimescaleHierarchy {
        mean_index: first_index as f64 + pos,
        first_derivative: first,
        second_derivative: second,
        third_derivative: third,
        t_classical: time(first, 1.0),
        t_revival: time(second, 0.5),
        t_superrevival: time(third, 1.0 / 6.0),
    })
}

/// Sampling and detection settings for finite-well revival reports.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RevivalScan {
    /// Window around the effective-length prediction, as multiples of it.
    pub window_factors: (f64, f64),
    pub grid_step: f64,
    pub refine_tol: f64,
    pub superrevival: Option<SuperrevivalScan>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SuperrevivalScan {
    pub horizon: f64,
    pub step: f64,
}

impl Default for RevivalScan {
    fn default() -> Self {
        RevivalScan {
            window_factors: (0.9, 1.5),
            grid_step: DETECTION_STEP,
            refine_tol: DEFAULT_REFINE_TOL,
            superrevival: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SuperrevivalOutcome {
    Found { tau: f64, height: f64, cycle: usize },
    None,
    HorizonTooShort { horizon: f64, reason: String },
    NotRequested,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RevivalReport {
    pub epsilon: f64,
    pub x0: f64,
    pub sigma: f64,
    pub bound_states: usize,
    pub completeness: f64,
    pub completeness_warning: Option<String>,
    /// Detected principal revival time; `None` if detection failed.
    pub detected_revival: Option<f64>,
    pub revival_error: Option<String>,
    pub peak_height_at_revival: Option<f64>,
    /// Effective-length prediction `(1 + 1/epsilon)^2`.
    pub barker_predicted: f64,
    pub percent_error: Option<f64>,
    pub superrevival: SuperrevivalOutcome,
    pub window: (f64, f64),
    pub grid_step: f64,
    pub refine_tol: f64,
}

impl RevivalReport {
    pub fn detected_superrevival(&self) -> Option<f64> {
        match self.superrevival {
            SuperrevivalOutcome::Found { tau, .. } => Some(tau),
            _ => None,
        }
    }
}

/// Solve, project, sample and detect for one well.
pub fn well_revival_report(packet: &GaussianSpec, epsilon: f64, scan: &RevivalScan) -> Result<RevivalReport> {
    let config = WellConfig::new(epsilon)?;
    let spectrum = solve_spectrum(config, DEFAULT_ROOT_TOL)?;
    let decomp = project(packet, &spectrum)?;
    let dspec = DiscreteSpectrum::new(decomp.weights(), spectrum.phase_rates())?;
    let predicted = barker(config).approx_revival_time;
    let provenance = Provenance::FiniteWell { epsilon };

    let grid = uniform_grid(
        scan.window_factors.0 * predicted,
        scan.window_factors.1 * predicted,
        scan.grid_step,
    )?;
    let window = (grid[0], grid[grid.len() - 1]);
    let series = series_from_spectrum(dspec.clone(), &grid, provenance)?;
    let (detected, revival_error) = match detect_revival(&series, window, scan.refine_tol) {
        Ok(peak) => (Some(peak), None),
        Err(e @ (Error::AmbiguousWindow { .. } | Error::NoInteriorPeak { .. })) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };

    let superrevival = superrevival_outcome(dspec, predicted, scan.superrevival, provenance)?;

    Ok(RevivalReport {
        epsilon,
        x0: packet.x0,
        sigma: packet.sigma,
        bound_states: spectrum.len(),
        completeness: decomp.completeness,
        completeness_warning: decomp.warning.map(|w| w.to_string()),
        detected_revival: detected.map(|p| p.tau),
        revival_error,
        peak_height_at_revival: detected.map(|p| p.height),
        barker_predicted: predicted,
        percent_error: detected.map(|p| 100.0 * (p.tau - predicted).abs() / p.tau),
        superrevival,
        window,
        grid_step: scan.grid_step,
        refine_tol: scan.refine_tol,
    })
}

fn superrevival_outcome(
    spectrum: DiscreteSpectrum,
    period: f64,
    scan: Option<SuperrevivalScan>,
    provenance: Provenance,
) -> Result<SuperrevivalOutcome> {
    let Some(sr) = scan else {
        return Ok(SuperrevivalOutcome::NotRequested);
    };
    let long = series_from_spectrum(spectrum, &uniform_grid(0.0, sr.horizon, sr.step)?, provenance)?;
    match detect_superrevival(&long, period) {
        Ok(Some(s)) => Ok(SuperrevivalOutcome::Found {
            tau: s.tau,
            height: s.height,
            cycle: s.cycle,
        }),
        Ok(None) => Ok(SuperrevivalOutcome::None),
        Err(Error::HorizonTooShort { horizon, reason }) => Ok(SuperrevivalOutcome::HorizonTooShort { horizon, reason }),
        Err(e) => Err(e),
    }
}

/// Revival report for an arbitrary discrete spectrum with a known revival period.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRevivalReport {
    pub provenance: Provenance,
    pub predicted_revival: f64,
    pub detected_revival: Option<f64>,
    pub peak_height_at_revival: Option<f64>,
    pub revival_error: Option<String>,
    pub superrevival: SuperrevivalOutcome,
    pub window: (f64, f64),
    pub grid_step: f64,
    pub refine_tol: f64,
}

impl SpectrumRevivalReport {
    pub fn detected_superrevival(&self) -> Option<f64> {
        match self.superrevival {
            SuperrevivalOutcome::Found { tau, .. } => Some(tau),
            _ => None,
        }
    }
}

/// Detects the principal revival near `period` and, if requested, the first
/// superrevival of the envelope of revival peaks spaced by `period`.
pub fn spectrum_revival_report(
    spectrum: DiscreteSpectrum,
    period: f64,
    provenance: Provenance,
    scan: &RevivalScan,
) -> Result<SpectrumRevivalReport> {
    if !(period > 0.0 && period.is_finite()) {
        return Err(invalid(format!("revival period must be positive and finite, got {period}")));
    }
    let grid = uniform_grid(
        scan.window_factors.0 * period,
        scan.window_factors.1 * period,
        scan.grid_step,
    )?;
    let window = (grid[0], grid[grid.len() - 1]);
    let series = series_from_spectrum(spectrum.clone(), &grid, provenance)?;
    let (detected, revival_error) = match detect_revival(&series, window, scan.refine_tol) {
        Ok(peak) => (Some(peak), None),
        Err(e @ (Error::AmbiguousWindow { .. } | Error::NoInteriorPeak { .. })) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let superrevival = superrevival_outcome(spectrum, period, scan.superrevival, provenance)?;
    Ok(SpectrumRevivalReport {
        provenance,
        predicted_revival: period,
        detected_revival: detected.map(|p| p.tau),
        peak_height_at_revival: detected.map(|p| p.height),
        revival_error,
        superrevival,
        window,
        grid_step: scan.grid_step,
        refine_tol: scan.refine_tol,
    })
}

/// One report row per well strength, in the order given.
pub fn table1_report(packet: &GaussianSpec, epsilons: &[f64]) -> Result<Vec<RevivalReport>> {
    epsilons
        .iter()
        .map(|&eps| well_revival_report(packet, eps, &RevivalScan::default()))
        .collect()
}
