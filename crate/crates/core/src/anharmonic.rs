//! Cubic anharmonic oscillator `H = mu1 (a+a)^2 + mu2 (a+a)^3`.
//!
//! Time is scaled by `t_rv = 2 pi hbar / mu1`, so level `n` advances its phase
//! by `2 pi (n^2 + beta n^3)` per unit time with `beta = mu2 / mu1`.
//! Coherent and squeezed initial states enter only through their Fock-state
//! weights `|c_n|^2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::revival::{autocorrelation, timescales, AutocorrSeries, Provenance, TimescaleHierarchy};
use crate::special::{hermite_signed_log, ln_factorials};

/// Largest Fock index considered.
pub const MAX_FOCK_CUTOFF: usize = 2048;
/// Weight mass a cutoff may discard.
pub const TAIL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorConfig {
    pub beta: f64,
    /// `None` picks the smallest even cutoff that keeps `1 - 1e-10` of the weight.
    pub fock_cutoff: Option<usize>,
}

impl OscillatorConfig {
    pub fn new(beta: f64, fock_cutoff: Option<usize>) -> Result<Self> {
        if !(beta.is_finite() && beta.abs() < 1.0) {
            return Err(invalid(format!("nonlinearity ratio must satisfy |beta| < 1, got {beta}")));
        }
        if fock_cutoff.is_some_and(|c| c > MAX_FOCK_CUTOFF) {
            return Err(invalid(format!("Fock cutoff above {MAX_FOCK_CUTOFF}")));
        }
        Ok(OscillatorConfig { beta, fock_cutoff })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FockSource {
    Coherent { alpha_re: f64, alpha_im: f64 },
    Squeezed { s: f64, alpha: f64 },
}

/// Normalized Fock-state weights of an initial state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FockWeights {
    /// `|c_n|^2` for `n = 0..=cutoff`, summing to 1.
    pub weights: Vec<f64>,
    pub mean_n: f64,
    pub source: FockSource,
    /// Weight discarded beyond the cutoff before renormalization.
    pub tail_mass: f64,
}

impl FockWeights {
    pub fn cutoff(&self) -> usize {
        self.weights.len() - 1
    }
}

/// Cuts `raw` (unnormalized weights whose full sum is 1) at `cutoff`, or at the
/// smallest even index that keeps all but `TAIL_TOLERANCE`, and renormalizes.
fn truncate(raw: Vec<f64>, cutoff: Option<usize>, source: FockSource) -> Result<FockWeights> {
    let mut cumulative = Vec::with_capacity(raw.len());
    let mut acc = 0.0;
    for w in &raw {
        acc += w;
        cumulative.push(acc);
    }
    let cut = match cutoff {
        Some(c) => c.min(raw.len() - 1),
        None => (0..raw.len())
            .step_by(2)
            .find(|&n| cumulative[n] >= 1.0 - TAIL_TOLERANCE)
            .unwrap_or(raw.len() - 1),
    };
    let tail = (1.0 - cumulative[cut]).max(0.0);
    if tail > TAIL_TOLERANCE {
        return Err(Error::CutoffTooSmall { cutoff: cut, tail });
    }
    let kept = cumulative[cut];
    let weights: Vec<f64> = raw[..=cut].iter().map(|w| w / kept).collect();
    let mean_n = weights.iter().enumerate().map(|(n, w)| n as f64 * w).sum();
    Ok(FockWeights {
        weights,
        mean_n,
        source,
        tail_mass: tail,
    })
}

/// Poissonian weights `|alpha|^{2n} e^{-|alpha|^2} / n!`, evaluated in log space.
///
/// An explicit `cutoff` must be at least `10 (1 + |alpha|^2)`.
pub fn coherent_weights(alpha: Complex64, cutoff: Option<usize>) -> Result<FockWeights> {
    if !(alpha.re.is_finite() && alpha.im.is_finite()) {
        return Err(invalid("coherent amplitude must be finite"));
    }
    let mean = alpha.norm_sqr();
    if let Some(c) = cutoff {
        if (c as f64) < 10.0 * (1.0 + mean) {
            return Err(invalid(format!(
                "Fock cutoff {c} below 10 (1 + |alpha|^2) = {}",
                10.0 * (1.0 + mean)
            )));
        }
    }
    let len = cutoff.unwrap_or(MAX_FOCK_CUTOFF).min(MAX_FOCK_CUTOFF) + 1;
    let lf = ln_factorials(len);
    let raw = (0..len)
        .map(|n| {
            if n == 0 {
                (-mean).exp()
            } else if mean == 0.0 {
                0.0
            } else {
                (n as f64 * mean.ln() - mean - lf[n]).exp()
            }
        })
        .collect();
    truncate(
        raw,
        cutoff,
        FockSource::Coherent {
            alpha_re: alpha.re,
            alpha_im: alpha.im,
        },
    )
}

/// Squeeze parameter `s` to squeezing `r`, with `s = e^{2r}`.
pub fn squeeze_r(s: f64) -> f64 {
    0.5 * s.ln()
}

/// Squeezed-state weights
/// `2 sqrt(s) / ((s + 1) 2^n n!) ((s - 1)/(s + 1))^n H_n(s sqrt(2) alpha / sqrt(s^2 - 1))^2 exp(-2 s alpha^2 / (s + 1))`
/// for real displacement `alpha`, renormalized over the retained levels.
///
/// `s = 1` is the unsqueezed limit and returns the coherent weights.
pub fn squeezed_weights(s: f64, alpha: f64, cutoff: Option<usize>) -> Result<FockWeights> {
    if !(s.is_finite() && s >= 1.0) {
        return Err(invalid(format!("squeeze parameter must be >= 1, got {s}")));
    }
    if !alpha.is_finite() {
        return Err(invalid("displacement must be finite"));
    }
    if s == 1.0 {
        return coherent_weights(Complex64::new(alpha, 0.0), cutoff);
    }
    let len = cutoff.unwrap_or(MAX_FOCK_CUTOFF).min(MAX_FOCK_CUTOFF) + 1;
    let x = s * std::f64::consts::SQRT_2 * alpha / (s * s - 1.0).sqrt();
    let hermite = hermite_signed_log(len - 1, x);
    let lf = ln_factorials(len);
    let ln_prefactor = (2.0 * s.sqrt() / (s + 1.0)).ln() - 2.0 * s * alpha * alpha / (s + 1.0);
    let ln_ratio = ((s - 1.0) / (s + 1.0)).ln();
    let raw = (0..len)
        .map(|n| {
            let h = hermite[n];
            if h.sign == 0.0 {
                return 0.0;
            }
            let nf = n as f64;
            (ln_prefactor - nf * std::f64::consts::LN_2 - lf[n] + nf * ln_ratio + 2.0 * h.ln_abs).exp()
        })
        .collect();
    truncate(raw, cutoff, FockSource::Squeezed { s, alpha })
}

/// `2 pi (n^2 + beta n^3)` for `n = 0..len`.
pub fn oscillator_phase_rates(beta: f64, len: usize) -> Vec<f64> {
    (0..len)
        .map(|n| {
            let n = n as f64;
            2.0 * PI * (n * n + beta * n * n * n)
        })
        .collect()
}

pub fn oscillator_autocorr(weights: &FockWeights, beta: f64, tau_grid: &[f64]) -> Result<AutocorrSeries> {
    let rates = oscillator_phase_rates(beta, weights.weights.len());
    autocorrelation(&weights.weights, &rates, tau_grid, Provenance::Oscillator { beta })
}

/// Closed-form revival times next to the finite-difference hierarchy of the
/// same spectrum. The two agree for any weights because the spectrum is cubic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatorTimescales {
    pub mean_n: f64,
    /// `1 / (1 + 3 n_bar beta)`.
    pub revival: f64,
    /// `1 / |beta|`, infinite for `beta = 0`.
    pub superrevival: f64,
    pub hierarchy: TimescaleHierarchy,
}

pub fn oscillator_timescales(weights: &FockWeights, beta: f64) -> Result<OscillatorTimescales> {
    let len = weights.weights.len().max(4);
    let mut w = weights.weights.clone();
    w.resize(len, 0.0);
    let hierarchy = timescales(&w, &oscillator_phase_rates(beta, len), 0)?;
    Ok(OscillatorTimescales {
        mean_n: weights.mean_n,
        revival: 1.0 / (1.0 + 3.0 * weights.mean_n * beta).abs(),
        superrevival: if beta == 0.0 { f64::INFINITY } else { 1.0 / beta.abs() },
        hierarchy,
    })
}
