//! Initial states, their projection onto bound states, and time evolution.
//!
//! Finite-well coefficients evolve as `c_n exp(-8 i alpha_n^2 tau / pi)`.
//! The infinite well of the same length is kept alongside as a reference; its
//! basis is `sqrt(2) cos(n pi xbar)` for odd `n` and `sqrt(2) sin(n pi xbar)`
//! for even `n`, with phases `exp(-2 pi i n^2 tau)`.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::quadrature::Integrator;
use crate::spectrum::{state_overlap, subdivide, Spectrum};

/// Below this completeness the bound states no longer represent the packet.
pub const COMPLETENESS_WARNING: f64 = 0.999;
/// Truncation target for the infinite-well expansion.
pub const INFINITE_WELL_NORM_TARGET: f64 = 1.0 - 1e-10;
pub const INFINITE_WELL_MAX_TERMS: usize = 512;
/// Gaussian support cut, in widths; the amplitude is below `e^-200` beyond.
const SUPPORT_WIDTHS: f64 = 20.0;
// Overlap integrals stop at 1e-12 absolute: evaluating cos(2 alpha x) for
// alpha ~ 1e4 already carries noise near that level.
const OVERLAP_ABS_TOL: f64 = 1e-12;

/// Zero-momentum Gaussian `B exp(-(xbar - x0)^2 / (2 sigma^2))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianSpec {
    pub x0: f64,
    pub sigma: f64,
}

impl GaussianSpec {
    pub fn new(x0: f64, sigma: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(invalid(format!("packet width must be positive, got {sigma}")));
        }
        if !(x0.is_finite() && x0.abs() < 0.5) {
            return Err(invalid(format!("packet center must lie inside the well, got {x0}")));
        }
        Ok(GaussianSpec { x0, sigma })
    }

    /// Unnormalized profile.
    pub fn profile(&self, xbar: f64) -> f64 {
        let d = (xbar - self.x0) / self.sigma;
        (-0.5 * d * d).exp()
    }

    fn support(&self) -> (f64, f64) {
        (
            self.x0 - SUPPORT_WIDTHS * self.sigma,
            self.x0 + SUPPORT_WIDTHS * self.sigma,
        )
    }

    /// Normalization constant over `lo..hi`, by quadrature.
    fn normalization_on(&self, lo: f64, hi: f64) -> Result<f64> {
        let points = subdivide(lo, hi, self.sigma);
        let mass = Integrator::default().integrate_pieces(&|x| self.profile(x).powi(2), &points)?;
        Ok(1.0 / mass.value.sqrt())
    }

    /// Normalization constant `B` over the real line.
    pub fn normalization(&self) -> Result<f64> {
        let (lo, hi) = self.support();
        self.normalization_on(lo, hi)
    }
}

/// What the packet starts as.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialState {
    Gaussian(GaussianSpec),
    /// A bound state of the well, by position in the spectrum (0-based).
    Eigenstate(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompletenessWarning {
    pub completeness: f64,
}

impl fmt::Display for CompletenessWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bound states capture only {:.6} of the packet norm (< {}); continuum leakage is not negligible",
            self.completeness, COMPLETENESS_WARNING
        )
    }
}

/// Expansion coefficients of an initial state over a list of bound states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralDecomposition {
    pub coefficients: Vec<Complex64>,
    /// `sum |c_n|^2`.
    pub completeness: f64,
    pub warning: Option<CompletenessWarning>,
}

impl SpectralDecomposition {
    pub fn from_coefficients(coefficients: Vec<Complex64>) -> Self {
        let completeness = coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>();
        let warning = (completeness < COMPLETENESS_WARNING).then_some(CompletenessWarning { completeness });
        SpectralDecomposition {
            coefficients,
            completeness,
            warning,
        }
    }

    /// `|c_n|^2`.
    pub fn weights(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Weighted mean of the 1-based level index.
    pub fn mean_index(&self) -> f64 {
        let w = self.weights();
        let total: f64 = w.iter().sum();
        w.iter().enumerate().map(|(i, w)| (i + 1) as f64 * w).sum::<f64>() / total
    }
}

fn check_aligned(decomp: &SpectralDecomposition, spectrum: &Spectrum) -> Result<()> {
    if decomp.coefficients.len() != spectrum.len() {
        return Err(invalid(format!(
            "decomposition has {} coefficients for {} states",
            decomp.coefficients.len(),
            spectrum.len()
        )));
    }
    Ok(())
}

/// Projects a Gaussian onto the bound states: `c_n = <phi_n|psi_0>`.
///
/// Completeness below [`COMPLETENESS_WARNING`] is flagged in the result.
pub fn project(spec: &GaussianSpec, spectrum: &Spectrum) -> Result<SpectralDecomposition> {
    let b = spec.normalization()?;
    let x_max = 0.5 + (10.0 * spec.sigma).max(25.0 / (2.0 * spectrum.min_beta()));
    let (lo, hi) = spec.support();
    let (lo, hi) = (lo.max(-x_max), hi.min(x_max));

    let coefficients = spectrum
        .states
        .par_iter()
        .map(|state| {
            let mut points = Vec::new();
            if lo < -0.5 {
                points.extend(subdivide(lo, -0.5, spec.sigma));
                points.pop();
            }
            let (a, z) = (lo.max(-0.5), hi.min(0.5));
            if a < z {
                let spacing = spec.sigma.min(FRAC_PI_2 / state.alpha.max(1.0));
                points.extend(subdivide(a, z, spacing));
            }
            if hi > 0.5 {
                points.pop();
                points.extend(subdivide(0.5, hi, spec.sigma));
            }
            let est = Integrator::new(1e-10, OVERLAP_ABS_TOL)
                .integrate_pieces(&|x| state.value(x) * spec.profile(x), &points)?;
            Ok(Complex64::new(b * est.value, 0.0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectralDecomposition::from_coefficients(coefficients))
}

pub fn project_state(initial: &InitialState, spectrum: &Spectrum) -> Result<SpectralDecomposition> {
    match initial {
        InitialState::Gaussian(spec) => project(spec, spectrum),
        InitialState::Eigenstate(k) => {
            let target = spectrum
                .states
                .get(*k)
                .ok_or_else(|| invalid(format!("no bound state at position {k}")))?;
            let coefficients = spectrum
                .states
                .iter()
                .map(|s| state_overlap(s, target).map(|v| Complex64::new(v, 0.0)))
                .collect::<Result<Vec<_>>>()?;
            Ok(SpectralDecomposition::from_coefficients(coefficients))
        }
    }
}

/// `c_n(tau) = c_n exp(-i theta_n tau)` with `theta_n = 8 alpha_n^2 / pi`.
pub fn evolve(decomp: &SpectralDecomposition, spectrum: &Spectrum, tau: f64) -> Result<Vec<Complex64>> {
    check_aligned(decomp, spectrum)?;
    Ok(decomp
        .coefficients
        .iter()
        .zip(&spectrum.states)
        .map(|(c, s)| c * Complex64::from_polar(1.0, -s.phase_rate() * tau))
        .collect())
}

/// `<psi(0)|psi(tau)>` for a finite-well packet.
pub fn overlap_at(decomp: &SpectralDecomposition, spectrum: &Spectrum, tau: f64) -> Result<Complex64> {
    let evolved = evolve(decomp, spectrum, tau)?;
    Ok(decomp
        .coefficients
        .iter()
        .zip(&evolved)
        .map(|(c0, ct)| c0.conj() * ct)
        .sum())
}

/// Probability density `|psi(xbar, tau)|^2` sampled on `grid`.
pub fn snapshot(
    decomp: &SpectralDecomposition,
    spectrum: &Spectrum,
    tau: f64,
    grid: &[f64],
) -> Result<Vec<f64>> {
    if grid.iter().any(|x| !x.is_finite()) || grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(invalid("snapshot grid must be finite and sorted"));
    }
    let evolved = evolve(decomp, spectrum, tau)?;
    Ok(grid
        .par_iter()
        .map(|&x| {
            evolved
                .iter()
                .zip(&spectrum.states)
                .map(|(c, s)| c * s.value(x))
                .sum::<Complex64>()
                .norm_sqr()
        })
        .collect())
}

/// Infinite-well basis function `n >= 1` on the centered well.
pub fn infinite_basis(n: usize, xbar: f64) -> f64 {
    if xbar.abs() > 0.5 {
        return 0.0;
    }
    let k = n as f64 * PI * xbar;
    if n % 2 == 1 {
        SQRT_2 * k.cos()
    } else {
        SQRT_2 * k.sin()
    }
}

/// A packet in the infinite well; `coefficients[i]` belongs to `n = i + 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfiniteWellState {
    pub coefficients: Vec<Complex64>,
}

impl InfiniteWellState {
    pub fn n_max(&self) -> usize {
        self.coefficients.len()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coefficients.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn weights(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.norm_sqr()).collect()
    }

    /// `2 pi n^2` for each retained level.
    pub fn phase_rates(&self) -> Vec<f64> {
        (1..=self.n_max()).map(|n| 2.0 * PI * (n * n) as f64).collect()
    }

    /// `<self|other>`.
    pub fn overlap(&self, other: &InfiniteWellState) -> Complex64 {
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn value(&self, xbar: f64) -> Complex64 {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c * infinite_basis(i + 1, xbar))
            .sum()
    }
}

fn infinite_coefficient(spec: &GaussianSpec, b: f64, n: usize) -> Result<f64> {
    let (lo, hi) = spec.support();
    let (lo, hi) = (lo.max(-0.5), hi.min(0.5));
    let spacing = spec.sigma.min(1.0 / n as f64);
    let est = Integrator::new(1e-10, OVERLAP_ABS_TOL).integrate_pieces(
        &|x| infinite_basis(n, x) * spec.profile(x),
        &subdivide(lo, hi, spacing),
    )?;
    Ok(b * est.value)
}

/// Expands a Gaussian, restricted to and normalized on the well, in the
/// infinite-well basis. Terms are added until the retained norm reaches
/// `1 - 1e-10` or 512 terms are used.
pub fn infinite_project(spec: &GaussianSpec) -> Result<InfiniteWellState> {
    let b = spec.normalization_on(-0.5, 0.5)?;
    let mut coefficients = Vec::new();
    let mut norm = 0.0;
    for n in 1..=INFINITE_WELL_MAX_TERMS {
        let c = infinite_coefficient(spec, b, n)?;
        norm += c * c;
        coefficients.push(Complex64::new(c, 0.0));
        if norm >= INFINITE_WELL_NORM_TARGET {
            break;
        }
    }
    Ok(InfiniteWellState { coefficients })
}

/// Same expansion with a fixed number of terms.
pub fn infinite_project_terms(spec: &GaussianSpec, n_max: usize) -> Result<InfiniteWellState> {
    let b = spec.normalization_on(-0.5, 0.5)?;
    let coefficients = (1..=n_max)
        .map(|n| infinite_coefficient(spec, b, n).map(|c| Complex64::new(c, 0.0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(InfiniteWellState { coefficients })
}

/// Applies `exp(-2 pi i n^2 tau)` to each coefficient.
pub fn infinite_evolve(state: &InfiniteWellState, tau: f64) -> InfiniteWellState {
    let coefficients = state
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let n = (i + 1) as f64;
            // phase modulo 2 pi taken on n^2 tau to keep large tau accurate
            let cycles = (n * n * tau).rem_euclid(1.0);
            c * Complex64::from_polar(1.0, -2.0 * PI * cycles)
        })
        .collect();
    InfiniteWellState { coefficients }
}
