//! Bound states of the symmetric finite square well.
//!
//! Positions are measured in units of the well length (`xbar = x / L`, the
//! well occupies `|xbar| <= 1/2`) and the only physical parameter left is the
//! well strength `epsilon = sqrt(m V0 L^2 / 2 hbar^2)`. A state with energy `E`
//! is labelled by `alpha = sqrt(m E L^2 / 2 hbar^2)` and
//! `beta = sqrt(epsilon^2 - alpha^2)`; inside the well it oscillates as
//! `cos(2 alpha xbar)` or `sin(2 alpha xbar)` and outside it decays as
//! `exp(-2 beta (|xbar| - 1/2))`.
//!
//! Even states satisfy `alpha tan(alpha) = beta`, odd states
//! `alpha cot(alpha) = -beta`. Both are solved on the pole-free forms
//! `beta cos(alpha) - alpha sin(alpha)` and `alpha cos(alpha) + beta sin(alpha)`
//! inside half-period brackets, which always hold exactly one root.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::quadrature::Integrator;
use crate::roots::{bisect, newton_polish};

const BISECTION_CAP: usize = 200;
const POLISH_STEPS: usize = 3;
/// States with `beta` below this, or whose root falls inside the truncation
/// gap just under `epsilon`, are kept but marked weakly bound.
pub const WEAK_BINDING_BETA: f64 = 1e-6;
/// Default root tolerance for [`solve_spectrum`].
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WellConfig {
    epsilon: f64,
}

impl WellConfig {
    pub fn new(epsilon: f64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 {
            return Err(invalid(format!(
                "well strength must be positive and finite, got {epsilon}"
            )));
        }
        Ok(WellConfig { epsilon })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// `floor(2 epsilon / pi) + 1`.
    pub fn predicted_state_count(&self) -> usize {
        (2.0 * self.epsilon / PI).floor() as usize + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `+1` for even, `-1` for odd: `phi(-x) = sign * phi(x)`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    /// 1-based, ordered by energy.
    pub index: usize,
    pub parity: Parity,
    pub alpha: f64,
    pub beta: f64,
    /// Numerically computed amplitude normalizing the state over the real line.
    pub norm: f64,
    /// The closed-form amplitude `sqrt(2 / (1 + 1/beta))`, kept for comparison.
    pub closed_form_norm: f64,
    pub weakly_bound: bool,
}

impl BoundState {
    pub fn epsilon(&self) -> f64 {
        self.alpha.hypot(self.beta)
    }

    /// Dimensionless energy `alpha^2`.
    pub fn energy(&self) -> f64 {
        self.alpha * self.alpha
    }

    /// Phase accumulated per unit of scaled time, `8 alpha^2 / pi`.
    pub fn phase_rate(&self) -> f64 {
        8.0 * self.alpha * self.alpha / PI
    }

    /// Wavefunction value at the right wall `xbar = 1/2`.
    pub fn edge_value(&self) -> f64 {
        match self.parity {
            Parity::Even => self.norm * self.alpha.cos(),
            Parity::Odd => self.norm * self.alpha.sin(),
        }
    }

    /// Residual of the transcendental equation in its tan/cot form.
    pub fn residual(&self) -> f64 {
        match self.parity {
            Parity::Even => (self.alpha * self.alpha.tan() - self.beta).abs(),
            Parity::Odd => (self.alpha / self.alpha.tan() + self.beta).abs(),
        }
    }

    /// Relative gap between the numerical and closed-form amplitudes.
    pub fn norm_discrepancy(&self) -> f64 {
        (self.norm - self.closed_form_norm).abs() / self.closed_form_norm
    }

    pub fn value(&self, xbar: f64) -> f64 {
        eigenfunction_value(self, xbar)
    }
}

/// Piecewise evaluation over the three regions, continuous at `xbar = ±1/2`.
pub fn eigenfunction_value(state: &BoundState, xbar: f64) -> f64 {
    let a = state.alpha;
    if xbar.abs() <= 0.5 {
        let k = 2.0 * a * xbar;
        match state.parity {
            Parity::Even => state.norm * k.cos(),
            Parity::Odd => state.norm * k.sin(),
        }
    } else {
        let tail = state.edge_value() * (-2.0 * state.beta * (xbar.abs() - 0.5)).exp();
        if xbar < 0.0 {
            state.parity.sign() * tail
        } else {
            tail
        }
    }
}

/// A solved well: its configuration and every bound state, lowest first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub config: WellConfig,
    pub states: Vec<BoundState>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn phase_rates(&self) -> Vec<f64> {
        self.states.iter().map(BoundState::phase_rate).collect()
    }

    /// Smallest decay constant, i.e. the most extended tail.
    pub fn min_beta(&self) -> f64 {
        self.states
            .iter()
            .map(|s| s.beta)
            .fold(f64::INFINITY, f64::min)
    }
}

type RealFn = Box<dyn Fn(f64) -> f64>;

fn even_fn(eps: f64) -> impl Fn(f64) -> f64 {
    move |a: f64| (eps * eps - a * a).max(0.0).sqrt() * a.cos() - a * a.sin()
}

fn even_deriv(eps: f64) -> impl Fn(f64) -> f64 {
    move |a: f64| {
        let b = (eps * eps - a * a).max(0.0).sqrt();
        -(a / b) * a.cos() - b * a.sin() - a.sin() - a * a.cos()
    }
}

fn odd_fn(eps: f64) -> impl Fn(f64) -> f64 {
    move |a: f64| a * a.cos() + (eps * eps - a * a).max(0.0).sqrt() * a.sin()
}

fn odd_deriv(eps: f64) -> impl Fn(f64) -> f64 {
    move |a: f64| {
        let b = (eps * eps - a * a).max(0.0).sqrt();
        a.cos() - a * a.sin() - (a / b) * a.sin() + b * a.cos()
    }
}

/// Breakpoints on `[a, b]` spaced at most `spacing` apart.
pub(crate) fn subdivide(a: f64, b: f64, spacing: f64) -> Vec<f64> {
    let pieces = ((b - a) / spacing).ceil().max(1.0) as usize;
    (0..=pieces)
        .map(|i| {
            if i == pieces {
                b
            } else {
                a + (b - a) * i as f64 / pieces as f64
            }
        })
        .collect()
}

/// Numerical amplitude for a state with unit interior amplitude.
fn numerical_norm(parity: Parity, alpha: f64, beta: f64) -> Result<f64> {
    let quad = Integrator::default();
    // half of the interior; the squared integrand is even in xbar
    let points = subdivide(0.0, 0.5, FRAC_PI_2 / (4.0 * alpha.max(1.0)));
    let inner = match parity {
        Parity::Even => quad.integrate_pieces(&|x: f64| (2.0 * alpha * x).cos().powi(2), &points)?,
        Parity::Odd => quad.integrate_pieces(&|x: f64| (2.0 * alpha * x).sin().powi(2), &points)?,
    };
    let edge = match parity {
        Parity::Even => alpha.cos(),
        Parity::Odd => alpha.sin(),
    };
    // both tails: 2 * edge^2 / (4 beta)
    let total = 2.0 * inner.value + edge * edge / (2.0 * beta);
    Ok(1.0 / total.sqrt())
}

/// Finds every bound state of the well, ordered by energy.
///
/// `tol` bounds the scaled residual `|f(alpha)| / (alpha + beta)` of the
/// pole-free equation at the returned root.
pub fn solve_spectrum(config: WellConfig, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0 && tol <= 1e-6) {
        return Err(invalid(format!("root tolerance must lie in (0, 1e-6], got {tol}")));
    }
    let eps = config.epsilon();
    let mut states = Vec::new();
    let mut j = 0usize;
    loop {
        let lo = j as f64 * FRAC_PI_2;
        if lo >= eps {
            break;
        }
        let parity = if j.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
        let cap = eps - (eps * 1e-12).min(0.5 * (eps - lo));
        let hi = ((j + 1) as f64 * FRAC_PI_2).min(cap);
        let (f, df): (RealFn, RealFn) = match parity {
            Parity::Even => (Box::new(even_fn(eps)), Box::new(even_deriv(eps))),
            Parity::Odd => (Box::new(odd_fn(eps)), Box::new(odd_deriv(eps))),
        };
        let truncated = hi < (j + 1) as f64 * FRAC_PI_2;
        let in_gap = truncated && f(lo).signum() == f(hi).signum();
        let alpha = if in_gap {
            // root lies in (hi, epsilon), closer to threshold than f64 resolves
            hi
        } else {
            let root = bisect(&f, lo, hi, BISECTION_CAP)?;
            newton_polish(&f, &df, root, lo, hi, POLISH_STEPS)
        };
        let beta = (eps * eps - alpha * alpha).sqrt();
        if !in_gap && !(f(alpha).abs() / (alpha + beta) <= tol) {
            return Err(Error::RootNonConvergence {
                lo,
                hi,
                iterations: BISECTION_CAP,
            });
        }
        let norm = numerical_norm(parity, alpha, beta)?;
        states.push(BoundState {
            index: j + 1,
            parity,
            alpha,
            beta,
            norm,
            closed_form_norm: (2.0 / (1.0 + 1.0 / beta)).sqrt(),
            weakly_bound: in_gap || beta < WEAK_BINDING_BETA,
        });
        j += 1;
    }
    Ok(Spectrum { config, states })
}

/// The effective-length approximation that maps the finite well onto an
/// infinite well of length `L (1 + 1/epsilon)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarkerApproximation {
    /// `L' / L = 1 + 1/epsilon`.
    pub effective_length_ratio: f64,
    /// `(epsilon / (1 + epsilon))^2`, the factor on infinite-well levels.
    pub approx_energy_scale: f64,
    /// `T_rv' / T_rv = (1 + 1/epsilon)^2`.
    pub approx_revival_time: f64,
}

pub fn barker(config: WellConfig) -> BarkerApproximation {
    let eps = config.epsilon();
    let ratio = 1.0 + 1.0 / eps;
    let scale = eps / (1.0 + eps);
    BarkerApproximation {
        effective_length_ratio: ratio,
        approx_energy_scale: scale * scale,
        approx_revival_time: ratio * ratio,
    }
}

/// Overlap `<phi_i|phi_j>` of two states of the same well.
///
/// Opposite parities give exactly zero. Interior by quadrature, the two
/// exponential tails in closed form.
pub fn state_overlap(a: &BoundState, b: &BoundState) -> Result<f64> {
    if a.parity != b.parity {
        return Ok(0.0);
    }
    let quad = Integrator::default();
    let kmax = 2.0 * a.alpha.max(b.alpha);
    let points = subdivide(0.0, 0.5, FRAC_PI_2 / kmax.max(1.0));
    let inner = quad.integrate_pieces(&|x: f64| a.value(x) * b.value(x), &points)?;
    let tails = a.edge_value() * b.edge_value() / (2.0 * (a.beta + b.beta));
    // same parity: the integrand is even, so both halves match
    Ok(2.0 * (inner.value + tails))
}

/// Gram matrix of pairwise overlaps, with quadrature failures recorded per entry.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix {
    pub entries: Vec<Vec<f64>>,
    pub failures: Vec<(usize, usize, Error)>,
}

impl GramMatrix {
    /// Max-norm distance to the identity over the converged entries.
    pub fn identity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                if v.is_finite() {
                    worst = worst.max((v - target).abs());
                }
            }
        }
        worst
    }
}

pub fn orthonormality_matrix(states: &[BoundState]) -> Result<GramMatrix> {
    if states.is_empty() {
        return Err(invalid("orthonormality matrix needs at least one state"));
    }
    let n = states.len();
    let mut entries = vec![vec![f64::NAN; n]; n];
    let mut failures = Vec::new();
    for i in 0..n {
        for j in i..n {
            match state_overlap(&states[i], &states[j]) {
                Ok(v) => {
                    entries[i][j] = v;
                    entries[j][i] = v;
                }
                Err(e) => failures.push((i, j, e)),
            }
        }
    }
    Ok(GramMatrix { entries, failures })
}
