//! Globally adaptive Gauss–Kronrod (7/15 point) integration.
//!
//! The interval with the largest error estimate is bisected until the summed
//! error falls below `max(abs_tol, rel_tol * |integral|)`, or below the
//! rounding floor `50 eps_mach * integral of |f|` that no subdivision can beat.
//! The error estimate of a panel is `|K15 - G7|`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Integrator {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Panels that may be added by bisection beyond the initial breakpoints.
    pub max_panels: usize,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_panels: 4000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    magnitude: f64,
}

const ROUNDING_FLOOR: f64 = 50.0 * f64::EPSILON;

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut magnitude = WGK[7] * fc.abs();
    for j in 0..7 {
        let dx = half * XGK[j];
        let (lo, hi) = (f(center - dx), f(center + dx));
        kronrod += WGK[j] * (lo + hi);
        magnitude += WGK[j] * (lo.abs() + hi.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (lo + hi);
        }
    }
    Panel {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
        magnitude: magnitude * half.abs(),
    }
}

impl Integrator {
    pub fn new(rel_tol: f64, abs_tol: f64) -> Self {
        Integrator {
            rel_tol,
            abs_tol,
            ..Default::default()
        }
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> Result<Estimate> {
        self.integrate_pieces(&f, &[a, b])
    }

    /// Integrates over consecutive intervals of a sorted breakpoint list.
    /// Breakpoints are where the integrand has kinks (well edges, support cuts).
    pub fn integrate_pieces<F: Fn(f64) -> f64>(&self, f: &F, points: &[f64]) -> Result<Estimate> {
        let mut heap = BinaryHeap::new();
        let mut evaluations = 0;
        for w in points.windows(2) {
            if w[1] > w[0] {
                heap.push(kronrod(f, w[0], w[1]));
                evaluations += 15;
            }
        }
        if heap.is_empty() {
            return Ok(Estimate {
                value: 0.0,
                error: 0.0,
                evaluations,
            });
        }
        // the budget is on top of the caller's breakpoints
        let panel_limit = heap.len() + self.max_panels;
        let mut value: f64 = heap.iter().map(|p| p.value).sum();
        let mut error: f64 = heap.iter().map(|p| p.error).sum();
        let mut magnitude: f64 = heap.iter().map(|p| p.magnitude).sum();
        loop {
            let target = self
                .abs_tol
                .max(self.rel_tol * value.abs())
                .max(ROUNDING_FLOOR * magnitude);
            if error <= target {
                // re-sum to shed drift from the running updates
                return Ok(Estimate {
                    value: heap.iter().map(|p| p.value).sum(),
                    error: heap.iter().map(|p| p.error).sum(),
                    evaluations,
                });
            }
            let worst = heap.pop().expect("nonempty panel heap");
            let mid = 0.5 * (worst.a + worst.b);
            if heap.len() + 2 > panel_limit || mid <= worst.a || mid >= worst.b {
                return Err(Error::QuadratureNonConvergence {
                    a: points[0],
                    b: points[points.len() - 1],
                    value,
                    error,
                });
            }
            let left = kronrod(f, worst.a, mid);
            let right = kronrod(f, mid, worst.b);
            value += left.value + right.value - worst.value;
            error += left.error + right.error - worst.error;
            magnitude += left.magnitude + right.magnitude - worst.magnitude;
            heap.push(left);
            heap.push(right);
            evaluations += 30;
        }
    }
}
