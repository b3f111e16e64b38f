use num_complex::Complex64;
use proptest::prelude::*;
use wellrevival::anharmonic::{
    coherent_weights, oscillator_autocorr, oscillator_timescales, squeeze_r, squeezed_weights, OscillatorConfig,
};
use wellrevival::revival::uniform_grid;
use wellrevival::Error;

/// `w_{2m} = (2m)! / (2^{2m} (m!)^2) tanh^{2m} r / cosh r`, built by the ratio
/// `w_{2m+2} / w_{2m} = (2m+1)/(2m+2) tanh^2 r`.
fn squeezed_vacuum_oracle(s: f64, len: usize) -> Vec<f64> {
    let r = squeeze_r(s);
    let t2 = r.tanh().powi(2);
    let mut out = vec![0.0; len];
    let mut w = 1.0 / r.cosh();
    for m in 0..len.div_ceil(2) {
        out[2 * m] = w;
        w *= (2 * m + 1) as f64 / (2 * m + 2) as f64 * t2;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn squeezed_vacuum_matches_closed_form(s in 1.01f64..30.0) {
        let w = squeezed_weights(s, 0.0, None).unwrap();
        let oracle = squeezed_vacuum_oracle(s, w.weights.len());
        for (a, b) in w.weights.iter().zip(&oracle) {
            prop_assert!((a - b).abs() <= 1e-9 * b + 1e-15, "{} vs {}", a, b);
        }
    }

    #[test]
    fn squeezed_mean_photon_number(s in 1.0f64..20.0, alpha in -2.5f64..2.5) {
        let w = squeezed_weights(s, alpha, None).unwrap();
        let expected = alpha * alpha + (s - 1.0).powi(2) / (4.0 * s);
        prop_assert!((w.mean_n - expected).abs() < 1e-7 * (1.0 + expected));
        prop_assert!((w.weights.iter().sum::<f64>() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn coherent_is_poissonian(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let a = Complex64::new(re, im);
        let w = coherent_weights(a, None).unwrap();
        let m = a.norm_sqr();
        let mut p = (-m).exp();
        for (n, v) in w.weights.iter().enumerate() {
            if n > 0 {
                p *= m / n as f64;
            }
            prop_assert!((v - p).abs() <= 1e-10 * p + 1e-16);
        }
    }

    #[test]
    fn closed_form_timescales_match_differences(alpha in 0.0f64..4.0, beta in -0.01f64..0.01) {
        prop_assume!(beta.abs() > 1e-6);
        let w = coherent_weights(Complex64::new(alpha, 0.0), None).unwrap();
        let t = oscillator_timescales(&w, beta).unwrap();
        prop_assert!((t.hierarchy.t_revival - t.revival).abs() <= 1e-10 * t.revival);
        prop_assert!((t.hierarchy.t_superrevival - t.superrevival).abs() <= 1e-10 * t.superrevival);
    }

    #[test]
    fn autocorrelation_is_even_in_time(s in 1.0f64..12.0, alpha in -1.5f64..1.5, tau in 0.0f64..50.0) {
        let w = squeezed_weights(s, alpha, None).unwrap();
        let back = oscillator_autocorr(&w, 0.002, &[-tau]).unwrap().values[0];
        let fwd = oscillator_autocorr(&w, 0.002, &[tau]).unwrap().values[0];
        prop_assert!((back - fwd).abs() < 1e-12);
    }
}

#[test]
fn frozen_mean_photon_numbers() {
    // from arbitrary-precision sums of the unnormalized weights
    for (s, alpha, n_bar) in [(10.0, 0.0, 2.025), (10.0, 0.5, 2.275), (3.0, 1.0, 4.0 / 3.0), (1.5, 2.0, 4.041666666666667)] {
        let w = squeezed_weights(s, alpha, Some(400)).unwrap();
        assert!((w.mean_n - n_bar).abs() < 1e-10, "s {s} alpha {alpha}: {}", w.mean_n);
    }
}

#[test]
fn closed_form_revival_example() {
    let w = coherent_weights(Complex64::new(2.0, 0.0), Some(200)).unwrap();
    let t = oscillator_timescales(&w, 0.01).unwrap();
    assert!((t.revival - 1.0 / 1.12).abs() < 1e-12);
    assert!((t.superrevival - 100.0).abs() < 1e-12);
}

#[test]
fn harmonic_limit_is_continuous() {
    let w = squeezed_weights(10.0, 0.0, None).unwrap();
    let grid = uniform_grid(0.0, 2.0, 1e-3).unwrap();
    let a = oscillator_autocorr(&w, 0.0, &grid).unwrap();
    let b = oscillator_autocorr(&w, 1e-6, &grid).unwrap();
    let sup = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    assert!(sup < 1e-2, "{sup}");
}

#[test]
fn squeezed_vacuum_stays_away_from_zero_displaced_states_do_not() {
    let beta = 0.002;
    let grid = uniform_grid(0.0, 1.0, 1e-4).unwrap();
    let sq = squeezed_weights(10.0, 0.0, None).unwrap();
    let min_sq = oscillator_autocorr(&sq, beta, &grid).unwrap().min();
    assert!(min_sq > 0.05, "squeezed vacuum min {min_sq}");
    for alpha in [2.0, sq.mean_n.sqrt()] {
        let c = coherent_weights(Complex64::new(alpha, 0.0), None).unwrap();
        let min_c = oscillator_autocorr(&c, beta, &grid).unwrap().min();
        assert!(min_c < 0.05, "coherent alpha {alpha} min {min_c}");
    }
}

#[test]
fn invalid_inputs() {
    assert!(matches!(squeezed_weights(0.9, 0.0, None), Err(Error::InvalidParameter(_))));
    assert!(matches!(squeezed_weights(f64::NAN, 0.0, None), Err(Error::InvalidParameter(_))));
    assert!(matches!(coherent_weights(Complex64::new(60.0, 0.0), None), Err(Error::CutoffTooSmall { .. })));
    assert!(OscillatorConfig::new(f64::INFINITY, None).is_err());
}
