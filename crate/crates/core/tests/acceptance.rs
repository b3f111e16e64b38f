// Acceptance criteria, one PASS/FAIL line each, with the individual checks
// listed underneath.
//
// A few checks cannot be met by a faithful implementation. They are still
// computed and reported as failures, tagged `known gap` with the reason. The
// process fails on any other failing check, and also if a known gap starts
// passing, so the list cannot go stale.

use std::time::Instant;

use num_complex::Complex64;
use wellrevival::anharmonic::{coherent_weights, oscillator_autocorr, oscillator_timescales, squeezed_weights};
use wellrevival::revival::{
    detect_revival, detect_superrevival, series_from_spectrum, table1_report, uniform_grid, well_revival_report,
    DiscreteSpectrum, Provenance, RevivalScan, SuperrevivalScan, DEFAULT_REFINE_TOL,
};
use wellrevival::scenario::{builtin, System, BUILTIN_NAMES};
use wellrevival::spectrum::{orthonormality_matrix, solve_spectrum, Parity, WellConfig, DEFAULT_ROOT_TOL};
use wellrevival::wavepacket::{evolve, infinite_evolve, infinite_project, project, GaussianSpec, InfiniteWellState};

struct Check {
    name: String,
    ok: bool,
    detail: String,
    known_gap: Option<&'static str>,
}

struct Criterion {
    id: u8,
    title: &'static str,
    checks: Vec<Check>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            detail: detail.into(),
            known_gap: None,
        });
    }

    fn gap(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>, reason: &'static str) {
        self.checks.push(Check {
            name: name.into(),
            ok,
            detail: detail.into(),
            known_gap: Some(reason),
        });
    }

    /// Prints the criterion and returns whether the outcome is the expected one.
    fn report(&self) -> bool {
        let pass = self.checks.iter().all(|c| c.ok);
        let failed: Vec<&str> = self.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
        if pass {
            println!("PASS criterion {}: {}", self.id, self.title);
        } else {
            println!("FAIL criterion {}: {} [failed: {}]", self.id, self.title, failed.join(", "));
        }
        let mut expected = true;
        for c in &self.checks {
            let tag = match (c.ok, c.known_gap) {
                (true, None) => "ok  ",
                (false, None) => {
                    expected = false;
                    "FAIL"
                }
                (false, Some(_)) => "GAP ",
                (true, Some(_)) => {
                    expected = false;
                    "XOK "
                }
            };
            println!("    {tag} {}: {}", c.name, c.detail);
            if let Some(reason) = c.known_gap {
                println!("         known gap: {reason}");
            }
        }
        expected
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "revival times of the sigma = 0.1, x0 = 0.2 packet for epsilon = 12, 30, 100");
    let start = Instant::now();
    let packet = GaussianSpec::new(0.2, 0.1).unwrap();
    let rows = table1_report(&packet, &[12.0, 30.0, 100.0]).unwrap();
    let elapsed = start.elapsed().as_secs_f64();

    let reference: [(f64, f64, f64); 3] = [(12.0, 1.185, 0.9), (30.0, 1.068, 0.09), (100.0, 1.020, 0.0039)];
    let mut errors = Vec::new();
    for (row, &(eps, t_ref, err_ref)) in rows.iter().zip(&reference) {
        let t = row.detected_revival.unwrap_or(f64::NAN);
        c.check(
            format!("epsilon {eps} detected"),
            rel(t, t_ref) <= 0.006,
            format!("{t:.6} vs {t_ref} ({:+.3}%)", 100.0 * (t - t_ref) / t_ref),
        );
        let exact = (1.0 + 1.0 / eps).powi(2);
        c.check(
            format!("epsilon {eps} effective-length prediction"),
            (row.barker_predicted - exact).abs() <= 1e-12,
            format!("{:.12}", row.barker_predicted),
        );
        let e = row.percent_error.unwrap_or(f64::NAN);
        c.check(
            format!("epsilon {eps} percent error"),
            e / err_ref <= 3.0 && err_ref / e <= 3.0,
            format!("{e:.4}% vs {err_ref}%"),
        );
        errors.push(e);
    }
    c.check(
        "percent error decreases",
        errors[0] > errors[1] && errors[1] > errors[2],
        format!("{errors:.4?}"),
    );
    c.check("runtime", elapsed < 30.0, format!("{elapsed:.2} s"));
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "bound-state counts");
    for (eps, n) in [(12.0, 8), (15.0, 10), (30.0, 20), (100.0, 64)] {
        let s = solve_spectrum(WellConfig::new(eps).unwrap(), DEFAULT_ROOT_TOL).unwrap();
        c.check(format!("epsilon {eps}"), s.len() == n, format!("{} states, expected {n}", s.len()));
    }
    c
}

fn autocorr(state: &InfiniteWellState, tau: f64) -> f64 {
    state.overlap(&infinite_evolve(state, tau)).norm_sqr()
}

/// The sine (odd-parity) part of a packet, renormalized.
fn odd_part(state: &InfiniteWellState) -> InfiniteWellState {
    let mut coefficients: Vec<Complex64> = state
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| if (i + 1) % 2 == 0 { *c } else { Complex64::new(0.0, 0.0) })
        .collect();
    let norm = coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    coefficients.iter_mut().for_each(|c| *c /= norm);
    InfiniteWellState { coefficients }
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "infinite-well fractional and full revivals");
    let even = infinite_project(&GaussianSpec::new(0.0, 0.1).unwrap()).unwrap();
    let odd = odd_part(&infinite_project(&GaussianSpec::new(0.15, 0.07).unwrap()).unwrap());
    let generic: Vec<InfiniteWellState> = [(0.13, 0.07), (-0.21, 0.05), (0.05, 0.09)]
        .iter()
        .map(|&(x0, s)| infinite_project(&GaussianSpec::new(x0, s).unwrap()).unwrap())
        .collect();

    let worst = |state: &InfiniteWellState, times: &[f64]| times.iter().map(|&t| autocorr(state, t)).fold(1.0, f64::min);
    let eighths: Vec<f64> = (1..=8).map(|k| k as f64 / 8.0).collect();
    let quarters: Vec<f64> = (1..=8).map(|k| k as f64 / 4.0).collect();
    let wholes: Vec<f64> = (1..=8).map(|k| k as f64).collect();

    let m = worst(&even, &eighths);
    c.check("even packet at k/8", m > 1.0 - 1e-9, format!("min |A|^2 = {m:.15}"));
    let m = worst(&odd, &quarters);
    c.check("odd packet at k/4", m > 1.0 - 1e-9, format!("min |A|^2 = {m:.15}"));
    let m = generic.iter().map(|s| worst(s, &wholes)).fold(1.0, f64::min);
    c.check("arbitrary packets at k", m > 1.0 - 1e-9, format!("min |A|^2 = {m:.15}"));

    let shifted = infinite_project(&GaussianSpec::new(0.2, 0.1).unwrap()).unwrap();
    let grid = uniform_grid(0.0, 1.0, 1e-4).unwrap();
    let series = series_from_spectrum(
        DiscreteSpectrum::new(shifted.weights(), shifted.phase_rates()).unwrap(),
        &grid,
        Provenance::InfiniteWell,
    )
    .unwrap();
    for target in [1.0 / 3.0, 2.0 / 3.0] {
        let (lo, hi) = (target - 0.05, target + 0.05);
        let peak = detect_revival(&series, (lo, hi), DEFAULT_REFINE_TOL);
        let (ok, detail) = match peak {
            Ok(p) => ((p.tau - target).abs() < 0.01, format!("peak at {:.4}, |A|^2 = {:.4}", p.tau, p.height)),
            Err(e) => (false, e.to_string()),
        };
        c.check(format!("x0 = 0.2 local maximum near {target:.4}"), ok, detail);
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "squeezed-vacuum superrevival in the anharmonic oscillator; timescales");
    let beta = 0.002;
    let sq = squeezed_weights(10.0, 0.0, None).unwrap();
    let times = oscillator_timescales(&sq, beta).unwrap();
    let series = oscillator_autocorr(&sq, beta, &uniform_grid(0.0, 600.0, 1e-3).unwrap()).unwrap();
    let early = series.max_in(0.0, 5.0).unwrap();

    match detect_superrevival(&series, times.revival) {
        Ok(Some(s)) => c.gap(
            "first superrevival at 500 +- 1",
            (s.tau - 500.0).abs() <= 1.0 && s.height >= 0.95 * early,
            format!("first envelope recovery at {:.4} (|A|^2 = {:.4}, cycle {})", s.tau, s.height, s.cycle),
            "with even-n support the phases 2 pi (4m^2 + 8 beta m^3) tau all return together at \
             tau = 1/(8 beta) = 62.5, so the envelope recovers first near 31.4 and fully at 62.5, 125, ...",
        ),
        other => c.gap(
            "first superrevival at 500 +- 1",
            false,
            format!("{other:?}"),
            "see the even-n period argument",
        ),
    }
    let late = series.max_in(495.0, 505.0).unwrap();
    c.check(
        "envelope near 500 back at the early level",
        late >= 0.95 * early,
        format!("max on [495, 505] = {late:.6}, on [0, 5] = {early:.6}"),
    );

    let mut states = vec![("squeezed vacuum s = 10".to_string(), sq.clone())];
    for a in [0.5, 2.0, 3.5] {
        states.push((format!("coherent alpha = {a}"), coherent_weights(Complex64::new(a, 0.0), None).unwrap()));
    }
    states.push(("squeezed s = 3, alpha = 1".into(), squeezed_weights(3.0, 1.0, None).unwrap()));
    for (label, w) in &states {
        for b in [0.002, 0.01] {
            let t = oscillator_timescales(w, b).unwrap();
            let e_rv = rel(t.hierarchy.t_revival, t.revival);
            let e_sr = rel(t.hierarchy.t_superrevival, t.superrevival);
            c.check(
                format!("timescales, {label}, beta {b}"),
                e_rv <= 1e-10 && e_sr <= 1e-10,
                format!("relative gaps {e_rv:.1e} (revival), {e_sr:.1e} (superrevival)"),
            );
        }
    }
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "orthonormality, unitarity, parity, completeness, symmetry, scaling, deep-well limit");

    let worst_gram = [12.0, 15.0, 30.0, 100.0]
        .iter()
        .map(|&e| {
            let s = solve_spectrum(WellConfig::new(e).unwrap(), DEFAULT_ROOT_TOL).unwrap();
            orthonormality_matrix(&s.states).unwrap().identity_deviation()
        })
        .fold(0.0, f64::max);
    c.check("Gram matrix", worst_gram <= 1e-8, format!("max |G - I| = {worst_gram:.1e}"));

    let s12 = solve_spectrum(WellConfig::new(12.0).unwrap(), DEFAULT_ROOT_TOL).unwrap();
    let d = project(&GaussianSpec::new(0.2, 0.1).unwrap(), &s12).unwrap();
    let n0: f64 = d.coefficients.iter().map(|c| c.norm_sqr()).sum();
    let drift = [-50.0, 0.3, 7.7, 123.4]
        .iter()
        .map(|&t| (evolve(&d, &s12, t).unwrap().iter().map(|c| c.norm_sqr()).sum::<f64>() - n0).abs())
        .fold(0.0, f64::max);
    c.check("unitarity", drift <= 1e-12, format!("max norm drift {drift:.1e}"));

    let centred = project(&GaussianSpec::new(0.0, 0.1).unwrap(), &s12).unwrap();
    let odd = centred
        .coefficients
        .iter()
        .zip(&s12.states)
        .filter(|(_, b)| b.parity == Parity::Odd)
        .map(|(c, _)| c.norm())
        .fold(0.0, f64::max);
    let inf = infinite_project(&GaussianSpec::new(0.0, 0.1).unwrap()).unwrap();
    let odd_inf = inf.coefficients.iter().skip(1).step_by(2).map(|c| c.norm()).fold(0.0, f64::max);
    c.check(
        "parity selection",
        odd <= 1e-12 && odd_inf <= 1e-12,
        format!("max odd |c_n| = {odd:.1e} (finite), {odd_inf:.1e} (infinite)"),
    );

    for name in BUILTIN_NAMES {
        let cfg = builtin(name).unwrap();
        let (ok, detail) = match cfg.system().unwrap() {
            System::Well(w) => {
                let eps: Vec<f64> = if w.sweep.is_empty() { vec![w.epsilon] } else { w.sweep.clone() };
                let values: Vec<f64> = eps
                    .iter()
                    .map(|&e| {
                        let s = solve_spectrum(WellConfig::new(e).unwrap(), DEFAULT_ROOT_TOL).unwrap();
                        project(&w.packet().unwrap(), &s).unwrap().completeness
                    })
                    .collect();
                let m = values.iter().cloned().fold(1.0, f64::min);
                (m >= 0.999, format!("bound-state completeness {values:.6?}"))
            }
            System::Oscillator(o) => {
                let w = o.weights().unwrap();
                (1.0 - w.tail_mass >= 0.999, format!("retained Fock mass 1 - {:.1e}", w.tail_mass))
            }
        };
        if name == "fig2" {
            c.gap(
                format!("completeness {name}"),
                ok,
                detail,
                "a centred sigma = 0.1 packet in an epsilon = 12 well keeps about 0.104% of its norm \
                 in the continuum; the bound states are orthonormal to 1e-14, so the shortfall is \
                 physical, not numerical",
            );
        } else {
            c.check(format!("completeness {name}"), ok, detail);
        }
    }

    let dspec = DiscreteSpectrum::new(d.weights(), s12.phase_rates()).unwrap();
    let asym = (0..200)
        .map(|i| {
            let t = 0.137 * i as f64;
            (dspec.value(t) - dspec.value(-t)).abs()
        })
        .fold(0.0, f64::max);
    c.check("time symmetry of |A|^2", asym <= 1e-12, format!("max |A(t)|^2 - |A(-t)|^2 = {asym:.1e}"));

    let grid = uniform_grid(1.1, 1.3, 1e-4).unwrap();
    let window = (grid[0], grid[grid.len() - 1]);
    let detect = |spec: DiscreteSpectrum| {
        let s = series_from_spectrum(spec, &grid, Provenance::Custom).unwrap();
        detect_revival(&s, window, DEFAULT_REFINE_TOL).unwrap().tau
    };
    let base = detect(dspec.clone());
    let scaled: Vec<f64> = [0.25, 8.0, 1024.0].iter().map(|&f| detect(dspec.scaled(f).unwrap())).collect();
    c.check(
        "detection invariant under weight scaling",
        scaled.iter().all(|t| t.to_bits() == base.to_bits()),
        format!("tau* = {base:.12} for scale factors 1, 1/4, 8, 1024"),
    );

    let start = Instant::now();
    let deep = well_revival_report(&GaussianSpec::new(0.2, 0.1).unwrap(), 1e4, &RevivalScan::default()).unwrap();
    let t = deep.detected_revival.unwrap_or(f64::NAN);
    c.check(
        "epsilon = 1e4 revival near 1",
        (t - 1.0).abs() <= 3e-4,
        format!(
            "detected {t:.7} with {} states in {:.1} s",
            deep.bound_states,
            start.elapsed().as_secs_f64()
        ),
    );
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "superrevivals of centred packets in finite wells");
    let packet = GaussianSpec::new(0.0, 0.1).unwrap();
    let step = 1e-3;
    let mut found = Vec::new();
    for (eps, horizon, fixture) in [(12.0, 10.0, 6.036_606_877_658_61), (15.0, 15.0, 10.683_174_180_857_19)] {
        let scan = RevivalScan {
            superrevival: Some(SuperrevivalScan { horizon, step }),
            ..RevivalScan::default()
        };
        let report = well_revival_report(&packet, eps, &scan).unwrap();
        match report.detected_superrevival() {
            Some(t) => {
                c.check(
                    format!("epsilon {eps} superrevival"),
                    (t - fixture).abs() <= 2.0 * step,
                    format!("tau = {t:.6} within horizon {horizon} (fixture {fixture:.6})"),
                );
                found.push(t);
            }
            None => c.check(format!("epsilon {eps} superrevival"), false, format!("{:?}", report.superrevival)),
        }
    }
    c.check(
        "deeper well superrevives later",
        found.len() == 2 && found[1] > found[0],
        format!("{found:.4?}"),
    );
    c
}

fn main() {
    let criteria = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
    ];
    let mut expected = true;
    for c in &criteria {
        expected &= c.report();
    }
    let passed = criteria.iter().filter(|c| c.checks.iter().all(|k| k.ok)).count();
    println!("{passed}/{} criteria pass", criteria.len());
    if !expected {
        println!("unexpected outcome: a check failed, or a known gap now passes");
        std::process::exit(1);
    }
}
