//! Probability density of an off-centre packet over one revival: it splits in
//! two at a quarter of the revival time, sits at the mirror position half-way,
//! and is back in place at the revival.
//!
//!     cargo run --example snapshot

use wellrevival::revival::{well_revival_report, RevivalScan};
use wellrevival::spectrum::{solve_spectrum, WellConfig, DEFAULT_ROOT_TOL};
use wellrevival::wavepacket::{project, snapshot, GaussianSpec};

fn local_maxima(xs: &[f64], d: &[f64]) -> Vec<f64> {
    (1..d.len() - 1)
        .filter(|&i| d[i] > d[i - 1] && d[i] >= d[i + 1] && d[i] > 0.05 * d.iter().cloned().fold(0.0, f64::max))
        .map(|i| xs[i])
        .collect()
}

pub fn run_example() -> wellrevival::Result<()> {
    let epsilon = 12.0;
    let packet = GaussianSpec::new(0.2, 0.1)?;
    let revival = well_revival_report(&packet, epsilon, &RevivalScan::default())?
        .detected_revival
        .unwrap_or(1.0);
    let spectrum = solve_spectrum(WellConfig::new(epsilon)?, DEFAULT_ROOT_TOL)?;
    let decomp = project(&packet, &spectrum)?;
    let xs: Vec<f64> = (0..=800).map(|i| -0.8 + 0.002 * i as f64).collect();
    for tau in [0.0, 0.25 * revival, 0.5 * revival, revival] {
        let d = snapshot(&decomp, &spectrum, tau, &xs)?;
        let peaks: Vec<String> = local_maxima(&xs, &d).iter().map(|x| format!("{x:+.3}")).collect();
        println!("tau = {tau:.4}: density maxima at [{}]", peaks.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
