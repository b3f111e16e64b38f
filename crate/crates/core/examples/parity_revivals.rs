//! Fractional revivals in the infinite well: an even packet returns fully at
//! every eighth of the revival time, an odd one at every quarter, and an
//! off-centre packet shows partial revivals near 1/3 and 2/3.
//!
//!     cargo run --example parity_revivals

use num_complex::Complex64;
use wellrevival::revival::{autocorrelation, uniform_grid, Provenance};
use wellrevival::wavepacket::{infinite_project, GaussianSpec, InfiniteWellState};

fn series_at(state: &InfiniteWellState, taus: &[f64]) -> wellrevival::Result<Vec<f64>> {
    Ok(autocorrelation(&state.weights(), &state.phase_rates(), taus, Provenance::InfiniteWell)?.values)
}

pub fn run_example() -> wellrevival::Result<()> {
    let even = infinite_project(&GaussianSpec::new(0.0, 0.1)?)?;

    // keep only the sine modes of an off-centre packet
    let shifted = infinite_project(&GaussianSpec::new(0.2, 0.1)?)?;
    let mut coefficients: Vec<Complex64> = shifted
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| if (i + 1) % 2 == 0 { *c } else { Complex64::new(0.0, 0.0) })
        .collect();
    let norm = coefficients.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    coefficients.iter_mut().for_each(|c| *c /= norm);
    let odd = InfiniteWellState { coefficients };

    let eighths: Vec<f64> = (1..=8).map(|k| k as f64 / 8.0).collect();
    let e = series_at(&even, &eighths)?;
    let o = series_at(&odd, &eighths)?;
    println!("{:>6} {:>14} {:>14}", "tau", "even", "odd");
    for (i, t) in eighths.iter().enumerate() {
        println!("{t:>6.3} {:>14.12} {:>14.12}", e[i], o[i]);
    }

    let grid = uniform_grid(0.0, 1.0, 1e-4)?;
    let s = autocorrelation(&shifted.weights(), &shifted.phase_rates(), &grid, Provenance::InfiniteWell)?;
    for (lo, hi) in [(0.25, 0.45), (0.55, 0.75)] {
        let (a, b) = (grid.partition_point(|t| *t < lo), grid.partition_point(|t| *t <= hi));
        let i = (a..b).max_by(|&i, &j| s.values[i].total_cmp(&s.values[j])).unwrap();
        println!("x0 = 0.2 partial revival at tau = {:.4}, height {:.4}", grid[i], s.values[i]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
