//! Squeezed vacuum in the cubic anharmonic oscillator: Fock weights, the
//! closed-form and finite-difference timescales, and the long-time envelope.
//!
//!     cargo run --example oscillator_superrevival

use wellrevival::anharmonic::{oscillator_autocorr, oscillator_timescales, squeezed_weights};
use wellrevival::revival::{detect_superrevival, uniform_grid};

pub fn run_example() -> wellrevival::Result<()> {
    let beta = 0.002;
    let weights = squeezed_weights(10.0, 0.0, None)?;
    let times = oscillator_timescales(&weights, beta)?;
    println!("n_bar = {:.6}, cutoff = {}", weights.mean_n, weights.cutoff());
    println!(
        "revival:      closed form {:.12}, finite differences {:.12}",
        times.revival, times.hierarchy.t_revival
    );
    println!(
        "superrevival: closed form {:.12}, finite differences {:.12}",
        times.superrevival, times.hierarchy.t_superrevival
    );

    let series = oscillator_autocorr(&weights, beta, &uniform_grid(0.0, 600.0, 1e-3)?)?;
    let early = series.max_in(0.0, 5.0).unwrap_or(f64::NAN);
    let late = series.max_in(495.0, 505.0).unwrap_or(f64::NAN);
    println!("max |A|^2 on [0, 5] = {early:.4}, on [495, 505] = {late:.4}, min = {:.4}", series.min());
    if let Some(s) = detect_superrevival(&series, times.revival)? {
        println!(
            "first envelope recovery at tau = {:.4} (|A|^2 = {:.4}, cycle {})",
            s.tau, s.height, s.cycle
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
