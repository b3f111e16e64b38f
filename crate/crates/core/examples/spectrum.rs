//! Bound states of a finite well and a check that they form an orthonormal set.
//!
//!     cargo run --example spectrum -- 30

use wellrevival::spectrum::{orthonormality_matrix, solve_spectrum, WellConfig, DEFAULT_ROOT_TOL};

pub fn run_example() -> wellrevival::Result<()> {
    let epsilon = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12.0);
    let config = WellConfig::new(epsilon)?;
    let spectrum = solve_spectrum(config, DEFAULT_ROOT_TOL)?;
    println!(
        "epsilon = {epsilon}: {} bound states (floor(2 eps / pi) + 1 = {})",
        spectrum.len(),
        config.predicted_state_count()
    );
    println!("{:>3} {:>5} {:>14} {:>14} {:>10} {:>10}", "n", "par", "alpha", "beta", "residual", "norm err");
    for s in &spectrum.states {
        println!(
            "{:>3} {:>5} {:>14.10} {:>14.10} {:>10.1e} {:>10.1e}",
            s.index,
            s.parity.as_str(),
            s.alpha,
            s.beta,
            s.residual(),
            s.norm_discrepancy()
        );
    }
    let gram = orthonormality_matrix(&spectrum.states)?;
    println!("max |G - I| = {:.2e}", gram.identity_deviation());
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
