//! Revival times of the default packet (sigma = 0.1, x0 = 0.2) for three
//! well strengths, against the effective-length prediction `(1 + 1/eps)^2`.
//!
//!     cargo run --example table1

use wellrevival::revival::table1_report;
use wellrevival::wavepacket::GaussianSpec;

pub fn run_example() -> wellrevival::Result<()> {
    let packet = GaussianSpec::new(0.2, 0.1)?;
    let rows = table1_report(&packet, &[12.0, 30.0, 100.0])?;
    println!("{:>8} {:>4} {:>12} {:>12} {:>10} {:>12}", "epsilon", "N", "detected", "barker", "error %", "completeness");
    for row in &rows {
        println!(
            "{:>8} {:>4} {:>12.6} {:>12.6} {:>10.4} {:>12.8}",
            row.epsilon,
            row.bound_states,
            row.detected_revival.unwrap_or(f64::NAN),
            row.barker_predicted,
            row.percent_error.unwrap_or(f64::NAN),
            row.completeness
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
