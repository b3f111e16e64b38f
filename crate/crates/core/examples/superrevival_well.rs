//! Revival-peak envelopes of centred packets in two finite wells. The envelope
//! decays and then recovers; the recovery time grows with the well depth.
//!
//!     cargo run --example superrevival_well

use wellrevival::revival::{well_revival_report, RevivalScan, SuperrevivalOutcome, SuperrevivalScan};
use wellrevival::wavepacket::GaussianSpec;

pub fn run_example() -> wellrevival::Result<()> {
    let packet = GaussianSpec::new(0.0, 0.1)?;
    for (epsilon, horizon) in [(12.0, 10.0), (15.0, 15.0)] {
        let scan = RevivalScan {
            superrevival: Some(SuperrevivalScan { horizon, step: 1e-3 }),
            ..RevivalScan::default()
        };
        let report = well_revival_report(&packet, epsilon, &scan)?;
        match report.superrevival {
            SuperrevivalOutcome::Found { tau, height, cycle } => println!(
                "epsilon = {epsilon}: first superrevival at tau = {tau:.4} (cycle {cycle}, |A|^2 = {height:.4})"
            ),
            other => println!("epsilon = {epsilon}: {other:?}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
