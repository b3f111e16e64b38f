//! Drives the command-line front end in-process: dumps a built-in scenario,
//! reloads it, and prints the first rows of its autocorrelation CSV.
//!
//!     cargo run --example cli_scenarios

use wellrevival::cli::run;
use wellrevival::scenario::{builtin, ScenarioConfig};

fn invoke(args: &[&str]) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("wellrevival").chain(args.iter().copied()), &mut out, &mut err);
    eprint!("{}", String::from_utf8_lossy(&err));
    assert_eq!(code, 0, "{args:?} exited with {code}");
    String::from_utf8(out).expect("utf-8 output")
}

pub fn run_example() -> wellrevival::Result<()> {
    let json = invoke(&["scenario", "--scenario", "fig1a", "--format", "json"]);
    let reloaded = ScenarioConfig::from_json_str(&json)?;
    println!("fig1a round-trips: {}", reloaded.to_json()? + "\n" == json);
    println!("same parameters as the built-in: {}", reloaded.well == builtin("fig1a").and_then(|c| c.well));

    let csv = invoke(&["autocorr", "--scenario", "fig1a", "--tau-max", "0.005"]);
    for line in csv.lines().take(4) {
        println!("{line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> wellrevival::Result<()> {
    run_example()
}
