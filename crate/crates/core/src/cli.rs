//! Command-line front end. `run` is the whole program minus process exit, so
//! tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::anharmonic::{oscillator_autocorr, oscillator_phase_rates, oscillator_timescales};
use crate::error::{Error, Result};
use crate::revival::{
    autocorrelation, spectrum_revival_report, table1_report, well_revival_report, DiscreteSpectrum, Provenance,
    RevivalScan, SuperrevivalScan,
};
use crate::scenario::{FockSpec, Format, OscillatorBlock, ScenarioConfig, System, TimeBlock, WellBlock};
use crate::spectrum::{solve_spectrum, Spectrum, DEFAULT_ROOT_TOL};
use crate::wavepacket::{infinite_evolve, infinite_project, project, snapshot, SpectralDecomposition};

/// Smallest snapshot grid accepted.
pub const MIN_SNAPSHOT_GRID: usize = 32;
/// Shortest horizon accepted for a revival-only scan.
pub const MIN_REVIVAL_HORIZON: f64 = 2.0;

#[derive(Debug, Parser)]
#[command(name = "wellrevival", version, about = "Revivals and superrevivals in a finite square well")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

/// Parameter overrides applied on top of the selected scenario.
#[derive(Debug, Clone, Default, Args)]
pub struct Common {
    /// Built-in scenario name or path to a TOML/JSON scenario file
    #[arg(long, global = true, value_name = "NAME")]
    pub scenario: Option<String>,
    /// Well strength; `inf` selects the infinite well
    #[arg(long, global = true)]
    pub epsilon: Option<f64>,
    /// Initial packet centre, in well lengths from the centre
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub x0: Option<f64>,
    /// Initial packet width, in well lengths
    #[arg(long, global = true)]
    pub sigma: Option<f64>,
    /// Oscillator nonlinearity mu2/mu1
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Coherent or squeezed-state displacement (real)
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    /// Squeeze parameter s >= 1 (selects a squeezed state)
    #[arg(long, global = true)]
    pub squeeze: Option<f64>,
    #[arg(long, global = true)]
    pub tau_max: Option<f64>,
    #[arg(long, global = true)]
    pub tau_step: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound-state table of the finite well
    Spectrum,
    /// Squared autocorrelation |A(tau)|^2 over the scenario time grid
    Autocorr {
        /// Add the infinite-well (or harmonic) counterpart column
        #[arg(long)]
        reference: bool,
    },
    /// Detected vs effective-length revival times for several well strengths
    Table1,
    /// Principal revival and, optionally, first superrevival
    Revivals {
        #[arg(long)]
        superrevival: bool,
    },
    /// Probability density at selected times
    Snapshot {
        /// Comma-separated times
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        tau: Vec<f64>,
        /// Number of points on [-1, 1]
        #[arg(long, default_value_t = 401)]
        grid: usize,
    },
    /// Fock-state weights and timescales of the oscillator state
    Oscillator,
    /// Print the resolved scenario (JSON with --format json, TOML otherwise)
    Scenario,
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn default_well() -> WellBlock {
    WellBlock {
        epsilon: 12.0,
        infinite: false,
        x0: 0.2,
        sigma: 0.1,
        sweep: Vec::new(),
    }
}

fn default_time() -> TimeBlock {
    TimeBlock {
        start: 0.0,
        end: 2.0,
        step: 1e-3,
    }
}

/// Scenario selected by `--scenario` (or built from the flags alone) with the
/// flag overrides applied.
pub fn resolve_config(common: &Common) -> Result<ScenarioConfig> {
    let oscillator_flags = common.beta.is_some() || common.squeeze.is_some();
    let well_flags = common.epsilon.is_some() || common.x0.is_some() || common.sigma.is_some();
    let mut cfg = match &common.scenario {
        Some(name) => ScenarioConfig::resolve(name)?,
        None => {
            let (well, oscillator) = if oscillator_flags && !well_flags {
                let state = FockSpec::Coherent {
                    alpha: 0.0,
                    alpha_im: 0.0,
                };
                (
                    None,
                    Some(OscillatorBlock {
                        beta: 0.0,
                        fock_cutoff: None,
                        state,
                    }),
                )
            } else {
                (Some(default_well()), None)
            };
            ScenarioConfig {
                name: "custom".to_string(),
                well,
                oscillator,
                time: default_time(),
                output: Default::default(),
            }
        }
    };

    if well_flags {
        let w = cfg
            .well
            .as_mut()
            .ok_or_else(|| Error::Scenario(format!("{}: well flags given for an oscillator scenario", cfg.name)))?;
        if let Some(eps) = common.epsilon {
            if eps == f64::INFINITY {
                w.infinite = true;
            } else {
                w.epsilon = eps;
                w.infinite = false;
            }
            w.sweep.clear();
        }
        if let Some(x0) = common.x0 {
            w.x0 = x0;
        }
        if let Some(sigma) = common.sigma {
            w.sigma = sigma;
        }
    }
    if oscillator_flags || common.alpha.is_some() {
        let o = cfg
            .oscillator
            .as_mut()
            .ok_or_else(|| Error::Scenario(format!("{}: oscillator flags given for a well scenario", cfg.name)))?;
        if let Some(beta) = common.beta {
            o.beta = beta;
        }
        let current_alpha = match o.state {
            FockSpec::Coherent { alpha, .. } | FockSpec::Squeezed { alpha, .. } => alpha,
        };
        let alpha = common.alpha.unwrap_or(current_alpha);
        o.state = match (common.squeeze, o.state) {
            (Some(s), _) | (None, FockSpec::Squeezed { s, .. }) => FockSpec::Squeezed { s, alpha },
            (None, FockSpec::Coherent { alpha_im, .. }) => FockSpec::Coherent { alpha, alpha_im },
        };
    }
    if let Some(end) = common.tau_max {
        cfg.time.end = end;
    }
    if let Some(step) = common.tau_step {
        cfg.time.step = step;
    }
    if let Some(format) = common.format {
        cfg.output.format = format;
    }
    if let Some(path) = &common.out {
        cfg.output.path = Some(path.display().to_string());
    }
    cfg.validate()?;
    Ok(cfg)
}

/// Fixed 17-significant-digit scientific notation.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_sci(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Io(e.to_string()))
}

fn emit(cfg: &ScenarioConfig, text: &str, out: &mut dyn Write) -> Result<()> {
    match &cfg.output.path {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{path}: {e}"))),
        None => out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string())),
    }
}

fn well_block(cfg: &ScenarioConfig) -> Result<&WellBlock> {
    match cfg.system()? {
        System::Well(w) => Ok(w),
        System::Oscillator(_) => Err(Error::Scenario(format!("{}: command needs a well scenario", cfg.name))),
    }
}

fn finite_well(cfg: &ScenarioConfig) -> Result<&WellBlock> {
    let w = well_block(cfg)?;
    if w.infinite {
        return Err(Error::Scenario(format!("{}: command needs a finite well", cfg.name)));
    }
    Ok(w)
}

fn warn_completeness(decomp: &SpectralDecomposition, err: &mut dyn Write) {
    if let Some(w) = decomp.warning {
        let _ = writeln!(err, "warning: {w}");
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let cfg = match (&cli.command, &cli.common.scenario) {
        // the table has its own default sweep
        (Command::Table1, None) => resolve_config(&Common {
            scenario: Some("table1".to_string()),
            ..cli.common.clone()
        })?,
        _ => resolve_config(&cli.common)?,
    };
    let format = cfg.output.format;
    let (text, code) = match &cli.command {
        Command::Spectrum => (cmd_spectrum(&cfg, format)?, 0),
        Command::Autocorr { reference } => (cmd_autocorr(&cfg, format, *reference, err)?, 0),
        Command::Table1 => (cmd_table1(&cfg, format, err)?, 0),
        Command::Revivals { superrevival } => cmd_revivals(&cfg, format, *superrevival, err)?,
        Command::Snapshot { tau, grid } => (cmd_snapshot(&cfg, format, tau, *grid, err)?, 0),
        Command::Oscillator => (cmd_oscillator(&cfg, format)?, 0),
        Command::Scenario => {
            let text = match cli.common.format {
                Some(Format::Json) => cfg.to_json()? + "\n",
                _ => cfg.to_toml()?,
            };
            (text, 0)
        }
    };
    emit(&cfg, &text, out)?;
    Ok(code)
}

fn cmd_spectrum(cfg: &ScenarioConfig, format: Format) -> Result<String> {
    let spectrum = solve_spectrum(finite_well(cfg)?.config()?, DEFAULT_ROOT_TOL)?;
    match format {
        Format::Csv => {
            let mut s = String::from("n,parity,alpha,beta,alpha_sq,residual\n");
            for b in &spectrum.states {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    b.index,
                    b.parity.as_str(),
                    sci(b.alpha),
                    sci(b.beta),
                    sci(b.alpha * b.alpha),
                    sci(b.residual())
                );
            }
            Ok(s)
        }
        Format::Json => {
            let rows: Vec<_> = spectrum
                .states
                .iter()
                .map(|b| {
                    json!({
                        "n": b.index,
                        "parity": b.parity,
                        "alpha": b.alpha,
                        "beta": b.beta,
                        "alpha_sq": b.alpha * b.alpha,
                        "residual": b.residual(),
                        "weakly_bound": b.weakly_bound,
                    })
                })
                .collect();
            to_json(&json!({ "epsilon": spectrum.config.epsilon(), "states": rows }))
        }
    }
}

fn well_series(w: &WellBlock, grid: &[f64], err: &mut dyn Write) -> Result<(Vec<f64>, Option<f64>)> {
    let packet = w.packet()?;
    if w.infinite {
        let state = infinite_project(&packet)?;
        let s = autocorrelation(&state.weights(), &state.phase_rates(), grid, Provenance::InfiniteWell)?;
        return Ok((s.values, None));
    }
    let spectrum = solve_spectrum(w.config()?, DEFAULT_ROOT_TOL)?;
    let decomp = project(&packet, &spectrum)?;
    warn_completeness(&decomp, err);
    let s = autocorrelation(
        &decomp.weights(),
        &spectrum.phase_rates(),
        grid,
        Provenance::FiniteWell { epsilon: w.epsilon },
    )?;
    Ok((s.values, Some(decomp.completeness)))
}

fn cmd_autocorr(cfg: &ScenarioConfig, format: Format, reference: bool, err: &mut dyn Write) -> Result<String> {
    let grid = cfg.time.grid()?;
    let reference = reference || cfg.output.reference;
    let (values, reference, completeness) = match cfg.system()? {
        System::Well(w) => {
            let (values, completeness) = well_series(w, &grid, err)?;
            let reference = if reference && !w.infinite {
                let inf = WellBlock {
                    infinite: true,
                    ..w.clone()
                };
                Some(well_series(&inf, &grid, err)?.0)
            } else {
                None
            };
            (values, reference, completeness)
        }
        System::Oscillator(o) => {
            let weights = o.weights()?;
            let values = oscillator_autocorr(&weights, o.beta, &grid)?.values;
            let reference = if reference {
                Some(oscillator_autocorr(&weights, 0.0, &grid)?.values)
            } else {
                None
            };
            (values, reference, None)
        }
    };
    match format {
        Format::Csv => {
            let mut s = String::with_capacity(grid.len() * 72);
            s.push_str(if reference.is_some() { "tau,autocorr,reference\n" } else { "tau,autocorr\n" });
            for (i, t) in grid.iter().enumerate() {
                s.push_str(&sci(*t));
                s.push(',');
                s.push_str(&sci(values[i]));
                if let Some(r) = &reference {
                    s.push(',');
                    s.push_str(&sci(r[i]));
                }
                s.push('\n');
            }
            Ok(s)
        }
        Format::Json => to_json(&json!({
            "scenario": cfg.name,
            "completeness": completeness,
            "tau": grid,
            "autocorr": values,
            "reference": reference,
        })),
    }
}

fn cmd_table1(cfg: &ScenarioConfig, format: Format, err: &mut dyn Write) -> Result<String> {
    let w = well_block(cfg)?;
    let epsilons = if w.sweep.is_empty() { vec![w.epsilon] } else { w.sweep.clone() };
    let reports = table1_report(&w.packet()?, &epsilons)?;
    for r in &reports {
        if let Some(msg) = &r.completeness_warning {
            let _ = writeln!(err, "warning: epsilon {}: {msg}", r.epsilon);
        }
        if let Some(msg) = &r.revival_error {
            let _ = writeln!(err, "warning: epsilon {}: {msg}", r.epsilon);
        }
    }
    match format {
        Format::Csv => {
            let mut s = String::from("epsilon,bound_states,detected_revival,barker_predicted,percent_error,completeness\n");
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    sci(r.epsilon),
                    r.bound_states,
                    opt_sci(r.detected_revival),
                    sci(r.barker_predicted),
                    opt_sci(r.percent_error),
                    sci(r.completeness)
                );
            }
            Ok(s)
        }
        Format::Json => to_json(&reports),
    }
}

fn cmd_revivals(
    cfg: &ScenarioConfig,
    format: Format,
    superrevival: bool,
    err: &mut dyn Write,
) -> Result<(String, i32)> {
    let horizon = cfg.time.end;
    let mut scan = RevivalScan::default();
    if superrevival {
        scan.superrevival = Some(SuperrevivalScan {
            horizon,
            step: cfg.time.step,
        });
    } else if horizon < MIN_REVIVAL_HORIZON {
        return Err(Error::HorizonTooShort {
            horizon,
            reason: format!("revival scans need a horizon of at least {MIN_REVIVAL_HORIZON}"),
        });
    }

    // (report json, csv row, revival error, superrevival status)
    let (value, row, revival_error, status) = match cfg.system()? {
        System::Well(w) if !w.infinite => {
            let r = well_revival_report(&w.packet()?, w.epsilon, &scan)?;
            if let Some(msg) = &r.completeness_warning {
                let _ = writeln!(err, "warning: {msg}");
            }
            let row = (r.detected_revival, r.barker_predicted, r.detected_superrevival());
            let status = r.superrevival.clone();
            (serde_json::to_value(&r), row, r.revival_error.clone(), status)
        }
        system => {
            let (spectrum, period, provenance) = match system {
                System::Well(w) => {
                    let state = infinite_project(&w.packet()?)?;
                    (
                        DiscreteSpectrum::new(state.weights(), state.phase_rates())?,
                        1.0,
                        Provenance::InfiniteWell,
                    )
                }
                System::Oscillator(o) => {
                    let weights = o.weights()?;
                    let times = oscillator_timescales(&weights, o.beta)?;
                    let rates = oscillator_phase_rates(o.beta, weights.weights.len());
                    (
                        DiscreteSpectrum::new(weights.weights, rates)?,
                        times.revival,
                        Provenance::Oscillator { beta: o.beta },
                    )
                }
            };
            let r = spectrum_revival_report(spectrum, period, provenance, &scan)?;
            let row = (r.detected_revival, r.predicted_revival, r.detected_superrevival());
            let status = r.superrevival.clone();
            (serde_json::to_value(&r), row, r.revival_error.clone(), status)
        }
    };
    let value = value.map_err(|e| Error::Io(e.to_string()))?;

    // A missing principal revival is fatal only when it is all that was asked for.
    let mut code = 0;
    if let Some(msg) = &revival_error {
        let _ = writeln!(err, "{}: {msg}", if superrevival { "warning" } else { "error" });
        if !superrevival {
            code = 4;
        }
    }
    if let crate::revival::SuperrevivalOutcome::HorizonTooShort { horizon, reason } = &status {
        let _ = writeln!(err, "error: scan horizon {horizon} too short: {reason}");
        code = 4;
    }

    let text = match format {
        Format::Json => to_json(&value)?,
        Format::Csv => {
            let label = serde_json::to_value(&status)
                .ok()
                .and_then(|v| v.get("status").and_then(|s| s.as_str()).map(str::to_string))
                .unwrap_or_default();
            format!(
                "detected_revival,predicted_revival,superrevival_status,superrevival_tau\n{},{},{},{}\n",
                opt_sci(row.0),
                sci(row.1),
                label,
                opt_sci(row.2)
            )
        }
    };
    Ok((text, code))
}

fn snapshot_grid(n: usize) -> Vec<f64> {
    // mirrored so that even densities come out exactly even
    let h = 2.0 / (n - 1) as f64;
    let mut xs = vec![0.0; n];
    for i in 0..n / 2 {
        xs[i] = -1.0 + i as f64 * h;
        xs[n - 1 - i] = -xs[i];
    }
    xs
}

fn cmd_snapshot(
    cfg: &ScenarioConfig,
    format: Format,
    taus: &[f64],
    n: usize,
    err: &mut dyn Write,
) -> Result<String> {
    if n < MIN_SNAPSHOT_GRID {
        return Err(Error::InvalidParameter(format!(
            "snapshot grid needs at least {MIN_SNAPSHOT_GRID} points, got {n}"
        )));
    }
    if taus.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidParameter("snapshot times must be finite".into()));
    }
    let w = well_block(cfg)?;
    let packet = w.packet()?;
    let xs = snapshot_grid(n);
    let densities: Vec<Vec<f64>> = if w.infinite {
        let state = infinite_project(&packet)?;
        taus.iter()
            .map(|&t| {
                let evolved = infinite_evolve(&state, t);
                xs.iter().map(|&x| evolved.value(x).norm_sqr()).collect()
            })
            .collect()
    } else {
        let spectrum: Spectrum = solve_spectrum(w.config()?, DEFAULT_ROOT_TOL)?;
        let decomp = project(&packet, &spectrum)?;
        warn_completeness(&decomp, err);
        taus.iter()
            .map(|&t| snapshot(&decomp, &spectrum, t, &xs))
            .collect::<Result<_>>()?
    };
    match format {
        Format::Csv => {
            let mut s = String::from("tau,xbar,density\n");
            for (t, d) in taus.iter().zip(&densities) {
                for (x, v) in xs.iter().zip(d) {
                    let _ = writeln!(s, "{},{},{}", sci(*t), sci(*x), sci(*v));
                }
            }
            Ok(s)
        }
        Format::Json => {
            let frames: Vec<_> = taus
                .iter()
                .zip(&densities)
                .map(|(t, d)| json!({ "tau": t, "xbar": xs, "density": d }))
                .collect();
            to_json(&frames)
        }
    }
}

fn cmd_oscillator(cfg: &ScenarioConfig, format: Format) -> Result<String> {
    let o = match cfg.system()? {
        System::Oscillator(o) => o,
        System::Well(_) => return Err(Error::Scenario(format!("{}: command needs an oscillator scenario", cfg.name))),
    };
    let weights = o.weights()?;
    let times = oscillator_timescales(&weights, o.beta)?;
    match format {
        Format::Csv => {
            let rates = oscillator_phase_rates(o.beta, weights.weights.len());
            let mut s = String::from("n,weight,phase_rate\n");
            for (n, (w, r)) in weights.weights.iter().zip(&rates).enumerate() {
                let _ = writeln!(s, "{n},{},{}", sci(*w), sci(*r));
            }
            Ok(s)
        }
        Format::Json => to_json(&json!({ "beta": o.beta, "weights": weights, "timescales": times })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("wellrevival").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn sci_has_17_significant_digits() {
        assert_eq!(sci(1.0), "1.0000000000000000e0");
        assert_eq!(sci(-0.125), "-1.2500000000000000e-1");
    }

    #[test]
    fn snapshot_grid_is_mirror_symmetric() {
        for n in [32, 33, 401] {
            let g = snapshot_grid(n);
            for i in 0..n {
                assert_eq!(g[i], -g[n - 1 - i]);
            }
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["spectrum", "--epsilon", "-1"]).0, 2);
        assert_eq!(run_str(&["spectrum", "--scenario", "fig5"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 2);
        assert_eq!(run_str(&["snapshot", "--tau", "0", "--grid", "8"]).0, 2);
        assert_eq!(run_str(&["revivals", "--tau-max", "1"]).0, 4);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn flag_overrides() {
        let c = Common {
            scenario: Some("fig5".into()),
            alpha: Some(0.5),
            ..Common::default()
        };
        let cfg = resolve_config(&c).unwrap();
        assert_eq!(
            cfg.oscillator.unwrap().state,
            FockSpec::Squeezed { s: 10.0, alpha: 0.5 }
        );
        let c = Common {
            beta: Some(0.01),
            alpha: Some(2.0),
            ..Common::default()
        };
        let cfg = resolve_config(&c).unwrap();
        assert!(matches!(cfg.oscillator.unwrap().state, FockSpec::Coherent { alpha, .. } if alpha == 2.0));
        let c = Common {
            scenario: Some("table1".into()),
            epsilon: Some(f64::INFINITY),
            ..Common::default()
        };
        let w = resolve_config(&c).unwrap().well.unwrap();
        assert!(w.infinite && w.sweep.is_empty());
    }
}
