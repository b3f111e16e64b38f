//! Scenario files: one system (a well or the oscillator), an initial state,
//! a time grid and output settings. TOML on disk, JSON as an alternative.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::anharmonic::{coherent_weights, squeezed_weights, FockWeights, OscillatorConfig};
use crate::error::{Error, Result};
use crate::revival::uniform_grid;
use crate::spectrum::WellConfig;
use crate::wavepacket::GaussianSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WellBlock {
    pub epsilon: f64,
    /// Use the infinite well and ignore `epsilon`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub infinite: bool,
    pub x0: f64,
    pub sigma: f64,
    /// Extra well strengths for table runs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sweep: Vec<f64>,
}

impl WellBlock {
    pub fn packet(&self) -> Result<GaussianSpec> {
        GaussianSpec::new(self.x0, self.sigma)
    }

    pub fn config(&self) -> Result<WellConfig> {
        WellConfig::new(self.epsilon)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FockSpec {
    Coherent {
        alpha: f64,
        #[serde(default)]
        alpha_im: f64,
    },
    Squeezed {
        s: f64,
        alpha: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OscillatorBlock {
    pub beta: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fock_cutoff: Option<usize>,
    pub state: FockSpec,
}

impl OscillatorBlock {
    pub fn config(&self) -> Result<OscillatorConfig> {
        OscillatorConfig::new(self.beta, self.fock_cutoff)
    }

    pub fn weights(&self) -> Result<FockWeights> {
        let cutoff = self.config()?.fock_cutoff;
        match self.state {
            FockSpec::Coherent { alpha, alpha_im } => coherent_weights(Complex64::new(alpha, alpha_im), cutoff),
            FockSpec::Squeezed { s, alpha } => squeezed_weights(s, alpha, cutoff),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeBlock {
    #[serde(default)]
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl TimeBlock {
    pub fn grid(&self) -> Result<Vec<f64>> {
        uniform_grid(self.start, self.end, self.step)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputBlock {
    #[serde(default)]
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    /// Add the infinite-well (or harmonic) counterpart as a reference column.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub reference: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub well: Option<WellBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oscillator: Option<OscillatorBlock>,
    pub time: TimeBlock,
    #[serde(default)]
    pub output: OutputBlock,
}

/// Borrowed view of the single system block.
#[derive(Debug, Clone, Copy)]
pub enum System<'a> {
    Well(&'a WellBlock),
    Oscillator(&'a OscillatorBlock),
}

fn scenario_err(msg: impl Into<String>) -> Error {
    Error::Scenario(msg.into())
}

impl ScenarioConfig {
    pub fn system(&self) -> Result<System<'_>> {
        match (&self.well, &self.oscillator) {
            (Some(w), None) => Ok(System::Well(w)),
            (None, Some(o)) => Ok(System::Oscillator(o)),
            (Some(_), Some(_)) => Err(scenario_err(format!("{}: both well and oscillator blocks given", self.name))),
            (None, None) => Err(scenario_err(format!("{}: no well or oscillator block", self.name))),
        }
    }

    /// Checks the block structure and every physical parameter.
    pub fn validate(&self) -> Result<()> {
        if !(self.time.step > 0.0 && self.time.step.is_finite()) {
            return Err(scenario_err(format!("{}: time step must be positive", self.name)));
        }
        if !(self.time.start.is_finite() && self.time.end.is_finite() && self.time.end > self.time.start) {
            return Err(scenario_err(format!("{}: empty time range", self.name)));
        }
        match self.system()? {
            System::Well(w) => {
                w.packet()?;
                if !w.infinite {
                    w.config()?;
                }
                for &eps in &w.sweep {
                    WellConfig::new(eps)?;
                }
            }
            System::Oscillator(o) => {
                o.config()?;
                match o.state {
                    FockSpec::Coherent { alpha, alpha_im } if !(alpha.is_finite() && alpha_im.is_finite()) => {
                        return Err(scenario_err("coherent amplitude must be finite"));
                    }
                    FockSpec::Squeezed { s, alpha } if !(s >= 1.0 && s.is_finite() && alpha.is_finite()) => {
                        return Err(scenario_err("squeeze parameter must be >= 1 with finite displacement"));
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig = toml::from_str(text).map_err(|e| scenario_err(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let cfg: ScenarioConfig = serde_json::from_str(text).map_err(|e| scenario_err(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| scenario_err(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| scenario_err(e.to_string()))
    }

    /// Reads a `.json` file as JSON and anything else as TOML.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
            Self::from_json_str(&text)
        } else {
            Self::from_toml_str(&text)
        }
    }

    /// A built-in scenario by name, or a scenario file by path.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if let Some(cfg) = builtin(name_or_path) {
            return Ok(cfg);
        }
        let path = Path::new(name_or_path);
        if path.exists() {
            return Self::load(path);
        }
        Err(scenario_err(format!(
            "unknown scenario {name_or_path:?}; built-ins are {}",
            BUILTIN_NAMES.join(", ")
        )))
    }
}

pub const BUILTIN_NAMES: [&str; 8] = ["fig1a", "fig1b", "fig1c", "fig2", "fig3", "fig4", "fig5", "table1"];

fn well(name: &str, epsilon: f64, x0: f64, end: f64) -> ScenarioConfig {
    ScenarioConfig {
        name: name.to_string(),
        well: Some(WellBlock {
            epsilon,
            infinite: false,
            x0,
            sigma: 0.1,
            sweep: Vec::new(),
        }),
        oscillator: None,
        time: TimeBlock {
            start: 0.0,
            end,
            step: 1e-3,
        },
        output: OutputBlock {
            reference: true,
            ..OutputBlock::default()
        },
    }
}

/// The compiled-in parameter sets. Every packet has width 0.1 in well units.
pub fn builtin(name: &str) -> Option<ScenarioConfig> {
    let cfg = match name {
        "fig1a" => well(name, 12.0, 0.2, 2.0),
        "fig1b" => well(name, 30.0, 0.2, 2.0),
        "fig1c" => well(name, 100.0, 0.2, 2.0),
        "fig2" => well(name, 12.0, 0.0, 10.0),
        "fig3" => well(name, 15.0, 0.0, 15.0),
        "fig4" => well(name, 12.0, 0.2, 20.0),
        "fig5" => ScenarioConfig {
            name: name.to_string(),
            well: None,
            oscillator: Some(OscillatorBlock {
                beta: 0.002,
                fock_cutoff: None,
                state: FockSpec::Squeezed { s: 10.0, alpha: 0.0 },
            }),
            time: TimeBlock {
                start: 0.0,
                end: 600.0,
                step: 1e-3,
            },
            output: OutputBlock::default(),
        },
        "table1" => {
            let mut cfg = well(name, 12.0, 0.2, 2.0);
            if let Some(w) = cfg.well.as_mut() {
                w.sweep = vec![12.0, 30.0, 100.0];
            }
            cfg.output.reference = false;
            cfg
        }
        _ => return None,
    };
    Some(cfg)
}
