//! Run configuration: a JSON-compatible description of one experiment,
//! with flag overrides applied on top by the CLI layer.

use serde::{Deserialize, Serialize};

use pdmosc::ModelParams;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ParamsConfig {
    #[serde(default = "one")]
    pub m0: f64,
    #[serde(default = "one")]
    pub omega0: f64,
    #[serde(default = "one")]
    pub hbar: f64,
    #[serde(default)]
    pub gamma: f64,
}

fn one() -> f64 {
    1.0
}

impl Default for ParamsConfig {
    fn default() -> Self {
        Self { m0: 1.0, omega0: 1.0, hbar: 1.0, gamma: 0.0 }
    }
}

impl ParamsConfig {
    pub fn build(&self) -> pdmosc::Result<ModelParams> {
        ModelParams::new(self.m0, self.omega0, self.hbar, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Spectrum,
    Eigenfunction,
    ClassicalOrbit,
    PhasePortrait,
    MorseCatalog,
    CoherentEvolve,
    CatEvolve,
    Uncertainties,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Experiment-specific knobs; unused fields stay at their defaults.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
#[serde(default)]
pub struct Options {
    /// quantum numbers (eigenfunction, uncertainties)
    pub n_list: Vec<usize>,
    /// orbit deformations gamma*A0 (classical-orbit, phase-portrait)
    pub gamma_a0_list: Vec<f64>,
    /// deformation list for multi-curve figures (eigenfunction, uncertainties)
    pub gamma_sigma0_list: Vec<f64>,
    /// coherent label
    pub alpha_re: f64,
    pub alpha_im: f64,
    /// even/odd selector for cat states
    pub parity: Option<String>,
    /// time span in periods and the sample count
    pub periods: f64,
    pub samples: usize,
    /// explicit snapshot times in units of 2 pi / omega0
    pub snapshot_times: Vec<f64>,
    /// coordinate window (defaults chosen per experiment)
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    /// which panel of a multi-panel figure this config reproduces
    pub panel: Option<String>,
    /// run the per-figure manifest as part of `verify`
    pub figures: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
#[serde(default)]
pub struct OutputConfig {
    pub path: Option<String>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    #[serde(default)]
    pub params: ParamsConfig,
    pub experiment: Experiment,
    #[serde(default)]
    pub options: Options,
    #[serde(default)]
    pub output: OutputConfig,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_identity() {
        let cfg = RunConfig {
            params: ParamsConfig { m0: 1.0, omega0: 2.0, hbar: 0.5, gamma: 0.3 },
            experiment: Experiment::CoherentEvolve,
            options: Options {
                alpha_re: 0.7,
                alpha_im: -0.2,
                periods: 3.0,
                samples: 100,
                snapshot_times: vec![0.0, 0.25],
                ..Default::default()
            },
            output: OutputConfig { path: Some("out.csv".into()), format: OutputFormat::Csv },
        };
        let text = cfg.to_json();
        let back = RunConfig::from_json(&text).unwrap();
        assert_eq!(cfg, back);
        // and once more through the emitted form
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn kebab_case_names() {
        let cfg: RunConfig = serde_json::from_str(
            r#"{"experiment":"classical-orbit","options":{"gamma_a0_list":[0.4]}}"#,
        )
        .unwrap();
        assert_eq!(cfg.experiment, Experiment::ClassicalOrbit);
        assert_eq!(cfg.options.gamma_a0_list, vec![0.4]);
    }
}
