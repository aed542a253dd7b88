use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use spinpair::spin::alpha_from_params;
use spinpair::tomography::TomographyConfig;
use spinpair::SystemParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Boltzmann ratio across the electron Zeeman splitting.
    #[arg(long, global = true, conflicts_with_all = ["field_tesla", "temp_kelvin"])]
    pub alpha: Option<f64>,
    #[arg(long, global = true, requires = "temp_kelvin")]
    pub field_tesla: Option<f64>,
    #[arg(long, global = true, requires = "field_tesla")]
    pub temp_kelvin: Option<f64>,
    /// Pulse program in the text format.
    #[arg(long = "seq", global = true)]
    pub sequence_path: Option<PathBuf>,
    /// Output file, or directory for tomography.
    #[arg(long = "out", global = true)]
    pub output_path: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub nu_phi: Option<f64>,
    #[arg(long, global = true)]
    pub nu_sigma: Option<f64>,
    #[arg(long, global = true)]
    pub points: Option<usize>,
    #[arg(long, global = true)]
    pub noise: Option<f64>,
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Scalar standard error for every element, or a 4x4 JSON file.
    #[arg(long, global = true)]
    pub element_error: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

impl RunConfig {
    pub fn has_sample(&self) -> bool {
        self.alpha.is_some() || self.field_tesla.is_some()
    }

    /// Physical parameters from either `--alpha` or `--field-tesla` with `--temp-kelvin`.
    pub fn params(&self) -> Result<SystemParams> {
        let p = match (self.alpha, self.field_tesla, self.temp_kelvin) {
            (Some(a), None, None) => SystemParams::at_alpha(a)?,
            (None, Some(b), Some(t)) => SystemParams::silicon_phosphorus(b, t),
            _ => bail!("supply either --alpha or both --field-tesla and --temp-kelvin"),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn alpha(&self) -> Result<f64> {
        match self.alpha {
            Some(a) if (0.0..=1.0).contains(&a) => Ok(a),
            Some(a) => bail!("--alpha must lie in [0, 1], got {a}"),
            None => Ok(alpha_from_params(&self.params()?)?),
        }
    }

    pub fn tomography(&self) -> TomographyConfig {
        let d = TomographyConfig::default();
        TomographyConfig {
            nu_phi: self.nu_phi.unwrap_or(d.nu_phi),
            nu_sigma: self.nu_sigma.unwrap_or(d.nu_sigma),
            n_points: self.points.unwrap_or(d.n_points),
            noise_sigma: self.noise.unwrap_or(d.noise_sigma),
            seed: self.seed,
            ..d
        }
    }

    /// Sample description echoed into every written file.
    pub fn meta(&self, alpha: f64) -> BTreeMap<String, Value> {
        let mut meta = BTreeMap::new();
        meta.insert("alpha".into(), json!(alpha));
        if let (Some(b), Some(t)) = (self.field_tesla, self.temp_kelvin) {
            meta.insert("field_tesla".into(), json!(b));
            meta.insert("temperature_kelvin".into(), json!(t));
        }
        if let Ok(p) = self.params() {
            meta.insert("g_electron".into(), json!(p.g));
            meta.insert("g_nuclear".into(), json!(p.g_nuclear));
            meta.insert("hyperfine_rad_per_s".into(), json!(p.hyperfine));
            meta.insert("t1e_seconds".into(), json!(p.t1e));
            meta.insert("t1n_seconds".into(), json!(p.t1n));
        }
        meta
    }
}
