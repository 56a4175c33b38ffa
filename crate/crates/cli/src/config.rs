use std::path::{Path, PathBuf};

use knotform::orbit::Tolerances;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "KNOTFORM_CONFIG";

const DEFAULT_CONFIG: &str = include_str!("../config/knotform.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

/// Settings shared by every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub coset_cap: usize,
    pub group_cap: usize,
    pub format: OutputFormat,
    pub seed: u64,
    #[serde(default)]
    pub timings: bool,
    #[serde(default)]
    pub threads: usize,
    #[serde(default)]
    pub corpus: Option<PathBuf>,
    #[serde(default)]
    pub cache: Option<PathBuf>,
    pub tolerances: Tolerances,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig::parse(DEFAULT_CONFIG).expect("shipped config is valid")
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The explicit path if given, else the environment variable, else the
    /// built-in defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self, CliError> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.coset_cap == 0 || self.group_cap == 0 {
            return Err(CliError::Config("caps must be at least 1".into()));
        }
        let t = &self.tolerances;
        for (name, v) in [("grid", t.grid), ("minimization", t.minimization), ("oracle_gate", t.oracle_gate)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_defaults() {
        let c = RunConfig::default();
        assert_eq!((c.coset_cap, c.group_cap), (200_000, 100_000));
        assert_eq!(c.tolerances, Tolerances::default());
        assert_eq!(c.format, OutputFormat::Table);
        assert!(c.cache.is_none() && c.corpus.is_none());
    }

    #[test]
    fn rejects_bad_configs() {
        let base = DEFAULT_CONFIG.to_string();
        assert!(RunConfig::parse(&format!("{base}\nbogus = 1")).is_err());
        assert!(RunConfig::parse(&base.replace("coset_cap = 200000", "coset_cap = 0")).is_err());
        assert!(RunConfig::parse(&base.replace("grid = 1e-12", "grid = -1.0")).is_err());
        assert!(RunConfig::parse(&base.replace("grid = 1e-12", "grid = 1e-12\nextra = 2")).is_err());
        assert!(RunConfig::parse(&base.replace("\"table\"", "\"yaml\"")).is_err());
    }
}
