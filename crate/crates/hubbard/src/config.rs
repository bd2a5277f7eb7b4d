use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hubbard_core::logical::LogicalCostInputs;
use hubbard_core::model::HubbardSpec;
use hubbard_core::physical::ArchitectureConfig;
use hubbard_core::signal::SweepConfig;
use hubbard_core::utility::EconomicConstants;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub const CONFIG_SCHEMA_VERSION: u32 = 1;

/// Run configuration shared by all subcommands. Every section is optional
/// and falls back to its defaults; unknown keys are rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub schema_version: u32,
    /// Problem instance used when no spec file is given.
    pub model: Option<HubbardSpec>,
    pub signal: SweepConfig,
    pub logical: LogicalCostInputs,
    pub architecture: ArchitectureConfig,
    pub economics: EconomicConstants,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            schema_version: CONFIG_SCHEMA_VERSION,
            model: None,
            signal: SweepConfig::default(),
            logical: LogicalCostInputs::default(),
            architecture: ArchitectureConfig::default(),
            economics: EconomicConstants::default(),
        }
    }
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(RunConfig::default());
        };
        let config: RunConfig = read_json(path)?;
        if config.schema_version != CONFIG_SCHEMA_VERSION {
            bail!(
                "{}: unsupported schema_version {} (expected {CONFIG_SCHEMA_VERSION})",
                path.display(),
                config.schema_version
            );
        }
        Ok(config)
    }

    /// The spec file if given, else the config's model, else the 2x2 default.
    pub fn spec(&self, path: Option<&Path>) -> Result<HubbardSpec> {
        let spec = match path {
            Some(p) => read_json::<HubbardSpec>(p)?,
            None => self.model.clone().unwrap_or_else(default_spec),
        };
        spec.validate().context("invalid problem specification")?;
        Ok(spec)
    }
}

/// 2x2 open lattice with `V_nn = 1, U = 2, mu = 1`.
pub fn default_spec() -> HubbardSpec {
    HubbardSpec::single_orbital(2, 2, 1.0, 2.0, 1.0)
}

/// Parses a JSON file; errors carry the path and the line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let c = RunConfig::default();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), c);
    }

    #[test]
    fn partial_sections_fill_in() {
        let c: RunConfig = serde_json::from_str(
            r#"{"schema_version":1,"signal":{"n_sets":2},"economics":{"discount":0.07}}"#,
        )
        .unwrap();
        assert_eq!(c.signal.n_sets, 2);
        assert_eq!(c.signal.n_realizations, 100);
        assert_eq!(c.economics.discount, 0.07);
    }

    #[test]
    fn unknown_section_is_named() {
        let err =
            serde_json::from_str::<RunConfig>(r#"{"schema_version":1,"signals":{}}"#).unwrap_err();
        assert!(err.to_string().contains("signals"));
        assert_eq!(err.line(), 1);
    }
}
