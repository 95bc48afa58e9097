use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rank2_crystal::multiplicity::SymmetricConfig;
use rank2_crystal::{classify_weight, CartanData, IntegralWeight, ShapeWeight};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Dot,
    Json,
    Tsv,
}

/// Everything a subcommand needs besides its own ranges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub a1: i64,
    pub a2: i64,
    pub k1: i64,
    pub k2: i64,
    pub depth: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            a1: 3,
            a2: 3,
            k1: 1,
            k2: 1,
            depth: 4,
            format: None,
            out: None,
        }
    }
}

impl RunConfig {
    /// Reads the JSON mirror of the command-line flags.
    pub fn from_json_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    }

    pub fn cartan(&self) -> Result<CartanData, CliError> {
        CartanData::new(self.a1, self.a2).map_err(|e| CliError::Validation(e.to_string()))
    }

    /// The Cartan datum and `λ = k₁Λ₁ − k₂Λ₂`, rejected with the failed
    /// inequality if `λ` is not an admissible shape.
    pub fn shape(&self) -> Result<ShapeWeight, CliError> {
        let cartan = self.cartan()?;
        classify_weight(&cartan, &IntegralWeight::new(self.k1, -self.k2))
            .map_err(|e| CliError::Validation(e.to_string()))
    }

    /// The multiplicity algorithm is only available for `a₁ = a₂ ≥ 3`.
    pub fn symmetric_parameter(&self) -> Result<i64, CliError> {
        if self.a1 != self.a2 || self.a1 < 3 {
            return Err(CliError::Validation(format!(
                "needs a symmetric matrix with a1 = a2 >= 3, got a1 = {}, a2 = {}",
                self.a1, self.a2
            )));
        }
        Ok(self.a1)
    }

    /// The symmetric datum with `λ = Λ₁ − Λ₂`.
    pub fn symmetric(&self) -> Result<SymmetricConfig, CliError> {
        let a = self.symmetric_parameter()?;
        if (self.k1, self.k2) != (1, 1) {
            return Err(CliError::Validation(format!(
                "multiplicities are only available for k1 = k2 = 1, got k1 = {}, k2 = {}",
                self.k1, self.k2
            )));
        }
        SymmetricConfig::new(a).map_err(|e| CliError::Validation(e.to_string()))
    }

    pub fn format_or(&self, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
        let format = self.format.unwrap_or(default);
        if allowed.contains(&format) {
            Ok(format)
        } else {
            Err(CliError::Validation(format!(
                "format {format:?} is not available here"
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejections_name_the_inequality() {
        let config = RunConfig {
            k1: 2,
            k2: 1,
            ..RunConfig::default()
        };
        let err = config.shape().unwrap_err().to_string();
        assert!(err.contains("k1 < (a1-1)*k2"), "{err}");
        let config = RunConfig {
            a1: 3,
            a2: 4,
            ..RunConfig::default()
        };
        assert!(config.shape().is_ok());
        assert!(config.symmetric().is_err());
    }

    #[test]
    fn json_mirror_round_trip() {
        let config = RunConfig {
            format: Some(Format::Tsv),
            ..RunConfig::default()
        };
        let text = serde_json::to_string(&config).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), config);
    }
}
