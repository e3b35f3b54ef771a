//! JSON configuration files describing a family of chains.
//!
//! ```json
//! {
//!   "metadata": { "name": "symmetric", "description": "theta = pi/6" },
//!   "chains": [
//!     { "center_zeta": [1.1547, 0.0], "center_v": 0.0, "lambda": [0.57735, 0.0] },
//!     ...
//!   ]
//! }
//! ```

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::heisenberg::{BoundaryPoint, ReflectionGenerator};
use crate::schottky::SchottkyConfig;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
}

/// One chain: the center `(ζ, v)` of its reflection and the multiplier `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainSpec {
    pub center_zeta: [f64; 2],
    pub center_v: f64,
    pub lambda: [f64; 2],
}

impl ChainSpec {
    pub fn from_generator(g: &ReflectionGenerator) -> Self {
        let (zeta, v) = g.center().coords().expect("finite center");
        ChainSpec {
            center_zeta: [zeta.re, zeta.im],
            center_v: v,
            lambda: [g.lambda().re, g.lambda().im],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub chains: Vec<ChainSpec>,
}

/// Reasons a configuration file cannot be read.
#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    Io {
        path: String,
        message: String,
    },
    /// Malformed JSON or a schema mismatch, with its position.
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed JSON that violates a field constraint.
    Field {
        field: String,
        message: String,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io { path, message } => write!(f, "cannot read {path}: {message}"),
            ConfigError::Parse {
                line,
                column,
                message,
            } => write!(f, "parse error at line {line}, column {column}: {message}"),
            ConfigError::Field { field, message } => write!(f, "{field}: {message}"),
        }
    }
}

impl std::error::Error for ConfigError {}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| ConfigError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        file.check()?;
        Ok(file)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("plain data serializes");
        text.push('\n');
        text
    }

    pub fn write(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    /// Field-level constraints: at least two chains, finite numbers, `λ ≠ 0`.
    pub fn check(&self) -> Result<(), ConfigError> {
        if self.chains.len() < 2 {
            return Err(ConfigError::Field {
                field: "chains".into(),
                message: "at least 2 chains required".into(),
            });
        }
        for (k, chain) in self.chains.iter().enumerate() {
            let numbers = chain
                .center_zeta
                .iter()
                .chain(std::iter::once(&chain.center_v))
                .chain(chain.lambda.iter());
            if numbers.into_iter().any(|x| !x.is_finite()) {
                return Err(ConfigError::Field {
                    field: format!("chains[{k}]"),
                    message: "all numbers must be finite".into(),
                });
            }
            if chain.lambda == [0.0, 0.0] {
                return Err(ConfigError::Field {
                    field: format!("chains[{k}].lambda"),
                    message: "lambda must be nonzero".into(),
                });
            }
        }
        Ok(())
    }

    pub fn from_schottky(cfg: &SchottkyConfig, metadata: Option<Metadata>) -> Self {
        ConfigFile {
            metadata,
            chains: cfg
                .generators()
                .iter()
                .map(ChainSpec::from_generator)
                .collect(),
        }
    }

    pub fn generators(&self) -> crate::Result<Vec<ReflectionGenerator>> {
        self.chains
            .iter()
            .map(|c| {
                ReflectionGenerator::new(
                    BoundaryPoint::new(
                        Complex64::new(c.center_zeta[0], c.center_zeta[1]),
                        c.center_v,
                    )?,
                    Complex64::new(c.lambda[0], c.lambda[1]),
                )
            })
            .collect()
    }

    /// Builds the configuration and its validity report.
    pub fn to_schottky(&self) -> crate::Result<SchottkyConfig> {
        SchottkyConfig::new(self.generators()?)
    }
}
