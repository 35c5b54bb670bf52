//! Run configuration. Every key is optional in the TOML file and falls back
//! to the default shown by `RunConfig::default()`.

use crate::ast::Language;
use crate::ingest::DEFAULT_MAX_FUNCTION_BYTES;
use crate::objective::{Lambdas, ToyConfig, DEFAULT_TAU};
use crate::tokenizer::{DEFAULT_MASK_RATE, DEFAULT_VOCAB_SIZE, MAX_SEQ_LEN};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config {path}: {source}")]
    Syntax {
        path: PathBuf,
        #[source]
        source: toml::de::Error,
    },
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ToyParams {
    pub d: usize,
    pub hidden: usize,
    pub steps: usize,
    pub lr: f64,
    pub batch: usize,
}

impl Default for ToyParams {
    fn default() -> Self {
        let c = ToyConfig::default();
        Self {
            d: c.dim,
            hidden: c.hidden,
            steps: c.steps,
            lr: c.lr,
            batch: c.batch,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    pub languages: Vec<Language>,
    /// Directories to ingest. Empty means the bundled sample corpus.
    pub corpus: Vec<PathBuf>,
    pub max_function_bytes: usize,
    pub vocab_size: usize,
    pub max_len: usize,
    pub mask_rate: f64,
    pub tau: f64,
    pub lambdas: Lambdas,
    /// Share of triplets held out for evaluation.
    pub eval_fraction: f64,
    pub toy: ToyParams,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            languages: vec![Language::C, Language::Cpp, Language::Java],
            corpus: Vec::new(),
            max_function_bytes: DEFAULT_MAX_FUNCTION_BYTES,
            vocab_size: DEFAULT_VOCAB_SIZE,
            max_len: MAX_SEQ_LEN,
            mask_rate: DEFAULT_MASK_RATE,
            tau: DEFAULT_TAU,
            lambdas: Lambdas::default(),
            eval_fraction: 0.2,
            toy: ToyParams::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let cfg = Self::from_toml(&text).map_err(|source| ConfigError::Syntax {
            path: path.to_path_buf(),
            source,
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable")
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |m: &str| Err(ConfigError::Invalid(m.to_string()));
        if self.languages.is_empty() {
            return bad("languages must not be empty");
        }
        if self.max_len < 3 {
            return bad("max_len must be at least 3");
        }
        if !(0.0..=1.0).contains(&self.mask_rate) {
            return bad("mask_rate must lie in [0, 1]");
        }
        if !(self.tau > 0.0) {
            return bad("tau must be positive");
        }
        if !(self.eval_fraction > 0.0 && self.eval_fraction < 1.0) {
            return bad("eval_fraction must lie in (0, 1)");
        }
        if self.toy.batch == 0 || self.toy.d == 0 || self.toy.hidden == 0 || !(self.toy.lr > 0.0) {
            return bad("toy.d, toy.hidden, toy.batch and toy.lr must be positive");
        }
        Ok(())
    }

    pub fn toy_config(&self) -> ToyConfig {
        ToyConfig {
            dim: self.toy.d,
            hidden: self.toy.hidden,
            steps: self.toy.steps,
            lr: self.toy.lr,
            batch: self.toy.batch,
            tau: self.tau,
            seed: self.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_partial_files() {
        let d = RunConfig::default();
        assert_eq!((d.vocab_size, d.max_len, d.mask_rate, d.tau), (50_000, 512, 0.15, 0.05));
        assert_eq!((d.lambdas.mlm, d.lambdas.ltsp, d.lambdas.clr), (1.0, 0.1, 1.0));
        let c = RunConfig::from_toml("seed = 9\n[toy]\nsteps = 10\n").unwrap();
        assert_eq!((c.seed, c.toy.steps, c.toy.batch, c.tau), (9, 10, 32, 0.05));
        assert_eq!(RunConfig::from_toml(&d.to_toml()).unwrap(), d);
        assert!(RunConfig::from_toml("sede = 1\n").is_err());
    }
}
