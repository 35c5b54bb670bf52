//! A small trainable encoder: sub-token embedding table, mean pooling and a
//! linear projection, trained with the contrastive loss and Adam.

use super::{clr_gradient, ContrastiveBatch, Embedding, LossError};
use crate::batch::{plan_epoch, BatchError};
use crate::rng::{derive_seed, rng_from_seed};
use crate::tokenizer::PAD_ID;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToyConfig {
    /// Output dimension.
    pub dim: usize,
    /// Width of the embedding table.
    pub hidden: usize,
    pub steps: usize,
    pub lr: f64,
    pub batch: usize,
    pub tau: f64,
    pub seed: u64,
}

impl Default for ToyConfig {
    fn default() -> Self {
        Self {
            dim: 64,
            hidden: 64,
            steps: 500,
            lr: 0.01,
            batch: 32,
            tau: super::DEFAULT_TAU,
            seed: 0,
        }
    }
}

/// Token-id sequences of an original function, its clone and its deviant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToyTriplet {
    pub original: Vec<u32>,
    pub clone: Vec<u32>,
    pub deviant: Vec<u32>,
}

#[derive(Debug, Error)]
pub enum ToyError {
    #[error("training loss became non-finite at step {step}")]
    Diverged { step: usize },
    #[error("need at least {need} triplets, got {got}")]
    TooFewTriplets { need: usize, got: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Loss(#[from] LossError),
    #[error(transparent)]
    Batch(#[from] BatchError),
    #[error("encoder file: {0}")]
    Io(#[from] std::io::Error),
    #[error("encoder file: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToyEncoder {
    pub vocab: usize,
    pub config: ToyConfig,
    /// Row-major `vocab x hidden`.
    pub embedding: Vec<f64>,
    /// Row-major `dim x hidden`.
    pub projection: Vec<f64>,
    /// Mean contrastive loss per training step.
    pub loss_curve: Vec<f64>,
}

struct Adam {
    m: Vec<f64>,
    v: Vec<f64>,
    t: i32,
}

impl Adam {
    const B1: f64 = 0.9;
    const B2: f64 = 0.999;
    const EPS: f64 = 1e-8;

    fn new(n: usize) -> Self {
        Self {
            m: vec![0.0; n],
            v: vec![0.0; n],
            t: 0,
        }
    }

    fn step(&mut self, params: &mut [f64], grad: &[f64], lr: f64) {
        self.t += 1;
        let c1 = 1.0 - Self::B1.powi(self.t);
        let c2 = 1.0 - Self::B2.powi(self.t);
        for i in 0..params.len() {
            let g = grad[i];
            self.m[i] = Self::B1 * self.m[i] + (1.0 - Self::B1) * g;
            self.v[i] = Self::B2 * self.v[i] + (1.0 - Self::B2) * g * g;
            params[i] -= lr * (self.m[i] / c1) / ((self.v[i] / c2).sqrt() + Self::EPS);
        }
    }
}

impl ToyEncoder {
    pub fn new(vocab: usize, config: ToyConfig) -> Self {
        let mut rng = rng_from_seed(derive_seed(config.seed, "toy-init"));
        let std = 1.0 / (config.hidden as f64).sqrt();
        let normal = Normal::new(0.0, std).expect("positive std");
        let embedding = (0..vocab * config.hidden).map(|_| normal.sample(&mut rng)).collect();
        let projection = (0..config.dim * config.hidden).map(|_| normal.sample(&mut rng)).collect();
        Self {
            vocab,
            config,
            embedding,
            projection,
            loss_curve: Vec::new(),
        }
    }

    fn pool(&self, ids: &[u32]) -> Vec<f64> {
        let h = self.config.hidden;
        let mut p = vec![0.0; h];
        let mut n = 0usize;
        for &id in ids {
            let id = id as usize;
            if id == PAD_ID as usize || id >= self.vocab {
                continue;
            }
            for (pk, ek) in p.iter_mut().zip(&self.embedding[id * h..(id + 1) * h]) {
                *pk += ek;
            }
            n += 1;
        }
        if n > 0 {
            p.iter_mut().for_each(|x| *x /= n as f64);
        }
        p
    }

    fn project(&self, p: &[f64]) -> Embedding {
        let h = self.config.hidden;
        (0..self.config.dim).map(|r| super::dot(&self.projection[r * h..(r + 1) * h], p)).collect()
    }

    pub fn embed(&self, ids: &[u32]) -> Embedding {
        self.project(&self.pool(ids))
    }

    /// Adds the parameter gradient of one encoded sequence, given `dz`.
    fn backprop(&self, ids: &[u32], pooled: &[f64], dz: &[f64], ge: &mut [f64], gw: &mut [f64]) {
        let h = self.config.hidden;
        let mut dp = vec![0.0; h];
        for (r, &d) in dz.iter().enumerate() {
            let row = &self.projection[r * h..(r + 1) * h];
            for k in 0..h {
                gw[r * h + k] += d * pooled[k];
                dp[k] += d * row[k];
            }
        }
        let valid: Vec<usize> = ids
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| i != PAD_ID as usize && i < self.vocab)
            .collect();
        if valid.is_empty() {
            return;
        }
        let scale = 1.0 / valid.len() as f64;
        for id in valid {
            for k in 0..h {
                ge[id * h + k] += dp[k] * scale;
            }
        }
    }

    /// Trains on `triplets` with in-batch negatives. Steps walk through
    /// seeded epochs of full batches, so no triplet repeats within an epoch.
    pub fn train(vocab: usize, triplets: &[ToyTriplet], config: ToyConfig) -> Result<Self, ToyError> {
        if config.batch == 0 || config.dim == 0 || config.hidden == 0 || !(config.lr > 0.0) {
            return Err(ToyError::Config(format!("{config:?}")));
        }
        if triplets.len() < config.batch {
            return Err(ToyError::TooFewTriplets {
                need: config.batch,
                got: triplets.len(),
            });
        }
        let mut enc = Self::new(vocab, config.clone());
        let batch_seed = derive_seed(config.seed, "toy-batches");
        let mut plan = plan_epoch(triplets.len(), config.batch, batch_seed, 0)?;
        let per_epoch = plan.batches.len();
        let mut adam_e = Adam::new(enc.embedding.len());
        let mut adam_w = Adam::new(enc.projection.len());
        for step in 0..config.steps {
            if step > 0 && step % per_epoch == 0 {
                plan = plan_epoch(triplets.len(), config.batch, batch_seed, step / per_epoch)?;
            }
            let picked: Vec<&ToyTriplet> = plan.batches[step % per_epoch].iter().map(|&i| &triplets[i]).collect();
            let pools: Vec<[Vec<f64>; 3]> = picked
                .iter()
                .map(|t| [enc.pool(&t.original), enc.pool(&t.clone), enc.pool(&t.deviant)])
                .collect();
            let batch = ContrastiveBatch {
                anchors: pools.iter().map(|p| enc.project(&p[0])).collect(),
                positives: pools.iter().map(|p| enc.project(&p[1])).collect(),
                negatives: pools.iter().map(|p| enc.project(&p[2])).collect(),
                tau: config.tau,
            };
            let grad = match clr_gradient(&batch) {
                Ok(g) => g,
                Err(LossError::NonFinite(_)) => return Err(ToyError::Diverged { step }),
                Err(e) => return Err(e.into()),
            };
            if !grad.loss.mean.is_finite() {
                return Err(ToyError::Diverged { step });
            }
            enc.loss_curve.push(grad.loss.mean);
            let mut ge = vec![0.0; enc.embedding.len()];
            let mut gw = vec![0.0; enc.projection.len()];
            for (i, t) in picked.iter().enumerate() {
                enc.backprop(&t.original, &pools[i][0], &grad.anchors[i], &mut ge, &mut gw);
                enc.backprop(&t.clone, &pools[i][1], &grad.positives[i], &mut ge, &mut gw);
                enc.backprop(&t.deviant, &pools[i][2], &grad.negatives[i], &mut ge, &mut gw);
            }
            adam_e.step(&mut enc.embedding, &ge, config.lr);
            adam_w.step(&mut enc.projection, &gw, config.lr);
            if enc.embedding.iter().chain(&enc.projection).any(|x| !x.is_finite()) {
                return Err(ToyError::Diverged { step });
            }
        }
        Ok(enc)
    }

    pub fn save(&self, path: &Path) -> Result<(), ToyError> {
        let f = std::io::BufWriter::new(std::fs::File::create(path)?);
        serde_json::to_writer(f, self)?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, ToyError> {
        let f = std::io::BufReader::new(std::fs::File::open(path)?);
        let enc: Self = serde_json::from_reader(f)?;
        let c = &enc.config;
        if enc.embedding.len() != enc.vocab * c.hidden || enc.projection.len() != c.dim * c.hidden {
            return Err(ToyError::Config("parameter shapes do not match the configuration".into()));
        }
        Ok(enc)
    }

    /// Writes `step,clr_loss` rows.
    pub fn write_loss_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "step,clr_loss")?;
        for (i, l) in self.loss_curve.iter().enumerate() {
            writeln!(w, "{i},{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(n: usize) -> Vec<ToyTriplet> {
        // Clones share the original's "content" ids; deviants swap one in.
        (0..n as u32)
            .map(|i| {
                let base = vec![5 + i % 40, 50 + i % 13, 70 + i % 7, 90 + i % 11];
                let mut clone = base.clone();
                clone.push(100 + i % 3);
                let mut deviant = base.clone();
                deviant[0] = 5 + (i + 1) % 40;
                ToyTriplet { original: base, clone, deviant }
            })
            .collect()
    }

    #[test]
    fn training_reduces_loss_and_is_deterministic() {
        let data = synthetic(200);
        let cfg = ToyConfig {
            steps: 60,
            batch: 16,
            dim: 16,
            hidden: 16,
            seed: 5,
            ..ToyConfig::default()
        };
        let a = ToyEncoder::train(110, &data, cfg.clone()).unwrap();
        let b = ToyEncoder::train(110, &data, cfg).unwrap();
        assert_eq!(a, b);
        let head: f64 = a.loss_curve[..10].iter().sum();
        let tail: f64 = a.loss_curve[50..].iter().sum();
        assert!(tail < head, "{head} -> {tail}");
    }

    #[test]
    fn save_and_load() {
        let enc = ToyEncoder::new(12, ToyConfig { dim: 3, hidden: 4, ..ToyConfig::default() });
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("enc.json");
        enc.save(&path).unwrap();
        assert_eq!(ToyEncoder::load(&path).unwrap(), enc);
    }
}
