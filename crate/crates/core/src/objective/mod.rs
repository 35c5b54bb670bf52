//! Pre-training losses: masked-token and AST-label negative log likelihoods,
//! the hard-negative contrastive loss with its analytic gradient, and their
//! weighted combination.

pub mod toy;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use toy::{ToyConfig, ToyEncoder, ToyError, ToyTriplet};

pub const DEFAULT_TAU: f64 = 0.05;
/// Allowed deviation of a probability vector's sum from 1.
pub const DISTRIBUTION_TOLERANCE: f64 = 1e-6;

pub type Embedding = Vec<f64>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LossError {
    #[error("{dists} distributions but {targets} targets")]
    LengthMismatch { dists: usize, targets: usize },
    #[error("distribution {index} sums to {sum}")]
    NotADistribution { index: usize, sum: f64 },
    #[error("target {target} out of range at position {index}")]
    TargetOutOfRange { index: usize, target: usize },
    #[error("true class has zero probability at position {index}")]
    DegenerateDistribution { index: usize },
    #[error("{role} embedding {index} has zero norm")]
    ZeroNormEmbedding { role: &'static str, index: usize },
    #[error("batch has {anchors} anchors, {positives} positives, {negatives} negatives")]
    BatchShape { anchors: usize, positives: usize, negatives: usize },
    #[error("embedding dimensions differ")]
    DimensionMismatch,
    #[error("temperature must be positive, got {0}")]
    InvalidTemperature(f64),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
}

fn nll<D: AsRef<[f64]>>(dists: &[D], targets: &[usize]) -> Result<f64, LossError> {
    if dists.len() != targets.len() {
        return Err(LossError::LengthMismatch {
            dists: dists.len(),
            targets: targets.len(),
        });
    }
    let mut total = 0.0;
    for (index, (d, &t)) in dists.iter().zip(targets).enumerate() {
        let d = d.as_ref();
        let sum: f64 = d.iter().sum();
        if !sum.is_finite() || (sum - 1.0).abs() > DISTRIBUTION_TOLERANCE || d.iter().any(|&p| p < 0.0) {
            return Err(LossError::NotADistribution { index, sum });
        }
        let p = *d.get(t).ok_or(LossError::TargetOutOfRange { index, target: t })?;
        if p <= 0.0 {
            return Err(LossError::DegenerateDistribution { index });
        }
        total -= p.ln();
    }
    Ok(total)
}

/// Sum over masked positions of `-ln P(true token)`.
pub fn mlm_loss<D: AsRef<[f64]>>(predicted: &[D], true_ids: &[usize]) -> Result<f64, LossError> {
    nll(predicted, true_ids)
}

/// Sum over code-token positions of `-ln P(true label)`.
pub fn ltsp_loss<D: AsRef<[f64]>>(predicted: &[D], true_labels: &[usize]) -> Result<f64, LossError> {
    nll(predicted, true_labels)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContrastiveBatch {
    pub anchors: Vec<Embedding>,
    pub positives: Vec<Embedding>,
    pub negatives: Vec<Embedding>,
    pub tau: f64,
}

impl ContrastiveBatch {
    pub fn new(anchors: Vec<Embedding>, positives: Vec<Embedding>, negatives: Vec<Embedding>) -> Self {
        Self {
            anchors,
            positives,
            negatives,
            tau: DEFAULT_TAU,
        }
    }

    pub fn len(&self) -> usize {
        self.anchors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.anchors.is_empty()
    }

    fn validate(&self) -> Result<(), LossError> {
        let (a, p, n) = (self.anchors.len(), self.positives.len(), self.negatives.len());
        if a != p || a != n || a == 0 {
            return Err(LossError::BatchShape {
                anchors: a,
                positives: p,
                negatives: n,
            });
        }
        if !(self.tau > 0.0) || !self.tau.is_finite() {
            return Err(LossError::InvalidTemperature(self.tau));
        }
        let dim = self.anchors[0].len();
        for (role, set) in [("anchor", &self.anchors), ("positive", &self.positives), ("negative", &self.negatives)] {
            for (index, v) in set.iter().enumerate() {
                if v.len() != dim {
                    return Err(LossError::DimensionMismatch);
                }
                if v.iter().any(|x| !x.is_finite()) {
                    return Err(LossError::NonFinite(role));
                }
                if norm(v) == 0.0 {
                    return Err(LossError::ZeroNormEmbedding { role, index });
                }
            }
        }
        Ok(())
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Cosine similarity; `None` when either vector has zero norm.
pub fn cosine(a: &[f64], b: &[f64]) -> Option<f64> {
    let d = norm(a) * norm(b);
    (d > 0.0).then(|| dot(a, b) / d)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClrLoss {
    pub per_anchor: Vec<f64>,
    pub mean: f64,
}

/// Logits of anchor `i` against every positive, then every negative.
fn anchor_logits(batch: &ContrastiveBatch, i: usize) -> Vec<f64> {
    let z = &batch.anchors[i];
    batch
        .positives
        .iter()
        .chain(&batch.negatives)
        .map(|v| cosine(z, v).unwrap_or(0.0) / batch.tau)
        .collect()
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    m + xs.iter().map(|x| (x - m).exp()).sum::<f64>().ln()
}

/// For anchor `i`: `-ln( e^{s(z_i,z_i+)/t} / sum_n (e^{s(z_i,z_n+)/t} + e^{s(z_i,z_n-)/t}) )`,
/// with the batch loss the mean over anchors.
pub fn clr_loss(batch: &ContrastiveBatch) -> Result<ClrLoss, LossError> {
    batch.validate()?;
    let per_anchor: Vec<f64> = (0..batch.len())
        .map(|i| {
            let logits = anchor_logits(batch, i);
            log_sum_exp(&logits) - logits[i]
        })
        .collect();
    let mean = per_anchor.iter().sum::<f64>() / per_anchor.len() as f64;
    Ok(ClrLoss { per_anchor, mean })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClrGradient {
    pub loss: ClrLoss,
    pub anchors: Vec<Embedding>,
    pub positives: Vec<Embedding>,
    pub negatives: Vec<Embedding>,
}

/// Adds `scale * d cos(u, v) / du` to `out`.
fn add_cosine_grad(out: &mut [f64], u: &[f64], v: &[f64], scale: f64) {
    let (nu, nv) = (norm(u), norm(v));
    let c = dot(u, v) / (nu * nv);
    for ((o, &ui), &vi) in out.iter_mut().zip(u).zip(v) {
        *o += scale * (vi / (nu * nv) - c * ui / (nu * nu));
    }
}

/// Exact gradient of the mean contrastive loss with respect to every embedding.
pub fn clr_gradient(batch: &ContrastiveBatch) -> Result<ClrGradient, LossError> {
    let loss = clr_loss(batch)?;
    let n = batch.len();
    let dim = batch.anchors[0].len();
    let mut ga = vec![vec![0.0; dim]; n];
    let mut gp = vec![vec![0.0; dim]; n];
    let mut gn = vec![vec![0.0; dim]; n];
    for i in 0..n {
        let logits = anchor_logits(batch, i);
        let lse = log_sum_exp(&logits);
        let z = &batch.anchors[i];
        for (j, &l) in logits.iter().enumerate() {
            let mut w = (l - lse).exp();
            if j == i {
                w -= 1.0;
            }
            let scale = w / (batch.tau * n as f64);
            let (other, grad_other) = if j < n {
                (&batch.positives[j], &mut gp[j])
            } else {
                (&batch.negatives[j - n], &mut gn[j - n])
            };
            add_cosine_grad(&mut ga[i], z, other, scale);
            add_cosine_grad(grad_other, other, z, scale);
        }
    }
    Ok(ClrGradient {
        loss,
        anchors: ga,
        positives: gp,
        negatives: gn,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Lambdas {
    pub mlm: f64,
    pub ltsp: f64,
    pub clr: f64,
}

impl Default for Lambdas {
    fn default() -> Self {
        Self {
            mlm: 1.0,
            ltsp: 0.1,
            clr: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LossBreakdown {
    pub mlm: f64,
    pub ltsp: f64,
    pub clr: f64,
    pub combined: f64,
    pub lambdas: Lambdas,
}

pub fn combined_loss(mlm: f64, ltsp: f64, clr: f64, lambdas: Lambdas) -> Result<LossBreakdown, LossError> {
    if ![mlm, ltsp, clr].iter().all(|x| x.is_finite()) {
        return Err(LossError::NonFinite("loss component"));
    }
    Ok(LossBreakdown {
        mlm,
        ltsp,
        clr,
        combined: lambdas.mlm * mlm + lambdas.ltsp * ltsp + lambdas.clr * clr,
        lambdas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nll_cases() {
        assert_eq!(mlm_loss(&[vec![0.0, 1.0]], &[1]).unwrap(), 0.0);
        let v = 50_000;
        let uniform = vec![1.0 / v as f64; v];
        let l = mlm_loss(&[uniform], &[7]).unwrap();
        assert!((l - (v as f64).ln()).abs() < 1e-9 && (l - 10.8198).abs() < 1e-4);
        assert_eq!(mlm_loss::<Vec<f64>>(&[], &[]).unwrap(), 0.0);
        assert_eq!(
            ltsp_loss(&[vec![1.0, 0.0]], &[1]),
            Err(LossError::DegenerateDistribution { index: 0 })
        );
        assert!(matches!(ltsp_loss(&[vec![0.5, 0.4]], &[1]), Err(LossError::NotADistribution { .. })));
    }

    #[test]
    fn clr_saturation_and_symmetry() {
        let z = vec![1.0, 0.0];
        let b = ContrastiveBatch::new(vec![z.clone()], vec![z.clone()], vec![vec![-1.0, 0.0]]);
        let l = clr_loss(&b).unwrap();
        assert!(l.mean.abs() < 1e-15);
        let g = clr_gradient(&b).unwrap();
        let gn: f64 = g.anchors.iter().chain(&g.positives).chain(&g.negatives).map(|v| norm(v)).sum();
        assert!(gn < 1e-12);
        let b = ContrastiveBatch::new(vec![z.clone()], vec![vec![0.0, 1.0]], vec![vec![0.0, -1.0]]);
        assert!((clr_loss(&b).unwrap().mean - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn combined_defaults() {
        let l = Lambdas::default();
        assert_eq!(combined_loss(0.0, 0.0, 0.0, l).unwrap().combined, 0.0);
        assert!((combined_loss(1.0, 1.0, 1.0, l).unwrap().combined - 2.1).abs() < 1e-12);
        assert!((combined_loss(10.82, 30.5, 0.69, l).unwrap().combined - 14.56).abs() < 1e-12);
    }

    #[test]
    fn zero_norm_is_rejected() {
        let b = ContrastiveBatch::new(vec![vec![0.0, 0.0]], vec![vec![1.0, 0.0]], vec![vec![0.0, 1.0]]);
        assert_eq!(clr_loss(&b), Err(LossError::ZeroNormEmbedding { role: "anchor", index: 0 }));
    }
}
