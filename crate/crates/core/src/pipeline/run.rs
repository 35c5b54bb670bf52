//! The full pipeline behind one call: ingest, augment, tokenize, train the
//! toy encoder and evaluate it on a held-out split.

use super::config::{ConfigError, RunConfig};
use super::triplets::{augment, write_triplets, AugmentSummary, TripletRecord};
use crate::clone::CloneContext;
use crate::eval::{map_at_r, random_map_at_r, zero_shot_study, EmbeddedTriplet, EvalError, RetrievalItem, ZeroShotStudy};
use crate::ingest::{self, build_identifier_vocab, CorpusManifest, IngestError, IngestOptions};
use crate::labels::{LabelVocab, UNK_LABEL_ID};
use crate::objective::{combined_loss, ltsp_loss, mlm_loss, LossBreakdown, LossError, ToyEncoder, ToyError, ToyTriplet};
use crate::rng::{derive_seed, rng_from_seed};
use crate::tokenizer::{mask_for_mlm, train_subword, SubwordModel, TokenizerError, TrainOptions};
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Tokenizer(#[from] TokenizerError),
    #[error(transparent)]
    Toy(#[from] ToyError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Loss(#[from] LossError),
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Directory of the small corpus shipped with the crate.
pub fn bundled_corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sample_corpus")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SplitInfo {
    pub train: usize,
    pub eval: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TokenizerSection {
    pub requested_vocab: usize,
    pub learned_vocab: usize,
    pub merges: usize,
    pub training_corpus_sha256: String,
    pub sequences: usize,
    pub truncated: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabelSection {
    pub vocab_size: usize,
    /// `[UNK]` labels among training sequences (always 0: the vocabulary is built from them).
    pub unk_train: usize,
    pub unk_eval: usize,
}

/// Masking statistics over the training originals, and the loss a uniform
/// predictor would get on them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MlmSection {
    Masked {
        mask_rate: f64,
        sequences: usize,
        masked_positions: usize,
        uniform_loss_per_sequence: f64,
    },
    /// The mask rate selected no positions anywhere.
    EmptyMask { mask_rate: f64, sequences: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToySection {
    pub steps: usize,
    pub initial_loss: f64,
    pub final_loss: f64,
    pub encoder_sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalSection {
    /// Originals and clones of the eval split; each pair is one group.
    pub items: usize,
    pub r: usize,
    pub map_at_r: f64,
    pub random_baseline: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndToEndReport {
    pub config: RunConfig,
    pub corpus: CorpusManifest,
    pub augment: AugmentSummary,
    pub triplets_sha256: String,
    pub split: SplitInfo,
    pub tokenizer: TokenizerSection,
    pub labels: LabelSection,
    pub mlm: MlmSection,
    pub ltsp_uniform_loss_per_sequence: f64,
    pub toy: ToySection,
    /// Lambda-weighted sum of the uniform MLM/LTSP baselines and the final
    /// contrastive loss.
    pub losses: LossBreakdown,
    pub zero_shot: ZeroShotStudy,
    pub retrieval: RetrievalSection,
}

/// A report with its wall-clock timestamp kept apart from the metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    /// Seconds since the Unix epoch when the report was written.
    pub generated_at: u64,
    pub report: EndToEndReport,
}

impl ReportEnvelope {
    pub fn now(report: EndToEndReport) -> Self {
        let generated_at = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        Self { generated_at, report }
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Deterministic train/eval split of `n` items.
pub fn split_indices(n: usize, eval_fraction: f64, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut rng_from_seed(derive_seed(seed, "split")));
    let eval = ((n as f64 * eval_fraction).round() as usize).clamp(1.min(n), n);
    let train = idx.split_off(eval);
    (train, idx)
}

fn encode_ids(bpe: &SubwordModel, tokens: &[String], max_len: usize) -> Result<(Vec<u32>, bool), TokenizerError> {
    let seq = bpe.encode_with_max_len(tokens, &vec![0; tokens.len()], max_len)?;
    Ok((seq.ids, seq.truncated))
}

pub fn run_end_to_end(config: &RunConfig) -> Result<EndToEndReport, PipelineError> {
    config.validate()?;
    let roots = if config.corpus.is_empty() {
        vec![bundled_corpus_dir()]
    } else {
        config.corpus.clone()
    };
    let corpus = ingest::ingest(
        &roots,
        &IngestOptions {
            languages: config.languages.clone(),
            max_function_bytes: config.max_function_bytes,
        },
    )?;
    let vocab = build_identifier_vocab(corpus.records.iter().map(|r| r.to_source_function()));
    let ctx = CloneContext::with_vocabulary(vocab.into_iter().map(|e| e.name).collect());
    let (triplets, summary) = augment(&corpus.records, config.seed, &ctx);
    let mut buf = Vec::new();
    write_triplets(&mut buf, &triplets)?;
    let triplets_sha256 = sha256_hex(&buf);

    let (train_idx, eval_idx) = split_indices(triplets.len(), config.eval_fraction, config.seed);
    if train_idx.len() < config.toy.batch {
        return Err(PipelineError::Data(format!(
            "{} training triplets cannot fill a batch of {}",
            train_idx.len(),
            config.toy.batch
        )));
    }
    if eval_idx.len() < 2 {
        return Err(PipelineError::Data("evaluation split needs at least 2 triplets".into()));
    }
    let train: Vec<&TripletRecord> = train_idx.iter().map(|&i| &triplets[i]).collect();
    let eval: Vec<&TripletRecord> = eval_idx.iter().map(|&i| &triplets[i]).collect();
    let views = |set: &[&TripletRecord]| -> Vec<Vec<String>> {
        set.iter()
            .flat_map(|t| [t.original.tokens.clone(), t.clone.tokens.clone(), t.deviant.tokens.clone()])
            .collect()
    };

    let bpe = train_subword(
        &views(&train),
        TrainOptions {
            target_vocab: config.vocab_size,
            allow_exhaustion: true,
        },
    )?;
    let label_vocab = LabelVocab::from_labels(
        train
            .iter()
            .flat_map(|t| [&t.original.labels, &t.clone.labels, &t.deviant.labels])
            .flatten()
            .cloned(),
    );
    let count_unk = |set: &[&TripletRecord]| {
        set.iter()
            .flat_map(|t| [&t.original.labels, &t.clone.labels, &t.deviant.labels])
            .flatten()
            .filter(|l| label_vocab.id(l) == UNK_LABEL_ID)
            .count()
    };

    let mut truncated = 0;
    let mut encode_set = |set: &[&TripletRecord]| -> Result<Vec<ToyTriplet>, TokenizerError> {
        set.iter()
            .map(|t| {
                let mut ids = [&t.original, &t.clone, &t.deviant].map(|_| Vec::new());
                for (slot, view) in ids.iter_mut().zip([&t.original, &t.clone, &t.deviant]) {
                    let (v, cut) = encode_ids(&bpe, &view.tokens, config.max_len)?;
                    truncated += usize::from(cut);
                    *slot = v;
                }
                let [original, clone, deviant] = ids;
                Ok(ToyTriplet { original, clone, deviant })
            })
            .collect()
    };
    let train_ids = encode_set(&train)?;
    let eval_ids = encode_set(&eval)?;

    // Masking and uniform-predictor baselines on training originals.
    let uniform_tokens = vec![1.0 / bpe.vocab_size() as f64; bpe.vocab_size()];
    let uniform_labels = vec![1.0 / label_vocab.len() as f64; label_vocab.len()];
    let (mut masked_total, mut mlm_sum, mut ltsp_sum) = (0usize, 0.0, 0.0);
    for t in &train {
        let labels = label_vocab.encode_rendered(&t.original.labels);
        let seq = bpe.encode_with_max_len(&t.original.tokens, &labels, config.max_len)?;
        let masked = mask_for_mlm(&seq, config.mask_rate, derive_seed(config.seed, &format!("mask/{}", t.id)))?;
        masked_total += masked.mask_positions.len();
        let targets: Vec<usize> = masked.originals_at_mask.iter().map(|&i| i as usize).collect();
        mlm_sum += mlm_loss(&vec![&uniform_tokens[..]; targets.len()], &targets)?;
        let content = &seq.label_ids[1..seq.label_ids.len() - 1];
        let label_targets: Vec<usize> = content.iter().map(|&l| l as usize).collect();
        ltsp_sum += ltsp_loss(&vec![&uniform_labels[..]; label_targets.len()], &label_targets)?;
    }
    let per_seq = |x: f64| x / train.len() as f64;
    let mlm = if masked_total == 0 {
        MlmSection::EmptyMask {
            mask_rate: config.mask_rate,
            sequences: train.len(),
        }
    } else {
        MlmSection::Masked {
            mask_rate: config.mask_rate,
            sequences: train.len(),
            masked_positions: masked_total,
            uniform_loss_per_sequence: per_seq(mlm_sum),
        }
    };

    let encoder = ToyEncoder::train(bpe.vocab_size(), &train_ids, config.toy_config())?;
    let encoder_sha256 = sha256_hex(&serde_json::to_vec(&encoder).map_err(std::io::Error::from)?);
    let initial_loss = encoder.loss_curve.first().copied().unwrap_or(f64::NAN);
    let final_loss = encoder.loss_curve.last().copied().unwrap_or(f64::NAN);

    let embedded: Vec<EmbeddedTriplet> = eval_ids
        .iter()
        .map(|t| EmbeddedTriplet {
            original: encoder.embed(&t.original),
            clone: encoder.embed(&t.clone),
            deviant: encoder.embed(&t.deviant),
        })
        .collect();
    let zero_shot = zero_shot_study(&embedded);
    let items: Vec<RetrievalItem> = eval
        .iter()
        .zip(&embedded)
        .flat_map(|(t, e)| {
            [("original", &e.original), ("clone", &e.clone)].map(|(role, v)| RetrievalItem {
                id: format!("{}/{role}", t.id),
                group: t.id.clone(),
                vector: v.clone(),
            })
        })
        .collect();
    let retrieval = RetrievalSection {
        items: items.len(),
        r: 1,
        map_at_r: map_at_r(&items, 1)?,
        random_baseline: random_map_at_r(1, items.len() - 1),
    };
    let mlm_value = match &mlm {
        MlmSection::Masked { uniform_loss_per_sequence, .. } => *uniform_loss_per_sequence,
        MlmSection::EmptyMask { .. } => 0.0,
    };
    let losses = combined_loss(mlm_value, per_seq(ltsp_sum), final_loss, config.lambdas)?;

    Ok(EndToEndReport {
        config: config.clone(),
        corpus: corpus.manifest,
        augment: summary,
        triplets_sha256,
        split: SplitInfo {
            train: train.len(),
            eval: eval.len(),
        },
        tokenizer: TokenizerSection {
            requested_vocab: config.vocab_size,
            learned_vocab: bpe.vocab_size(),
            merges: bpe.merges().len(),
            training_corpus_sha256: bpe.corpus_sha256().to_string(),
            sequences: 3 * (train.len() + eval.len()),
            truncated,
        },
        labels: LabelSection {
            vocab_size: label_vocab.len(),
            unk_train: count_unk(&train),
            unk_eval: count_unk(&eval),
        },
        mlm,
        ltsp_uniform_loss_per_sequence: per_seq(ltsp_sum),
        toy: ToySection {
            steps: encoder.loss_curve.len(),
            initial_loss,
            final_loss,
            encoder_sha256,
        },
        losses,
        zero_shot,
        retrieval,
    })
}
