//! Command-line front end. Exit codes: 0 success, 1 usage error, 2 data error.

use crate::ast::Language;
use crate::eval::{map_at_r, pca_project, read_embeddings, zero_shot_study, EmbeddedTriplet, RetrievalItem};
use crate::ingest::{self, build_identifier_vocab, read_corpus, read_identifier_vocab, write_corpus_dir, IngestOptions};
use crate::labels::LabelVocab;
use crate::objective::{clr_gradient, clr_loss, combined_loss, ContrastiveBatch, Lambdas, ToyEncoder, ToyTriplet};
use crate::pipeline::{augment, read_triplets, run_end_to_end, write_triplets, ReportEnvelope, RunConfig, TripletRecord};
use crate::rng::{derive_seed, rng_from_seed};
use crate::tokenizer::{mask_for_mlm, train_subword, SubwordModel, TokenizedSequence, TrainOptions, DEFAULT_MASK_RATE, MAX_SEQ_LEN};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::Rng as _;
use serde::{Deserialize, Serialize};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Debug, Parser)]
#[command(name = "cloneaware", version, about = "Clone/deviant augmentation and contrastive pre-training utilities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extract functions from .c/.cpp/.java files into corpus.jsonl + manifest.json.
    Ingest {
        #[arg(long = "root", required = true)]
        roots: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "c,cpp,java")]
        languages: Vec<Language>,
        #[arg(long, default_value_t = ingest::DEFAULT_MAX_FUNCTION_BYTES)]
        max_bytes: usize,
    },
    /// Identifier vocabulary (name<TAB>count) of a corpus.
    Vocab {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build (original, clone, deviant) triplets.
    Augment {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Identifier vocabulary for random renaming; built from the corpus when absent.
        #[arg(long)]
        vocab: Option<PathBuf>,
    },
    /// AST label vocabulary (one `tt#pt` label per line).
    Labels {
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Train the byte-level BPE model.
    TokenizerTrain {
        #[command(flatten)]
        input: Inputs,
        #[arg(long, default_value_t = crate::tokenizer::DEFAULT_VOCAB_SIZE)]
        vocab_size: usize,
        /// Accept a smaller vocabulary when the corpus runs out of merges.
        #[arg(long)]
        allow_exhaustion: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Encode programs into id and label-id sequences (JSON lines).
    Encode {
        #[command(flatten)]
        input: Inputs,
        #[arg(long)]
        tokenizer: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long, default_value_t = MAX_SEQ_LEN)]
        max_len: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply MLM masking to encoded sequences.
    Mask {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MASK_RATE)]
        rate: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate the combined loss and check the contrastive gradient.
    LossCheck(LossCheckArgs),
    /// Train the toy encoder on triplets.
    TrainToy {
        #[arg(long)]
        triplets: PathBuf,
        #[arg(long)]
        tokenizer: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// CSV of the per-step contrastive loss.
        #[arg(long)]
        curve: Option<PathBuf>,
        /// TOML run config supplying tau, max_len and [toy] settings.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// MAP@R over an embeddings file ({id, group, vector} per line).
    EvalMap {
        #[arg(long)]
        embeddings: PathBuf,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Similarity study of originals against clones and deviants.
    EvalZeroshot {
        #[arg(long)]
        triplets: PathBuf,
        #[arg(long)]
        tokenizer: PathBuf,
        #[arg(long)]
        encoder: PathBuf,
        #[arg(long, default_value_t = MAX_SEQ_LEN)]
        max_len: usize,
        /// Also write original and clone embeddings, grouped per triplet.
        #[arg(long)]
        embeddings_out: Option<PathBuf>,
    },
    /// Project embeddings onto their leading principal components (CSV).
    Pca {
        #[arg(long)]
        embeddings: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Ingest, augment, tokenize, train and evaluate in one run.
    EndToEnd {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Overrides the config's seed.
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Directories to ingest instead of the configured corpus.
        #[arg(long = "corpus")]
        corpus: Vec<PathBuf>,
    },
}

/// A corpus file, a triplets file, or both.
#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct Inputs {
    #[arg(long)]
    corpus: Option<PathBuf>,
    #[arg(long)]
    triplets: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LossCheckArgs {
    #[arg(long, default_value_t = 0.0)]
    mlm: f64,
    #[arg(long, default_value_t = 0.0)]
    ltsp: f64,
    #[arg(long, default_value_t = 0.0)]
    clr: f64,
    #[arg(long)]
    lambda_mlm: Option<f64>,
    #[arg(long)]
    lambda_ltsp: Option<f64>,
    #[arg(long)]
    lambda_clr: Option<f64>,
    /// JSON ContrastiveBatch whose loss is reported.
    #[arg(long)]
    batch: Option<PathBuf>,
    /// Number of random batches for the finite-difference gradient check.
    #[arg(long, requires = "seed")]
    random_batches: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

/// One encoded program.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodedRecord {
    pub id: String,
    pub role: String,
    pub sequence: TokenizedSequence,
}

/// Parses `args` and runs the command.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    Ok(BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?))
}

fn write_jsonl<T: Serialize>(path: &Path, items: &[T]) -> Result<()> {
    let mut w = create(path)?;
    for it in items {
        serde_json::to_writer(&mut w, it)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

fn read_jsonl<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let r = BufReader::new(File::open(path).with_context(|| format!("opening {}", path.display()))?);
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line).with_context(|| format!("{}:{}", path.display(), i + 1))?);
        }
    }
    Ok(out)
}

/// (id, role, language, tokens, labels) of every program in the inputs.
fn programs(input: &Inputs) -> Result<Vec<(String, &'static str, Vec<String>, Vec<String>)>> {
    let mut out = Vec::new();
    if let Some(p) = &input.corpus {
        for rec in read_corpus(p)? {
            let view = crate::pipeline::ProgramView::of(&rec.to_source_function());
            match view {
                Ok(v) => out.push((rec.id, "original", v.tokens, v.labels)),
                Err(e) => log::warn!("{}: {e}", rec.id),
            }
        }
    }
    if let Some(p) = &input.triplets {
        for t in read_triplets(p).with_context(|| format!("reading {}", p.display()))? {
            for (role, v) in [("original", t.original), ("clone", t.clone), ("deviant", t.deviant)] {
                out.push((t.id.clone(), role, v.tokens, v.labels));
            }
        }
    }
    Ok(out)
}

fn encode_triplets(
    triplets: &[TripletRecord],
    bpe: &SubwordModel,
    max_len: usize,
) -> Result<Vec<ToyTriplet>> {
    let enc = |toks: &[String]| -> Result<Vec<u32>> {
        Ok(bpe.encode_with_max_len(toks, &vec![0; toks.len()], max_len)?.ids)
    };
    triplets
        .iter()
        .map(|t| {
            Ok(ToyTriplet {
                original: enc(&t.original.tokens)?,
                clone: enc(&t.clone.tokens)?,
                deviant: enc(&t.deviant.tokens)?,
            })
        })
        .collect()
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Ingest {
            roots,
            out,
            languages,
            max_bytes,
        } => {
            let corpus = ingest::ingest(
                &roots,
                &IngestOptions {
                    languages,
                    max_function_bytes: max_bytes,
                },
            )?;
            write_corpus_dir(&out, &corpus)?;
            println!("{}", serde_json::to_string_pretty(&corpus.manifest)?);
        }
        Command::Vocab { corpus, out } => {
            let recs = read_corpus(&corpus)?;
            let vocab = build_identifier_vocab(recs.iter().map(|r| r.to_source_function()));
            let mut w = create(&out)?;
            ingest::write_identifier_vocab(&mut w, &vocab)?;
            w.flush()?;
            eprintln!("{} identifiers", vocab.len());
        }
        Command::Augment {
            corpus,
            seed,
            out,
            vocab,
        } => {
            let recs = read_corpus(&corpus)?;
            let names = match vocab {
                Some(p) => read_identifier_vocab(&p).with_context(|| format!("reading {}", p.display()))?,
                None => build_identifier_vocab(recs.iter().map(|r| r.to_source_function())),
            };
            let ctx = crate::clone::CloneContext::with_vocabulary(names.into_iter().map(|e| e.name).collect());
            let (triplets, summary) = augment(&recs, seed, &ctx);
            let mut w = create(&out)?;
            write_triplets(&mut w, &triplets)?;
            w.flush()?;
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
        Command::Labels { input, out } => {
            let vocab = LabelVocab::from_labels(programs(&input)?.into_iter().flat_map(|p| p.3));
            vocab.save(&out)?;
            eprintln!("{} labels", vocab.len());
        }
        Command::TokenizerTrain {
            input,
            vocab_size,
            allow_exhaustion,
            out,
        } => {
            let corpus: Vec<Vec<String>> = programs(&input)?.into_iter().map(|p| p.2).collect();
            let model = train_subword(
                &corpus,
                TrainOptions {
                    target_vocab: vocab_size,
                    allow_exhaustion,
                },
            )?;
            model.save(&out)?;
            eprintln!("vocabulary {} ({} merges)", model.vocab_size(), model.merges().len());
        }
        Command::Encode {
            input,
            tokenizer,
            labels,
            max_len,
            out,
        } => {
            let bpe = SubwordModel::load(&tokenizer)?;
            let lv = LabelVocab::load(&labels)?;
            let mut recs = Vec::new();
            for (id, role, tokens, labs) in programs(&input)? {
                let sequence = bpe.encode_with_max_len(&tokens, &lv.encode_rendered(&labs), max_len)?;
                recs.push(EncodedRecord {
                    id,
                    role: role.to_string(),
                    sequence,
                });
            }
            write_jsonl(&out, &recs)?;
            eprintln!("{} sequences", recs.len());
        }
        Command::Mask { input, seed, rate, out } => {
            if !(0.0..=1.0).contains(&rate) {
                bail!("mask rate {rate} outside [0, 1]");
            }
            let recs: Vec<EncodedRecord> = read_jsonl(&input)?;
            let masked: Vec<EncodedRecord> = recs
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    let s = derive_seed(seed, &format!("{}/{}/{i}", r.id, r.role));
                    Ok(EncodedRecord {
                        sequence: mask_for_mlm(&r.sequence, rate, s)?,
                        ..r
                    })
                })
                .collect::<Result<_>>()?;
            write_jsonl(&out, &masked)?;
            let total: usize = masked.iter().map(|r| r.sequence.mask_positions.len()).sum();
            eprintln!("{} sequences, {total} masked positions", masked.len());
        }
        Command::LossCheck(a) => loss_check(a)?,
        Command::TrainToy {
            triplets,
            tokenizer,
            seed,
            out,
            curve,
            config,
            steps,
        } => {
            let mut cfg = match config {
                Some(p) => RunConfig::load(&p)?,
                None => RunConfig::default(),
            };
            cfg.seed = seed;
            if let Some(s) = steps {
                cfg.toy.steps = s;
            }
            let bpe = SubwordModel::load(&tokenizer)?;
            let trips = read_triplets(&triplets)?;
            let ids = encode_triplets(&trips, &bpe, cfg.max_len)?;
            let enc = ToyEncoder::train(bpe.vocab_size(), &ids, cfg.toy_config())?;
            enc.save(&out)?;
            if let Some(c) = curve {
                let mut w = create(&c)?;
                enc.write_loss_csv(&mut w)?;
                w.flush()?;
            }
            eprintln!(
                "loss {:.4} -> {:.4} over {} steps",
                enc.loss_curve.first().unwrap_or(&f64::NAN),
                enc.loss_curve.last().unwrap_or(&f64::NAN),
                enc.loss_curve.len()
            );
        }
        Command::EvalMap { embeddings, r } => {
            let items = read_embeddings(BufReader::new(File::open(&embeddings)?))?;
            let map = map_at_r(&items, r)?;
            println!("{}", serde_json::json!({ "items": items.len(), "r": r, "map_at_r": map }));
        }
        Command::EvalZeroshot {
            triplets,
            tokenizer,
            encoder,
            max_len,
            embeddings_out,
        } => {
            let bpe = SubwordModel::load(&tokenizer)?;
            let enc = ToyEncoder::load(&encoder)?;
            let trips = read_triplets(&triplets)?;
            let ids = encode_triplets(&trips, &bpe, max_len)?;
            let embedded: Vec<EmbeddedTriplet> = ids
                .iter()
                .map(|t| EmbeddedTriplet {
                    original: enc.embed(&t.original),
                    clone: enc.embed(&t.clone),
                    deviant: enc.embed(&t.deviant),
                })
                .collect();
            if let Some(p) = embeddings_out {
                let items: Vec<RetrievalItem> = trips
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
                write_jsonl(&p, &items)?;
            }
            println!("{}", serde_json::to_string_pretty(&zero_shot_study(&embedded))?);
        }
        Command::Pca { embeddings, k, out } => {
            let items = read_embeddings(BufReader::new(File::open(&embeddings)?))?;
            let points: Vec<Vec<f64>> = items.iter().map(|i| i.vector.clone()).collect();
            let pca = pca_project(&points, k)?;
            let mut w = create(&out)?;
            let cols: Vec<String> = (1..=k).map(|i| format!("pc{i}")).collect();
            writeln!(w, "id,group,{}", cols.join(","))?;
            for (it, row) in items.iter().zip(&pca.coords) {
                let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(w, "{},{},{}", it.id, it.group, vals.join(","))?;
            }
            w.flush()?;
            eprintln!("explained variance ratio {:?}", pca.explained_ratio);
        }
        Command::EndToEnd {
            config,
            seed,
            out,
            corpus,
        } => {
            let mut cfg = match config {
                Some(p) => RunConfig::load(&p)?,
                None => RunConfig::default(),
            };
            cfg.seed = seed;
            if !corpus.is_empty() {
                cfg.corpus = corpus;
            }
            let report = run_end_to_end(&cfg)?;
            let mut w = create(&out)?;
            serde_json::to_writer_pretty(&mut w, &ReportEnvelope::now(report))?;
            w.write_all(b"\n")?;
            w.flush()?;
        }
    }
    Ok(())
}

fn random_unit_batch<R: rand::Rng>(rng: &mut R, n: usize, d: usize) -> ContrastiveBatch {
    let mut v = || -> Vec<f64> { (0..d).map(|_| rng.random_range(-1.0..1.0)).collect() };
    let anchors = (0..n).map(|_| v()).collect();
    let positives = (0..n).map(|_| v()).collect();
    let negatives = (0..n).map(|_| v()).collect();
    ContrastiveBatch::new(anchors, positives, negatives)
}

fn coord(b: &mut ContrastiveBatch, role: usize, i: usize, k: usize) -> &mut f64 {
    match role {
        0 => &mut b.anchors[i][k],
        1 => &mut b.positives[i][k],
        _ => &mut b.negatives[i][k],
    }
}

/// Relative error `|g - f| / max(|g|, |f|)` between the analytic gradient
/// and central differences with step `h`, in the Euclidean norm over all
/// coordinates of the batch.
pub fn gradient_check(batch: &ContrastiveBatch, h: f64) -> Result<f64> {
    let g = clr_gradient(batch)?;
    let grads = [&g.anchors, &g.positives, &g.negatives];
    let (mut diff2, mut an2, mut fd2) = (0.0, 0.0, 0.0);
    for (role, grad) in grads.into_iter().enumerate() {
        for i in 0..batch.len() {
            for k in 0..batch.anchors[0].len() {
                let mut plus = batch.clone();
                let mut minus = batch.clone();
                *coord(&mut plus, role, i, k) += h;
                *coord(&mut minus, role, i, k) -= h;
                let fd = (clr_loss(&plus)?.mean - clr_loss(&minus)?.mean) / (2.0 * h);
                let an = grad[i][k];
                diff2 += (fd - an) * (fd - an);
                an2 += an * an;
                fd2 += fd * fd;
            }
        }
    }
    let denom = f64::max(an2, fd2).sqrt();
    Ok(if denom == 0.0 { 0.0 } else { diff2.sqrt() / denom })
}

fn loss_check(a: LossCheckArgs) -> Result<()> {
    let d = Lambdas::default();
    let lambdas = Lambdas {
        mlm: a.lambda_mlm.unwrap_or(d.mlm),
        ltsp: a.lambda_ltsp.unwrap_or(d.ltsp),
        clr: a.lambda_clr.unwrap_or(d.clr),
    };
    let mut report = serde_json::Map::new();
    report.insert(
        "combined".into(),
        serde_json::to_value(combined_loss(a.mlm, a.ltsp, a.clr, lambdas)?)?,
    );
    if let Some(p) = a.batch {
        let batch: ContrastiveBatch = serde_json::from_reader(BufReader::new(File::open(&p)?))
            .with_context(|| format!("reading {}", p.display()))?;
        report.insert("batch_clr".into(), serde_json::to_value(clr_loss(&batch)?)?);
    }
    if let (Some(k), Some(seed)) = (a.random_batches, a.seed) {
        let mut rng = rng_from_seed(seed);
        let mut worst: f64 = 0.0;
        for _ in 0..k {
            let n = rng.random_range(1..=8);
            let dim = rng.random_range(2..=16);
            worst = worst.max(gradient_check(&random_unit_batch(&mut rng, n, dim), 1e-5)?);
        }
        report.insert(
            "gradient_check".into(),
            serde_json::json!({ "batches": k, "max_relative_error": worst }),
        );
    }
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
