//! Trains the toy encoder on synthesized triplets and reports the similarity
//! study on a held-out set, broken down by injected bug kind.
//!
//! `cargo run --release --example toy_training -- [functions] [steps]`

use cloneaware::ast::Language;
use cloneaware::clone::CloneContext;
use cloneaware::eval::{zero_shot_study, EmbeddedTriplet};
use cloneaware::ingest::CorpusRecord;
use cloneaware::objective::{cosine, ToyConfig, ToyEncoder, ToyTriplet};
use cloneaware::pipeline::augment;
use cloneaware::synth::synth_corpus;
use cloneaware::tokenizer::{train_subword, SubwordModel, TrainOptions};
use std::collections::BTreeMap;

fn ids(bpe: &SubwordModel, toks: &[String]) -> Vec<u32> {
    bpe.encode(toks, &vec![0; toks.len()]).map(|s| s.ids).unwrap_or_default()
}

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2600);
    let steps: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(2000);
    let records: Vec<CorpusRecord> = synth_corpus(&[Language::C, Language::Java], n, 7)
        .into_iter()
        .map(|f| CorpusRecord {
            byte_span: cloneaware::ast::Span::new(0, f.text.len()),
            path: "synth".into(),
            id: f.id,
            language: f.language,
            text: f.text,
        })
        .collect();
    let (triplets, summary) = augment(&records, 7, &CloneContext::default());
    println!("{} triplets from {} functions, skipped {:?}", triplets.len(), summary.input, summary.skipped);
    let held = 500.min(triplets.len() / 5);
    let (train, test) = triplets.split_at(triplets.len() - held);

    let corpus: Vec<Vec<String>> = train
        .iter()
        .flat_map(|t| [t.original.tokens.clone(), t.clone.tokens.clone(), t.deviant.tokens.clone()])
        .collect();
    let bpe = train_subword(&corpus, TrainOptions { target_vocab: 1000, allow_exhaustion: true })?;
    let encode = |t: &cloneaware::pipeline::TripletRecord| ToyTriplet {
        original: ids(&bpe, &t.original.tokens),
        clone: ids(&bpe, &t.clone.tokens),
        deviant: ids(&bpe, &t.deviant.tokens),
    };
    let train_ids: Vec<ToyTriplet> = train.iter().map(encode).collect();
    let config = ToyConfig { steps, seed: 1, ..ToyConfig::default() };
    let enc = ToyEncoder::train(bpe.vocab_size(), &train_ids, config)?;
    println!(
        "loss {:.3} -> {:.3} over {} steps",
        enc.loss_curve[0],
        enc.loss_curve.last().copied().unwrap_or(f64::NAN),
        enc.loss_curve.len()
    );

    let embedded: Vec<EmbeddedTriplet> = test
        .iter()
        .map(|t| {
            let e = encode(t);
            EmbeddedTriplet {
                original: enc.embed(&e.original),
                clone: enc.embed(&e.clone),
                deviant: enc.embed(&e.deviant),
            }
        })
        .collect();
    println!("{}", serde_json::to_string_pretty(&zero_shot_study(&embedded))?);

    let mut by_kind: BTreeMap<String, (usize, usize, f64, f64)> = BTreeMap::new();
    for (t, e) in test.iter().zip(&embedded) {
        let c = cosine(&e.original, &e.clone).unwrap_or(0.0);
        let d = cosine(&e.original, &e.deviant).unwrap_or(0.0);
        let row = by_kind.entry(t.bug.kind.to_string()).or_default();
        row.0 += 1;
        row.1 += usize::from(c > d);
        row.2 += c;
        row.3 += d;
    }
    println!("{:<13} {:>5} {:>10} {:>8} {:>8}", "bug kind", "n", "clone>dev", "clone", "deviant");
    for (k, (n, wins, c, d)) in by_kind {
        let n_f = n as f64;
        println!("{k:<13} {n:>5} {:>10.2} {:>8.3} {:>8.3}", wins as f64 / n_f, c / n_f, d / n_f);
    }
    Ok(())
}
