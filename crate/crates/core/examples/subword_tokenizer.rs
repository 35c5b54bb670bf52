//! Trains a small byte-level BPE model on synthesized functions, encodes one
//! of them with its AST labels and applies MLM masking.
//!
//! `cargo run --release --example subword_tokenizer -- [vocab-size]`

use cloneaware::ast::{self, Language};
use cloneaware::labels::{label_sequence, LabelVocab};
use cloneaware::synth::synth_corpus;
use cloneaware::tokenizer::{mask_for_mlm, train_subword, TrainOptions, DEFAULT_MASK_RATE};

fn main() -> anyhow::Result<()> {
    let target: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(800);
    let funcs = synth_corpus(&[Language::C, Language::Java], 300, 1);
    let trees = funcs.iter().map(ast::parse).collect::<Result<Vec<_>, _>>()?;
    let corpus: Vec<Vec<String>> = trees
        .iter()
        .map(|t| ast::flatten_tokens(t).into_iter().map(|t| t.text).collect())
        .collect();
    let model = train_subword(
        &corpus,
        TrainOptions {
            target_vocab: target,
            allow_exhaustion: true,
        },
    )?;
    println!("vocabulary {} ({} merges), corpus sha256 {}", model.vocab_size(), model.merges().len(), model.corpus_sha256());
    for id in (model.vocab_size() - 8)..model.vocab_size() {
        let piece = model.piece(id as u32).unwrap_or_default();
        println!("  id {id:>5}: {:?}", String::from_utf8_lossy(&piece));
    }

    let (labels, _) = LabelVocab::build(&funcs);
    let label_ids = labels.encode(&label_sequence(&trees[0]));
    let seq = model.encode(&corpus[0], &label_ids)?;
    println!("\n{} tokens -> {} ids (with [CLS]/[SEP])", corpus[0].len(), seq.ids.len());
    let masked = mask_for_mlm(&seq, DEFAULT_MASK_RATE, 42)?;
    println!("masked positions {:?}", masked.mask_positions);
    println!("decoded: {}", model.decode(&seq.ids[..seq.ids.len().min(40)]));
    Ok(())
}
