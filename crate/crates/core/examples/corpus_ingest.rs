//! Ingests a source tree (the bundled sample by default), writes the corpus
//! and manifest to a directory and prints the most frequent identifiers.
//!
//! `cargo run --example corpus_ingest -- [src-dir] [out-dir]`

use cloneaware::ingest::{build_identifier_vocab, ingest, write_corpus_dir, IngestOptions};
use cloneaware::pipeline::bundled_corpus_dir;
use std::path::PathBuf;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1).map(PathBuf::from);
    let src = args.next().unwrap_or_else(bundled_corpus_dir);
    let out = args.next().unwrap_or_else(|| std::env::temp_dir().join("cloneaware-corpus"));
    let corpus = ingest(&[src], &IngestOptions::default())?;
    write_corpus_dir(&out, &corpus)?;
    println!("{}", serde_json::to_string_pretty(&corpus.manifest)?);
    println!("wrote {}", out.display());
    let vocab = build_identifier_vocab(corpus.records.iter().map(|r| r.to_source_function()));
    for e in vocab.iter().take(10) {
        println!("{:>6} {}", e.count, e.name);
    }
    Ok(())
}
