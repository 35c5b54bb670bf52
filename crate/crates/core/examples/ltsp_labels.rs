//! Builds an AST label vocabulary over the sample functions and prints the
//! `tt#pt` label of every token of one of them.
//!
//! `cargo run --example ltsp_labels`

use cloneaware::ast::{self, Language, SourceFunction};
use cloneaware::labels::{label_sequence, LabelVocab};
use cloneaware::samples::{CPP_COUNT, JAVA_SUM, TF_EVAL};

fn main() -> anyhow::Result<()> {
    let funcs = [
        SourceFunction::new("eval", Language::C, TF_EVAL),
        SourceFunction::new("count", Language::Cpp, CPP_COUNT),
        SourceFunction::new("sum", Language::Java, JAVA_SUM),
    ];
    let (vocab, skipped) = LabelVocab::build(&funcs);
    println!("{} labels ({} functions skipped)", vocab.len(), skipped);

    let tree = ast::parse(&funcs[0])?;
    let tokens = ast::flatten_tokens(&tree);
    let labels = label_sequence(&tree);
    for (t, l) in tokens.iter().zip(&labels).take(30) {
        println!("{:<16} {:<40} id {}", t.text, l.rendered(), vocab.id(&l.rendered()));
    }
    Ok(())
}
