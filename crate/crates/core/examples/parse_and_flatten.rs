//! Parses one function per language and prints its flattened code tokens
//! with their grammar kinds.
//!
//! `cargo run --example parse_and_flatten`

use cloneaware::ast::{self, Language, SourceFunction};
use cloneaware::samples::{CPP_COUNT, JAVA_SUM, TF_EVAL};

fn main() -> anyhow::Result<()> {
    for (lang, src) in [(Language::C, TF_EVAL), (Language::Cpp, CPP_COUNT), (Language::Java, JAVA_SUM)] {
        let tree = ast::parse(&SourceFunction::new("sample", lang, src))?;
        let tokens = ast::flatten_tokens(&tree);
        println!("== {lang}: {} nodes, {} tokens", tree.len(), tokens.len());
        for t in tokens.iter().take(24) {
            println!("  {:>4}..{:<4} {:<22} {}", t.span.start, t.span.end, t.kind, t.text);
        }
        println!("  ...");
    }

    let broken = SourceFunction::new("broken", Language::C, "int f( { return 1; }");
    match ast::parse(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("\nbroken input: {e}"),
    }
    Ok(())
}
