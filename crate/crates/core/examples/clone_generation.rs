//! Generates a few clones of a small kernel function and prints what changed.
//!
//! Run with `cargo run --example clone_generation [seed]`.

use cloneaware::ast::{Language, SourceFunction};
use cloneaware::clone::generate_clone;
use cloneaware::samples::{CPP_COUNT, JAVA_SUM, TF_EVAL};

fn main() -> anyhow::Result<()> {
    let base: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(0);
    for (lang, src) in [(Language::C, TF_EVAL), (Language::Java, JAVA_SUM), (Language::Cpp, CPP_COUNT)] {
        let func = SourceFunction::new("sample", lang, src);
        for seed in base..base + 2 {
            let clone = generate_clone(&func, seed)?;
            println!("== {lang} seed {seed}");
            for step in &clone.applied {
                println!("   {:?} at {}: {}", step.kind, step.span, step.detail);
            }
            println!("{}\n", clone.text);
        }
    }
    Ok(())
}
