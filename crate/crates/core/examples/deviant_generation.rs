//! Injects one bug into each sample function for a few seeds and prints
//! the replaced span.
//!
//! ```text
//! cargo run --example deviant_generation -- [seed]
//! ```

use cloneaware::ast::{Language, SourceFunction};
use cloneaware::deviant::generate_deviant;
use cloneaware::samples::{CPP_COUNT, JAVA_SUM, TF_EVAL};

fn main() -> anyhow::Result<()> {
    let base: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(0);
    for (lang, src) in [(Language::C, TF_EVAL), (Language::Java, JAVA_SUM), (Language::Cpp, CPP_COUNT)] {
        let func = SourceFunction::new("sample", lang, src);
        println!("== {lang}");
        for seed in base..base + 6 {
            let d = generate_deviant(&func, seed)?;
            let b = &d.bug;
            println!("seed {seed}: {} at {}..{}: {:?} -> {:?} ({})", b.kind, b.span.start, b.span.end, b.before, b.after, b.detail);
        }
    }
    Ok(())
}
