//! Full pipeline on the bundled sample corpus (or a TOML config given as the
//! first argument), printing the JSON report.
//!
//! `cargo run --release --example end_to_end -- [config.toml]`

use cloneaware::pipeline::{run_end_to_end, ReportEnvelope, RunConfig};

fn main() -> anyhow::Result<()> {
    env_logger::init();
    let config = match std::env::args().nth(1) {
        Some(path) => RunConfig::load(path.as_ref())?,
        None => RunConfig::default(),
    };
    let started = std::time::Instant::now();
    let report = run_end_to_end(&config)?;
    println!("{}", serde_json::to_string_pretty(&ReportEnvelope::now(report.clone()))?);
    eprintln!(
        "{} triplets, clone/deviant/random sim {:.3}/{:.3}/{:.3}, top-1 clone {:.1}%, MAP@1 {:.3}, {:.1?}",
        report.augment.triplets,
        report.zero_shot.avg_clone_sim,
        report.zero_shot.avg_deviant_sim,
        report.zero_shot.avg_random_sim,
        report.zero_shot.top1.clone,
        report.retrieval.map_at_r,
        started.elapsed()
    );
    Ok(())
}
