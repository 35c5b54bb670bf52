//! Runs generated clones and deviants of the bundled C suite through the
//! system C compiler and compares their behavior with the originals.
//!
//! `cargo run --example differential_testing -- [suite-dir] [seeds]`

use cloneaware::difftest::{check_suite, load_suite, CloneVerdict, Compiler};
use std::path::PathBuf;

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/difftest"));
    let seeds: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let compiler = Compiler::default();
    anyhow::ensure!(compiler.available(), "no C compiler found (set CC)");
    let suite = load_suite(&dir)?;
    let seeds: Vec<u64> = (0..seeds).collect();
    let report = check_suite(&suite, &compiler, &seeds)?;

    for c in &report.clones {
        if c.verdict != CloneVerdict::Equivalent {
            println!("clone {} seed {}: {:?}\n{}\n", c.program, c.seed, c.verdict, c.text);
        }
    }
    for d in report.deviants.iter().filter(|d| !d.reparses || !d.local || (!d.compiles && d.kind.to_string() == "DataType")) {
        println!("deviant {} seed {} {}: {:?}", d.program, d.seed, d.kind, d);
    }
    let (dt_ok, dt) = report.datatype_counts();
    println!("programs            {}", report.programs);
    println!("clones equivalent   {}/{}", report.clones_equivalent(), report.clones.len());
    println!("deviants            {} ({} seeds without one)", report.deviants.len(), report.deviant_skips);
    println!("  re-parse          {}", report.deviants.iter().filter(|d| d.reparses).count());
    println!("  local             {}", report.deviants.iter().filter(|d| d.local).count());
    println!("  DataType compile  {dt_ok}/{dt}");
    println!("  behavior changed  {:.1}% of compiled", 100.0 * report.behavior_change_rate());
    Ok(())
}
