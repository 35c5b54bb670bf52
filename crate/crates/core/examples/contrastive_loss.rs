//! Contrastive loss on hand-made batches: the saturated and symmetric
//! single-triplet cases, a random batch with its gradient checked against
//! finite differences, and the weighted combination of the three losses.
//!
//! `cargo run --example contrastive_loss`

use cloneaware::cli::gradient_check;
use cloneaware::objective::{clr_loss, combined_loss, mlm_loss, ContrastiveBatch, Lambdas};
use cloneaware::rng::rng_from_seed;
use rand::Rng;

fn main() -> anyhow::Result<()> {
    let z = vec![1.0, 0.0];
    let saturated = ContrastiveBatch::new(vec![z.clone()], vec![z.clone()], vec![vec![-1.0, 0.0]]);
    println!("saturated   {:.3e}", clr_loss(&saturated)?.mean);
    let symmetric = ContrastiveBatch::new(vec![z], vec![vec![0.0, 1.0]], vec![vec![0.0, -1.0]]);
    println!("symmetric   {:.15} (ln 2 = {:.15})", clr_loss(&symmetric)?.mean, 2f64.ln());

    let mut rng = rng_from_seed(3);
    let mut v = || -> Vec<f64> { (0..8).map(|_| rng.random_range(-1.0..1.0)).collect() };
    let batch = ContrastiveBatch::new((0..4).map(|_| v()).collect(), (0..4).map(|_| v()).collect(), (0..4).map(|_| v()).collect());
    let l = clr_loss(&batch)?;
    println!("random N=4  per-anchor {:.4?} mean {:.4}", l.per_anchor, l.mean);
    println!("gradient vs central differences: relative error {:.2e}", gradient_check(&batch, 1e-5)?);

    let uniform = vec![1.0 / 50_000.0; 50_000];
    let mlm = mlm_loss(&[&uniform[..]], &[7])?;
    println!("uniform MLM over 50k ids: {mlm:.4}");
    let b = combined_loss(mlm, 30.5, l.mean, Lambdas::default())?;
    println!("combined {:.4} = {} * {:.4} + {} * {} + {} * {:.4}", b.combined, b.lambdas.mlm, b.mlm, b.lambdas.ltsp, b.ltsp, b.lambdas.clr, b.clr);
    Ok(())
}
