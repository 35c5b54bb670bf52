//! MAP@R, MRR, precision/recall/F1 and PCA on small synthetic embeddings.
//!
//! `cargo run --example retrieval_metrics`

use cloneaware::eval::{map_at_r, mrr_from_ranks, pca_project, prf1, random_map_at_r, Confusion, RetrievalItem};
use cloneaware::rng::rng_from_seed;
use rand_distr::{Distribution, Normal};

fn main() -> anyhow::Result<()> {
    let mut rng = rng_from_seed(5);
    let groups = 6;
    let per_group = 5;
    for noise in [0.05, 0.5, 2.0] {
        let n = Normal::new(0.0, noise)?;
        let mut items = Vec::new();
        for g in 0..groups {
            let mut center = vec![0.0; 8];
            center[g] = 1.0;
            for k in 0..per_group {
                let vector = center.iter().map(|c| c + n.sample(&mut rng)).collect();
                items.push(RetrievalItem {
                    id: format!("g{g}-{k}"),
                    group: format!("g{g}"),
                    vector,
                });
            }
        }
        let r = per_group - 1;
        println!(
            "noise {noise:<4} MAP@{r} {:.3}  (random {:.3})",
            map_at_r(&items, r)?,
            random_map_at_r(r, items.len() - 1)
        );
        if noise == 0.5 {
            let points: Vec<Vec<f64>> = items.iter().map(|i| i.vector.clone()).collect();
            let pca = pca_project(&points, 2)?;
            println!("  PCA explained ratio {:.3?}", pca.explained_ratio);
        }
    }
    println!("MRR of ranks [1, 2, 4]: {:.4}", mrr_from_ranks(&[1, 2, 4]));
    let m = prf1(Confusion { tp: 40, fp: 10, tn: 45, fn_: 5 });
    println!("P {:.3} R {:.3} F1 {:.3} acc {:.3}", m.precision, m.recall, m.f1, m.accuracy);
    Ok(())
}
