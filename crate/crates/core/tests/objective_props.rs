mod common;

use cloneaware::objective::{clr_gradient, clr_loss, combined_loss, ltsp_loss, mlm_loss, ContrastiveBatch, Lambdas};
use common::{clr_oracle, nll_oracle, rel_err};
use proptest::prelude::*;

fn distribution(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..1.0, len).prop_map(|w| {
        let s: f64 = w.iter().sum();
        w.into_iter().map(|x| x / s).collect()
    })
}

fn dists_and_targets() -> impl Strategy<Value = (Vec<Vec<f64>>, Vec<usize>)> {
    (2usize..40, 1usize..12).prop_flat_map(|(v, n)| {
        (prop::collection::vec(distribution(v), n), prop::collection::vec(0..v, n))
    })
}

fn vector(d: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0f64..1.0, d).prop_filter("non-zero", |v| v.iter().map(|x| x * x).sum::<f64>() > 1e-3)
}

fn batch() -> impl Strategy<Value = ContrastiveBatch> {
    (1usize..=6, 2usize..=10, 0.05f64..1.0).prop_flat_map(|(n, d, tau)| {
        (
            prop::collection::vec(vector(d), n),
            prop::collection::vec(vector(d), n),
            prop::collection::vec(vector(d), n),
        )
            .prop_map(move |(a, p, ng)| ContrastiveBatch { tau, ..ContrastiveBatch::new(a, p, ng) })
    })
}

proptest! {
    #[test]
    fn nll_losses_match_oracle((d, t) in dists_and_targets()) {
        let want = nll_oracle(&d, &t);
        prop_assert!(rel_err(mlm_loss(&d, &t).unwrap(), want) < 1e-9);
        prop_assert!(rel_err(ltsp_loss(&d, &t).unwrap(), want) < 1e-9);
    }

    #[test]
    fn clr_matches_oracle(b in batch()) {
        let want = clr_oracle(&b.anchors, &b.positives, &b.negatives, b.tau);
        let got = clr_loss(&b).unwrap();
        for (g, w) in got.per_anchor.iter().zip(&want) {
            prop_assert!(rel_err(*g, *w) < 1e-9, "{g} vs {w}");
        }
        prop_assert!(rel_err(got.mean, want.iter().sum::<f64>() / want.len() as f64) < 1e-9);
    }

    #[test]
    fn clr_is_scale_invariant(b in batch(), role in 0usize..3, pick in 0usize..6, scale in 0.01f64..100.0) {
        let before = clr_loss(&b).unwrap();
        let mut s = b.clone();
        let set = match role { 0 => &mut s.anchors, 1 => &mut s.positives, _ => &mut s.negatives };
        let i = pick % set.len();
        set[i].iter_mut().for_each(|x| *x *= scale);
        let after = clr_loss(&s).unwrap();
        for (x, y) in before.per_anchor.iter().zip(&after.per_anchor) {
            prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
    }

    #[test]
    fn gradient_is_orthogonal_to_own_direction(b in batch()) {
        let g = clr_gradient(&b).unwrap();
        for (vs, gs) in [(&b.anchors, &g.anchors), (&b.positives, &g.positives), (&b.negatives, &g.negatives)] {
            for (v, gv) in vs.iter().zip(gs) {
                let dir: f64 = v.iter().zip(gv).map(|(a, c)| a * c).sum();
                let scale: f64 = gv.iter().map(|x| x.abs()).sum::<f64>() * v.iter().map(|x| x.abs()).sum::<f64>();
                prop_assert!(dir.abs() <= 1e-9 * scale.max(1e-12));
            }
        }
    }

    #[test]
    fn permutation_equivariance(b in batch(), rot in 0usize..6) {
        let n = b.len();
        let k = rot % n;
        let mut p = b.clone();
        p.anchors.rotate_left(k);
        p.positives.rotate_left(k);
        p.negatives.rotate_left(k);
        let l = clr_loss(&b).unwrap();
        let lp = clr_loss(&p).unwrap();
        let mut expect = l.per_anchor.clone();
        expect.rotate_left(k);
        for (x, y) in expect.iter().zip(&lp.per_anchor) {
            prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0));
        }
        prop_assert!((l.mean - lp.mean).abs() <= 1e-9 * l.mean.abs().max(1.0));
    }

    #[test]
    fn combined_is_weighted_sum(m in 0.0f64..50.0, l in 0.0f64..50.0, c in 0.0f64..50.0, w in prop::array::uniform3(0.0f64..2.0)) {
        let lam = Lambdas { mlm: w[0], ltsp: w[1], clr: w[2] };
        let b = combined_loss(m, l, c, lam).unwrap();
        prop_assert_eq!(b.combined, w[0] * m + w[1] * l + w[2] * c);
    }
}

#[test]
fn gradient_matches_central_differences() {
    let b = ContrastiveBatch::new(
        vec![vec![0.3, -0.2, 0.9], vec![-0.5, 0.4, 0.1], vec![0.2, 0.2, -0.7]],
        vec![vec![0.1, 0.8, -0.3], vec![0.6, -0.1, 0.2], vec![-0.4, 0.3, 0.5]],
        vec![vec![-0.7, 0.2, 0.2], vec![0.3, 0.3, 0.3], vec![0.9, -0.6, 0.1]],
    );
    let g = clr_gradient(&b).unwrap();
    let h = 1e-5;
    for i in 0..3 {
        for k in 0..3 {
            let mut plus = b.clone();
            let mut minus = b.clone();
            plus.negatives[i][k] += h;
            minus.negatives[i][k] -= h;
            let fd = (clr_loss(&plus).unwrap().mean - clr_loss(&minus).unwrap().mean) / (2.0 * h);
            assert!(rel_err(fd, g.negatives[i][k]) < 1e-4, "{fd} vs {}", g.negatives[i][k]);
        }
    }
}

#[test]
fn spot_values() {
    let uniform = vec![1.0 / 50_000.0; 50_000];
    assert!((mlm_loss(&[&uniform[..]], &[0]).unwrap() - 50_000f64.ln()).abs() < 1e-9);
    let labels = vec![0.25; 4];
    let ltsp = ltsp_loss(&[&labels[..], &labels[..], &labels[..]], &[0, 1, 3]).unwrap();
    assert!((ltsp - 3.0 * 4f64.ln()).abs() < 1e-12);
    assert_eq!(mlm_loss::<Vec<f64>>(&[], &[]).unwrap(), 0.0);
}
