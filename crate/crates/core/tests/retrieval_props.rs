mod common;

use cloneaware::eval::{map_at_r, mrr, mrr_from_ranks, prf1, random_map_at_r, zero_shot_study, Confusion, EmbeddedTriplet, EvalError, RetrievalItem};
use cloneaware::rng::rng_from_seed;
use common::map_brute;
use proptest::prelude::*;
use rand::Rng;

fn dataset() -> impl Strategy<Value = (Vec<RetrievalItem>, usize)> {
    (1usize..=4, 2usize..=5, 2usize..=6).prop_flat_map(|(r, groups, d)| {
        let per = r + 1;
        // Small integer coordinates make exact similarity ties common.
        prop::collection::vec(prop::collection::vec(-2i32..=2, d), groups * per).prop_map(move |vs| {
            let items = vs
                .into_iter()
                .enumerate()
                .map(|(i, v)| {
                    let mut vector: Vec<f64> = v.into_iter().map(f64::from).collect();
                    if vector.iter().all(|x| *x == 0.0) {
                        vector[0] = 1.0;
                    }
                    RetrievalItem { id: format!("{i:03}"), group: format!("g{}", i % groups), vector }
                })
                .collect();
            (items, r)
        })
    })
}

proptest! {
    #[test]
    fn map_matches_brute_force((items, r) in dataset()) {
        let got = map_at_r(&items, r).unwrap();
        prop_assert!((got - map_brute(&items, r)).abs() < 1e-12);
    }

    #[test]
    fn map_invariant_under_rescale_and_relabel((items, r) in dataset(), exp in -4i32..=4) {
        // Powers of two keep exact similarity ties intact.
        let scale = 2f64.powi(exp);
        let base = map_at_r(&items, r).unwrap();
        let changed: Vec<RetrievalItem> = items
            .iter()
            .map(|it| RetrievalItem {
                id: it.id.clone(),
                group: format!("renamed-{}", it.group),
                vector: it.vector.iter().map(|x| x * scale).collect(),
            })
            .collect();
        prop_assert!((map_at_r(&changed, r).unwrap() - base).abs() < 1e-12);
    }

    #[test]
    fn mrr_in_unit_interval(ranks in prop::collection::vec(1usize..50, 1..30)) {
        let m = mrr_from_ranks(&ranks);
        prop_assert!(m > 0.0 && m <= 1.0);
        let lists: Vec<Vec<bool>> = ranks.iter().map(|&r| (1..=r + 3).map(|k| k == r).collect()).collect();
        prop_assert_eq!(mrr(&lists).unwrap(), m);
    }
}

#[test]
fn perfect_clusters_score_one() {
    let mut items = Vec::new();
    for g in 0..4 {
        for k in 0..6 {
            let mut v = vec![0.0; 4];
            v[g] = 1.0 + k as f64;
            items.push(RetrievalItem { id: format!("{g}-{k}"), group: g.to_string(), vector: v });
        }
    }
    assert_eq!(map_at_r(&items, 5).unwrap(), 1.0);
    assert!(matches!(map_at_r(&items, 6), Err(EvalError::GroupTooSmall { .. })));
}

#[test]
fn random_embeddings_near_baseline() {
    let mut rng = rng_from_seed(11);
    let (groups, r) = (40, 4);
    let items: Vec<RetrievalItem> = (0..groups * (r + 1))
        .map(|i| RetrievalItem {
            id: format!("{i:04}"),
            group: (i % groups).to_string(),
            vector: (0..32).map(|_| rng.random_range(-1.0..1.0)).collect(),
        })
        .collect();
    let got = map_at_r(&items, r).unwrap();
    let base = random_map_at_r(r, items.len() - 1);
    assert!((got - base).abs() < 0.02, "{got} vs {base}");
}

#[test]
fn prf1_reference_values() {
    let m = prf1(Confusion { tp: 47, fp: 52, tn: 0, fn_: 49 });
    assert!((m.precision - 47.0 / 99.0).abs() < 1e-12);
    assert!((m.recall - 47.0 / 96.0).abs() < 1e-12);
    assert!((m.f1 - 94.0 / 195.0).abs() < 1e-12);
    assert!((m.f1 - 0.4820).abs() < 1e-4);
    let d = prf1(Confusion { tp: 0, fp: 3, tn: 4, fn_: 2 });
    assert_eq!(d.f1, 0.0);
    assert!(d.degenerate);
}

#[test]
fn orthogonal_encoder_gives_uniform_study() {
    let dim = 300;
    let one_hot = |i: usize| {
        let mut v = vec![0.0; dim];
        v[i] = 1.0;
        v
    };
    let t: Vec<EmbeddedTriplet> = (0..100)
        .map(|i| EmbeddedTriplet { original: one_hot(3 * i), clone: one_hot(3 * i + 1), deviant: one_hot(3 * i + 2) })
        .collect();
    let s = zero_shot_study(&t);
    assert_eq!((s.avg_clone_sim, s.avg_deviant_sim, s.avg_random_sim), (0.0, 0.0, 0.0));
    assert!((s.top1.clone + s.top1.deviant + s.top1.random - 100.0).abs() < 0.01);

    let same: Vec<EmbeddedTriplet> = (0..100)
        .map(|i| EmbeddedTriplet { original: one_hot(i), clone: one_hot(i), deviant: one_hot(i + 100) })
        .collect();
    let s = zero_shot_study(&same);
    assert_eq!(s.avg_clone_sim, 1.0);
    assert_eq!(s.top1.clone, 100.0);
}
