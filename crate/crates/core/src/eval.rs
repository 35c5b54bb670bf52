//! Retrieval and classification metrics, the zero-shot similarity study and
//! PCA projection of embeddings.

use crate::objective::{cosine, Embedding};
use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::io::BufRead;
use thiserror::Error;

/// Candidates per query for POJ-104-style benchmarks.
pub const R_POJ104: usize = 499;
/// Candidates per query for CodeNet-style benchmarks.
pub const R_CODENET: usize = 299;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("group {group:?} has {size} members, MAP@{r} needs at least {}", r + 1)]
    GroupTooSmall { group: String, size: usize, r: usize },
    #[error("R must be positive")]
    ZeroR,
    #[error("embedding dimensions differ")]
    DimensionMismatch,
    #[error("item {0:?} has a zero-norm embedding")]
    ZeroNorm(String),
    #[error("query {index} has {relevant} relevant candidates, expected exactly one")]
    RelevantCount { index: usize, relevant: usize },
    #[error("PCA needs at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("embedding file line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalItem {
    pub id: String,
    pub group: String,
    pub vector: Embedding,
}

/// Reads JSON-lines `{id, group, vector}`.
pub fn read_embeddings<R: BufRead>(r: R) -> Result<Vec<RetrievalItem>, EvalError> {
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|source| EvalError::Parse { line: i + 1, source })?);
    }
    Ok(out)
}

/// Candidate indices for `query`, best first: cosine similarity descending,
/// ties by ascending id. The query itself is excluded.
pub fn rank_candidates(items: &[RetrievalItem], query: usize) -> Vec<usize> {
    let q = &items[query].vector;
    let mut scored: Vec<(f64, usize)> = (0..items.len())
        .filter(|&j| j != query)
        .map(|j| (cosine(q, &items[j].vector).unwrap_or(f64::NEG_INFINITY), j))
        .collect();
    scored.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap_or(Ordering::Equal)
            .then_with(|| items[a.1].id.cmp(&items[b.1].id))
    });
    scored.into_iter().map(|(_, j)| j).collect()
}

/// Average precision over the top `r` of a ranked relevance list.
pub fn average_precision_at_r(relevant: &[bool], r: usize) -> f64 {
    let mut hits = 0usize;
    let mut sum = 0.0;
    for (k, &rel) in relevant.iter().take(r).enumerate() {
        if rel {
            hits += 1;
            sum += hits as f64 / (k + 1) as f64;
        }
    }
    sum / r as f64
}

fn validate(items: &[RetrievalItem]) -> Result<(), EvalError> {
    let dim = items.first().map(|i| i.vector.len()).unwrap_or(0);
    for it in items {
        if it.vector.len() != dim {
            return Err(EvalError::DimensionMismatch);
        }
        if it.vector.iter().all(|x| *x == 0.0) {
            return Err(EvalError::ZeroNorm(it.id.clone()));
        }
    }
    Ok(())
}

/// Mean over queries of AP@R among the top-R cosine-ranked candidates.
pub fn map_at_r(items: &[RetrievalItem], r: usize) -> Result<f64, EvalError> {
    if r == 0 {
        return Err(EvalError::ZeroR);
    }
    validate(items)?;
    let mut sizes: std::collections::BTreeMap<&str, usize> = std::collections::BTreeMap::new();
    for it in items {
        *sizes.entry(it.group.as_str()).or_default() += 1;
    }
    if let Some((g, &size)) = sizes.iter().find(|(_, &s)| s < r + 1) {
        return Err(EvalError::GroupTooSmall {
            group: g.to_string(),
            size,
            r,
        });
    }
    if items.is_empty() {
        return Ok(0.0);
    }
    let aps: Vec<f64> = (0..items.len())
        .into_par_iter()
        .map(|q| {
            let ranked = rank_candidates(items, q);
            let rel: Vec<bool> = ranked.iter().take(r).map(|&j| items[j].group == items[q].group).collect();
            average_precision_at_r(&rel, r)
        })
        .collect();
    Ok(aps.iter().sum::<f64>() / aps.len() as f64)
}

/// Expected MAP@R when every query's `r` relevant items sit uniformly at
/// random among `m` candidates.
pub fn random_map_at_r(r: usize, m: usize) -> f64 {
    let p = r as f64 / m as f64;
    let follow = if m > 1 { (r as f64 - 1.0) / (m as f64 - 1.0) } else { 0.0 };
    (1..=r).map(|k| p / k as f64 * (1.0 + (k as f64 - 1.0) * follow)).sum::<f64>() / r as f64
}

/// Mean reciprocal rank; each list is a ranking with exactly one relevant entry.
pub fn mrr(queries: &[Vec<bool>]) -> Result<f64, EvalError> {
    let mut ranks = Vec::with_capacity(queries.len());
    for (index, q) in queries.iter().enumerate() {
        let relevant = q.iter().filter(|&&b| b).count();
        if relevant != 1 {
            return Err(EvalError::RelevantCount { index, relevant });
        }
        ranks.push(q.iter().position(|&b| b).unwrap() + 1);
    }
    Ok(mrr_from_ranks(&ranks))
}

/// Mean of `1 / rank` over 1-based ranks.
pub fn mrr_from_ranks(ranks: &[usize]) -> f64 {
    if ranks.is_empty() {
        return 0.0;
    }
    ranks.iter().map(|&r| 1.0 / r as f64).sum::<f64>() / ranks.len() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Confusion {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    pub fn_: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Prf1 {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub accuracy: f64,
    /// Set when any ratio had a zero denominator and was reported as 0.
    pub degenerate: bool,
}

pub fn prf1(c: Confusion) -> Prf1 {
    let mut degenerate = false;
    let mut ratio = |num: f64, den: f64| {
        if den == 0.0 {
            degenerate = true;
            0.0
        } else {
            num / den
        }
    };
    let (tp, fp, tn, fn_) = (c.tp as f64, c.fp as f64, c.tn as f64, c.fn_ as f64);
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fn_);
    let f1 = ratio(2.0 * precision * recall, precision + recall);
    let accuracy = ratio(tp + tn, tp + fp + tn + fn_);
    Prf1 {
        precision,
        recall,
        f1,
        accuracy,
        degenerate,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedTriplet {
    pub original: Embedding,
    pub clone: Embedding,
    pub deviant: Embedding,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Top1Shares {
    pub clone: f64,
    pub deviant: f64,
    pub random: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroShotStudy {
    pub triplets: usize,
    pub avg_clone_sim: f64,
    pub avg_deviant_sim: f64,
    pub avg_random_sim: f64,
    /// Percentages of queries whose nearest augmented program is their own
    /// clone, their own deviant, or anything else.
    pub top1: Top1Shares,
}

fn sim(a: &[f64], b: &[f64]) -> f64 {
    cosine(a, b).unwrap_or(0.0)
}

/// Similarity study over originals `X` and the augmented pool `X^` of all
/// clones and deviants. Random pairs are each original against every
/// augmented program except its own two.
pub fn zero_shot_study(triplets: &[EmbeddedTriplet]) -> ZeroShotStudy {
    let n = triplets.len();
    if n == 0 {
        return ZeroShotStudy {
            triplets: 0,
            avg_clone_sim: 0.0,
            avg_deviant_sim: 0.0,
            avg_random_sim: 0.0,
            top1: Top1Shares::default(),
        };
    }
    // Pool order: clone_0, deviant_0, clone_1, deviant_1, ...
    let pool: Vec<&Embedding> = triplets.iter().flat_map(|t| [&t.clone, &t.deviant]).collect();
    let rows: Vec<(f64, f64, f64, usize)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = &triplets[i].original;
            let sims: Vec<f64> = pool.iter().map(|p| sim(x, p)).collect();
            let random: f64 = sims
                .iter()
                .enumerate()
                .filter(|(j, _)| j / 2 != i)
                .map(|(_, s)| s)
                .sum::<f64>();
            let random = if n > 1 { random / (2 * (n - 1)) as f64 } else { 0.0 };
            let best = sims
                .iter()
                .enumerate()
                .fold((0usize, f64::NEG_INFINITY), |acc, (j, &s)| if s > acc.1 { (j, s) } else { acc })
                .0;
            (sims[2 * i], sims[2 * i + 1], random, best)
        })
        .collect();
    let mut counts = [0usize; 3];
    for (i, r) in rows.iter().enumerate() {
        let which = if r.3 == 2 * i {
            0
        } else if r.3 == 2 * i + 1 {
            1
        } else {
            2
        };
        counts[which] += 1;
    }
    let mean = |f: &dyn Fn(&(f64, f64, f64, usize)) -> f64| rows.iter().map(f).sum::<f64>() / n as f64;
    let pct = |c: usize| 100.0 * c as f64 / n as f64;
    ZeroShotStudy {
        triplets: n,
        avg_clone_sim: mean(&|r| r.0),
        avg_deviant_sim: mean(&|r| r.1),
        avg_random_sim: mean(&|r| r.2),
        top1: Top1Shares {
            clone: pct(counts[0]),
            deviant: pct(counts[1]),
            random: pct(counts[2]),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaResult {
    /// One row of `k` coordinates per input point.
    pub coords: Vec<Vec<f64>>,
    /// Unit principal directions, largest variance first.
    pub components: Vec<Vec<f64>>,
    pub explained_variance: Vec<f64>,
    pub explained_ratio: Vec<f64>,
}

/// Projects mean-centred points onto the top `k` eigenvectors of their
/// covariance. Each direction is oriented so that its largest-magnitude
/// entry is positive.
pub fn pca_project(points: &[Embedding], k: usize) -> Result<PcaResult, EvalError> {
    if points.len() < k + 1 {
        return Err(EvalError::TooFewPoints {
            need: k + 1,
            got: points.len(),
        });
    }
    let d = points[0].len();
    if points.iter().any(|p| p.len() != d) || k > d {
        return Err(EvalError::DimensionMismatch);
    }
    let n = points.len();
    let mut mean = vec![0.0; d];
    for p in points {
        for (m, x) in mean.iter_mut().zip(p) {
            *m += x / n as f64;
        }
    }
    let x = DMatrix::from_fn(n, d, |i, j| points[i][j] - mean[j]);
    let cov = (x.transpose() * &x) / (n as f64 - 1.0);
    let eig = SymmetricEigen::new(cov);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].partial_cmp(&eig.eigenvalues[a]).unwrap_or(Ordering::Equal).then(a.cmp(&b)));
    let total: f64 = eig.eigenvalues.iter().map(|v| v.max(0.0)).sum();
    let mut components = Vec::with_capacity(k);
    let mut explained_variance = Vec::with_capacity(k);
    for &c in order.iter().take(k) {
        let mut v: Vec<f64> = eig.eigenvectors.column(c).iter().copied().collect();
        let lead = v
            .iter()
            .copied()
            .fold(0.0f64, |acc, x| if x.abs() > acc.abs() { x } else { acc });
        if lead < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        components.push(v);
        explained_variance.push(eig.eigenvalues[c].max(0.0));
    }
    let coords = (0..n)
        .map(|i| components.iter().map(|c| (0..d).map(|j| x[(i, j)] * c[j]).sum()).collect())
        .collect();
    let explained_ratio = explained_variance
        .iter()
        .map(|v| if total > 0.0 { v / total } else { 0.0 })
        .collect();
    Ok(PcaResult {
        coords,
        components,
        explained_variance,
        explained_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(id: &str, group: &str, v: &[f64]) -> RetrievalItem {
        RetrievalItem {
            id: id.into(),
            group: group.into(),
            vector: v.to_vec(),
        }
    }

    #[test]
    fn perfect_clusters_score_one() {
        let items: Vec<_> = (0..9)
            .map(|i| {
                let g = i % 3;
                let mut v = vec![0.0; 3];
                v[g] = 1.0;
                item(&format!("{i}"), &format!("g{g}"), &v)
            })
            .collect();
        assert_eq!(map_at_r(&items, 2).unwrap(), 1.0);
        assert!(matches!(map_at_r(&items, 3), Err(EvalError::GroupTooSmall { .. })));
    }

    #[test]
    fn hand_computed_two_groups() {
        // Group a: a0, a1, a2; group b: b0, b1, b2. R = 2.
        let items = vec![
            item("a0", "a", &[1.0, 0.0]),
            item("a1", "a", &[0.9, 0.1]),
            item("a2", "a", &[0.0, 1.0]),
            item("b0", "b", &[0.95, 0.05]),
            item("b1", "b", &[0.1, 0.9]),
            item("b2", "b", &[0.2, 0.8]),
        ];
        // Top-2 by cosine for each query:
        // a0: b0 (.9986), a1 (.9939) -> AP = (1/2)/2 = 0.25
        // a1: b0 (.9984), a0 (.9939) -> 0.25
        // a2: b1, b2 -> 0
        // b0: a0, a1 -> 0
        // b1: a2 (.9939), b2 (.9910) -> 0.25
        // b2: b1 (.9910), a2 (.9701) -> (1/1)/2 = 0.5
        let expected = (0.25 + 0.25 + 0.0 + 0.0 + 0.25 + 0.5) / 6.0;
        assert!((map_at_r(&items, 2).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn mrr_and_prf1() {
        let q = vec![vec![true, false], vec![false, true, false], vec![false, false, false, true]];
        assert!((mrr(&q).unwrap() - 1.75 / 3.0).abs() < 1e-15);
        assert!(mrr(&[vec![false]]).is_err());
        let p = prf1(Confusion { tp: 5, fp: 0, tn: 0, fn_: 0 });
        assert_eq!((p.precision, p.recall, p.f1), (1.0, 1.0, 1.0));
        let p = prf1(Confusion { tp: 0, fp: 3, tn: 2, fn_: 1 });
        assert!(p.degenerate && p.f1 == 0.0);
        let p = prf1(Confusion { tp: 47, fp: 52, tn: 0, fn_: 49 });
        assert!((p.precision - 0.4747).abs() < 1e-4);
        assert!((p.recall - 0.4896).abs() < 1e-4);
        assert!((p.f1 - 0.4820).abs() < 1e-4);
    }

    #[test]
    fn pca_on_a_line() {
        let pts: Vec<Embedding> = (0..10).map(|i| vec![i as f64, 2.0 * i as f64, -(i as f64)]).collect();
        let r = pca_project(&pts, 2).unwrap();
        assert!((r.explained_ratio[0] - 1.0).abs() < 1e-12);
        assert!(r.components[0][1] > 0.0);
    }

    #[test]
    fn zero_shot_on_identical_clones() {
        let t: Vec<EmbeddedTriplet> = (0..5)
            .map(|i| {
                let mut v = vec![0.0; 10];
                v[i] = 1.0;
                let mut d = vec![0.0; 10];
                d[i + 5] = 1.0;
                EmbeddedTriplet { original: v.clone(), clone: v, deviant: d }
            })
            .collect();
        let s = zero_shot_study(&t);
        assert_eq!(s.avg_clone_sim, 1.0);
        assert_eq!(s.avg_deviant_sim, 0.0);
        assert_eq!(s.top1.clone, 100.0);
        assert!((s.top1.clone + s.top1.deviant + s.top1.random - 100.0).abs() < 1e-9);
    }
}
