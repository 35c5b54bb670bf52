//! Straightforward reference implementations used as test oracles.

#![allow(dead_code)]

use cloneaware::eval::RetrievalItem;

pub fn nll_oracle(dists: &[Vec<f64>], targets: &[usize]) -> f64 {
    let mut total = 0.0;
    for i in 0..dists.len() {
        total += -(dists[i][targets[i]]).ln();
    }
    total
}

fn cos(a: &[f64], b: &[f64]) -> f64 {
    let mut ab = 0.0;
    let mut aa = 0.0;
    let mut bb = 0.0;
    for k in 0..a.len() {
        ab += a[k] * b[k];
        aa += a[k] * a[k];
        bb += b[k] * b[k];
    }
    ab / (aa.sqrt() * bb.sqrt())
}

/// Per-anchor contrastive losses written directly from the formula, no
/// stabilisation.
pub fn clr_oracle(z: &[Vec<f64>], zp: &[Vec<f64>], zn: &[Vec<f64>], tau: f64) -> Vec<f64> {
    let n = z.len();
    let mut out = Vec::new();
    for i in 0..n {
        let num = (cos(&z[i], &zp[i]) / tau).exp();
        let mut den = 0.0;
        for m in 0..n {
            den += (cos(&z[i], &zp[m]) / tau).exp();
            den += (cos(&z[i], &zn[m]) / tau).exp();
        }
        out.push(-(num / den).ln());
    }
    out
}

/// Average precision at `r` for one query by full enumeration: every other
/// item is scored, sorted, and the relevant hits among the first `r` counted.
pub fn ap_brute(items: &[RetrievalItem], q: usize, r: usize) -> f64 {
    let mut cands: Vec<(f64, &str, bool)> = Vec::new();
    for (j, it) in items.iter().enumerate() {
        if j == q {
            continue;
        }
        cands.push((cos(&items[q].vector, &it.vector), &it.id, it.group == items[q].group));
    }
    // Bubble sort: higher similarity first, then smaller id.
    for a in 0..cands.len() {
        for b in 0..cands.len() - 1 - a {
            let swap = cands[b].0 < cands[b + 1].0 || (cands[b].0 == cands[b + 1].0 && cands[b].1 > cands[b + 1].1);
            if swap {
                cands.swap(b, b + 1);
            }
        }
    }
    let mut hits = 0.0;
    let mut sum = 0.0;
    for (k, c) in cands.iter().take(r).enumerate() {
        if c.2 {
            hits += 1.0;
            sum += hits / (k as f64 + 1.0);
        }
    }
    sum / r as f64
}

pub fn map_brute(items: &[RetrievalItem], r: usize) -> f64 {
    (0..items.len()).map(|q| ap_brute(items, q, r)).sum::<f64>() / items.len() as f64
}

/// Byte-pair training by recounting every pair on every round.
pub fn bpe_train_naive(words: &[String], merges_wanted: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let mut seqs: Vec<Vec<Vec<u8>>> = words.iter().map(|w| w.bytes().map(|b| vec![b]).collect()).collect();
    let mut merges = Vec::new();
    while merges.len() < merges_wanted {
        let mut counts: std::collections::BTreeMap<(Vec<u8>, Vec<u8>), u64> = Default::default();
        for s in &seqs {
            for w in s.windows(2) {
                *counts.entry((w[0].clone(), w[1].clone())).or_default() += 1;
            }
        }
        // BTreeMap iterates in ascending key order, so the first maximum wins ties.
        let mut best: Option<(&(Vec<u8>, Vec<u8>), u64)> = None;
        for (k, &c) in &counts {
            if best.is_none_or(|(_, bc)| c > bc) {
                best = Some((k, c));
            }
        }
        let Some((pair, _)) = best else { break };
        let pair = pair.clone();
        for s in &mut seqs {
            let mut out = Vec::new();
            let mut i = 0;
            while i < s.len() {
                if i + 1 < s.len() && s[i] == pair.0 && s[i + 1] == pair.1 {
                    let mut m = s[i].clone();
                    m.extend_from_slice(&s[i + 1]);
                    out.push(m);
                    i += 2;
                } else {
                    out.push(s[i].clone());
                    i += 1;
                }
            }
            *s = out;
        }
        merges.push(pair);
    }
    merges
}

/// Applies merges in learning order, each left to right over the whole word.
pub fn bpe_encode_naive(word: &str, merges: &[(Vec<u8>, Vec<u8>)]) -> Vec<Vec<u8>> {
    let mut s: Vec<Vec<u8>> = word.bytes().map(|b| vec![b]).collect();
    for (a, b) in merges {
        let mut out = Vec::new();
        let mut i = 0;
        while i < s.len() {
            if i + 1 < s.len() && &s[i] == a && &s[i + 1] == b {
                let mut m = a.clone();
                m.extend_from_slice(b);
                out.push(m);
                i += 2;
            } else {
                out.push(s[i].clone());
                i += 1;
            }
        }
        s = out;
    }
    s
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}
