//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line; the process exits non-zero when any criterion fails.

mod common;

use cloneaware::ast::{self, Language, SourceFunction, Span};
use cloneaware::clone::CloneContext;
use cloneaware::deviant::{generate_deviant, BugKind};
use cloneaware::difftest::{check_suite, load_suite, CloneVerdict, Compiler, SuiteReport};
use cloneaware::eval::{map_at_r, rank_candidates, zero_shot_study, EmbeddedTriplet, RetrievalItem};
use cloneaware::ingest::{ingest, CorpusRecord, IngestOptions};
use cloneaware::labels::{label_sequence, LabelVocab, UNK_LABEL_ID};
use cloneaware::objective::{clr_gradient, clr_loss, combined_loss, ltsp_loss, mlm_loss, ContrastiveBatch, Lambdas, ToyConfig, ToyEncoder, ToyTriplet};
use cloneaware::pipeline::{augment, bundled_corpus_dir, TripletRecord};
use cloneaware::rng::{derive_seed, rng_from_seed};
use cloneaware::synth::synth_corpus;
use cloneaware::tokenizer::{mask_for_mlm, train_subword, SubwordModel, TokenizedSequence, TrainOptions};
use common::{clr_oracle, map_brute, nll_oracle, rel_err};
use rand::Rng;
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

type Outcome = Result<String, String>;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn random_dist(rng: &mut impl Rng, v: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..v).map(|_| rng.random_range(1e-3..1.0)).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|x| x / s).collect()
}

fn random_batch(rng: &mut impl Rng, n: usize, d: usize) -> ContrastiveBatch {
    let mut vs = || -> Vec<Vec<f64>> { (0..n).map(|_| (0..d).map(|_| rng.random_range(-1.0..1.0)).collect()).collect() };
    let (a, p, ng) = (vs(), vs(), vs());
    ContrastiveBatch::new(a, p, ng)
}

fn loss_oracles() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(101);
    let (mut worst_mlm, mut worst_ltsp, mut worst_clr) = (0f64, 0f64, 0f64);
    for _ in 0..100 {
        let v = rng.random_range(2..2000);
        let m = rng.random_range(1..20);
        let d: Vec<Vec<f64>> = (0..m).map(|_| random_dist(&mut rng, v)).collect();
        let t: Vec<usize> = (0..m).map(|_| rng.random_range(0..v)).collect();
        worst_mlm = worst_mlm.max(rel_err(mlm_loss(&d, &t).map_err(|e| e.to_string())?, nll_oracle(&d, &t)));
    }
    for _ in 0..100 {
        let l = rng.random_range(2..300);
        let k = rng.random_range(1..200);
        let d: Vec<Vec<f64>> = (0..k).map(|_| random_dist(&mut rng, l)).collect();
        let t: Vec<usize> = (0..k).map(|_| rng.random_range(0..l)).collect();
        worst_ltsp = worst_ltsp.max(rel_err(ltsp_loss(&d, &t).map_err(|e| e.to_string())?, nll_oracle(&d, &t)));
    }
    for _ in 0..100 {
        let n = rng.random_range(1..=16);
        let dim = rng.random_range(2..=32);
        let b = random_batch(&mut rng, n, dim);
        let got = clr_loss(&b).map_err(|e| e.to_string())?;
        let want = clr_oracle(&b.anchors, &b.positives, &b.negatives, b.tau);
        for (g, w) in got.per_anchor.iter().zip(&want) {
            worst_clr = worst_clr.max(rel_err(*g, *w));
        }
        worst_clr = worst_clr.max(rel_err(got.mean, want.iter().sum::<f64>() / n as f64));
    }
    let secs = start.elapsed().as_secs_f64();
    let worst = worst_mlm.max(worst_ltsp).max(worst_clr);
    check(
        worst < 1e-9 && secs < 10.0,
        format!("max rel err mlm {worst_mlm:.1e} ltsp {worst_ltsp:.1e} clr {worst_clr:.1e} in {secs:.2}s"),
    )
}

/// Relative error of a whole gradient: `|g - f| / max(|g|, |f|)` in the
/// Euclidean norm over every coordinate of the batch.
fn gradient_check() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(202);
    let h = 1e-5;
    let mut worst = 0f64;
    let mut worst_abs = 0f64;
    for _ in 0..100 {
        let n = rng.random_range(1..=8);
        let d = rng.random_range(2..=16);
        let b = random_batch(&mut rng, n, d);
        let g = clr_gradient(&b).map_err(|e| e.to_string())?;
        let (mut diff2, mut an2, mut fd2) = (0.0, 0.0, 0.0);
        for role in 0..3 {
            for i in 0..n {
                for k in 0..d {
                    let mut plus = b.clone();
                    let mut minus = b.clone();
                    let (p, m, an) = match role {
                        0 => (&mut plus.anchors[i][k], &mut minus.anchors[i][k], g.anchors[i][k]),
                        1 => (&mut plus.positives[i][k], &mut minus.positives[i][k], g.positives[i][k]),
                        _ => (&mut plus.negatives[i][k], &mut minus.negatives[i][k], g.negatives[i][k]),
                    };
                    *p += h;
                    *m -= h;
                    let fd = (clr_loss(&plus).unwrap().mean - clr_loss(&minus).unwrap().mean) / (2.0 * h);
                    diff2 += (fd - an) * (fd - an);
                    an2 += an * an;
                    fd2 += fd * fd;
                    worst_abs = worst_abs.max((fd - an).abs());
                }
            }
        }
        let denom = an2.max(fd2).sqrt();
        if denom > 0.0 {
            worst = worst.max(diff2.sqrt() / denom);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(
        worst < 1e-4 && secs < 30.0,
        format!("max rel err {worst:.2e} (max abs coordinate diff {worst_abs:.1e}) over 100 batches in {secs:.2}s"),
    )
}

fn analytic_anchors() -> Outcome {
    let z = vec![1.0, 0.0, 0.0];
    let sat = ContrastiveBatch::new(vec![z.clone()], vec![z.clone()], vec![vec![-1.0, 0.0, 0.0]]);
    let sat_loss = clr_loss(&sat).map_err(|e| e.to_string())?.mean;
    let g = clr_gradient(&sat).map_err(|e| e.to_string())?;
    let gnorm: f64 = [g.anchors, g.positives, g.negatives].concat().concat().iter().map(|x| x * x).sum::<f64>().sqrt();
    let sym = ContrastiveBatch::new(vec![z], vec![vec![0.0, 1.0, 0.0]], vec![vec![0.0, 0.0, 1.0]]);
    let sym_loss = clr_loss(&sym).map_err(|e| e.to_string())?.mean;
    let dev = (sym_loss - 2f64.ln()).abs();
    check(
        sat_loss < 1e-12 && dev <= 1e-12 && gnorm < 1e-12,
        format!("saturated {sat_loss:.2e} (grad norm {gnorm:.1e}), symmetric off ln2 by {dev:.1e}"),
    )
}

fn suite_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/difftest")
}

const SUITE_SEEDS: [u64; 8] = [0, 1, 2, 3, 4, 5, 6, 7];

fn suite_report() -> &'static Result<(SuiteReport, f64), String> {
    static REPORT: OnceLock<Result<(SuiteReport, f64), String>> = OnceLock::new();
    REPORT.get_or_init(|| {
        let compiler = Compiler::default();
        if !compiler.available() {
            return Err(format!("no C compiler at {}", compiler.cc.display()));
        }
        let programs = load_suite(&suite_dir()).map_err(|e| e.to_string())?;
        if programs.len() < 30 || programs.iter().any(|p| p.inputs.len() < 3) {
            return Err(format!("suite too small: {} programs", programs.len()));
        }
        let start = Instant::now();
        let r = check_suite(&programs, &compiler, &SUITE_SEEDS).map_err(|e| e.to_string())?;
        Ok((r, start.elapsed().as_secs_f64()))
    })
}

fn clone_equivalence() -> Outcome {
    let (r, secs) = suite_report().as_ref().map_err(Clone::clone)?;
    let total = r.clones.len();
    let eq = r.clones_equivalent();
    let first_bad = r
        .clones
        .iter()
        .find(|c| c.verdict != CloneVerdict::Equivalent)
        .map(|c| format!("; first failure {} seed {}: {:?}", c.program, c.seed, c.verdict))
        .unwrap_or_default();
    check(
        eq == total && total >= 30 * 5 && *secs < 300.0,
        format!("{eq}/{total} clones equivalent over {} programs x {} seeds in {secs:.1}s{first_bad}", r.programs, SUITE_SEEDS.len()),
    )
}

fn deviant_validity() -> Outcome {
    let (r, _) = suite_report().as_ref().map_err(Clone::clone)?;
    let reparse = r.deviants.iter().filter(|d| d.reparses).count();
    let local = r.deviants.iter().filter(|d| d.local).count();
    let (dt_ok, dt) = r.datatype_counts();
    let behavior = r.behavior_change_rate();

    let funcs = synth_corpus(&[Language::C, Language::Cpp, Language::Java], 1000, 55);
    let (mut made, mut synth_ok) = (0usize, 0usize);
    for (i, f) in funcs.iter().enumerate() {
        let Ok(d) = generate_deviant(f, derive_seed(55, &i.to_string())) else { continue };
        made += 1;
        let Span { start, end } = d.bug.span;
        let spliced = format!("{}{}{}", &f.text[..start], d.bug.after, &f.text[end..]);
        let reparses = ast::parse(&SourceFunction::new("d", f.language, d.text.clone())).is_ok();
        if reparses && spliced == d.text && f.text[start..end] == d.bug.before && d.text != f.text {
            synth_ok += 1;
        }
    }
    let n = r.deviants.len();
    check(
        reparse == n && local == n && dt_ok == dt && dt > 0 && synth_ok == made,
        format!(
            "suite: {reparse}/{n} reparse, {local}/{n} local, {dt_ok}/{dt} DataType compile, {:.1}% change behavior; synth: {synth_ok}/{made} reparse and local",
            100.0 * behavior
        ),
    )
}

struct Encoded {
    tokens: Vec<Vec<String>>,
    labels: Vec<Vec<u32>>,
    model: SubwordModel,
    seqs: Vec<TokenizedSequence>,
}

fn encoded_corpus() -> &'static Result<Encoded, String> {
    static ENC: OnceLock<Result<Encoded, String>> = OnceLock::new();
    ENC.get_or_init(|| {
        let bundled = ingest(&[bundled_corpus_dir()], &IngestOptions::default()).map_err(|e| e.to_string())?;
        let mut funcs: Vec<SourceFunction> = bundled.records.iter().map(CorpusRecord::to_source_function).collect();
        funcs.extend(synth_corpus(&[Language::C, Language::Cpp, Language::Java], 1000, 66));
        let (vocab, skipped) = LabelVocab::build(&funcs);
        if skipped > 0 {
            return Err(format!("{skipped} functions failed to parse"));
        }
        let trees = funcs.iter().map(ast::parse).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        let tokens: Vec<Vec<String>> = trees.iter().map(|t| ast::flatten_tokens(t).into_iter().map(|t| t.text).collect()).collect();
        let labels: Vec<Vec<u32>> = trees.iter().map(|t| vocab.encode(&label_sequence(t))).collect();
        let model = train_subword(&tokens, TrainOptions { target_vocab: 3000, allow_exhaustion: true }).map_err(|e| e.to_string())?;
        let seqs = tokens
            .iter()
            .zip(&labels)
            .map(|(t, l)| model.encode(t, l))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        Ok(Encoded { tokens, labels, model, seqs })
    })
}

fn label_alignment() -> Outcome {
    let e = encoded_corpus().as_ref().map_err(Clone::clone)?;
    let mut aligned = 0;
    let mut unk = 0;
    for ((toks, labs), seq) in e.tokens.iter().zip(&e.labels).zip(&e.seqs) {
        unk += labs.iter().filter(|&&l| l == UNK_LABEL_ID).count();
        if seq.ids.len() != seq.label_ids.len() {
            continue;
        }
        // Walk the sub-tokens of every source token and compare labels.
        let mut pos = 1;
        let mut ok = true;
        'walk: for (t, &l) in toks.iter().zip(labs) {
            for _ in e.model.encode_token(t) {
                if pos == seq.ids.len() - 1 {
                    break 'walk;
                }
                ok &= seq.label_ids[pos] == l;
                pos += 1;
            }
        }
        if ok && pos == seq.ids.len() - 1 {
            aligned += 1;
        }
    }
    let n = e.seqs.len();
    check(
        n >= 1000 && aligned == n && unk == 0,
        format!("{aligned}/{n} sequences aligned, {unk} UNK labels, label vocab built on the same corpus"),
    )
}

fn masking_contract() -> Outcome {
    let e = encoded_corpus().as_ref().map_err(Clone::clone)?;
    let mut good = 0;
    for (i, seq) in e.seqs.iter().enumerate() {
        let k = seq.ids.len() - 2;
        let want = ((0.15 * k as f64).round() as usize).max(1);
        let m = mask_for_mlm(seq, 0.15, i as u64).map_err(|e| e.to_string())?;
        if k >= 1 && m.mask_positions.len() == want {
            good += 1;
        }
    }
    let n = e.seqs.len();
    check(n >= 1000 && good == n, format!("{good}/{n} sequences with |M| = max(1, round(0.15k))"))
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_cloneaware")).args(args).output().map_err(|e| e.to_string())?;
    if !o.status.success() {
        return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&o.stderr)));
    }
    Ok(o.stdout)
}

fn end_to_end_report() -> &'static Result<Vec<Value>, String> {
    static RUNS: OnceLock<Result<Vec<Value>, String>> = OnceLock::new();
    RUNS.get_or_init(|| {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let mut out = Vec::new();
        for i in 0..2 {
            let path = dir.path().join(format!("report{i}.json"));
            cli(&["end-to-end", "--seed", "2024", "--out", path.to_str().unwrap()])?;
            let v: Value = serde_json::from_slice(&std::fs::read(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            out.push(v);
        }
        Ok(out)
    })
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    cli(&["ingest", "--root", bundled_corpus_dir().to_str().unwrap(), "--out", &d("corpus")])?;
    let corpus = format!("{}/corpus.jsonl", d("corpus"));
    cli(&["augment", "--corpus", &corpus, "--seed", "9", "--out", &d("a.jsonl")])?;
    cli(&["augment", "--corpus", &corpus, "--seed", "9", "--out", &d("b.jsonl")])?;
    let a = std::fs::read(d("a.jsonl")).map_err(|e| e.to_string())?;
    let b = std::fs::read(d("b.jsonl")).map_err(|e| e.to_string())?;
    let runs = end_to_end_report().as_ref().map_err(Clone::clone)?;
    let reports: Vec<String> = runs.iter().map(|v| serde_json::to_string(&v["report"]).unwrap()).collect();
    let has_stamp = runs.iter().all(|v| v["generated_at"].is_u64());
    check(
        !a.is_empty() && a == b && reports[0] == reports[1] && has_stamp,
        format!(
            "augment {} bytes identical: {}; end-to-end reports identical apart from the timestamp: {}",
            a.len(),
            a == b,
            reports[0] == reports[1]
        ),
    )
}

fn map_oracle() -> Outcome {
    let mut rng = rng_from_seed(303);
    let mut worst = 0f64;
    for case in 0..60 {
        let r = rng.random_range(1..=8);
        let groups = rng.random_range(2..=(200 / (r + 1)).min(20));
        let d = rng.random_range(2..=8);
        let coarse = case % 2 == 0;
        let items: Vec<RetrievalItem> = (0..groups * (r + 1) + rng.random_range(0..=groups))
            .take(200)
            .map(|i| {
                let mut vector: Vec<f64> = (0..d)
                    .map(|_| if coarse { f64::from(rng.random_range(-1i32..=1)) } else { rng.random_range(-1.0..1.0) })
                    .collect();
                if vector.iter().all(|x| *x == 0.0) {
                    vector[0] = 1.0;
                }
                RetrievalItem { id: format!("{i:03}"), group: format!("g{}", i % groups), vector }
            })
            .collect();
        let got = map_at_r(&items, r).map_err(|e| e.to_string())?;
        worst = worst.max((got - map_brute(&items, r)).abs());
    }
    let mut perfect = Vec::new();
    for g in 0..10 {
        for k in 0..5 {
            let mut v = vec![0.0; 10];
            v[g] = 1.0;
            perfect.push(RetrievalItem { id: format!("{g}-{k}"), group: g.to_string(), vector: v });
        }
    }
    let perfect_map = map_at_r(&perfect, 4).map_err(|e| e.to_string())?;
    let item = |id: &str, group: &str, v: [f64; 2]| RetrievalItem { id: id.into(), group: group.into(), vector: v.to_vec() };
    // Every item's nearest other item belongs to the other group.
    let cross = vec![item("a1", "A", [1.0, 0.0]), item("b1", "B", [0.9, 0.1]), item("a2", "A", [0.0, 1.0]), item("b2", "B", [0.1, 0.9])];
    let cross_map = map_at_r(&cross, 1).map_err(|e| e.to_string())?;
    let excluded = (0..perfect.len()).all(|q| !rank_candidates(&perfect, q).contains(&q));
    check(
        worst <= 1e-12 && perfect_map == 1.0 && cross_map == 0.0 && excluded,
        format!("max |diff| vs brute force {worst:.1e} on 60 datasets; perfect clusters {perfect_map}; self-excluded MAP@1 {cross_map}"),
    )
}

fn to_ids(bpe: &SubwordModel, toks: &[String]) -> Vec<u32> {
    bpe.encode(toks, &vec![0; toks.len()]).map(|s| s.ids).unwrap_or_default()
}

fn similarity_ordering() -> Outcome {
    let start = Instant::now();
    let records: Vec<CorpusRecord> = synth_corpus(&[Language::C, Language::Cpp, Language::Java], 2700, 77)
        .into_iter()
        .map(|f| CorpusRecord {
            byte_span: Span::new(0, f.text.len()),
            path: "synth".into(),
            id: f.id,
            language: f.language,
            text: f.text,
        })
        .collect();
    let (triplets, _) = augment(&records, 77, &CloneContext::default());
    if triplets.len() < 2500 {
        return Err(format!("only {} triplets", triplets.len()));
    }
    let (train, test) = triplets.split_at(triplets.len() - 500);
    let corpus: Vec<Vec<String>> = train
        .iter()
        .flat_map(|t| [t.original.tokens.clone(), t.clone.tokens.clone(), t.deviant.tokens.clone()])
        .collect();
    let bpe = train_subword(&corpus, TrainOptions { target_vocab: 1000, allow_exhaustion: true }).map_err(|e| e.to_string())?;
    let enc_ids = |t: &TripletRecord| ToyTriplet {
        original: to_ids(&bpe, &t.original.tokens),
        clone: to_ids(&bpe, &t.clone.tokens),
        deviant: to_ids(&bpe, &t.deviant.tokens),
    };
    let train_ids: Vec<ToyTriplet> = train.iter().map(enc_ids).collect();
    let config = ToyConfig { steps: 3000, seed: 77, ..ToyConfig::default() };
    let enc = ToyEncoder::train(bpe.vocab_size(), &train_ids, config).map_err(|e| e.to_string())?;
    let embedded: Vec<EmbeddedTriplet> = test
        .iter()
        .map(|t| {
            let e = enc_ids(t);
            EmbeddedTriplet { original: enc.embed(&e.original), clone: enc.embed(&e.clone), deviant: enc.embed(&e.deviant) }
        })
        .collect();
    let s = zero_shot_study(&embedded);
    let gap_cd = s.avg_clone_sim - s.avg_deviant_sim;
    let gap_dr = s.avg_deviant_sim - s.avg_random_sim;
    let secs = start.elapsed().as_secs_f64();
    let dev_kinds = test.iter().filter(|t| t.bug.kind == BugKind::Variable).count();
    check(
        gap_cd >= 0.2 && gap_dr >= 0.1 && s.top1.clone >= 80.0 && secs < 900.0,
        format!(
            "{} train / {} eval; sims clone {:.3} deviant {:.3} random {:.3}; gaps {gap_cd:.3} (need 0.2) and {gap_dr:.3} (need 0.1); top-1 clone {:.1}% (need 80); {dev_kinds} eval deviants are variable swaps; {secs:.0}s",
            train.len(),
            test.len(),
            s.avg_clone_sim,
            s.avg_deviant_sim,
            s.avg_random_sim,
            s.top1.clone
        ),
    )
}

fn weighting_and_defaults() -> Outcome {
    let lam = Lambdas::default();
    let spots = [((0.0, 0.0, 0.0), 0.0), ((1.0, 1.0, 1.0), 2.1), ((10.82, 30.5, 0.69), 14.56)];
    let mut spot_ok = true;
    for ((m, l, c), want) in spots {
        let b = combined_loss(m, l, c, lam).map_err(|e| e.to_string())?;
        spot_ok &= (b.combined - want).abs() < 1e-12 && b.combined == lam.mlm * m + lam.ltsp * l + lam.clr * c;
    }
    let runs = end_to_end_report().as_ref().map_err(Clone::clone)?;
    let cfg = &runs[0]["report"]["config"];
    let echoed = cfg["lambdas"]["mlm"] == 1.0
        && cfg["lambdas"]["ltsp"] == 0.1
        && cfg["lambdas"]["clr"] == 1.0
        && cfg["tau"] == 0.05
        && cfg["vocab_size"] == 50_000
        && cfg["max_len"] == 512
        && cfg["mask_rate"] == 0.15;
    check(
        spot_ok && echoed,
        format!("spot values exact: {spot_ok}; report echoes defaults: {echoed} ({cfg})"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("loss oracle equivalence", loss_oracles),
        ("contrastive gradient check", gradient_check),
        ("analytic contrastive anchors", analytic_anchors),
        ("clone semantic preservation", clone_equivalence),
        ("deviant validity", deviant_validity),
        ("label alignment", label_alignment),
        ("masking contract", masking_contract),
        ("determinism", determinism),
        ("MAP@R oracle", map_oracle),
        ("toy similarity ordering", similarity_ordering),
        ("loss weighting and defaults", weighting_and_defaults),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS #{:<2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL #{:<2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
