//! Triplet construction: each corpus function paired with one clone and one
//! deviant, plus token and label views of all three.

use crate::ast::{self, Language, SourceFunction};
use crate::clone::{generate_clone_with, AppliedTransform, CloneContext, CloneError};
use crate::deviant::{generate_deviant, BugRecord, DeviantError};
use crate::ingest::CorpusRecord;
use crate::labels::labels_for;
use crate::rng::derive_seed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;

/// Text of one program with its code tokens and their `tt#pt` labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProgramView {
    pub text: String,
    pub tokens: Vec<String>,
    pub labels: Vec<String>,
}

impl ProgramView {
    pub fn of(func: &SourceFunction) -> Result<Self, ast::ParseError> {
        let tree = ast::parse(func)?;
        let toks = ast::flatten_tokens(&tree);
        let labels = labels_for(&tree, &toks).iter().map(|l| l.rendered()).collect();
        Ok(Self {
            text: func.text.clone(),
            tokens: toks.into_iter().map(|t| t.text).collect(),
            labels,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletRecord {
    pub id: String,
    pub language: Language,
    /// Per-function seed; the clone and deviant seeds derive from it.
    pub seed: u64,
    pub original: ProgramView,
    pub clone: ProgramView,
    pub clone_transforms: Vec<AppliedTransform>,
    pub clone_seed: u64,
    pub deviant: ProgramView,
    pub bug: BugRecord,
    pub deviant_seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SkipReason {
    ParseError,
    NoApplicableTransform,
    CloneFailed,
    NoApplicableBug,
    DeviantFailed,
    /// The clone and the deviant came out textually identical.
    CloneEqualsDeviant,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentSummary {
    pub input: usize,
    pub triplets: usize,
    pub skipped: BTreeMap<SkipReason, usize>,
}

impl AugmentSummary {
    pub fn skip_rate(&self, reason: SkipReason) -> f64 {
        if self.input == 0 {
            return 0.0;
        }
        self.skipped.get(&reason).copied().unwrap_or(0) as f64 / self.input as f64
    }
}

fn build_one(rec: &CorpusRecord, seed: u64, ctx: &CloneContext) -> Result<TripletRecord, SkipReason> {
    let func = rec.to_source_function();
    let original = ProgramView::of(&func).map_err(|_| SkipReason::ParseError)?;
    let fn_seed = derive_seed(seed, &rec.id);
    let clone_seed = derive_seed(fn_seed, "clone");
    let deviant_seed = derive_seed(fn_seed, "deviant");
    let clone = generate_clone_with(&func, clone_seed, ctx).map_err(|e| match e {
        CloneError::NoApplicableTransform => SkipReason::NoApplicableTransform,
        CloneError::Parse(_) => SkipReason::ParseError,
        _ => SkipReason::CloneFailed,
    })?;
    let deviant = generate_deviant(&func, deviant_seed).map_err(|e| match e {
        DeviantError::NoApplicableBug => SkipReason::NoApplicableBug,
        DeviantError::Parse(_) => SkipReason::ParseError,
        _ => SkipReason::DeviantFailed,
    })?;
    if clone.text == deviant.text {
        return Err(SkipReason::CloneEqualsDeviant);
    }
    let view = |text: &str, reason| {
        ProgramView::of(&SourceFunction::new(rec.id.clone(), rec.language, text)).map_err(|_| reason)
    };
    Ok(TripletRecord {
        id: rec.id.clone(),
        language: rec.language,
        seed: fn_seed,
        original,
        clone: view(&clone.text, SkipReason::CloneFailed)?,
        clone_transforms: clone.applied,
        clone_seed,
        deviant: view(&deviant.text, SkipReason::DeviantFailed)?,
        bug: deviant.bug,
        deviant_seed,
    })
}

/// Builds one triplet per function that admits both a clone and a deviant.
/// Work is spread over threads; output order follows the input.
pub fn augment(records: &[CorpusRecord], seed: u64, ctx: &CloneContext) -> (Vec<TripletRecord>, AugmentSummary) {
    let results: Vec<Result<TripletRecord, SkipReason>> =
        records.par_iter().map(|r| build_one(r, seed, ctx)).collect();
    let mut summary = AugmentSummary {
        input: records.len(),
        ..AugmentSummary::default()
    };
    let mut out = Vec::new();
    for r in results {
        match r {
            Ok(t) => out.push(t),
            Err(reason) => *summary.skipped.entry(reason).or_default() += 1,
        }
    }
    summary.triplets = out.len();
    (out, summary)
}

pub fn write_triplets<W: Write>(mut w: W, triplets: &[TripletRecord]) -> std::io::Result<()> {
    for t in triplets {
        serde_json::to_writer(&mut w, t)?;
        w.write_all(b"\n")?;
    }
    Ok(())
}

pub fn read_triplets(path: &Path) -> std::io::Result<Vec<TripletRecord>> {
    let r = std::io::BufReader::new(std::fs::File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let t = serde_json::from_str(&line).map_err(|e| {
            std::io::Error::new(std::io::ErrorKind::InvalidData, format!("{}:{}: {e}", path.display(), i + 1))
        })?;
        out.push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::Span;
    use crate::samples::TF_EVAL;

    fn record(id: &str, lang: Language, text: &str) -> CorpusRecord {
        CorpusRecord {
            id: id.into(),
            language: lang,
            path: "mem".into(),
            byte_span: Span::new(0, text.len()),
            text: text.into(),
        }
    }

    #[test]
    fn kernel_triplet() {
        let recs = vec![record("eval", Language::C, TF_EVAL)];
        let (t, s) = augment(&recs, 3, &CloneContext::default());
        assert_eq!((s.input, s.triplets), (1, 1));
        let t = &t[0];
        assert!(t.original.text != t.clone.text && t.clone.text != t.deviant.text);
        assert!(!t.clone_transforms.is_empty());
        assert_eq!(t.original.tokens.len(), t.original.labels.len());
        assert_eq!(t.deviant.tokens.len(), t.deviant.labels.len());
    }

    #[test]
    fn empty_bodies_are_skipped() {
        let recs: Vec<CorpusRecord> = (0..100).map(|i| record(&format!("f{i}"), Language::C, "void f(){}")).collect();
        let (t, s) = augment(&recs, 1, &CloneContext::default());
        assert!(t.is_empty());
        assert_eq!(s.skipped.get(&SkipReason::NoApplicableTransform), Some(&100));
        assert_eq!(s.skip_rate(SkipReason::NoApplicableTransform), 1.0);
    }
}
