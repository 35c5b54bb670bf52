//! Clone-deviants: near copies of a function with exactly one injected,
//! behavior-changing bug.

mod sites;

use crate::ast::{self, flatten_tokens, parse, scope_of, Edit, EditError, ParseError, ScopeInfo, SourceFunction, Span, SyntaxTree};
use crate::rng::{derive_seed, rng_from_seed};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub use sites::{BugSite, CallMutation};

/// Largest statement count of a removable condition check.
pub const MAX_REMOVED_STATEMENTS: usize = 3;
/// Upper bound on token edit distance, as a fraction of the original token count.
pub const MAX_EDIT_FRACTION: f64 = 0.10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BugKind {
    Operator,
    DataType,
    Variable,
    Value,
    Pointer,
    Statement,
    FunctionCall,
}

impl BugKind {
    pub const ALL: [BugKind; 7] = [
        BugKind::Operator,
        BugKind::DataType,
        BugKind::Variable,
        BugKind::Value,
        BugKind::Pointer,
        BugKind::Statement,
        BugKind::FunctionCall,
    ];
}

impl fmt::Display for BugKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BugRecord {
    pub kind: BugKind,
    /// Span of the replaced text in the original function.
    pub span: Span,
    pub before: String,
    pub after: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeviantResult {
    pub text: String,
    pub bug: BugRecord,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum DeviantError {
    #[error("input does not parse: {0}")]
    Parse(#[from] ParseError),
    #[error("no bug can be injected")]
    NoApplicableBug,
    #[error("{kind} injection failed: {source}")]
    InjectionFailed {
        kind: BugKind,
        #[source]
        source: EditError,
    },
    #[error("{kind} has no distinct replacement at {span}")]
    NoCandidate { kind: BugKind, span: Span },
}

/// Candidate sites for `kind`.
pub fn bug_sites(kind: BugKind, tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    sites::sites(kind, tree, scope)
}

/// Injects one bug at `site`. The result is a single-span edit of the
/// original text and is re-parsed before being returned.
pub fn inject_bug(site: &BugSite, tree: &SyntaxTree, scope: &ScopeInfo, rng_seed: u64) -> Result<DeviantResult, DeviantError> {
    let mut rng = rng_from_seed(rng_seed);
    let kind = site.kind();
    let (span, after, detail) = sites::mutate(site, tree, scope, &mut rng).ok_or(DeviantError::NoCandidate {
        kind,
        span: site.span(tree, scope),
    })?;
    let before = tree.source()[span.range()].to_string();
    if before == after {
        return Err(DeviantError::NoCandidate { kind, span });
    }
    let text = ast::render(tree, &[Edit::new(span, after.clone())])
        .map_err(|source| DeviantError::InjectionFailed { kind, source })?;
    Ok(DeviantResult {
        text,
        bug: BugRecord {
            kind,
            span,
            before,
            after,
            detail,
        },
        seed: rng_seed,
    })
}

/// Levenshtein distance between two token sequences.
pub fn token_edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    // A single-site edit leaves long common prefixes and suffixes; trimming
    // them keeps the quadratic core small without changing the distance.
    let prefix = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[prefix..], &b[prefix..]);
    let suffix = a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count();
    let (a, b) = (&a[..a.len() - suffix], &b[..b.len() - suffix]);
    if a.is_empty() || b.is_empty() {
        return a.len().max(b.len());
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

fn token_texts(lang: ast::Language, text: &str) -> Option<Vec<String>> {
    let tree = parse(&SourceFunction::new("d", lang, text)).ok()?;
    Some(flatten_tokens(&tree).into_iter().map(|t| t.text).collect())
}

/// Samples a bug kind uniformly among the kinds with sites, then a site,
/// retrying other sites and kinds if an injection fails or edits more than
/// [`MAX_EDIT_FRACTION`] of the tokens.
pub fn generate_deviant(func: &SourceFunction, rng_seed: u64) -> Result<DeviantResult, DeviantError> {
    let mut rng = rng_from_seed(rng_seed);
    let tree = parse(func)?;
    let scope = scope_of(&tree);
    let original: Vec<String> = flatten_tokens(&tree).into_iter().map(|t| t.text).collect();
    let budget = (MAX_EDIT_FRACTION * original.len() as f64).floor() as usize;
    let mut by_kind: Vec<(BugKind, Vec<BugSite>)> = BugKind::ALL
        .into_iter()
        .map(|k| (k, bug_sites(k, &tree, &scope)))
        .filter(|(_, s)| !s.is_empty())
        .collect();
    let mut attempt = 0u32;
    while !by_kind.is_empty() {
        let k = rng.random_range(0..by_kind.len());
        let (kind, mut sites) = by_kind.swap_remove(k);
        sites.shuffle(&mut rng);
        for site in sites.iter().take(8) {
            attempt += 1;
            let sub_seed = derive_seed(rng_seed, &format!("bug{attempt}"));
            match inject_bug(site, &tree, &scope, sub_seed) {
                Ok(r) => {
                    let Some(mutated) = token_texts(func.language, &r.text) else { continue };
                    if token_edit_distance(&original, &mutated) <= budget {
                        return Ok(DeviantResult { seed: rng_seed, ..r });
                    }
                    log::debug!("{kind} deviant of {} exceeds the edit budget", func.id);
                }
                Err(DeviantError::NoCandidate { .. }) | Err(DeviantError::InjectionFailed { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Err(DeviantError::NoApplicableBug)
}

impl DeviantResult {
    /// True when `text` equals `original` with only the recorded span replaced.
    pub fn is_local_to(&self, original: &str) -> bool {
        let Span { start, end } = self.bug.span;
        original.get(..start).zip(original.get(end..)).is_some_and(|(head, tail)| {
            original[start..end] == self.bug.before
                && self.text.len() == head.len() + self.bug.after.len() + tail.len()
                && self.text.starts_with(head)
                && self.text.ends_with(tail)
                && self.text[head.len()..head.len() + self.bug.after.len()] == self.bug.after
        })
    }
}

#[cfg(test)]
mod tests;
