//! Semantics-preserving clone synthesis.
//!
//! Five transform families are available: identifier renaming, statement
//! rewriting, block rewriting, dead-code insertion and permutation of
//! independent declarations. Each family enumerates the sites where it is
//! safe under its side conditions; [`generate_clone`] composes one to four
//! families, re-parsing between applications.

mod block;
mod deadcode;
mod permute;
mod rename;
mod statement;

use crate::ast::{self, parse, scope_of, Edit, EditError, ParseError, ScopeInfo, SourceFunction, Span, SyntaxTree};
use crate::rng::{derive_seed, rng_from_seed};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

pub use rename::{default_vocabulary, rename_candidates, RenameStrategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CloneTransformKind {
    RenameIdentifier,
    RewriteStatement,
    RewriteBlock,
    InsertDeadCode,
    PermuteDecls,
}

impl CloneTransformKind {
    pub const ALL: [CloneTransformKind; 5] = [
        CloneTransformKind::RenameIdentifier,
        CloneTransformKind::RewriteStatement,
        CloneTransformKind::RewriteBlock,
        CloneTransformKind::InsertDeadCode,
        CloneTransformKind::PermuteDecls,
    ];
}

impl fmt::Display for CloneTransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One applied transform with the span it touched in the text it was applied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppliedTransform {
    pub kind: CloneTransformKind,
    pub span: Span,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CloneResult {
    pub text: String,
    pub applied: Vec<AppliedTransform>,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum CloneError {
    #[error("input does not parse: {0}")]
    Parse(#[from] ParseError),
    #[error("no clone transform is applicable")]
    NoApplicableTransform,
    #[error("{kind} failed: {source}")]
    TransformFailed {
        kind: CloneTransformKind,
        #[source]
        source: EditError,
    },
    #[error("{kind} produced no usable rewrite at {span}")]
    NoCandidate { kind: CloneTransformKind, span: Span },
}

/// A place where a transform can be applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CloneSite {
    Rename { decl: ast::DeclId },
    /// `lhs op= c ? a : b;` or `return c ? a : b;`
    Ternary { stmt: ast::NodeId },
    /// `x++;`, `y = x++;` and loop-update increments.
    Increment { expr: ast::NodeId },
    /// A comparison whose operands can be mirrored.
    Comparison { expr: ast::NodeId },
    ForToWhile { stmt: ast::NodeId },
    WhileToFor { stmt: ast::NodeId },
    IfElseSwap { stmt: ast::NodeId },
    /// A run of consecutive statements `first..=last` in one block.
    DeadCode { first: ast::NodeId, last: ast::NodeId },
    /// The movable declaration statements of the function body.
    Permute { decls: Vec<ast::NodeId> },
}

impl CloneSite {
    pub fn kind(&self) -> CloneTransformKind {
        use CloneTransformKind::*;
        match self {
            CloneSite::Rename { .. } => RenameIdentifier,
            CloneSite::Ternary { .. } | CloneSite::Increment { .. } | CloneSite::Comparison { .. } => {
                RewriteStatement
            }
            CloneSite::ForToWhile { .. } | CloneSite::WhileToFor { .. } | CloneSite::IfElseSwap { .. } => {
                RewriteBlock
            }
            CloneSite::DeadCode { .. } => InsertDeadCode,
            CloneSite::Permute { .. } => PermuteDecls,
        }
    }

    /// Span of source text the site covers.
    pub fn span(&self, tree: &SyntaxTree, scope: &ScopeInfo) -> Span {
        match self {
            CloneSite::Rename { decl } => tree.span(scope.decl(*decl).ident),
            CloneSite::Ternary { stmt }
            | CloneSite::ForToWhile { stmt }
            | CloneSite::WhileToFor { stmt }
            | CloneSite::IfElseSwap { stmt } => tree.span(*stmt),
            CloneSite::Increment { expr } | CloneSite::Comparison { expr } => tree.span(*expr),
            CloneSite::DeadCode { first, last } => Span::new(tree.span(*first).start, tree.span(*last).end),
            CloneSite::Permute { decls } => {
                let start = decls.iter().map(|&d| tree.span(d).start).min().unwrap_or(0);
                let end = decls.iter().map(|&d| tree.span(d).end).max().unwrap_or(0);
                Span::new(start, end)
            }
        }
    }
}

/// Settings shared by every clone generation call.
#[derive(Debug, Clone)]
pub struct CloneContext {
    /// Identifier names available to random renaming.
    pub vocabulary: Vec<String>,
}

impl Default for CloneContext {
    fn default() -> Self {
        Self {
            vocabulary: default_vocabulary(),
        }
    }
}

impl CloneContext {
    pub fn with_vocabulary(vocabulary: Vec<String>) -> Self {
        let mut vocabulary: Vec<String> = vocabulary
            .into_iter()
            .filter(|w| ast::query::is_valid_identifier(w))
            .collect();
        if vocabulary.is_empty() {
            vocabulary = default_vocabulary();
        }
        Self { vocabulary }
    }
}

/// Candidate sites for `kind`. Empty when the transform does not apply.
pub fn applicable(kind: CloneTransformKind, tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<CloneSite> {
    match kind {
        CloneTransformKind::RenameIdentifier => rename::sites(tree, scope),
        CloneTransformKind::RewriteStatement => statement::sites(tree, scope),
        CloneTransformKind::RewriteBlock => block::sites(tree, scope),
        CloneTransformKind::InsertDeadCode => deadcode::sites(tree, scope),
        CloneTransformKind::PermuteDecls => permute::sites(tree, scope),
    }
}

/// Applies one transform at `site`. The output is re-parsed before it is returned.
pub fn apply_transform(
    site: &CloneSite,
    tree: &SyntaxTree,
    scope: &ScopeInfo,
    ctx: &CloneContext,
    rng_seed: u64,
) -> Result<CloneResult, CloneError> {
    let mut rng = rng_from_seed(rng_seed);
    let kind = site.kind();
    let (edits, detail): (Vec<Edit>, String) = match site {
        CloneSite::Rename { decl } => rename::apply(*decl, tree, scope, ctx, &mut rng),
        CloneSite::Ternary { .. } | CloneSite::Increment { .. } | CloneSite::Comparison { .. } => {
            statement::apply(site, tree, scope)
        }
        CloneSite::ForToWhile { .. } | CloneSite::WhileToFor { .. } | CloneSite::IfElseSwap { .. } => {
            block::apply(site, tree, scope)
        }
        CloneSite::DeadCode { first, last } => deadcode::apply(*first, *last, tree, &mut rng),
        CloneSite::Permute { decls } => permute::apply(decls, tree, &mut rng),
    }
    .ok_or_else(|| CloneError::NoCandidate {
        kind,
        span: site.span(tree, scope),
    })?;
    let text = ast::render(tree, &edits).map_err(|source| CloneError::TransformFailed { kind, source })?;
    if text == tree.source() {
        return Err(CloneError::NoCandidate {
            kind,
            span: site.span(tree, scope),
        });
    }
    Ok(CloneResult {
        text,
        applied: vec![AppliedTransform {
            kind,
            span: site.span(tree, scope),
            detail,
        }],
        seed: rng_seed,
    })
}

/// Clone with the built-in renaming vocabulary.
pub fn generate_clone(func: &SourceFunction, rng_seed: u64) -> Result<CloneResult, CloneError> {
    generate_clone_with(func, rng_seed, &CloneContext::default())
}

/// Draws a transform count in 1..=4, picks that many distinct applicable
/// transform kinds uniformly and applies them in sequence.
pub fn generate_clone_with(
    func: &SourceFunction,
    rng_seed: u64,
    ctx: &CloneContext,
) -> Result<CloneResult, CloneError> {
    let mut rng = rng_from_seed(rng_seed);
    let tree = parse(func)?;
    let scope = scope_of(&tree);
    let mut kinds: Vec<CloneTransformKind> = CloneTransformKind::ALL
        .into_iter()
        .filter(|&k| !applicable(k, &tree, &scope).is_empty())
        .collect();
    if kinds.is_empty() {
        return Err(CloneError::NoApplicableTransform);
    }
    let count = rng.random_range(1..=4usize).min(kinds.len());
    kinds.shuffle(&mut rng);
    kinds.truncate(count);

    let mut current = func.clone();
    let mut applied = Vec::new();
    for (step, kind) in kinds.into_iter().enumerate() {
        let repeats = if kind == CloneTransformKind::RenameIdentifier {
            rng.random_range(1..=3usize)
        } else {
            1
        };
        let mut fresh_names: Vec<String> = Vec::new();
        let mut done = 0;
        let mut attempts = 0;
        while done < repeats && attempts < repeats + 3 {
            attempts += 1;
            let tree = parse(&current)?;
            let scope = scope_of(&tree);
            let sites: Vec<CloneSite> = applicable(kind, &tree, &scope)
                .into_iter()
                .filter(|s| match s {
                    CloneSite::Rename { decl } => !fresh_names.contains(&scope.decl(*decl).name),
                    _ => true,
                })
                .collect();
            let Some(site) = pick(&mut rng, &sites) else { break };
            let sub_seed = derive_seed(rng_seed, &format!("step{step}.{attempts}"));
            match apply_transform(site, &tree, &scope, ctx, sub_seed) {
                Ok(r) => {
                    for a in &r.applied {
                        if let Some((_, new)) = a.detail.split_once(" -> ") {
                            fresh_names.push(new.to_string());
                        }
                    }
                    applied.extend(r.applied);
                    current.text = r.text;
                    done += 1;
                }
                Err(CloneError::NoCandidate { .. }) | Err(CloneError::TransformFailed { .. }) => {
                    log::debug!("{kind} skipped a site in {}", func.id);
                }
                Err(e) => return Err(e),
            }
        }
    }
    if applied.is_empty() || current.text == func.text {
        return Err(CloneError::NoApplicableTransform);
    }
    Ok(CloneResult {
        text: current.text,
        applied,
        seed: rng_seed,
    })
}

/// Picks a random element, used by the per-family appliers.
pub(crate) fn pick<'a, T, R: Rng + ?Sized>(rng: &mut R, items: &'a [T]) -> Option<&'a T> {
    items.choose(rng)
}

#[cfg(test)]
mod tests;
