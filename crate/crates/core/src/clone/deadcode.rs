//! Insertion of statically unreachable copies of existing statements.

use super::CloneSite;
use crate::ast::{query, Edit, Language, NodeId, ScopeInfo, SyntaxTree};
use crate::rng::Rng;
use rand::seq::IndexedRandom;

const MAX_RUN: usize = 3;

pub(super) fn sites(tree: &SyntaxTree, _scope: &ScopeInfo) -> Vec<CloneSite> {
    let mut out = Vec::new();
    for block in tree.descendants(tree.root()).filter(|&n| query::is_block(tree.kind(n))) {
        if tree.parent(block).map(|p| tree.kind(p) == "switch_statement").unwrap_or(false) {
            continue;
        }
        let stmts: Vec<NodeId> = tree.named_children(block).collect();
        for i in 0..stmts.len() {
            for len in 1..=MAX_RUN {
                if i + len > stmts.len() {
                    break;
                }
                let run = &stmts[i..i + len];
                if !run.iter().all(|&s| copyable(tree, s)) {
                    break;
                }
                if tree.language() == Language::Java && !java_reachable_after(tree, run[len - 1]) {
                    continue;
                }
                out.push(CloneSite::DeadCode {
                    first: run[0],
                    last: run[len - 1],
                });
            }
        }
    }
    out
}

fn copyable(tree: &SyntaxTree, s: NodeId) -> bool {
    let kind = tree.kind(s);
    if kind.starts_with("preproc_") || matches!(kind, "labeled_statement" | "case_statement") {
        return false;
    }
    if tree
        .descendants(s)
        .any(|n| matches!(tree.kind(n), "labeled_statement") || tree.kind(n).starts_with("preproc_"))
    {
        return false;
    }
    if tree.language() == Language::Java {
        // A copy would redeclare a name that is still in scope.
        if matches!(
            kind,
            "local_variable_declaration" | "local_class_declaration" | "class_declaration" | "record_declaration"
        ) {
            return false;
        }
    }
    true
}

/// javac rejects statements after one that cannot complete normally.
fn java_reachable_after(tree: &SyntaxTree, s: NodeId) -> bool {
    let kind = tree.kind(s);
    if matches!(
        kind,
        "return_statement" | "break_statement" | "continue_statement" | "throw_statement" | "yield_statement"
    ) {
        return false;
    }
    if matches!(kind, "while_statement" | "for_statement" | "do_statement") {
        let cond = tree.child_by_field(s, "condition");
        let infinite = match cond {
            None => true,
            Some(c) => tree.text(query::strip_parens(tree, c)) == "true",
        };
        if infinite {
            return false;
        }
    }
    if query::is_block(kind) || kind == "if_statement" || kind == "try_statement" || kind == "switch_expression" {
        // Conservative: any jump directly ending a nested branch may make the end unreachable.
        return !tree.descendants(s).skip(1).any(|n| {
            matches!(tree.kind(n), "return_statement" | "throw_statement" | "break_statement" | "continue_statement")
        });
    }
    true
}

fn guards(language: Language) -> &'static [&'static str] {
    match language {
        Language::C => &["if (0)", "while (2 < 0)"],
        Language::Cpp => &["if (false)", "while (2 < 0)"],
        Language::Java => &["if (false)"],
    }
}

/// Leading whitespace of the line `offset` sits on, if only whitespace precedes it.
pub(super) fn line_indent(src: &str, offset: usize) -> &str {
    let line_start = src[..offset].rfind('\n').map(|i| i + 1).unwrap_or(0);
    let prefix = &src[line_start..offset];
    if prefix.chars().all(char::is_whitespace) {
        prefix
    } else {
        ""
    }
}

pub(super) fn apply(first: NodeId, last: NodeId, tree: &SyntaxTree, rng: &mut Rng) -> Option<(Vec<Edit>, String)> {
    let src = tree.source();
    let guard = guards(tree.language()).choose(rng)?;
    let start = tree.span(first).start;
    let end = tree.span(last).end;
    let indent = line_indent(src, start);
    let copied = &src[start..end];
    let text = format!("\n{indent}{guard} {{\n{indent}    {copied}\n{indent}}}");
    let count = tree.parent(first).map(|b| {
        tree.named_children(b)
            .filter(|&s| tree.span(s).start >= start && tree.span(s).end <= end)
            .count()
    });
    Some((
        vec![Edit::insert(end, text)],
        format!("{guard} block copying {} statement(s)", count.unwrap_or(1)),
    ))
}
