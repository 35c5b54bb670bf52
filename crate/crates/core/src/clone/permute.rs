//! Moving independent declarations to the top of the body and permuting them.

use super::deadcode::line_indent;
use super::CloneSite;
use crate::ast::{query, DeclKind, Edit, Language, NodeId, ScopeInfo, SyntaxTree};
use crate::rng::Rng;
use rand::seq::SliceRandom;

const LOCAL_TYPE_KINDS: &[&str] = &[
    "type_definition",
    "field_declaration_list",
    "enumerator_list",
    "class_specifier",
    "local_class_declaration",
    "class_declaration",
    "record_declaration",
    "enum_declaration",
    "interface_declaration",
];

pub(super) fn sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<CloneSite> {
    let Some(body) = query::function_body(tree) else { return Vec::new() };
    // Goto-based re-entry would re-run an initializer only at its original position.
    if tree.contains_kind(body, &["labeled_statement", "goto_statement"]) || tree.contains_kind(body, LOCAL_TYPE_KINDS) {
        return Vec::new();
    }
    let stmts: Vec<NodeId> = tree.named_children(body).collect();
    let mut movable = Vec::new();
    for (i, &s) in stmts.iter().enumerate() {
        if !query::is_declaration_statement(tree.kind(s)) {
            continue;
        }
        let names: Vec<&str> = scope
            .declarations()
            .iter()
            .filter(|d| d.statement == s && d.kind == DeclKind::Local)
            .map(|d| d.name.as_str())
            .collect();
        if names.is_empty() || !strictly_independent(tree, scope, s) || !movable_type(tree, s) {
            continue;
        }
        let mentioned_earlier = stmts[..i]
            .iter()
            .any(|&e| names.iter().any(|n| query::words(tree.text(e)).contains(n)));
        if !mentioned_earlier {
            movable.push(s);
        }
    }
    if movable.len() < 2 {
        return Vec::new();
    }
    vec![CloneSite::Permute { decls: movable }]
}

/// No side effects and no identifiers besides the declared names: the
/// initializers are literals or literal expressions.
fn strictly_independent(tree: &SyntaxTree, scope: &ScopeInfo, s: NodeId) -> bool {
    let own: Vec<NodeId> = scope
        .declarations()
        .iter()
        .filter(|d| d.statement == s)
        .map(|d| d.ident)
        .collect();
    query::is_pure(tree, s)
        && tree
            .descendants(s)
            .all(|n| tree.kind(n) != "identifier" || own.contains(&n) || matches!(tree.text(n), "NULL" | "true" | "false"))
        && !tree.children(s).iter().any(|&c| tree.kind(c) == "storage_class_specifier" && tree.text(c) == "extern")
}

fn movable_type(tree: &SyntaxTree, s: NodeId) -> bool {
    let Some(ty) = tree.child_by_field(s, "type") else { return false };
    match tree.language() {
        Language::C => true,
        // Class-typed declarations run constructors.
        Language::Cpp => matches!(tree.kind(ty), "primitive_type" | "sized_type_specifier")
            || (tree.kind(ty) == "placeholder_type_specifier" && tree.text(ty) == "auto"),
        Language::Java => {
            matches!(tree.kind(ty), "integral_type" | "floating_point_type" | "boolean_type")
                || matches!(tree.text(ty), "String" | "var")
        }
    }
}

pub(super) fn apply(decls: &[NodeId], tree: &SyntaxTree, rng: &mut Rng) -> Option<(Vec<Edit>, String)> {
    let body = query::function_body(tree)?;
    let stmts: Vec<NodeId> = tree.named_children(body).collect();
    let src = tree.source();
    let texts: Vec<&str> = decls.iter().map(|&d| tree.text(d)).collect();
    let mut order: Vec<usize> = (0..decls.len()).collect();
    let in_place = stmts.len() >= decls.len() && stmts[..decls.len()] == *decls;
    if in_place {
        if texts.iter().all(|t| *t == texts[0]) {
            return None;
        }
        let identity: Vec<usize> = order.clone();
        for _ in 0..32 {
            order.shuffle(rng);
            if order != identity && order.iter().map(|&i| texts[i]).ne(texts.iter().copied()) {
                break;
            }
        }
        if order.iter().map(|&i| texts[i]).eq(texts.iter().copied()) {
            return None;
        }
        let edits = decls
            .iter()
            .zip(&order)
            .map(|(&slot, &from)| Edit::new(tree.span(slot), texts[from]))
            .collect();
        return Some((edits, format!("permuted {} declarations in place", decls.len())));
    }
    order.shuffle(rng);
    let first = *stmts.first()?;
    let at = tree.span(first).start;
    let indent = line_indent(src, at);
    let mut block = String::new();
    for &i in &order {
        block.push_str(texts[i]);
        block.push('\n');
        block.push_str(indent);
    }
    let mut edits = vec![Edit::insert(at, block)];
    for &d in decls {
        let span = tree.span(d);
        // Drop the whole line when the declaration stands alone on it.
        let indent = line_indent(src, span.start);
        let line_start = span.start - indent.len();
        let rest = &src[span.end..];
        let eol = rest.find('\n');
        let whole_line =
            d != first && !indent.is_empty() && eol.map(|e| rest[..e].trim().is_empty()).unwrap_or(false);
        let del = if whole_line {
            crate::ast::Span::new(line_start, span.end + eol.unwrap_or(0) + 1)
        } else {
            span
        };
        edits.push(Edit::delete(del));
    }
    Some((edits, format!("moved {} declarations to the top", decls.len())))
}
