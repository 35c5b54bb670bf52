//! Block-level rewrites: for to while, while to for, and if/else branch swap.

use super::CloneSite;
use crate::ast::{class_of_expr, query, splice, Edit, Language, NodeId, ScopeInfo, Span, SyntaxTree, ValueClass};

pub(super) fn sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<CloneSite> {
    let mut out = Vec::new();
    for n in tree.descendants(tree.root()) {
        match tree.kind(n) {
            "for_statement" if for_parts(tree, scope, n).is_some() => out.push(CloneSite::ForToWhile { stmt: n }),
            "while_statement" if plain_condition(tree, n).is_some() => out.push(CloneSite::WhileToFor { stmt: n }),
            "if_statement" if swappable_if(tree, n) => out.push(CloneSite::IfElseSwap { stmt: n }),
            _ => {}
        }
    }
    out
}

/// The expression inside a statement's `( ... )` condition, if it has no
/// declaration or init-statement.
fn plain_condition(tree: &SyntaxTree, stmt: NodeId) -> Option<NodeId> {
    let cond = tree.child_by_field(stmt, "condition")?;
    match tree.kind(cond) {
        "parenthesized_expression" => {
            let inner: Vec<NodeId> = tree.named_children(cond).collect();
            match inner.as_slice() {
                [e] if tree.kind(*e) != "declaration" => Some(*e),
                _ => None,
            }
        }
        "condition_clause" => {
            if tree.child_by_field(cond, "initializer").is_some() {
                return None;
            }
            let v = tree.child_by_field(cond, "value")?;
            (tree.kind(v) != "declaration").then_some(v)
        }
        _ => None,
    }
}

fn swappable_if(tree: &SyntaxTree, n: NodeId) -> bool {
    if tree.children(n).iter().any(|&c| tree.kind(c) == "constexpr") {
        return false;
    }
    plain_condition(tree, n).is_some() && alternative(tree, n).is_some()
}

fn alternative(tree: &SyntaxTree, n: NodeId) -> Option<NodeId> {
    let alt = tree.child_by_field(n, "alternative")?;
    if tree.kind(alt) == "else_clause" {
        tree.named_children(alt).next()
    } else {
        Some(alt)
    }
}

struct ForParts {
    init: String,
    cond: String,
    /// Statement text that performs the update clause; empty when there is none.
    update: String,
    body: NodeId,
    continues: Vec<NodeId>,
}

fn is_jump(kind: &str) -> bool {
    matches!(
        kind,
        "break_statement" | "continue_statement" | "return_statement" | "throw_statement"
    )
}

/// Continue statements that target `loop_node`.
fn bound_continues(tree: &SyntaxTree, loop_node: NodeId, body: NodeId) -> Vec<NodeId> {
    tree.descendants(body)
        .filter(|&c| tree.kind(c) == "continue_statement")
        .filter(|&c| tree.named_children(c).next().is_none())
        .filter(|&c| {
            let target = tree.ancestors(c).skip(1).find(|&a| {
                query::is_loop(tree.kind(a))
                    || query::is_function_node(tree.kind(a))
                    || tree.kind(a) == "lambda_expression"
            });
            target == Some(loop_node)
        })
        .collect()
}

fn simple_update(tree: &SyntaxTree, n: NodeId) -> bool {
    match tree.kind(n) {
        "comma_expression" => tree.named_children(n).all(|c| simple_update(tree, c)),
        "update_expression" => true,
        "assignment_expression" => tree
            .child_by_field(n, "right")
            .map(|r| query::is_pure(tree, r))
            .unwrap_or(false),
        _ => false,
    }
}

fn for_parts(tree: &SyntaxTree, scope: &ScopeInfo, n: NodeId) -> Option<ForParts> {
    if tree.parent(n).map(|p| tree.kind(p) == "labeled_statement").unwrap_or(true) {
        return None;
    }
    let body = tree.child_by_field(n, "body")?;
    let java = tree.language() == Language::Java;
    let (init_nodes, update_nodes): (Vec<NodeId>, Vec<NodeId>) = if java {
        (tree.children_by_field(n, "init").collect(), tree.children_by_field(n, "update").collect())
    } else {
        (
            tree.child_by_field(n, "initializer").into_iter().collect(),
            tree.child_by_field(n, "update").into_iter().collect(),
        )
    };
    let init = match init_nodes.as_slice() {
        [] => String::new(),
        [one] if query::is_declaration_statement(tree.kind(*one)) => {
            let t = tree.text(*one);
            if t.ends_with(';') { t.to_string() } else { format!("{t};") }
        }
        many => {
            if many.iter().any(|&i| !tree.kind(i).ends_with("expression")) {
                return None;
            }
            many.iter().map(|&i| format!("{};", tree.text(i))).collect::<Vec<_>>().join(" ")
        }
    };
    let cond = match tree.child_by_field(n, "condition") {
        Some(c) if tree.kind(c) == "declaration" => return None,
        Some(c) => tree.text(c).to_string(),
        None => if tree.language() == Language::C { "1" } else { "true" }.to_string(),
    };
    let update = update_nodes.iter().map(|&u| format!("{};", tree.text(u))).collect::<Vec<_>>().join(" ");
    let continues = bound_continues(tree, n, body);
    if !continues.is_empty() && !update_nodes.iter().all(|&u| simple_update(tree, u)) {
        return None;
    }
    // The update moves into the body, where a local of the same name would capture it.
    let body_span = tree.span(body);
    let update_words: Vec<&str> = update_nodes.iter().flat_map(|&u| query::words(tree.text(u))).collect();
    if scope
        .declarations()
        .iter()
        .any(|d| body_span.covers(tree.span(d.ident)) && update_words.contains(&d.name.as_str()))
    {
        return None;
    }
    if java {
        // Appending after a jump would be unreachable code, which javac rejects.
        let last = if query::is_block(tree.kind(body)) {
            tree.named_children(body).last()
        } else {
            Some(body)
        };
        if let Some(last) = last {
            if is_jump(tree.kind(last)) && !update.is_empty() {
                return None;
            }
        }
        if tree.contains_kind(body, &["labeled_statement"]) {
            return None;
        }
    }
    Some(ForParts { init, cond, update, body, continues })
}

pub(super) fn apply(site: &CloneSite, tree: &SyntaxTree, scope: &ScopeInfo) -> Option<(Vec<Edit>, String)> {
    let src = tree.source();
    match *site {
        CloneSite::ForToWhile { stmt } => {
            let parts = for_parts(tree, scope, stmt)?;
            let edits: Vec<Edit> = if parts.update.is_empty() {
                Vec::new()
            } else {
                parts
                    .continues
                    .iter()
                    .map(|&c| Edit::new(tree.span(c), format!("{{ {} continue; }}", parts.update)))
                    .collect()
            };
            let bspan = tree.span(parts.body);
            let inner = if query::is_block(tree.kind(parts.body)) {
                Span::new(bspan.start + 1, bspan.end - 1)
            } else {
                bspan
            };
            let body = splice(src, inner, &edits).ok()?;
            let tail = if parts.update.is_empty() { String::new() } else { format!(" {}", parts.update) };
            let lp = format!("while ({}) {{{body}{tail} }}", parts.cond);
            let text = if parts.init.is_empty() { lp } else { format!("{{ {} {lp} }}", parts.init) };
            Some((vec![Edit::new(tree.span(stmt), text)], "for -> while".into()))
        }
        CloneSite::WhileToFor { stmt } => {
            let cond = plain_condition(tree, stmt)?;
            let body = tree.child_by_field(stmt, "body")?;
            let text = format!("for (; {}; ) {}", tree.text(cond), tree.text(body));
            Some((vec![Edit::new(tree.span(stmt), text)], "while -> for".into()))
        }
        CloneSite::IfElseSwap { stmt } => {
            let cond = plain_condition(tree, stmt)?;
            let then_b = tree.child_by_field(stmt, "consequence")?;
            let else_b = alternative(tree, stmt)?;
            let braced = |n: NodeId| {
                if query::is_block(tree.kind(n)) {
                    tree.text(n).to_string()
                } else {
                    format!("{{ {} }}", tree.text(n))
                }
            };
            let text = format!("if ({}) {} else {}", negate(tree, scope, cond), braced(else_b), braced(then_b));
            Some((vec![Edit::new(tree.span(stmt), text)], "if/else swap".into()))
        }
        _ => None,
    }
}

fn negated_comparison(op: &str) -> Option<&'static str> {
    Some(match op {
        "<" => ">=",
        ">=" => "<",
        ">" => "<=",
        "<=" => ">",
        "==" => "!=",
        "!=" => "==",
        _ => return None,
    })
}

/// Logical negation of a condition. Relational operators are only inverted
/// when both operands are known to be integers or pointers (no NaN).
pub(super) fn negate(tree: &SyntaxTree, scope: &ScopeInfo, cond: NodeId) -> String {
    let e = query::strip_parens(tree, cond);
    if tree.kind(e) == "binary_expression" {
        if let (Some(op), Some(l), Some(r)) = (
            query::binary_operator(tree, e),
            tree.child_by_field(e, "left"),
            tree.child_by_field(e, "right"),
        ) {
            let op_text = tree.text(op);
            let exact = |n| matches!(class_of_expr(tree, scope, n), ValueClass::Integral | ValueClass::Pointer);
            let flip_ok = matches!(op_text, "==" | "!=") || (exact(l) && exact(r));
            if let (Some(neg), true) = (negated_comparison(op_text), flip_ok) {
                let src = tree.source();
                return format!(
                    "{}{neg}{}",
                    &src[tree.span(l).start..tree.span(op).start],
                    &src[tree.span(op).end..tree.span(r).end]
                );
            }
        }
    }
    format!("!({})", tree.text(e))
}
