//! Statement-level rewrites: ternary to if/else, increment desugaring and
//! comparison mirroring.

use super::CloneSite;
use crate::ast::{class_of_expr, query, Edit, Language, NodeId, ScopeInfo, SyntaxTree, ValueClass};

pub(super) fn sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<CloneSite> {
    let mut out = Vec::new();
    for n in tree.descendants(tree.root()) {
        match tree.kind(n) {
            "conditional_expression" | "ternary_expression" => {
                if let Some(stmt) = ternary_statement(tree, n) {
                    out.push(CloneSite::Ternary { stmt });
                }
            }
            "update_expression" => {
                if increment_form(tree, scope, n).is_some() {
                    out.push(CloneSite::Increment { expr: n });
                }
            }
            "binary_expression" => {
                if mirrorable(tree, scope, n) {
                    out.push(CloneSite::Comparison { expr: n });
                }
            }
            _ => {}
        }
    }
    out
}

fn skip_parens_up(tree: &SyntaxTree, mut n: NodeId) -> (NodeId, Option<NodeId>) {
    let mut parent = tree.parent(n);
    while let Some(p) = parent {
        if tree.kind(p) != "parenthesized_expression" {
            break;
        }
        n = p;
        parent = tree.parent(p);
    }
    (n, parent)
}

fn ternary_parts(tree: &SyntaxTree, t: NodeId) -> Option<(NodeId, NodeId, NodeId)> {
    Some((
        tree.child_by_field(t, "condition")?,
        tree.child_by_field(t, "consequence")?,
        tree.child_by_field(t, "alternative")?,
    ))
}

/// The statement a ternary can be lifted out of: `lhs op ternary;` or `return ternary;`.
fn ternary_statement(tree: &SyntaxTree, t: NodeId) -> Option<NodeId> {
    ternary_parts(tree, t)?;
    let (outer, parent) = skip_parens_up(tree, t);
    let parent = parent?;
    match tree.kind(parent) {
        "return_statement" => Some(parent),
        "assignment_expression" => {
            if tree.child_by_field(parent, "right") != Some(outer) {
                return None;
            }
            let left = tree.child_by_field(parent, "left")?;
            let stmt = tree.parent(parent)?;
            (tree.kind(stmt) == "expression_statement" && query::is_pure(tree, left)).then_some(stmt)
        }
        _ => None,
    }
}

enum IncrementForm {
    /// `x++;` or an increment inside a for-loop update clause.
    InPlace,
    /// `y = x++;` / `y = ++x;`
    Assigned { stmt: NodeId, left: NodeId },
}

fn update_parts(tree: &SyntaxTree, u: NodeId) -> Option<(NodeId, &str, bool)> {
    let children = tree.children(u);
    let op_node = children.iter().copied().find(|&c| matches!(tree.text(c), "++" | "--"))?;
    let operand = children.iter().copied().find(|&c| c != op_node && tree.node(c).is_named)?;
    let prefix = tree.span(op_node).start < tree.span(operand).start;
    Some((operand, if tree.text(op_node) == "++" { "+" } else { "-" }, prefix))
}

fn increment_form(tree: &SyntaxTree, scope: &ScopeInfo, u: NodeId) -> Option<IncrementForm> {
    let (operand, _, _) = update_parts(tree, u)?;
    if tree.kind(operand) != "identifier" {
        return None;
    }
    let decl = scope.binding_of(operand)?;
    let d = scope.decl(decl);
    let class = class_of_expr(tree, scope, operand);
    let ok_type = match tree.language() {
        // Narrow Java types do not accept `x = x + 1` without a cast.
        Language::Java => {
            let ty = d.type_node.map(|t| tree.text(t)).unwrap_or("");
            matches!(ty, "int" | "long" | "float" | "double")
        }
        _ => class.is_arithmetic() || (class == ValueClass::Pointer && !d.is_array),
    };
    if !ok_type {
        return None;
    }
    let parent = tree.parent(u)?;
    match tree.kind(parent) {
        "expression_statement" => Some(IncrementForm::InPlace),
        "for_statement" if tree.node(u).field == Some("update") => Some(IncrementForm::InPlace),
        "comma_expression" => {
            let mut p = parent;
            while tree.kind(p) == "comma_expression" {
                let up = tree.parent(p)?;
                if tree.kind(up) == "for_statement" {
                    return (tree.node(p).field == Some("update")).then_some(IncrementForm::InPlace);
                }
                p = up;
            }
            None
        }
        "assignment_expression" => {
            let op = tree.child_by_field(parent, "operator").map(|o| tree.text(o));
            let left = tree.child_by_field(parent, "left")?;
            let stmt = tree.parent(parent)?;
            let name = tree.text(operand);
            let ok = op == Some("=")
                && tree.child_by_field(parent, "right") == Some(u)
                && tree.kind(stmt) == "expression_statement"
                && query::is_pure(tree, left)
                && !query::words(tree.text(left)).contains(name);
            ok.then_some(IncrementForm::Assigned { stmt, left })
        }
        _ => None,
    }
}

fn mirrorable(tree: &SyntaxTree, scope: &ScopeInfo, b: NodeId) -> bool {
    let Some(op) = query::binary_operator(tree, b) else { return false };
    if !query::COMPARISON_OPS.contains(&tree.text(op)) {
        return false;
    }
    let (Some(l), Some(r)) = (tree.child_by_field(b, "left"), tree.child_by_field(b, "right")) else {
        return false;
    };
    if !query::is_pure(tree, l) || !query::is_pure(tree, r) {
        return false;
    }
    if tree.language() == Language::Cpp {
        // Overloaded comparison operators need not come in mirrored pairs.
        let known = |n| !matches!(class_of_expr(tree, scope, n), ValueClass::Other);
        return known(l) && known(r);
    }
    true
}

fn mirror_op(op: &str) -> &'static str {
    match op {
        "<" => ">",
        ">" => "<",
        "<=" => ">=",
        ">=" => "<=",
        "==" => "==",
        _ => "!=",
    }
}

/// Operand text, parenthesized when it would otherwise regroup next to `prec`.
pub(super) fn operand_text(tree: &SyntaxTree, n: NodeId, prec: u8) -> String {
    if query::binds_tighter_than(tree, n, prec) {
        tree.text(n).to_string()
    } else {
        format!("({})", tree.text(n))
    }
}

/// Whether a statement replacing `stmt` with several statements needs braces.
pub(super) fn needs_braces(tree: &SyntaxTree, stmt: NodeId) -> bool {
    match tree.parent(stmt) {
        Some(p) => !matches!(
            tree.kind(p),
            "compound_statement" | "block" | "switch_block_statement_group" | "case_statement"
        ),
        None => true,
    }
}

pub(super) fn apply(site: &CloneSite, tree: &SyntaxTree, scope: &ScopeInfo) -> Option<(Vec<Edit>, String)> {
    match *site {
        CloneSite::Ternary { stmt } => {
            let t = tree
                .descendants(stmt)
                .find(|&n| matches!(tree.kind(n), "conditional_expression" | "ternary_expression"))?;
            let (c, a, b) = ternary_parts(tree, t)?;
            let cond = tree.text(query::strip_parens(tree, c));
            let (a, b) = (tree.text(a), tree.text(b));
            let text = if tree.kind(stmt) == "return_statement" {
                format!("if ({cond}) {{return {a};}} else {{return {b};}}")
            } else {
                let assign = tree.named_children(stmt).next()?;
                let lhs = tree.text(tree.child_by_field(assign, "left")?);
                let op = tree.text(tree.child_by_field(assign, "operator")?);
                format!("if ({cond}) {{{lhs} {op} {a};}} else {{{lhs} {op} {b};}}")
            };
            Some((vec![Edit::new(tree.span(stmt), text)], "ternary -> if/else".into()))
        }
        CloneSite::Increment { expr } => {
            let (operand, arith, prefix) = update_parts(tree, expr)?;
            let x = tree.text(operand);
            let desugared = format!("{x} = {x} {arith} 1");
            match increment_form(tree, scope, expr)? {
                IncrementForm::InPlace => Some((
                    vec![Edit::new(tree.span(expr), desugared.clone())],
                    format!("{} -> {desugared}", tree.text(expr)),
                )),
                IncrementForm::Assigned { stmt, left } => {
                    let y = tree.text(left);
                    let body = if prefix {
                        format!("{desugared}; {y} = {x};")
                    } else {
                        format!("{y} = {x}; {desugared};")
                    };
                    let text = if needs_braces(tree, stmt) { format!("{{ {body} }}") } else { body };
                    Some((
                        vec![Edit::new(tree.span(stmt), text.clone())],
                        format!("{} -> {text}", tree.text(stmt)),
                    ))
                }
            }
        }
        CloneSite::Comparison { expr } => {
            let op = query::binary_operator(tree, expr)?;
            let prec = query::binary_precedence(tree.text(op));
            let l = tree.child_by_field(expr, "left")?;
            let r = tree.child_by_field(expr, "right")?;
            let text = format!(
                "{} {} {}",
                operand_text(tree, r, prec),
                mirror_op(tree.text(op)),
                operand_text(tree, l, prec)
            );
            Some((
                vec![Edit::new(tree.span(expr), text.clone())],
                format!("{} -> {text}", tree.text(expr)),
            ))
        }
        _ => None,
    }
}
