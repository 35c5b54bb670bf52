//! Per-kind bug sites and the single-span mutation applied at each.

use super::{BugKind, MAX_REMOVED_STATEMENTS};
use crate::ast::{
    class_of_decl, class_of_expr, query, DeclId, DeclKind, Declaration, Language, NodeId, ScopeInfo, Span, SyntaxTree,
    ValueClass,
};
use crate::rng::Rng;
use rand::seq::IndexedRandom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CallMutation {
    Add,
    Remove,
    Swap,
    Null,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BugSite {
    /// Operator token of a binary expression.
    Operator { op: NodeId },
    /// Type node of a local declaration statement.
    DataType { stmt: NodeId, ty: NodeId },
    /// A variable use that can be replaced by another reachable variable.
    SwapVariable { ident: NodeId },
    /// A non-pointer local with an `=` initializer.
    RemoveInitializer { decl: DeclId },
    /// A boolean or numeric literal.
    Literal { lit: NodeId },
    /// Pointer declaration with an initializer.
    PointerInit { decl: DeclId },
    /// `p = expr;` with `p` a pointer or reference variable.
    PointerAssign { assign: NodeId },
    /// A guard `if` without else, or an assertion statement.
    RemoveCheck { stmt: NodeId },
    Call { call: NodeId, op: CallMutation },
}

impl BugSite {
    pub fn kind(&self) -> BugKind {
        match self {
            BugSite::Operator { .. } => BugKind::Operator,
            BugSite::DataType { .. } => BugKind::DataType,
            BugSite::SwapVariable { .. } | BugSite::RemoveInitializer { .. } => BugKind::Variable,
            BugSite::Literal { .. } => BugKind::Value,
            BugSite::PointerInit { .. } | BugSite::PointerAssign { .. } => BugKind::Pointer,
            BugSite::RemoveCheck { .. } => BugKind::Statement,
            BugSite::Call { .. } => BugKind::FunctionCall,
        }
    }

    /// The node the site is anchored at. Declaration sites report the declarator.
    pub fn node(&self, scope: &ScopeInfo) -> NodeId {
        match *self {
            BugSite::Operator { op } => op,
            BugSite::DataType { ty, .. } => ty,
            BugSite::SwapVariable { ident } => ident,
            BugSite::RemoveInitializer { decl } | BugSite::PointerInit { decl } => scope.decl(decl).declarator,
            BugSite::Literal { lit } => lit,
            BugSite::PointerAssign { assign } => assign,
            BugSite::RemoveCheck { stmt } => stmt,
            BugSite::Call { call, .. } => call,
        }
    }

    pub fn span(&self, tree: &SyntaxTree, scope: &ScopeInfo) -> Span {
        match *self {
            BugSite::DataType { stmt, .. } => tree.span(stmt),
            _ => tree.span(self.node(scope)),
        }
    }
}

pub(super) fn sites(kind: BugKind, tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    match kind {
        BugKind::Operator => operator_sites(tree, scope),
        BugKind::DataType => datatype_sites(tree, scope),
        BugKind::Variable => variable_sites(tree, scope),
        BugKind::Value => literal_sites(tree),
        BugKind::Pointer => pointer_sites(tree, scope),
        BugKind::Statement => check_sites(tree),
        BugKind::FunctionCall => call_sites(tree, scope),
    }
}

pub(super) fn mutate(
    site: &BugSite,
    tree: &SyntaxTree,
    scope: &ScopeInfo,
    rng: &mut Rng,
) -> Option<(Span, String, String)> {
    let lang = tree.language();
    match *site {
        BugSite::Operator { op } => {
            let old = tree.text(op);
            let new = *operator_targets(tree, scope, op).choose(rng)?;
            Some((tree.span(op), new.to_string(), format!("{old} -> {new}")))
        }
        BugSite::DataType { ty, .. } => {
            let old = tree.text(ty);
            let targets = type_targets(lang, old, tree.source());
            let new = *targets.choose(rng)?;
            Some((tree.span(ty), new.to_string(), format!("{old} -> {new}")))
        }
        BugSite::SwapVariable { ident } => {
            let cands = swap_candidates(tree, scope, ident);
            let d = *cands.choose(rng)?;
            let new = scope.decl(d).name.clone();
            Some((tree.span(ident), new.clone(), format!("{} -> {new}", tree.text(ident))))
        }
        BugSite::RemoveInitializer { decl } => {
            let span = initializer_span(tree, scope.decl(decl))?;
            Some((span, String::new(), format!("removed initializer of {}", scope.decl(decl).name)))
        }
        BugSite::Literal { lit } => {
            let old = tree.text(lit);
            let new = literal_targets(tree, lit).choose(rng)?.clone();
            Some((tree.span(lit), new.clone(), format!("{old} -> {new}")))
        }
        BugSite::PointerInit { decl } => {
            let d = scope.decl(decl);
            let mut options = Vec::new();
            if removable_initializer(tree, d) {
                options.push(false);
            }
            if d.value.map(|v| !query::is_null_literal(tree, v)).unwrap_or(false) {
                options.push(true);
            }
            if *options.choose(rng)? {
                let v = d.value?;
                Some((tree.span(v), null_text(lang).to_string(), format!("{} set to null", d.name)))
            } else {
                let span = initializer_span(tree, d)?;
                Some((span, String::new(), format!("removed initializer of {}", d.name)))
            }
        }
        BugSite::PointerAssign { assign } => {
            let right = tree.child_by_field(assign, "right")?;
            let left = tree.child_by_field(assign, "left")?;
            Some((tree.span(right), null_text(lang).to_string(), format!("{} set to null", tree.text(left))))
        }
        BugSite::RemoveCheck { stmt } => {
            let span = removal_span(tree, stmt);
            Some((span, String::new(), format!("removed {}", tree.kind(stmt))))
        }
        BugSite::Call { call, op } => mutate_call(tree, scope, call, op, rng),
    }
}

fn in_preproc(tree: &SyntaxTree, id: NodeId) -> bool {
    tree.ancestors(id).any(|a| tree.kind(a).starts_with("preproc_"))
}

fn null_text(lang: Language) -> &'static str {
    match lang {
        Language::Cpp => "nullptr",
        other => other.null_literal(),
    }
}

// ---------------------------------------------------------------- operators

fn operator_sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    tree.find_kind(tree.root(), "binary_expression")
        .filter(|&b| !in_preproc(tree, b))
        .filter_map(|b| query::binary_operator(tree, b))
        .filter(|&op| !operator_targets(tree, scope, op).is_empty())
        .map(|op| BugSite::Operator { op })
        .collect()
}

fn operator_targets(tree: &SyntaxTree, scope: &ScopeInfo, op: NodeId) -> Vec<&'static str> {
    let text = tree.text(op);
    let Some(expr) = tree.parent(op) else { return Vec::new() };
    if query::COMPARISON_OPS.contains(&text) {
        return query::COMPARISON_OPS.iter().copied().filter(|o| *o != text).collect();
    }
    if !query::ARITHMETIC_OPS.contains(&text) {
        return Vec::new();
    }
    let (Some(l), Some(r)) = (tree.child_by_field(expr, "left"), tree.child_by_field(expr, "right")) else {
        return Vec::new();
    };
    let (lc, rc) = (class_of_expr(tree, scope, l), class_of_expr(tree, scope, r));
    let integral = lc == ValueClass::Integral && rc == ValueClass::Integral;
    let arithmetic = lc.is_arithmetic() && rc.is_arithmetic();
    let java = tree.language() == Language::Java;
    // `*`, `/` and `%` only take numbers, so their operands are numeric even when unclassified.
    let numeric = match text {
        "*" | "/" | "%" => true,
        "-" => arithmetic || (java && lc != ValueClass::Pointer),
        "+" => arithmetic,
        _ => false,
    };
    let mut out: Vec<&'static str> = Vec::new();
    if numeric {
        out.extend(["+", "-", "*", "/"]);
        if integral || text == "%" {
            out.push("%");
        }
    } else if lc == ValueClass::Pointer && rc == ValueClass::Integral {
        out.extend(["+", "-"]);
    }
    out.retain(|o| *o != text);
    out
}

// ---------------------------------------------------------------- data types

const C_INT_TARGETS: &[&str] = &["int", "short", "long", "long long", "unsigned", "char"];
const JAVA_INT_TARGETS: &[&str] = &["int", "long"];
const FLOAT_TARGETS: &[&str] = &["float", "double"];

fn type_targets(lang: Language, old: &str, source: &str) -> Vec<&'static str> {
    let old_norm = old.split_whitespace().collect::<Vec<_>>().join(" ");
    let family: Vec<&'static str> = if query::is_floating_type_text(&old_norm) {
        if lang == Language::Java && old_norm == "long double" {
            return Vec::new();
        }
        FLOAT_TARGETS.to_vec()
    } else if query::is_integral_type_text(lang, &old_norm) {
        match lang {
            Language::Java if matches!(old_norm.as_str(), "int" | "long") => JAVA_INT_TARGETS.to_vec(),
            Language::Java => return Vec::new(),
            _ => {
                let mut f = C_INT_TARGETS.to_vec();
                // `size_t` needs a header; only offer it where the code already uses it.
                if query::words(source).contains("size_t") {
                    f.push("size_t");
                }
                f
            }
        }
    } else {
        return Vec::new();
    };
    family.into_iter().filter(|t| *t != old_norm).collect()
}

fn address_taken(tree: &SyntaxTree, scope: &ScopeInfo, d: DeclId) -> bool {
    scope.uses_of(d).into_iter().any(|u| {
        tree.parent(u)
            .map(|p| {
                tree.kind(p) == "pointer_expression"
                    && tree.child_by_field(p, "operator").map(|o| tree.text(o)) == Some("&")
            })
            .unwrap_or(false)
    })
}

fn is_reference(tree: &SyntaxTree, d: &Declaration) -> bool {
    tree.contains_kind(d.declarator, &["reference_declarator"])
}

fn datatype_sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    let lang = tree.language();
    let mut out = Vec::new();
    let mut seen = Vec::new();
    for id in scope.decl_ids() {
        let d = scope.decl(id);
        if d.kind != DeclKind::Local || !query::is_declaration_statement(tree.kind(d.statement)) || seen.contains(&d.statement) {
            continue;
        }
        seen.push(d.statement);
        let Some(ty) = d.type_node else { continue };
        if in_preproc(tree, d.statement) || type_targets(lang, tree.text(ty), tree.source()).is_empty() {
            continue;
        }
        // Every variable of the statement changes type, so all of them must be plain scalars.
        let all_plain = scope.decl_ids().filter(|&o| scope.decl(o).statement == d.statement).all(|o| {
            let od = scope.decl(o);
            od.pointer_depth == 0 && !od.is_array && !is_reference(tree, od) && !address_taken(tree, scope, o)
        });
        if all_plain {
            out.push(BugSite::DataType { stmt: d.statement, ty });
        }
    }
    out
}

// ---------------------------------------------------------------- variables

fn same_shape(tree: &SyntaxTree, a: &Declaration, b: &Declaration) -> bool {
    let ty = |d: &Declaration| d.type_node.map(|t| tree.text(t).split_whitespace().collect::<Vec<_>>().join(" "));
    ty(a).is_some() && ty(a) == ty(b) && a.pointer_depth == b.pointer_depth && a.is_array == b.is_array
}

fn swap_candidates(tree: &SyntaxTree, scope: &ScopeInfo, ident: NodeId) -> Vec<DeclId> {
    let Some(own) = scope.binding_of(ident) else { return Vec::new() };
    let od = scope.decl(own);
    if od.kind == DeclKind::Function || scope.decl(own).ident == ident {
        return Vec::new();
    }
    let at = tree.span(ident).start;
    let visible: Vec<DeclId> = scope
        .visible_at(at)
        .into_iter()
        .filter(|&c| {
            let cd = scope.decl(c);
            c != own
                && cd.kind != DeclKind::Function
                && cd.visible_from <= at
                && !tree.span(cd.declarator).contains(at)
        })
        .collect();
    let exact: Vec<DeclId> = visible.iter().copied().filter(|&c| same_shape(tree, od, scope.decl(c))).collect();
    if !exact.is_empty() {
        return exact;
    }
    let class = class_of_decl(tree, scope, own);
    if class == ValueClass::Other || tree.language() == Language::Cpp && class == ValueClass::Pointer {
        return Vec::new();
    }
    visible.into_iter().filter(|&c| class_of_decl(tree, scope, c) == class).collect()
}

fn is_constant_decl(tree: &SyntaxTree, d: &Declaration) -> bool {
    let stmt = d.statement;
    tree.children(stmt).iter().any(|&c| match tree.kind(c) {
        "type_qualifier" => matches!(tree.text(c), "const" | "constexpr"),
        "modifiers" => query::words(tree.text(c)).contains("final"),
        _ => false,
    }) || tree.text(stmt).starts_with("constexpr")
}

fn removable_initializer(tree: &SyntaxTree, d: &Declaration) -> bool {
    let placeholder = d
        .type_node
        .map(|t| matches!(tree.text(t), "auto" | "var") || tree.kind(t) == "placeholder_type_specifier")
        .unwrap_or(true);
    !placeholder && !is_constant_decl(tree, d) && !is_reference(tree, d) && initializer_span(tree, d).is_some()
}

/// The ` = value` part of a declarator, starting right after the declared name.
fn initializer_span(tree: &SyntaxTree, d: &Declaration) -> Option<Span> {
    let value = d.value?;
    let decl = d.declarator;
    let kids = tree.children(decl);
    let eq = kids.iter().position(|&c| tree.text(c) == "=" && tree.named_children(c).next().is_none())?;
    if eq == 0 || !tree.span(decl).covers(tree.span(value)) {
        return None;
    }
    Some(Span::new(tree.span(kids[eq - 1]).end, tree.span(value).end))
}

fn is_java_reference_type(tree: &SyntaxTree, d: &Declaration) -> bool {
    let Some(t) = d.type_node else { return false };
    !matches!(tree.kind(t), "integral_type" | "floating_point_type" | "boolean_type")
        && tree.text(t) != "var"
}

fn is_pointer_decl(tree: &SyntaxTree, d: &Declaration) -> bool {
    match tree.language() {
        Language::Java => is_java_reference_type(tree, d) || d.is_array,
        _ => d.pointer_depth > 0 && !is_reference(tree, d),
    }
}

fn variable_sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    let mut out: Vec<BugSite> = scope
        .uses()
        .iter()
        .filter(|u| !in_preproc(tree, u.ident) && !swap_candidates(tree, scope, u.ident).is_empty())
        .map(|u| BugSite::SwapVariable { ident: u.ident })
        .collect();
    for id in scope.decl_ids() {
        let d = scope.decl(id);
        if d.kind == DeclKind::Local
            && query::is_declaration_statement(tree.kind(d.statement))
            && !is_pointer_decl(tree, d)
            && !d.is_array
            && removable_initializer(tree, d)
        {
            out.push(BugSite::RemoveInitializer { decl: id });
        }
    }
    out
}

// ---------------------------------------------------------------- values

/// Contexts where a literal must stay a distinct constant expression.
fn literal_locked(tree: &SyntaxTree, lit: NodeId) -> bool {
    let span = tree.span(lit);
    tree.ancestors(lit).any(|a| match tree.kind(a) {
        "case_statement" => tree.child_by_field(a, "value").map(|v| tree.span(v).covers(span)).unwrap_or(false),
        "switch_label" | "array_declarator" | "dimensions_expr" | "enumerator" | "bitfield_clause"
        | "template_argument_list" | "attribute" | "annotation" | "static_assert_declaration" => true,
        k => k.starts_with("preproc_"),
    })
}

fn literal_sites(tree: &SyntaxTree) -> Vec<BugSite> {
    tree.iter()
        .filter(|&n| {
            let k = tree.kind(n);
            (matches!(k, "true" | "false") || (query::is_numeric_literal(k) && !literal_targets(tree, n).is_empty()))
                && !literal_locked(tree, n)
        })
        .map(|lit| BugSite::Literal { lit })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Radix {
    Dec,
    Hex,
    Oct,
    Bin,
}

/// Replacement texts for a literal: the flipped boolean, or numbers from
/// {0, 1, -1, v-1, v+1, 2v} other than v, rendered in the literal's style.
fn literal_targets(tree: &SyntaxTree, lit: NodeId) -> Vec<String> {
    let text = tree.text(lit);
    match tree.kind(lit) {
        "true" => return vec!["false".into()],
        "false" => return vec!["true".into()],
        _ => {}
    }
    let java = tree.language() == Language::Java;
    numeric_targets(text, java)
}

pub(super) fn numeric_targets(text: &str, java: bool) -> Vec<String> {
    let clean: String = text.chars().filter(|c| *c != '_' && *c != '\'').collect();
    let (neg, body) = match clean.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, clean),
    };
    let lower = body.to_ascii_lowercase();
    let hex = lower.starts_with("0x");
    let is_float = if hex {
        lower.contains('.') || lower.contains('p')
    } else {
        lower.contains('.') || lower.contains('e') || lower.ends_with('f') || (java && lower.ends_with('d'))
    };
    if is_float {
        if hex {
            return Vec::new();
        }
        let digits_end = body.trim_end_matches(['f', 'F', 'l', 'L', 'd', 'D']).len();
        let (num, suffix) = body.split_at(digits_end);
        let Ok(mut v) = num.parse::<f64>() else { return Vec::new() };
        if neg {
            v = -v;
        }
        let mut out = Vec::new();
        for c in [0.0, 1.0, -1.0, v - 1.0, v + 1.0, 2.0 * v] {
            if c == v || !c.is_finite() {
                continue;
            }
            let mut s = format!("{}", c.abs());
            if !s.contains('.') && !s.contains('e') {
                s.push_str(".0");
            }
            s.push_str(suffix);
            let s = if c < 0.0 { format!("(-{s})") } else { s };
            if !out.contains(&s) {
                out.push(s);
            }
        }
        return out;
    }
    let digits_end = body.trim_end_matches(['u', 'U', 'l', 'L']).len();
    let (num, suffix) = body.split_at(digits_end);
    let (radix, digits) = if hex {
        (Radix::Hex, &num[2..])
    } else if num.len() > 2 && (num.starts_with("0b") || num.starts_with("0B")) {
        (Radix::Bin, &num[2..])
    } else if num.len() > 1 && num.starts_with('0') {
        (Radix::Oct, &num[1..])
    } else {
        (Radix::Dec, num)
    };
    let base = match radix {
        Radix::Dec => 10,
        Radix::Hex => 16,
        Radix::Oct => 8,
        Radix::Bin => 2,
    };
    let Ok(mag) = i128::from_str_radix(digits, base) else { return Vec::new() };
    let v = if neg { -mag } else { mag };
    let unsigned = suffix.contains(['u', 'U']);
    let long = suffix.contains(['l', 'L']);
    let limit: i128 = if long { i64::MAX as i128 } else { (i32::MAX as i128).max(v.abs()) };
    let mut out = Vec::new();
    for c in [0, 1, -1, v - 1, v + 1, 2 * v] {
        if c == v || c.abs() > limit || (unsigned && c < 0) {
            continue;
        }
        let m = c.unsigned_abs();
        let digits = match radix {
            Radix::Dec => m.to_string(),
            Radix::Hex => format!("{}{:x}", &num[..2], m),
            Radix::Oct if m == 0 => "0".to_string(),
            Radix::Oct => format!("0{m:o}"),
            Radix::Bin => format!("{}{m:b}", &num[..2]),
        };
        let s = if c < 0 { format!("(-{digits}{suffix})") } else { format!("{digits}{suffix}") };
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

// ---------------------------------------------------------------- pointers

fn pointer_sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    let mut out = Vec::new();
    for id in scope.decl_ids() {
        let d = scope.decl(id);
        if d.kind != DeclKind::Local
            || !query::is_declaration_statement(tree.kind(d.statement))
            || !is_pointer_decl(tree, d)
            || in_preproc(tree, d.statement)
        {
            continue;
        }
        let Some(v) = d.value else { continue };
        if removable_initializer(tree, d) || !query::is_null_literal(tree, v) {
            out.push(BugSite::PointerInit { decl: id });
        }
    }
    for assign in tree.find_kind(tree.root(), "assignment_expression") {
        let op = tree.child_by_field(assign, "operator").map(|o| tree.text(o));
        let (Some(left), Some(right)) = (tree.child_by_field(assign, "left"), tree.child_by_field(assign, "right")) else {
            continue;
        };
        if op != Some("=") || tree.kind(left) != "identifier" || query::is_null_literal(tree, right) || in_preproc(tree, assign) {
            continue;
        }
        if let Some(d) = scope.binding_of(left) {
            let d = scope.decl(d);
            if d.kind != DeclKind::Function && is_pointer_decl(tree, d) && !d.is_array {
                out.push(BugSite::PointerAssign { assign });
            }
        }
    }
    out
}

// ---------------------------------------------------------------- statements

const JUMP_KINDS: &[&str] = &[
    "return_statement",
    "break_statement",
    "continue_statement",
    "goto_statement",
    "throw_statement",
];

fn callee_name(tree: &SyntaxTree, call: NodeId) -> Option<&str> {
    let f = tree.child_by_field(call, "function").or_else(|| tree.child_by_field(call, "name"))?;
    let f = match tree.kind(f) {
        "field_expression" => tree.child_by_field(f, "field")?,
        "qualified_identifier" => tree.child_by_field(f, "name")?,
        _ => f,
    };
    Some(tree.text(f))
}

fn is_check_name(name: &str) -> bool {
    let l = name.to_ascii_lowercase();
    ["assert", "check", "ensure", "expect", "verify", "require"].iter().any(|w| l.contains(w))
}

fn is_error_call(tree: &SyntaxTree, call: NodeId) -> bool {
    callee_name(tree, call)
        .map(|n| {
            let l = n.to_ascii_lowercase();
            ["error", "exit", "abort", "fail", "panic", "fatal", "die"].iter().any(|w| l.contains(w))
        })
        .unwrap_or(false)
}

fn check_sites(tree: &SyntaxTree) -> Vec<BugSite> {
    let mut out = Vec::new();
    for n in tree.iter() {
        let Some(parent) = tree.parent(n) else { continue };
        if !query::is_block(tree.kind(parent)) || in_preproc(tree, n) {
            continue;
        }
        let is_check = match tree.kind(n) {
            "if_statement" => {
                let guard = tree.child_by_field(n, "alternative").is_none()
                    && tree.child_by_field(n, "consequence").map(|c| {
                        query::statement_count(tree, c) <= MAX_REMOVED_STATEMENTS
                            && (tree.contains_kind(c, JUMP_KINDS)
                                || tree
                                    .descendants(c)
                                    .filter(|&k| matches!(tree.kind(k), "call_expression" | "method_invocation"))
                                    .any(|k| is_error_call(tree, k)))
                    }) == Some(true);
                guard
            }
            "assert_statement" => true,
            "expression_statement" => tree
                .named_children(n)
                .next()
                .filter(|&e| matches!(tree.kind(e), "call_expression" | "method_invocation"))
                .and_then(|e| callee_name(tree, e))
                .map(is_check_name)
                .unwrap_or(false),
            _ => false,
        };
        if is_check {
            out.push(BugSite::RemoveCheck { stmt: n });
        }
    }
    out
}

/// The statement's span, widened to its whole line when it stands alone there.
fn removal_span(tree: &SyntaxTree, stmt: NodeId) -> Span {
    let src = tree.source();
    let span = tree.span(stmt);
    let line_start = src[..span.start].rfind('\n').map(|i| i + 1).unwrap_or(0);
    let before_blank = src[line_start..span.start].trim().is_empty();
    let rest = &src[span.end..];
    match rest.find('\n') {
        Some(eol) if before_blank && line_start > 0 && rest[..eol].trim().is_empty() => {
            Span::new(line_start, span.end + eol + 1)
        }
        _ => span,
    }
}

// ---------------------------------------------------------------- calls

fn call_args(tree: &SyntaxTree, call: NodeId) -> Option<(NodeId, Vec<NodeId>)> {
    let list = tree.child_by_field(call, "arguments")?;
    if tree.kind(list) != "argument_list" {
        return None;
    }
    let args = tree.named_children(list).filter(|&a| !query::is_comment(tree.kind(a))).collect();
    Some((list, args))
}

fn is_recursive_call(tree: &SyntaxTree, scope: &ScopeInfo, call: NodeId) -> bool {
    let Some(name) = callee_name(tree, call) else { return false };
    scope
        .declarations_named(name)
        .iter()
        .any(|&d| scope.decl(d).kind == DeclKind::Function)
}

fn call_sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<BugSite> {
    let mut out = Vec::new();
    for call in tree.iter().filter(|&n| matches!(tree.kind(n), "call_expression" | "method_invocation")) {
        if in_preproc(tree, call) {
            continue;
        }
        let Some((_, args)) = call_args(tree, call) else { continue };
        let texts: Vec<&str> = args.iter().map(|&a| tree.text(a)).collect();
        if !is_recursive_call(tree, scope, call) {
            out.push(BugSite::Call { call, op: CallMutation::Add });
        }
        if !args.is_empty() {
            out.push(BugSite::Call { call, op: CallMutation::Remove });
        }
        if texts.iter().any(|t| *t != texts[0]) {
            out.push(BugSite::Call { call, op: CallMutation::Swap });
        }
        if args.iter().any(|&a| !query::is_null_literal(tree, a)) {
            out.push(BugSite::Call { call, op: CallMutation::Null });
        }
    }
    out
}

fn mutate_call(
    tree: &SyntaxTree,
    scope: &ScopeInfo,
    call: NodeId,
    op: CallMutation,
    rng: &mut Rng,
) -> Option<(Span, String, String)> {
    let lang = tree.language();
    let (list, args) = call_args(tree, call)?;
    let mut texts: Vec<String> = args.iter().map(|&a| tree.text(a).to_string()).collect();
    let name = callee_name(tree, call).unwrap_or("call");
    let detail = match op {
        CallMutation::Add => {
            let at = tree.span(call).start;
            let mut pool: Vec<String> = scope
                .visible_at(at)
                .into_iter()
                .map(|d| scope.decl(d))
                .filter(|d| d.kind != DeclKind::Function && d.visible_from <= at && !tree.span(d.declarator).contains(at))
                .map(|d| d.name.clone())
                .collect();
            pool.push(if lang == Language::Java { "null".into() } else { "0".into() });
            let extra = pool.choose(rng)?.clone();
            texts.push(extra.clone());
            format!("{name}: added argument {extra}")
        }
        CallMutation::Remove => {
            let idx: Vec<usize> = (0..texts.len()).collect();
            let i = *idx.choose(rng)?;
            let gone = texts.remove(i);
            format!("{name}: removed argument {gone}")
        }
        CallMutation::Swap => {
            let pairs: Vec<(usize, usize)> = (0..texts.len())
                .flat_map(|i| (i + 1..texts.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| texts[i] != texts[j])
                .collect();
            let &(i, j) = pairs.choose(rng)?;
            texts.swap(i, j);
            format!("{name}: swapped arguments {i} and {j}")
        }
        CallMutation::Null => {
            let idx: Vec<usize> = (0..args.len()).filter(|&i| !query::is_null_literal(tree, args[i])).collect();
            let i = *idx.choose(rng)?;
            texts[i] = null_text(lang).to_string();
            format!("{name}: argument {i} set to null")
        }
    };
    Some((tree.span(list), format!("({})", texts.join(", ")), detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_replacements() {
        let t = numeric_targets("1", false);
        assert_eq!(t, vec!["0", "(-1)", "2"]);
        assert_eq!(numeric_targets("0x10", false), vec!["0x0", "0x1", "(-0x1)", "0xf", "0x11", "0x20"]);
        assert_eq!(numeric_targets("3u", false), vec!["0u", "1u", "2u", "4u", "6u"]);
        assert_eq!(numeric_targets("0.5f", true), vec!["0.0f", "1.0f", "(-1.0f)", "(-0.5f)", "1.5f"]);
        assert!(numeric_targets("2147483647", true).iter().all(|s| s != "4294967294"));
        assert!(numeric_targets("10L", true).contains(&"20L".to_string()));
    }
}
