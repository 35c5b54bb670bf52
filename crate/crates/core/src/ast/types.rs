//! Coarse static classification of expression values, good enough to decide
//! whether an operator or type substitution keeps a program compilable.

use super::{query, DeclKind, Language, NodeId, ScopeInfo, SyntaxTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueClass {
    Integral,
    Floating,
    Boolean,
    Pointer,
    Other,
}

impl ValueClass {
    pub fn is_arithmetic(self) -> bool {
        matches!(self, ValueClass::Integral | ValueClass::Floating)
    }
}

/// Classifies a declared type from its text and declarator shape.
pub fn class_of_type(language: Language, type_text: &str, pointer_depth: u8, is_array: bool) -> ValueClass {
    if pointer_depth > 0 || (is_array && language != Language::Java) {
        return ValueClass::Pointer;
    }
    if is_array {
        return ValueClass::Other;
    }
    let t = type_text.trim();
    if query::is_integral_type_text(language, t) {
        ValueClass::Integral
    } else if query::is_floating_type_text(t) {
        ValueClass::Floating
    } else if matches!(t, "bool" | "_Bool" | "boolean") {
        ValueClass::Boolean
    } else {
        ValueClass::Other
    }
}

/// Class of the variable declared by `decl`.
pub fn class_of_decl(tree: &SyntaxTree, scope: &ScopeInfo, decl: super::DeclId) -> ValueClass {
    let d = scope.decl(decl);
    if d.kind == DeclKind::Function {
        return ValueClass::Other;
    }
    let ty = d.type_node.map(|t| tree.text(t)).unwrap_or("");
    class_of_type(tree.language(), ty, d.pointer_depth, d.is_array)
}

/// Best-effort class of an expression's value.
pub fn class_of_expr(tree: &SyntaxTree, scope: &ScopeInfo, expr: NodeId) -> ValueClass {
    let lang = tree.language();
    let kind = tree.kind(expr);
    match kind {
        "parenthesized_expression" => {
            let inner = query::strip_parens(tree, expr);
            if inner == expr {
                ValueClass::Other
            } else {
                class_of_expr(tree, scope, inner)
            }
        }
        "identifier" => match scope.binding_of(expr) {
            Some(d) => class_of_decl(tree, scope, d),
            None => ValueClass::Other,
        },
        "true" | "false" => ValueClass::Boolean,
        "char_literal" | "character_literal" | "sizeof_expression" => ValueClass::Integral,
        k if query::is_numeric_literal(k) => {
            if query::is_integer_literal(tree, expr) {
                ValueClass::Integral
            } else {
                ValueClass::Floating
            }
        }
        "unary_expression" => {
            let op = tree.child_by_field(expr, "operator").map(|o| tree.text(o)).unwrap_or("");
            let arg = tree.child_by_field(expr, "argument").or_else(|| tree.named_children(expr).last());
            match op {
                "!" => {
                    if lang == Language::Java {
                        ValueClass::Boolean
                    } else {
                        ValueClass::Integral
                    }
                }
                "-" | "+" | "~" => match arg.map(|a| class_of_expr(tree, scope, a)) {
                    Some(c) if c.is_arithmetic() => c,
                    _ => ValueClass::Other,
                },
                _ => ValueClass::Other,
            }
        }
        "binary_expression" => {
            let op = query::binary_operator(tree, expr).map(|o| tree.text(o)).unwrap_or("");
            let (Some(l), Some(r)) = (tree.child_by_field(expr, "left"), tree.child_by_field(expr, "right")) else {
                return ValueClass::Other;
            };
            if query::COMPARISON_OPS.contains(&op) || op == "&&" || op == "||" {
                return if lang == Language::Java {
                    ValueClass::Boolean
                } else {
                    ValueClass::Integral
                };
            }
            let (lc, rc) = (class_of_expr(tree, scope, l), class_of_expr(tree, scope, r));
            match (lc, rc) {
                (ValueClass::Integral, ValueClass::Integral) => ValueClass::Integral,
                (a, b) if a.is_arithmetic() && b.is_arithmetic() && matches!(op, "+" | "-" | "*" | "/") => {
                    ValueClass::Floating
                }
                (ValueClass::Pointer, ValueClass::Integral) if matches!(op, "+" | "-") => ValueClass::Pointer,
                (ValueClass::Integral, ValueClass::Pointer) if op == "+" => ValueClass::Pointer,
                _ => ValueClass::Other,
            }
        }
        "cast_expression" => {
            let ty = tree.child_by_field(expr, "type").map(|t| tree.text(t)).unwrap_or("");
            let depth = ty.matches('*').count() as u8;
            class_of_type(lang, ty.trim_end_matches(['*', ' ']), depth, false)
        }
        _ => ValueClass::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{parse, scope_of, SourceFunction};

    #[test]
    fn classifies_common_expressions() {
        let src = "int f(int n, double d, char *p){ return n - 1 + (int)d + (p + n == 0) + d * 2; }";
        let tree = parse(&SourceFunction::new("t", Language::C, src)).unwrap();
        let scope = scope_of(&tree);
        let ret = tree.find_kind(tree.root(), "return_statement").next().unwrap();
        let expr = tree.named_children(ret).next().unwrap();
        assert_eq!(class_of_expr(&tree, &scope, expr), ValueClass::Floating);
        let bins: Vec<_> = tree.find_kind(tree.root(), "binary_expression").collect();
        let n_minus_1 = bins.iter().find(|&&b| tree.text(b) == "n - 1").unwrap();
        assert_eq!(class_of_expr(&tree, &scope, *n_minus_1), ValueClass::Integral);
        let p_plus_n = bins.iter().find(|&&b| tree.text(b) == "p + n").unwrap();
        assert_eq!(class_of_expr(&tree, &scope, *p_plus_n), ValueClass::Pointer);
    }
}
