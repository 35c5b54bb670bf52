//! Small structural predicates shared by the analyses and transforms.

use super::{Language, NodeId, SyntaxTree};

pub fn is_comment(kind: &str) -> bool {
    matches!(kind, "comment" | "line_comment" | "block_comment")
}

/// `{ ... }` statement blocks.
pub fn is_block(kind: &str) -> bool {
    matches!(kind, "compound_statement" | "block")
}

pub fn is_loop(kind: &str) -> bool {
    matches!(
        kind,
        "for_statement"
            | "while_statement"
            | "do_statement"
            | "for_range_loop"
            | "enhanced_for_statement"
    )
}

pub fn is_function_node(kind: &str) -> bool {
    matches!(
        kind,
        "function_definition" | "method_declaration" | "constructor_declaration"
    )
}

pub fn is_declaration_statement(kind: &str) -> bool {
    matches!(kind, "declaration" | "local_variable_declaration")
}

/// Node kinds that evaluate with observable side effects.
pub const SIDE_EFFECT_KINDS: &[&str] = &[
    "call_expression",
    "method_invocation",
    "object_creation_expression",
    "assignment_expression",
    "update_expression",
    "new_expression",
    "delete_expression",
    "throw_expression",
    "co_await_expression",
    "lambda_expression",
    "gnu_asm_expression",
];

pub const COMPARISON_OPS: &[&str] = &["<", "<=", ">", ">=", "==", "!="];
pub const RELATIONAL_OPS: &[&str] = &["<", "<=", ">", ">="];
pub const ARITHMETIC_OPS: &[&str] = &["+", "-", "*", "/", "%"];

/// True when evaluating the subtree cannot have side effects.
pub fn is_pure(tree: &SyntaxTree, id: NodeId) -> bool {
    !tree.contains_kind(id, SIDE_EFFECT_KINDS)
}

/// The operator token of a binary expression.
pub fn binary_operator(tree: &SyntaxTree, id: NodeId) -> Option<NodeId> {
    tree.child_by_field(id, "operator")
}

/// Removes any number of enclosing parentheses.
pub fn strip_parens(tree: &SyntaxTree, mut id: NodeId) -> NodeId {
    while tree.kind(id) == "parenthesized_expression" {
        match tree.named_children(id).collect::<Vec<_>>().as_slice() {
            [inner] => id = *inner,
            _ => break,
        }
    }
    id
}

/// The `{ ... }` body of the function at the tree root.
pub fn function_body(tree: &SyntaxTree) -> Option<NodeId> {
    let func = function_node(tree)?;
    tree.child_by_field(func, "body")
}

/// The function node itself, looking through C++ template declarations.
pub fn function_node(tree: &SyntaxTree) -> Option<NodeId> {
    let root = tree.root();
    if is_function_node(tree.kind(root)) {
        return Some(root);
    }
    tree.named_children(root)
        .find(|&c| is_function_node(tree.kind(c)))
}

/// Statement children of a block, skipping braces and comments.
pub fn block_statements(tree: &SyntaxTree, block: NodeId) -> Vec<NodeId> {
    tree.named_children(block).collect()
}

/// Number of statements a branch holds: the statements of a block, or one.
pub fn statement_count(tree: &SyntaxTree, stmt: NodeId) -> usize {
    if is_block(tree.kind(stmt)) {
        block_statements(tree, stmt).len()
    } else {
        1
    }
}

/// Operator precedence for C-family binary operators; larger binds tighter.
pub fn binary_precedence(op: &str) -> u8 {
    match op {
        "*" | "/" | "%" => 10,
        "+" | "-" => 9,
        "<<" | ">>" | ">>>" => 8,
        "<" | "<=" | ">" | ">=" | "instanceof" => 7,
        "==" | "!=" => 6,
        "&" => 5,
        "^" => 4,
        "|" => 3,
        "&&" => 2,
        "||" => 1,
        _ => 0,
    }
}

/// Whether `operand` can be placed next to an operator of precedence
/// `prec` (on either side) without parentheses changing its grouping.
pub fn binds_tighter_than(tree: &SyntaxTree, operand: NodeId, prec: u8) -> bool {
    match tree.kind(operand) {
        "binary_expression" => binary_operator(tree, operand)
            .map(|op| binary_precedence(tree.text(op)) > prec)
            .unwrap_or(false),
        "conditional_expression" | "ternary_expression" | "assignment_expression"
        | "comma_expression" | "lambda_expression" | "instanceof_expression"
        | "cast_expression" => false,
        _ => true,
    }
}

const C_INTEGRAL_WORDS: &[&str] = &[
    "int", "char", "short", "long", "unsigned", "signed", "size_t", "ssize_t", "int8_t",
    "int16_t", "int32_t", "int64_t", "uint8_t", "uint16_t", "uint32_t", "uint64_t", "ptrdiff_t",
    "intptr_t", "uintptr_t",
];

/// Whether a declared type text names an integer type (no floating point, no bool).
pub fn is_integral_type_text(language: Language, text: &str) -> bool {
    let words: Vec<&str> = text.split_whitespace().filter(|w| *w != "const" && *w != "volatile" && *w != "static").collect();
    if words.is_empty() {
        return false;
    }
    match language {
        Language::C | Language::Cpp => words.iter().all(|w| C_INTEGRAL_WORDS.contains(w)),
        Language::Java => matches!(words.as_slice(), [w] if matches!(*w, "int" | "long" | "short" | "byte" | "char")),
    }
}

pub fn is_floating_type_text(text: &str) -> bool {
    let words: Vec<&str> = text
        .split_whitespace()
        .filter(|w| *w != "const" && *w != "volatile" && *w != "static")
        .collect();
    matches!(words.as_slice(), ["float"] | ["double"] | ["long", "double"])
}

/// Integer literal (decimal, hex, octal, binary) without a fractional part.
pub fn is_integer_literal(tree: &SyntaxTree, id: NodeId) -> bool {
    match tree.kind(id) {
        "number_literal" => {
            let t = tree.text(id).to_ascii_lowercase();
            let t = t.trim_start_matches('-');
            if t.starts_with("0x") {
                !t.contains('.') && !t.contains('p')
            } else {
                !t.contains('.') && !t.contains('e') && !t.ends_with('f')
            }
        }
        "decimal_integer_literal" | "hex_integer_literal" | "octal_integer_literal"
        | "binary_integer_literal" => true,
        "char_literal" | "character_literal" => true,
        _ => false,
    }
}

pub fn is_numeric_literal(kind: &str) -> bool {
    matches!(
        kind,
        "number_literal"
            | "decimal_integer_literal"
            | "hex_integer_literal"
            | "octal_integer_literal"
            | "binary_integer_literal"
            | "decimal_floating_point_literal"
            | "hex_floating_point_literal"
    )
}

pub fn is_null_literal(tree: &SyntaxTree, id: NodeId) -> bool {
    let id = strip_parens(tree, id);
    matches!(tree.kind(id), "null" | "null_literal" | "nullptr")
        || matches!(tree.text(id), "NULL" | "0" | "nullptr" | "null" | "((void*)0)")
}

pub fn c_keywords() -> &'static [&'static str] {
    &[
        "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
        "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
        "restrict", "return", "short", "signed", "sizeof", "static", "struct", "switch",
        "typedef", "union", "unsigned", "void", "volatile", "while", "_Bool", "bool", "true",
        "false", "NULL", "main", "size_t",
    ]
}

pub fn cpp_keywords() -> &'static [&'static str] {
    &[
        "alignas", "alignof", "and", "asm", "catch", "class", "constexpr", "const_cast",
        "decltype", "delete", "dynamic_cast", "explicit", "export", "friend", "mutable",
        "namespace", "new", "noexcept", "not", "nullptr", "operator", "or", "private",
        "protected", "public", "reinterpret_cast", "static_assert", "static_cast", "template",
        "this", "throw", "try", "typeid", "typename", "using", "virtual", "xor", "std",
    ]
}

pub fn java_keywords() -> &'static [&'static str] {
    &[
        "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class",
        "const", "continue", "default", "do", "double", "else", "enum", "extends", "final",
        "finally", "float", "for", "goto", "if", "implements", "import", "instanceof", "int",
        "interface", "long", "native", "new", "package", "private", "protected", "public",
        "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
        "throw", "throws", "transient", "try", "void", "volatile", "while", "true", "false",
        "null", "var", "record", "yield", "String", "Object",
    ]
}

/// Reserved words for a language (C++ includes the C list).
pub fn is_reserved(language: Language, word: &str) -> bool {
    match language {
        Language::C => c_keywords().contains(&word),
        Language::Cpp => c_keywords().contains(&word) || cpp_keywords().contains(&word),
        Language::Java => java_keywords().contains(&word),
    }
}

/// Every identifier-shaped word occurring anywhere in `text`.
pub fn words(text: &str) -> std::collections::HashSet<&str> {
    let bytes = text.as_bytes();
    let mut out = std::collections::HashSet::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_alphabetic() || b == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.insert(&text[start..i]);
        } else if b.is_ascii_digit() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    out
}

pub fn is_valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_scan_skips_numbers() {
        let w = words("x1 = 0x1f + y_2 * 10u;");
        assert!(w.contains("x1") && w.contains("y_2"));
        assert!(!w.contains("x1f") && !w.contains("u"));
    }

    #[test]
    fn integral_type_texts() {
        assert!(is_integral_type_text(Language::C, "unsigned long"));
        assert!(is_integral_type_text(Language::C, "const size_t"));
        assert!(!is_integral_type_text(Language::C, "double"));
        assert!(is_integral_type_text(Language::Java, "long"));
        assert!(!is_integral_type_text(Language::Java, "Integer"));
    }
}
