use super::{query, NodeId, Span, SyntaxTree};

/// One code token: a terminal of the syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub text: String,
    /// Grammar kind of the terminal node.
    pub kind: &'static str,
    pub span: Span,
    pub node: NodeId,
}

/// Terminals under the tree root in source order. Comments and whitespace-only
/// terminals (e.g. the newline ending a preprocessor line) are excluded.
pub fn flatten_tokens(tree: &SyntaxTree) -> Vec<Token> {
    tree.terminals(tree.root())
        .filter(|&n| !query::is_comment(tree.kind(n)))
        .filter_map(|n| {
            let text = tree.text(n);
            if text.trim().is_empty() {
                return None;
            }
            Some(Token {
                text: text.to_string(),
                kind: tree.kind(n),
                span: tree.span(n),
                node: n,
            })
        })
        .collect()
}
