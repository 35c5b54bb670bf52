//! Typed syntax trees for C, C++ and Java functions.
//!
//! Parsing is delegated to tree-sitter grammars. The resulting tree is copied
//! into an owned arena ([`SyntaxTree`]) so it can be shared across threads and
//! queried without holding on to the parser. Every tree is rooted at the single
//! function (or method) it was parsed from; spans are byte offsets into the
//! original function text.

mod edit;
mod parse;
pub mod query;
mod scope;
mod tokens;
pub mod types;

use serde::{Deserialize, Serialize};
use std::fmt;

pub use edit::{render, render_unchecked, splice, Edit, EditError};
pub use parse::{parse, parse_lenient, parse_unit, ParseError, ParsedUnit};
pub use scope::{
    independent_decls, scope_of, DeclId, DeclKind, Declaration, ScopeId, ScopeInfo, ScopeRegion,
    Unsupported, UseSite,
};
pub use tokens::{flatten_tokens, Token};
pub use types::{class_of_decl, class_of_expr, class_of_type, ValueClass};

/// Source languages understood by the toolchain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    C,
    Cpp,
    Java,
}

impl Language {
    pub const ALL: [Language; 3] = [Language::C, Language::Cpp, Language::Java];

    pub fn name(self) -> &'static str {
        match self {
            Language::C => "c",
            Language::Cpp => "cpp",
            Language::Java => "java",
        }
    }

    /// Maps a file extension to a language. Only `.c`, `.cpp` and `.java` are accepted.
    pub fn from_extension(ext: &str) -> Option<Language> {
        match ext {
            "c" => Some(Language::C),
            "cpp" => Some(Language::Cpp),
            "java" => Some(Language::Java),
            _ => None,
        }
    }

    pub(crate) fn grammar(self) -> tree_sitter::Language {
        match self {
            Language::C => tree_sitter_c::LANGUAGE.into(),
            Language::Cpp => tree_sitter_cpp::LANGUAGE.into(),
            Language::Java => tree_sitter_java::LANGUAGE.into(),
        }
    }

    /// Literal used for "always false" guards and boolean constants.
    pub fn false_literal(self) -> &'static str {
        match self {
            Language::C => "0",
            Language::Cpp | Language::Java => "false",
        }
    }

    pub fn true_literal(self) -> &'static str {
        match self {
            Language::C => "1",
            Language::Cpp | Language::Java => "true",
        }
    }

    pub fn null_literal(self) -> &'static str {
        match self {
            Language::C | Language::Cpp => "NULL",
            Language::Java => "null",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Language::C),
            "cpp" | "c++" => Ok(Language::Cpp),
            "java" => Ok(Language::Java),
            other => Err(format!("unsupported language `{other}`")),
        }
    }
}

/// One extracted function or method.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceFunction {
    pub id: String,
    pub language: Language,
    pub text: String,
}

impl SourceFunction {
    pub fn new(id: impl Into<String>, language: Language, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            language,
            text: text.into(),
        }
    }
}

/// Half-open byte range `[start, end)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Self { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, offset: usize) -> bool {
        self.start <= offset && offset < self.end
    }

    pub fn covers(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn overlaps(&self, other: Span) -> bool {
        self.start < other.end && other.start < self.end
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Index of a node inside a [`SyntaxTree`] arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
pub struct AstNode {
    /// Grammar node-type name, verbatim.
    pub kind: &'static str,
    pub span: Span,
    pub children: Vec<NodeId>,
    pub parent: Option<NodeId>,
    /// Field name this node occupies in its parent, if any.
    pub field: Option<&'static str>,
    pub is_terminal: bool,
    pub is_named: bool,
}

/// An immutable, owned syntax tree for one function.
#[derive(Debug, Clone)]
pub struct SyntaxTree {
    language: Language,
    source: String,
    nodes: Vec<AstNode>,
    root: NodeId,
}

impl SyntaxTree {
    pub(crate) fn from_parts(
        language: Language,
        source: String,
        nodes: Vec<AstNode>,
        root: NodeId,
    ) -> Self {
        Self {
            language,
            source,
            nodes,
            root,
        }
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &AstNode {
        &self.nodes[id.index()]
    }

    pub fn kind(&self, id: NodeId) -> &'static str {
        self.node(id).kind
    }

    pub fn span(&self, id: NodeId) -> Span {
        self.node(id).span
    }

    pub fn text(&self, id: NodeId) -> &str {
        let span = self.span(id);
        &self.source[span.start..span.end]
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.node(id).parent
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.node(id).children
    }

    pub fn named_children(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.children(id)
            .iter()
            .copied()
            .filter(move |&c| self.node(c).is_named && !query::is_comment(self.kind(c)))
    }

    pub fn child_by_field(&self, id: NodeId, field: &str) -> Option<NodeId> {
        self.children(id)
            .iter()
            .copied()
            .find(|&c| self.node(c).field == Some(field))
    }

    pub fn children_by_field<'a>(
        &'a self,
        id: NodeId,
        field: &'a str,
    ) -> impl Iterator<Item = NodeId> + 'a {
        self.children(id)
            .iter()
            .copied()
            .filter(move |&c| self.node(c).field == Some(field))
    }

    /// First child (named or anonymous) with the given kind.
    pub fn child_of_kind(&self, id: NodeId, kind: &str) -> Option<NodeId> {
        self.children(id)
            .iter()
            .copied()
            .find(|&c| self.kind(c) == kind)
    }

    pub fn ancestors(&self, id: NodeId) -> Ancestors<'_> {
        Ancestors {
            tree: self,
            next: self.parent(id),
        }
    }

    pub fn is_ancestor(&self, ancestor: NodeId, id: NodeId) -> bool {
        self.ancestors(id).any(|a| a == ancestor)
    }

    /// Pre-order traversal of the subtree rooted at `id`, including `id`.
    pub fn descendants(&self, id: NodeId) -> Descendants<'_> {
        Descendants {
            tree: self,
            stack: vec![id],
        }
    }

    /// All nodes in pre-order.
    pub fn iter(&self) -> Descendants<'_> {
        self.descendants(self.root)
    }

    /// Terminal nodes under `id`, in source order.
    pub fn terminals(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.descendants(id).filter(move |&n| self.node(n).is_terminal)
    }

    pub fn find_kind<'a>(&'a self, id: NodeId, kind: &'a str) -> impl Iterator<Item = NodeId> + 'a {
        self.descendants(id).filter(move |&n| self.kind(n) == kind)
    }

    pub fn contains_kind(&self, id: NodeId, kinds: &[&str]) -> bool {
        self.descendants(id).any(|n| kinds.contains(&self.kind(n)))
    }

    /// Innermost node whose span exactly equals `span`, if any.
    pub fn node_at(&self, span: Span) -> Option<NodeId> {
        self.iter().filter(|&n| self.span(n) == span).last()
    }
}

pub struct Ancestors<'a> {
    tree: &'a SyntaxTree,
    next: Option<NodeId>,
}

impl Iterator for Ancestors<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let current = self.next?;
        self.next = self.tree.parent(current);
        Some(current)
    }
}

pub struct Descendants<'a> {
    tree: &'a SyntaxTree,
    stack: Vec<NodeId>,
}

impl Iterator for Descendants<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let current = self.stack.pop()?;
        self.stack
            .extend(self.tree.children(current).iter().rev().copied());
        Some(current)
    }
}
