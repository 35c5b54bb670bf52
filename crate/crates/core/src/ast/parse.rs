use super::{AstNode, Language, NodeId, SourceFunction, Span, SyntaxTree};
use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};
use thiserror::Error;

/// Literal nodes that are kept as single terminals even though the grammar
/// gives them internal structure (quotes, escape sequences).
const ATOMIC_KINDS: &[&str] = &[
    "string_literal",
    "char_literal",
    "raw_string_literal",
    "user_defined_literal",
    "text_block",
    "character_literal",
];

const JAVA_PREFIX: &str = "class __CloneAwareWrapper__ {\n";
const JAVA_SUFFIX: &str = "\n}\n";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty source text")]
    Empty,
    #[error("syntax errors at {}", fmt_spans(.spans))]
    Syntax { spans: Vec<Span> },
    #[error("expected exactly one function definition, found {found}")]
    NoFunction { found: usize },
}

impl ParseError {
    pub fn error_spans(&self) -> &[Span] {
        match self {
            ParseError::Syntax { spans } => spans,
            _ => &[],
        }
    }
}

fn fmt_spans(spans: &[Span]) -> String {
    spans
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Grammar symbol names live as long as the grammar; interning gives them a
/// `'static` lifetime independent of any parsed tree.
fn intern(name: &str) -> &'static str {
    static NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    let mut set = NAMES
        .get_or_init(|| Mutex::new(HashSet::new()))
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    if let Some(&s) = set.get(name) {
        return s;
    }
    let leaked: &'static str = Box::leak(name.to_string().into_boxed_str());
    set.insert(leaked);
    leaked
}

thread_local! {
    static PARSERS: RefCell<HashMap<Language, tree_sitter::Parser>> = RefCell::new(HashMap::new());
}

fn ts_parse(language: Language, text: &str) -> tree_sitter::Tree {
    PARSERS.with(|cell| {
        let mut parsers = cell.borrow_mut();
        let parser = parsers.entry(language).or_insert_with(|| {
            let mut p = tree_sitter::Parser::new();
            p.set_language(&language.grammar())
                .expect("bundled grammar is ABI compatible");
            p
        });
        parser
            .parse(text, None)
            .expect("parser has a language and no timeout")
    })
}

/// A whole compilation unit (file), used for function extraction.
#[derive(Debug, Clone)]
pub struct ParsedUnit {
    pub tree: SyntaxTree,
    pub error_spans: Vec<Span>,
}

/// Parses a complete file. Never fails; syntax errors are reported as spans.
pub fn parse_unit(language: Language, text: &str) -> ParsedUnit {
    let ts = ts_parse(language, text);
    let root = ts.root_node();
    let error_spans = collect_errors(root, 0);
    let tree = build_arena(language, text.to_string(), root, 0);
    ParsedUnit { tree, error_spans }
}

/// Parses one function. Any error node in the tree is reported as
/// [`ParseError::Syntax`].
pub fn parse(func: &SourceFunction) -> Result<SyntaxTree, ParseError> {
    let (tree, errors) = parse_lenient(func)?;
    if errors.is_empty() {
        Ok(tree)
    } else {
        Err(ParseError::Syntax { spans: errors })
    }
}

/// Parses one function, returning the (possibly partial) tree together with
/// the spans of any error nodes.
pub fn parse_lenient(func: &SourceFunction) -> Result<(SyntaxTree, Vec<Span>), ParseError> {
    if func.text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    match func.language {
        Language::C | Language::Cpp => {
            let ts = ts_parse(func.language, &func.text);
            let root = ts.root_node();
            let errors = collect_errors(root, 0);
            let items: Vec<_> = named_items(root);
            let function = match items.as_slice() {
                [only] if is_function_item(func.language, *only) => *only,
                _ => {
                    if !errors.is_empty() {
                        // Best effort: keep the whole unit so callers can inspect it.
                        let tree = build_arena(func.language, func.text.clone(), root, 0);
                        return Ok((tree, errors));
                    }
                    return Err(ParseError::NoFunction { found: items.len() });
                }
            };
            let tree = build_arena(func.language, func.text.clone(), function, 0);
            Ok((tree, errors))
        }
        Language::Java => {
            let wrapped = format!("{JAVA_PREFIX}{}{JAVA_SUFFIX}", func.text);
            let shift = JAVA_PREFIX.len();
            let ts = ts_parse(Language::Java, &wrapped);
            let root = ts.root_node();
            let errors: Vec<Span> = collect_errors(root, shift)
                .into_iter()
                .map(|s| clamp(s, func.text.len()))
                .collect();
            let body = root
                .named_child(0)
                .and_then(|class| class.child_by_field_name("body"));
            let items = body.map(named_items).unwrap_or_default();
            let function = match items.as_slice() {
                [only] if is_function_item(Language::Java, *only) => *only,
                _ => {
                    if !errors.is_empty() {
                        let tree = build_arena_java_fallback(func, &ts, shift);
                        return Ok((tree, errors));
                    }
                    return Err(ParseError::NoFunction { found: items.len() });
                }
            };
            let tree = build_arena(Language::Java, func.text.clone(), function, shift);
            Ok((tree, errors))
        }
    }
}

fn clamp(span: Span, len: usize) -> Span {
    Span::new(span.start.min(len), span.end.min(len))
}

fn build_arena_java_fallback(func: &SourceFunction, ts: &tree_sitter::Tree, shift: usize) -> SyntaxTree {
    // Fall back to the first node that lies entirely inside the function text.
    let limit = shift + func.text.len();
    let mut cursor = ts.root_node().walk();
    let mut best = None;
    for child in ts.root_node().children(&mut cursor) {
        if child.start_byte() >= shift && child.end_byte() <= limit {
            best = Some(child);
            break;
        }
    }
    match best {
        Some(node) => build_arena(Language::Java, func.text.clone(), node, shift),
        None => SyntaxTree::from_parts(
            Language::Java,
            func.text.clone(),
            vec![AstNode {
                kind: "ERROR",
                span: Span::new(0, func.text.len()),
                children: Vec::new(),
                parent: None,
                field: None,
                is_terminal: true,
                is_named: true,
            }],
            NodeId(0),
        ),
    }
}

fn named_items(node: tree_sitter::Node<'_>) -> Vec<tree_sitter::Node<'_>> {
    let mut cursor = node.walk();
    node.named_children(&mut cursor)
        .filter(|c| !super::query::is_comment(c.kind()))
        .collect()
}

fn is_function_item(language: Language, node: tree_sitter::Node<'_>) -> bool {
    match language {
        Language::C => node.kind() == "function_definition",
        Language::Cpp => match node.kind() {
            "function_definition" => true,
            "template_declaration" => {
                let mut cursor = node.walk();
                let found = node
                    .named_children(&mut cursor)
                    .any(|c| c.kind() == "function_definition");
                found
            }
            _ => false,
        },
        Language::Java => matches!(node.kind(), "method_declaration" | "constructor_declaration"),
    }
}

fn collect_errors(root: tree_sitter::Node<'_>, shift: usize) -> Vec<Span> {
    let mut spans = Vec::new();
    if !root.has_error() {
        return spans;
    }
    let mut stack = vec![root];
    while let Some(node) = stack.pop() {
        if node.is_error() || node.is_missing() {
            let start = node.start_byte().saturating_sub(shift);
            let end = node.end_byte().saturating_sub(shift).max(start);
            spans.push(Span::new(start, end));
            continue;
        }
        if node.has_error() {
            let mut cursor = node.walk();
            stack.extend(node.children(&mut cursor));
        }
    }
    spans.sort();
    spans
}

fn build_arena(
    language: Language,
    source: String,
    root: tree_sitter::Node<'_>,
    shift: usize,
) -> SyntaxTree {
    let mut nodes: Vec<AstNode> = Vec::new();
    let span_of = |n: tree_sitter::Node<'_>| {
        Span::new(
            n.start_byte().saturating_sub(shift),
            n.end_byte().saturating_sub(shift),
        )
    };
    nodes.push(AstNode {
        kind: intern(root.kind()),
        span: span_of(root),
        children: Vec::new(),
        parent: None,
        field: None,
        is_terminal: false,
        is_named: root.is_named(),
    });
    // (ts node, arena id)
    let mut stack = vec![(root, NodeId(0))];
    while let Some((ts_node, id)) = stack.pop() {
        let atomic = ATOMIC_KINDS.contains(&ts_node.kind());
        if atomic || ts_node.child_count() == 0 {
            nodes[id.index()].is_terminal = true;
            continue;
        }
        let mut cursor = ts_node.walk();
        let mut child_ids = Vec::new();
        let mut pending = Vec::new();
        if cursor.goto_first_child() {
            loop {
                let child = cursor.node();
                let child_id = NodeId(nodes.len() as u32);
                nodes.push(AstNode {
                    kind: intern(child.kind()),
                    span: span_of(child),
                    children: Vec::new(),
                    parent: Some(id),
                    field: cursor.field_name().map(intern),
                    is_terminal: false,
                    is_named: child.is_named(),
                });
                child_ids.push(child_id);
                pending.push((child, child_id));
                if !cursor.goto_next_sibling() {
                    break;
                }
            }
        }
        nodes[id.index()].children = child_ids;
        stack.extend(pending.into_iter().rev());
    }
    SyntaxTree::from_parts(language, source, nodes, NodeId(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(text: &str) -> SourceFunction {
        SourceFunction::new("t", Language::C, text)
    }

    #[test]
    fn minimal_c_function_root_is_function_definition() {
        let tree = parse(&c("int f(){return 0;}")).unwrap();
        assert_eq!(tree.kind(tree.root()), "function_definition");
        assert_eq!(tree.text(tree.root()), "int f(){return 0;}");
    }

    #[test]
    fn forced_syntax_error_reports_one_span() {
        let err = parse(&c("int f({")).unwrap_err();
        match err {
            ParseError::Syntax { spans } => assert_eq!(spans.len(), 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ternary_is_a_conditional_expression() {
        let tree = parse(&c("int f(int x){int y; y = (x != 0) ? 2/x : 0; return y;}")).unwrap();
        assert!(tree.find_kind(tree.root(), "conditional_expression").count() == 1);
    }

    #[test]
    fn java_method_is_unwrapped_with_local_spans() {
        let src = "int add(int a, int b) { return a + b; }";
        let tree = parse(&SourceFunction::new("j", Language::Java, src)).unwrap();
        assert_eq!(tree.kind(tree.root()), "method_declaration");
        assert_eq!(tree.span(tree.root()), Span::new(0, src.len()));
        let name = tree.child_by_field(tree.root(), "name").unwrap();
        assert_eq!(tree.text(name), "add");
    }

    #[test]
    fn string_literals_are_single_terminals() {
        let tree = parse(&c("void f(){ puts(\"a b\\n\"); }")).unwrap();
        let lit = tree.find_kind(tree.root(), "string_literal").next().unwrap();
        assert!(tree.node(lit).is_terminal);
        assert_eq!(tree.text(lit), "\"a b\\n\"");
    }

    #[test]
    fn two_functions_is_not_a_single_function() {
        let err = parse(&c("int f(){return 0;} int g(){return 1;}")).unwrap_err();
        assert_eq!(err, ParseError::NoFunction { found: 2 });
    }

    #[test]
    fn empty_text_is_rejected() {
        assert_eq!(parse(&c("  \n")).unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn cpp_template_function_parses() {
        let src = "template <typename T> T twice(T v) { return v + v; }";
        let tree = parse(&SourceFunction::new("x", Language::Cpp, src)).unwrap();
        assert_eq!(tree.kind(tree.root()), "template_declaration");
    }
}
