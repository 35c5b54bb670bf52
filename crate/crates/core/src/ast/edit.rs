use super::{parse, ParseError, SourceFunction, Span, SyntaxTree};
use thiserror::Error;

/// Replace the bytes in `span` with `replacement`. A zero-width span is an insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edit {
    pub span: Span,
    pub replacement: String,
}

impl Edit {
    pub fn new(span: Span, replacement: impl Into<String>) -> Self {
        Self {
            span,
            replacement: replacement.into(),
        }
    }

    pub fn insert(at: usize, text: impl Into<String>) -> Self {
        Self::new(Span::new(at, at), text)
    }

    pub fn delete(span: Span) -> Self {
        Self::new(span, "")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EditError {
    #[error("edit {0} lies outside the source")]
    OutOfBounds(Span),
    #[error("edits {0} and {1} overlap")]
    OverlappingEdits(Span, Span),
    #[error("edited source no longer parses: {0}")]
    PostEditParseFailure(ParseError),
}

/// Applies `edits` to the tree's source and checks that the result still
/// parses as a single function of the same language.
pub fn render(tree: &SyntaxTree, edits: &[Edit]) -> Result<String, EditError> {
    let text = render_unchecked(tree.source(), edits)?;
    let func = SourceFunction::new("render", tree.language(), text);
    match parse(&func) {
        Ok(_) => Ok(func.text),
        Err(e) => Err(EditError::PostEditParseFailure(e)),
    }
}

/// Applies `edits` without re-parsing. Edits may be given in any order.
pub fn render_unchecked(source: &str, edits: &[Edit]) -> Result<String, EditError> {
    splice(source, Span::new(0, source.len()), edits)
}

/// Renders only `base` of `source`, with `edits` (which must lie inside `base`) applied.
pub fn splice(source: &str, base: Span, edits: &[Edit]) -> Result<String, EditError> {
    let mut sorted: Vec<&Edit> = edits.iter().collect();
    sorted.sort_by_key(|e| (e.span.start, e.span.end));
    for e in &sorted {
        if e.span.start < base.start
            || e.span.end > base.end
            || !source.is_char_boundary(e.span.start)
            || !source.is_char_boundary(e.span.end)
        {
            return Err(EditError::OutOfBounds(e.span));
        }
    }
    for pair in sorted.windows(2) {
        let (a, b) = (pair[0].span, pair[1].span);
        // Two insertions at the same offset have no canonical order.
        if a.end > b.start || (a == b && a.is_empty()) {
            return Err(EditError::OverlappingEdits(a, b));
        }
    }
    let mut out = String::with_capacity(base.len() + 16);
    let mut cursor = base.start;
    for e in sorted {
        out.push_str(&source[cursor..e.span.start]);
        out.push_str(&e.replacement);
        cursor = e.span.end;
    }
    out.push_str(&source[cursor..base.end]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{parse, Language};

    fn tree(src: &str) -> SyntaxTree {
        parse(&SourceFunction::new("t", Language::C, src)).unwrap()
    }

    #[test]
    fn no_edits_is_identity() {
        let src = "int f(){ int x; /* c */ return 0; }";
        assert_eq!(render(&tree(src), &[]).unwrap(), src);
    }

    #[test]
    fn single_splice() {
        assert_eq!(
            render_unchecked("int x;", &[Edit::new(Span::new(4, 5), "y")]).unwrap(),
            "int y;"
        );
    }

    #[test]
    fn order_of_submission_does_not_matter() {
        let src = "int f(){ int a = 1; int b = 2; return a + b; }";
        let e1 = Edit::new(Span::new(13, 14), "x");
        let e2 = Edit::new(Span::new(28, 29), "3");
        let one = render_unchecked(src, &[e1.clone(), e2.clone()]).unwrap();
        let two = render_unchecked(src, &[e2, e1]).unwrap();
        assert_eq!(one, two);
    }

    #[test]
    fn overlapping_edits_rejected() {
        let err = render_unchecked(
            "abcdef",
            &[Edit::new(Span::new(0, 3), "x"), Edit::new(Span::new(2, 4), "y")],
        )
        .unwrap_err();
        assert!(matches!(err, EditError::OverlappingEdits(..)));
        let err = render_unchecked("abc", &[Edit::insert(1, "x"), Edit::insert(1, "y")]).unwrap_err();
        assert!(matches!(err, EditError::OverlappingEdits(..)));
    }

    #[test]
    fn insertion_before_replacement_at_same_offset() {
        let out = render_unchecked("abc", &[Edit::new(Span::new(1, 2), "X"), Edit::insert(1, "_")]).unwrap();
        assert_eq!(out, "a_Xc");
    }

    #[test]
    fn broken_result_is_reported() {
        let t = tree("int f(){ return 0; }");
        let err = render(&t, &[Edit::new(Span::new(17, 18), "")]).unwrap_err();
        assert!(matches!(err, EditError::PostEditParseFailure(_)));
    }

    #[test]
    fn out_of_bounds() {
        let err = render_unchecked("ab", &[Edit::new(Span::new(1, 5), "")]).unwrap_err();
        assert_eq!(err, EditError::OutOfBounds(Span::new(1, 5)));
    }
}
