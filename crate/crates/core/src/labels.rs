//! Local AST labels: every code token is tagged with its own grammar kind
//! and the kind of its immediate parent, rendered as `tt#pt`.

use crate::ast::{flatten_tokens, parse, SourceFunction, SyntaxTree, Token};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use thiserror::Error;

pub const PAD_LABEL: &str = "[PAD]";
pub const UNK_LABEL: &str = "[UNK]";
pub const CLS_LABEL: &str = "[CLS]";
pub const SEP_LABEL: &str = "[SEP]";
pub const SPECIAL_LABELS: [&str; 4] = [PAD_LABEL, UNK_LABEL, CLS_LABEL, SEP_LABEL];

pub const PAD_LABEL_ID: u32 = 0;
pub const UNK_LABEL_ID: u32 = 1;
pub const CLS_LABEL_ID: u32 = 2;
pub const SEP_LABEL_ID: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AstLabel {
    pub terminal_type: &'static str,
    pub parent_type: &'static str,
}

impl AstLabel {
    pub fn rendered(&self) -> String {
        format!("{}#{}", self.terminal_type, self.parent_type)
    }
}

impl fmt::Display for AstLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.terminal_type, self.parent_type)
    }
}

/// Labels for the given tokens of `tree`.
pub fn labels_for(tree: &SyntaxTree, tokens: &[Token]) -> Vec<AstLabel> {
    tokens
        .iter()
        .map(|t| AstLabel {
            terminal_type: t.kind,
            parent_type: tree.parent(t.node).map(|p| tree.kind(p)).unwrap_or_else(|| tree.kind(tree.root())),
        })
        .collect()
}

/// One label per flattened token, in token order.
pub fn label_sequence(tree: &SyntaxTree) -> Vec<AstLabel> {
    labels_for(tree, &flatten_tokens(tree))
}

#[derive(Debug, Error)]
pub enum LabelVocabError {
    #[error("label vocabulary I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("label vocabulary line {line}: expected {expected:?}, found {found:?}")]
    MissingSpecial { line: usize, expected: &'static str, found: String },
    #[error("label vocabulary line {line}: duplicate label {label:?}")]
    Duplicate { line: usize, label: String },
}

/// Dense label ids: the four specials first, then labels in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelVocab {
    labels: Vec<String>,
    index: HashMap<String, u32>,
}

impl LabelVocab {
    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set: BTreeSet<String> = labels.into_iter().map(Into::into).collect();
        for s in SPECIAL_LABELS {
            set.remove(s);
        }
        let labels: Vec<String> = SPECIAL_LABELS.iter().map(|s| s.to_string()).chain(set).collect();
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i as u32)).collect();
        Self { labels, index }
    }

    /// Scans every function; functions that do not parse are skipped and counted.
    pub fn build<'a, I>(corpus: I) -> (Self, usize)
    where
        I: IntoIterator<Item = &'a SourceFunction>,
    {
        let mut seen = BTreeSet::new();
        let mut skipped = 0;
        for func in corpus {
            match parse(func) {
                Ok(tree) => seen.extend(label_sequence(&tree).iter().map(AstLabel::rendered)),
                Err(e) => {
                    log::warn!("label scan skips {}: {e}", func.id);
                    skipped += 1;
                }
            }
        }
        (Self::from_labels(seen), skipped)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Id of a rendered label; unknown labels map to `[UNK]`.
    pub fn id(&self, label: &str) -> u32 {
        self.index.get(label).copied().unwrap_or(UNK_LABEL_ID)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn label(&self, id: u32) -> Option<&str> {
        self.labels.get(id as usize).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn encode(&self, labels: &[AstLabel]) -> Vec<u32> {
        labels.iter().map(|l| self.id(&l.rendered())).collect()
    }

    pub fn encode_rendered<S: AsRef<str>>(&self, labels: &[S]) -> Vec<u32> {
        labels.iter().map(|l| self.id(l.as_ref())).collect()
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for l in &self.labels {
            writeln!(w, "{l}")?;
        }
        Ok(())
    }

    pub fn read_from<R: BufRead>(r: R) -> Result<Self, LabelVocabError> {
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        for (i, line) in r.lines().enumerate() {
            let line = line?;
            if let Some(expected) = SPECIAL_LABELS.get(i) {
                if line != *expected {
                    return Err(LabelVocabError::MissingSpecial { line: i + 1, expected, found: line });
                }
            }
            if index.insert(line.clone(), i as u32).is_some() {
                return Err(LabelVocabError::Duplicate { line: i + 1, label: line });
            }
            labels.push(line);
        }
        if labels.len() < SPECIAL_LABELS.len() {
            let line = labels.len() + 1;
            return Err(LabelVocabError::MissingSpecial {
                line,
                expected: SPECIAL_LABELS[labels.len()],
                found: String::new(),
            });
        }
        Ok(Self { labels, index })
    }

    pub fn save(&self, path: &Path) -> Result<(), LabelVocabError> {
        let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
        self.write_to(&mut f)?;
        f.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self, LabelVocabError> {
        Self::read_from(std::io::BufReader::new(std::fs::File::open(path)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{parse_unit, Language};

    fn c(src: &str) -> SourceFunction {
        SourceFunction::new("t", Language::C, src)
    }

    #[test]
    fn declaration_labels() {
        let unit = parse_unit(Language::C, "int x;");
        let got: Vec<String> = label_sequence(&unit.tree).iter().map(AstLabel::rendered).collect();
        assert_eq!(got, ["primitive_type#declaration", "identifier#declaration", ";#declaration"]);
    }

    #[test]
    fn initialized_size_declaration() {
        let tree = parse(&c("void f(){ size_t lookup_size = 1; }")).unwrap();
        let toks = flatten_tokens(&tree);
        let labels = label_sequence(&tree);
        assert_eq!(labels.len(), toks.len());
        let at = |text: &str| labels[toks.iter().position(|t| t.text == text).unwrap()].rendered();
        assert_eq!(at("size_t"), "primitive_type#declaration");
        assert_eq!(at("lookup_size"), "identifier#init_declarator");
        assert_eq!(at("1"), "number_literal#init_declarator");
    }

    #[test]
    fn vocab_is_sorted_with_specials_first() {
        let (v, skipped) = LabelVocab::build([&c("int f(){return 0;}")]);
        assert_eq!(skipped, 0);
        assert_eq!(&v.labels()[..4], &SPECIAL_LABELS);
        let rest = &v.labels()[4..];
        assert!(rest.windows(2).all(|w| w[0] < w[1]));
        let tree = parse(&c("int f(){return 0;}")).unwrap();
        let distinct: BTreeSet<String> = label_sequence(&tree).iter().map(AstLabel::rendered).collect();
        assert_eq!(rest.len(), distinct.len());
        assert_eq!(v.id("nonexistent#label"), UNK_LABEL_ID);
    }

    #[test]
    fn vocab_round_trips_through_text() {
        let (v, _) = LabelVocab::build([&c(crate::samples::TF_EVAL)]);
        let mut buf = Vec::new();
        v.write_to(&mut buf).unwrap();
        let back = LabelVocab::read_from(&buf[..]).unwrap();
        assert_eq!(v, back);
        let mut again = Vec::new();
        LabelVocab::build([&c(crate::samples::TF_EVAL)]).0.write_to(&mut again).unwrap();
        assert_eq!(buf, again);
        assert!(LabelVocab::read_from(&b"[PAD]\n[SEP]\n"[..]).is_err());
    }
}
