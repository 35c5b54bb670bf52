//! Corpus ingestion: walk source trees, extract functions and methods from
//! `.c`, `.cpp` and `.java` files, drop exact duplicates, and write the corpus
//! as JSON lines next to a manifest.

use crate::ast::{self, Language, SourceFunction, Span, SyntaxTree};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use thiserror::Error;
use walkdir::WalkDir;

pub const DEFAULT_MAX_FUNCTION_BYTES: usize = 100 * 1024;
pub const DEDUP_POLICY: &str = "sha256-whitespace-normalized";

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: not a directory")]
    NotADirectory { path: PathBuf },
    #[error("corpus line {line}: {source}")]
    Corpus {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestOptions {
    pub languages: Vec<Language>,
    pub max_function_bytes: usize,
}

impl Default for IngestOptions {
    fn default() -> Self {
        Self {
            languages: vec![Language::C, Language::Cpp, Language::Java],
            max_function_bytes: DEFAULT_MAX_FUNCTION_BYTES,
        }
    }
}

/// One line of the corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub id: String,
    pub language: Language,
    pub path: String,
    pub byte_span: Span,
    pub text: String,
}

impl CorpusRecord {
    pub fn to_source_function(&self) -> SourceFunction {
        SourceFunction::new(self.id.clone(), self.language, self.text.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceEntry {
    pub root: String,
    pub language: Language,
    pub files: usize,
    pub functions: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipCounts {
    pub unreadable_files: usize,
    pub parse_errors: usize,
    pub oversized: usize,
    pub duplicates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusManifest {
    pub sources: Vec<SourceEntry>,
    pub dedup: String,
    pub max_function_bytes: usize,
    pub identifier_vocab_size: usize,
    pub skipped: SkipCounts,
    /// SHA-256 of the serialized corpus file.
    pub corpus_sha256: String,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub records: Vec<CorpusRecord>,
    pub manifest: CorpusManifest,
}

/// Whitespace-insensitive content hash.
pub fn dedup_key(text: &str) -> [u8; 32] {
    let mut h = Sha256::new();
    for (i, w) in text.split_whitespace().enumerate() {
        if i > 0 {
            h.update(b" ");
        }
        h.update(w.as_bytes());
    }
    h.finalize().into()
}

fn is_function_node(tree: &SyntaxTree, id: ast::NodeId) -> bool {
    match tree.kind(id) {
        "function_definition" | "method_declaration" | "constructor_declaration" => true,
        "template_declaration" => tree.children(id).iter().any(|&c| tree.kind(c) == "function_definition"),
        _ => false,
    }
}

/// Byte spans of the outermost function or method nodes of a file.
pub fn function_spans(tree: &SyntaxTree) -> Vec<Span> {
    let mut out = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        if is_function_node(tree, id) {
            out.push(tree.span(id));
            continue;
        }
        stack.extend(tree.children(id).iter().rev());
    }
    out.sort();
    out
}

struct Extracted {
    path: String,
    language: Language,
    found: Vec<(Span, String)>,
    parse_errors: usize,
    oversized: usize,
    unreadable: bool,
}

fn extract_file(path: &Path, language: Language, max_bytes: usize) -> Extracted {
    let mut out = Extracted {
        path: path.to_string_lossy().into_owned(),
        language,
        found: Vec::new(),
        parse_errors: 0,
        oversized: 0,
        unreadable: false,
    };
    let text = match std::fs::read(path).map(String::from_utf8) {
        Ok(Ok(t)) => t,
        Ok(Err(_)) => {
            log::warn!("{}: not UTF-8, skipped", out.path);
            out.unreadable = true;
            return out;
        }
        Err(e) => {
            log::warn!("{}: {e}", out.path);
            out.unreadable = true;
            return out;
        }
    };
    let unit = ast::parse_unit(language, &text);
    for span in function_spans(&unit.tree) {
        let body = &text[span.range()];
        if body.len() > max_bytes {
            out.oversized += 1;
            continue;
        }
        let f = SourceFunction::new(String::new(), language, body);
        match ast::parse(&f) {
            Ok(_) => out.found.push((span, body.to_string())),
            Err(e) => {
                log::debug!("{}@{}: {e}", out.path, span);
                out.parse_errors += 1;
            }
        }
    }
    out
}

fn source_files(root: &Path, languages: &[Language]) -> Result<Vec<(PathBuf, Language)>, IngestError> {
    if !root.is_dir() {
        return Err(IngestError::NotADirectory { path: root.to_path_buf() });
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| IngestError::Io {
            path: e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf()),
            source: e.into(),
        })?;
        if !entry.file_type().is_file() {
            continue;
        }
        let lang = entry
            .path()
            .extension()
            .and_then(|e| e.to_str())
            .and_then(Language::from_extension);
        if let Some(lang) = lang.filter(|l| languages.contains(l)) {
            files.push((entry.into_path(), lang));
        }
    }
    Ok(files)
}

/// Extracts every function under `roots`. Files are parsed in parallel; the
/// output order is (root, path, byte offset) and the first copy of a
/// duplicate wins.
pub fn ingest(roots: &[PathBuf], options: &IngestOptions) -> Result<Corpus, IngestError> {
    let mut records = Vec::new();
    let mut sources = Vec::new();
    let mut skipped = SkipCounts::default();
    let mut seen = HashSet::new();
    for root in roots {
        let files = source_files(root, &options.languages)?;
        let extracted: Vec<Extracted> = files
            .par_iter()
            .map(|(p, l)| extract_file(p, *l, options.max_function_bytes))
            .collect();
        let mut per_lang: BTreeMap<&'static str, SourceEntry> = BTreeMap::new();
        for ex in extracted {
            let entry = per_lang.entry(ex.language.name()).or_insert_with(|| SourceEntry {
                root: root.to_string_lossy().into_owned(),
                language: ex.language,
                files: 0,
                functions: 0,
            });
            entry.files += 1;
            skipped.parse_errors += ex.parse_errors;
            skipped.oversized += ex.oversized;
            skipped.unreadable_files += usize::from(ex.unreadable);
            for (span, text) in ex.found {
                if !seen.insert(dedup_key(&text)) {
                    skipped.duplicates += 1;
                    continue;
                }
                entry.functions += 1;
                records.push(CorpusRecord {
                    id: format!("{}#{}", ex.path, span.start),
                    language: ex.language,
                    path: ex.path.clone(),
                    byte_span: span,
                    text,
                });
            }
        }
        sources.extend(per_lang.into_values().filter(|e| e.functions > 0));
    }
    let vocab = build_identifier_vocab(records.iter().map(|r| r.to_source_function()));
    let mut buf = Vec::new();
    write_corpus(&mut buf, &records)?;
    let manifest = CorpusManifest {
        sources,
        dedup: DEDUP_POLICY.to_string(),
        max_function_bytes: options.max_function_bytes,
        identifier_vocab_size: vocab.len(),
        skipped,
        corpus_sha256: hex::encode(Sha256::digest(&buf)),
    };
    Ok(Corpus { records, manifest })
}

pub fn write_corpus<W: Write>(mut w: W, records: &[CorpusRecord]) -> Result<(), IngestError> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n").map_err(|source| IngestError::Io {
            path: PathBuf::from("<corpus>"),
            source,
        })?;
    }
    Ok(())
}

pub fn read_corpus(path: &Path) -> Result<Vec<CorpusRecord>, IngestError> {
    let io = |source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = std::fs::File::open(path).map_err(io)?;
    let mut out = Vec::new();
    for (i, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io)?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|source| IngestError::Corpus { line: i + 1, source })?);
    }
    Ok(out)
}

/// Writes `corpus.jsonl` and `manifest.json` into `dir`.
pub fn write_corpus_dir(dir: &Path, corpus: &Corpus) -> Result<(), IngestError> {
    let io = |source| IngestError::Io {
        path: dir.to_path_buf(),
        source,
    };
    std::fs::create_dir_all(dir).map_err(io)?;
    let f = std::fs::File::create(dir.join("corpus.jsonl")).map_err(io)?;
    let mut w = std::io::BufWriter::new(f);
    write_corpus(&mut w, &corpus.records)?;
    w.flush().map_err(io)?;
    let mut m = serde_json::to_string_pretty(&corpus.manifest)?;
    m.push('\n');
    std::fs::write(dir.join("manifest.json"), m).map_err(io)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentifierCount {
    pub name: String,
    pub count: usize,
}

/// Counts `identifier` terminals (variables and function names) across the
/// corpus, most frequent first, ties broken by name.
pub fn build_identifier_vocab<I>(functions: I) -> Vec<IdentifierCount>
where
    I: IntoIterator<Item = SourceFunction>,
{
    let mut counts: HashMap<String, usize> = HashMap::new();
    for f in functions {
        let Ok(tree) = ast::parse(&f) else { continue };
        for t in ast::flatten_tokens(&tree) {
            if t.kind == "identifier" && !ast::query::is_reserved(f.language, &t.text) {
                *counts.entry(t.text).or_default() += 1;
            }
        }
    }
    let mut out: Vec<IdentifierCount> = counts
        .into_iter()
        .map(|(name, count)| IdentifierCount { name, count })
        .collect();
    out.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.name.cmp(&b.name)));
    out
}

/// One `name<TAB>count` line per identifier.
pub fn write_identifier_vocab<W: Write>(mut w: W, vocab: &[IdentifierCount]) -> std::io::Result<()> {
    for e in vocab {
        writeln!(w, "{}\t{}", e.name, e.count)?;
    }
    Ok(())
}

pub fn read_identifier_vocab(path: &Path) -> std::io::Result<Vec<IdentifierCount>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parsed = line
            .split_once('\t')
            .and_then(|(n, c)| Some((n, c.trim().parse().ok()?)));
        let Some((name, count)) = parsed else {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("identifier vocab line {}: expected `name<TAB>count`", i + 1),
            ));
        };
        out.push(IdentifierCount {
            name: name.to_string(),
            count,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, text: &str) {
        let p = dir.join(name);
        std::fs::create_dir_all(p.parent().unwrap()).unwrap();
        std::fs::write(p, text).unwrap();
    }

    #[test]
    fn extracts_dedups_and_filters() {
        let d = tempfile::tempdir().unwrap();
        write(d.path(), "a.c", "int f(int x) { return x; }\n\nint g(void) { return 1; }\n");
        write(d.path(), "sub/b.c", "int f(int x)\n{\n  return x;\n}\n");
        write(d.path(), "skip.py", "def f(): pass\n");
        write(
            d.path(),
            "M.java",
            "class M { int a() { Runnable r = () -> { int z = 0; }; return 1; } M() {} }\n",
        );
        let c = ingest(&[d.path().to_path_buf()], &IngestOptions::default()).unwrap();
        let texts: Vec<&str> = c.records.iter().map(|r| r.text.as_str()).collect();
        assert_eq!(texts.len(), 4, "{texts:?}");
        assert!(texts[0].starts_with("int a()"));
        assert_eq!(texts[1], "M() {}");
        assert_eq!(texts[2], "int f(int x) { return x; }");
        assert_eq!(c.manifest.skipped.duplicates, 1);
        let c_entry = c.manifest.sources.iter().find(|s| s.language == Language::C).unwrap();
        assert_eq!((c_entry.files, c_entry.functions), (2, 2));
        for r in &c.records {
            assert!(ast::parse(&r.to_source_function()).is_ok());
        }
    }

    #[test]
    fn oversized_functions_are_counted() {
        let d = tempfile::tempdir().unwrap();
        write(d.path(), "a.c", "int f(void) { return 1; }\nint g(void) { return 22222222; }\n");
        let opts = IngestOptions {
            max_function_bytes: 25,
            ..IngestOptions::default()
        };
        let c = ingest(&[d.path().to_path_buf()], &opts).unwrap();
        assert_eq!(c.records.len(), 1);
        assert_eq!(c.manifest.skipped.oversized, 1);
    }

    #[test]
    fn identifier_vocab_counts() {
        let f = SourceFunction::new("x", Language::C, "int foo(){int bar=0; return bar;}");
        let v = build_identifier_vocab([f]);
        assert_eq!(
            v,
            vec![
                IdentifierCount { name: "bar".into(), count: 2 },
                IdentifierCount { name: "foo".into(), count: 1 },
            ]
        );
        let d = tempfile::tempdir().unwrap();
        let p = d.path().join("v.tsv");
        write_identifier_vocab(std::fs::File::create(&p).unwrap(), &v).unwrap();
        assert_eq!(read_identifier_vocab(&p).unwrap(), v);
    }
}
