//! Capture-free renaming of locals, parameters and the function name.

use super::CloneSite;
use crate::ast::{query, DeclId, DeclKind, Edit, Language, ScopeInfo, SyntaxTree};
use crate::rng::Rng;
use rand::seq::IndexedRandom;
use rand::Rng as _;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenameStrategy {
    /// `i` becomes another single letter.
    SingleChar,
    /// Sub-words of a snake/camel case name are permuted or dropped.
    SubWord,
    /// A name drawn from the identifier vocabulary.
    Vocabulary,
}

/// Library functions, macros and common globals a new name must not shadow.
const LIBRARY_NAMES: &[&str] = &[
    "abs", "labs", "llabs", "div", "printf", "fprintf", "sprintf", "snprintf", "scanf", "sscanf",
    "puts", "putchar", "getchar", "fgets", "fputs", "fopen", "fclose", "perror", "malloc",
    "calloc", "realloc", "free", "memcpy", "memset", "memmove", "memcmp", "strlen", "strcpy",
    "strncpy", "strcmp", "strncmp", "strcat", "strchr", "strrchr", "strstr", "strtok", "strdup",
    "strtol", "strtoul", "atoi", "atol", "atof", "exit", "abort", "qsort", "bsearch", "rand",
    "srand", "time", "clock", "sqrt", "pow", "exp", "log", "log2", "log10", "sin", "cos", "tan",
    "floor", "ceil", "fabs", "fmod", "round", "trunc", "hypot", "cbrt", "fmin", "fmax", "min",
    "max", "isdigit", "isalpha", "isalnum", "isspace", "isupper", "islower", "toupper", "tolower",
    "errno", "stdin", "stdout", "stderr", "assert", "offsetof", "index", "signal", "raise",
    "select", "read", "write", "open", "close", "link", "unlink", "sleep", "fork", "wait", "kill",
    "pipe", "dup", "stat", "y0", "y1", "j0", "j1", "jn", "yn", "gamma", "isnan", "isinf",
    "va_list", "va_start", "va_end", "va_arg", "main", "std", "string", "vector", "map", "set",
    "list", "cout", "cin", "cerr", "endl", "swap", "sort", "count", "find", "begin", "end",
    "move", "pair", "array", "size", "length", "System", "Math", "String", "Object", "Integer",
    "Long", "Double", "Float", "Boolean", "Character", "List", "Map", "Set",
];

/// Built-in fallback vocabulary for random renaming.
pub fn default_vocabulary() -> Vec<String> {
    [
        "acc", "addr", "amount", "arg", "base", "buf", "buffer", "cap", "cnt", "cur", "data",
        "delta", "dest", "diff", "dst", "elem", "entry", "flag", "flags", "head", "idx", "item",
        "key", "last", "left", "len", "limit", "lo", "hi", "mask", "mid", "next", "node", "num",
        "off", "offset", "out", "pos", "prev", "ptr", "rank", "res", "result", "ret", "right",
        "sum", "shift", "src", "state", "step", "tail", "tmp", "total", "val", "value", "width",
        "rand_name", "ctxt", "nd", "lookup_sz", "emb_sz",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

pub(super) fn sites(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<CloneSite> {
    scope
        .decl_ids()
        .filter(|&d| renamable(tree, scope, d))
        .map(|decl| CloneSite::Rename { decl })
        .collect()
}

fn renamable(tree: &SyntaxTree, scope: &ScopeInfo, id: DeclId) -> bool {
    let decl = scope.decl(id);
    let name = decl.name.as_str();
    if decl.kind == DeclKind::Function {
        let empty_body = query::function_body(tree)
            .map(|b| tree.named_children(b).next().is_none())
            .unwrap_or(true);
        if name == "main" || empty_body {
            return false;
        }
        if tree.language() == Language::Java {
            let func = decl.statement;
            // Constructors must keep the class name; annotated methods may override.
            if tree.kind(func) != "method_declaration"
                || tree
                    .child_of_kind(func, "modifiers")
                    .map(|m| tree.contains_kind(m, &["annotation", "marker_annotation"]))
                    .unwrap_or(false)
            {
                return false;
            }
        }
    }
    if scope.declarations_named(name).len() != 1 {
        return false;
    }
    let root = tree.root();
    let all_bound = tree
        .descendants(root)
        .filter(|&n| tree.kind(n) == "identifier" && tree.text(n) == name)
        .all(|n| scope.binding_of(n) == Some(id));
    if !all_bound {
        return false;
    }
    // Names mentioned inside preprocessor lines cannot be tracked.
    !tree
        .descendants(root)
        .filter(|&n| tree.kind(n).starts_with("preproc_"))
        .any(|n| query::words(tree.text(n)).contains(name))
}

/// Splits snake_case or camelCase into sub-words.
fn sub_words(name: &str) -> (Vec<String>, bool) {
    let trimmed = name.trim_matches('_');
    if trimmed.contains('_') {
        let words = trimmed.split('_').filter(|w| !w.is_empty()).map(str::to_string).collect();
        return (words, true);
    }
    let mut words = Vec::new();
    let mut cur = String::new();
    let chars: Vec<char> = trimmed.chars().collect();
    for (i, &c) in chars.iter().enumerate() {
        let boundary = c.is_ascii_uppercase()
            && i > 0
            && (chars[i - 1].is_ascii_lowercase()
                || chars[i - 1].is_ascii_digit()
                || chars.get(i + 1).map(|n| n.is_ascii_lowercase()).unwrap_or(false)
                    && chars[i - 1].is_ascii_uppercase());
        if boundary && !cur.is_empty() {
            words.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    if !cur.is_empty() {
        words.push(cur);
    }
    (words, false)
}

fn join_words(words: &[&String], snake: bool, lower_first: bool) -> String {
    if snake {
        return words.iter().map(|w| w.as_str()).collect::<Vec<_>>().join("_");
    }
    let mut out = String::new();
    for (i, w) in words.iter().enumerate() {
        let mut chars = w.chars();
        if let Some(first) = chars.next() {
            if i == 0 && lower_first {
                out.push(first.to_ascii_lowercase());
            } else {
                out.push(first.to_ascii_uppercase());
            }
            out.extend(chars);
        }
    }
    out
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Deterministic candidate names for a strategy, before collision filtering.
/// The vocabulary strategy has no fixed candidate list.
pub fn rename_candidates(name: &str, strategy: RenameStrategy) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    match strategy {
        RenameStrategy::SingleChar => {
            if name.chars().count() == 1 {
                let upper = name.chars().all(|c| c.is_ascii_uppercase());
                for c in 'a'..='z' {
                    let c = if upper { c.to_ascii_uppercase() } else { c };
                    out.push(c.to_string());
                }
            }
        }
        RenameStrategy::SubWord => {
            let (words, snake) = sub_words(name);
            if words.len() < 2 || words.len() > 5 {
                return Vec::new();
            }
            let lower_first = name.chars().next().map(|c| !c.is_ascii_uppercase()).unwrap_or(true);
            let refs: Vec<&String> = words.iter().collect();
            if words.len() <= 4 {
                for p in permutations(&refs) {
                    out.push(join_words(&p, snake, lower_first));
                }
            }
            // Non-empty proper subsets, in original order.
            let n = words.len();
            for mask in 1..(1u32 << n) - 1 {
                let subset: Vec<&String> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &words[i]).collect();
                out.push(join_words(&subset, snake, lower_first));
            }
        }
        RenameStrategy::Vocabulary => {}
    }
    let mut seen = HashSet::new();
    out.retain(|c| c != name && query::is_valid_identifier(c) && seen.insert(c.clone()));
    out
}

fn acceptable(candidate: &str, old: &str, language: Language, taken: &HashSet<&str>) -> bool {
    let shouting = candidate.len() > 1
        && candidate.chars().any(|c| c.is_ascii_alphabetic())
        && !candidate.chars().any(|c| c.is_ascii_lowercase());
    candidate != old
        && query::is_valid_identifier(candidate)
        && !candidate.starts_with("__")
        && !shouting
        && !taken.contains(candidate)
        && !query::is_reserved(language, candidate)
        && !LIBRARY_NAMES.contains(&candidate)
}

pub(super) fn apply(
    id: DeclId,
    tree: &SyntaxTree,
    scope: &ScopeInfo,
    ctx: &super::CloneContext,
    rng: &mut Rng,
) -> Option<(Vec<Edit>, String)> {
    let decl = scope.decl(id);
    let old = decl.name.as_str();
    let taken = query::words(tree.source());
    let lang = tree.language();
    let mut new_name: Option<(String, RenameStrategy)> = None;
    for strategy in [RenameStrategy::SingleChar, RenameStrategy::SubWord] {
        let cands: Vec<String> = rename_candidates(old, strategy)
            .into_iter()
            .filter(|c| acceptable(c, old, lang, &taken))
            .collect();
        if let Some(c) = cands.choose(rng) {
            new_name = Some((c.clone(), strategy));
            break;
        }
    }
    if new_name.is_none() {
        for _ in 0..64 {
            let Some(c) = ctx.vocabulary.choose(rng) else { break };
            if acceptable(c, old, lang, &taken) {
                new_name = Some((c.clone(), RenameStrategy::Vocabulary));
                break;
            }
        }
    }
    if new_name.is_none() {
        for _ in 0..64 {
            let c = format!("{}_{}", old.trim_end_matches('_'), rng.random_range(2..1000u32));
            if acceptable(&c, old, lang, &taken) {
                new_name = Some((c, RenameStrategy::Vocabulary));
                break;
            }
        }
    }
    let (new, _) = new_name?;
    let mut edits = vec![Edit::new(tree.span(decl.ident), new.clone())];
    for u in scope.uses_of(id) {
        edits.push(Edit::new(tree.span(u), new.clone()));
    }
    Some((edits, format!("{old} -> {new}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sub_word_candidates() {
        let c = rename_candidates("client_server", RenameStrategy::SubWord);
        let set: HashSet<&str> = c.iter().map(String::as_str).collect();
        assert_eq!(set, HashSet::from(["server_client", "client", "server"]));
        let c = rename_candidates("lookupSize", RenameStrategy::SubWord);
        assert!(c.contains(&"sizeLookup".to_string()));
        assert!(c.contains(&"lookup".to_string()));
        assert!(c.contains(&"size".to_string()));
        assert!(rename_candidates("count", RenameStrategy::SubWord).is_empty());
    }

    #[test]
    fn single_char_candidates() {
        let c = rename_candidates("i", RenameStrategy::SingleChar);
        assert_eq!(c.len(), 25);
        assert!(!c.contains(&"i".to_string()));
        assert!(rename_candidates("ix", RenameStrategy::SingleChar).is_empty());
    }

    #[test]
    fn camel_splitting() {
        assert_eq!(sub_words("parseHTTPHeader").0, vec!["parse", "HTTP", "Header"]);
        assert_eq!(sub_words("embedding_size").0, vec!["embedding", "size"]);
    }
}
