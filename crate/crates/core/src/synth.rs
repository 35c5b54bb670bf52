//! Seeded generator of small, self-contained C and Java functions. Used for
//! toy-scale training data and for tests that need many distinct inputs.

use crate::ast::{Language, SourceFunction};
use crate::rng::{derive_seed, rng_from_seed, Rng};
use rand::seq::IndexedRandom;
use rand::Rng as _;

const VARS: &[&str] = &[
    "count", "total", "acc", "limit", "value", "width", "height", "offset", "size", "step",
    "result", "score", "level", "low", "high", "mid", "base", "cur", "delta", "weight", "sum",
    "prod", "hits", "misses", "best", "worst", "span", "depth",
];
const VERBS: &[&str] = &[
    "compute", "update", "scan", "find", "check", "merge", "count", "apply", "reduce", "fill",
    "measure", "scale", "clamp", "shift", "probe",
];
const NOUNS: &[&str] = &[
    "Sum", "Max", "Range", "Items", "Buffer", "Weights", "Score", "Index", "Table", "Window",
    "Levels", "Bounds", "Counts", "Total",
];
const HELPERS: &[&str] = &["helper", "lookup", "emit", "combine", "adjust", "record", "mix"];
const PARAMS: &[&str] = &["a", "b", "c", "k", "m", "x", "y", "threshold", "factor", "bias"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ty {
    Int,
    Long,
    Double,
}

impl Ty {
    fn name(self) -> &'static str {
        match self {
            Ty::Int => "int",
            Ty::Long => "long",
            Ty::Double => "double",
        }
    }
}

struct Gen {
    rng: Rng,
    lang: Language,
    vars: Vec<(String, Ty)>,
    has_array: bool,
    has_pointer: bool,
    loop_depth: usize,
    out: String,
}

impl Gen {
    fn line(&mut self, indent: usize, text: &str) {
        for _ in 0..indent {
            self.out.push_str("    ");
        }
        self.out.push_str(text);
        self.out.push('\n');
    }

    fn fresh(&mut self) -> String {
        let unused: Vec<&str> = VARS
            .iter()
            .copied()
            .filter(|v| !self.vars.iter().any(|(n, _)| n == v))
            .collect();
        match unused.choose(&mut self.rng) {
            Some(v) => v.to_string(),
            None => format!("t{}", self.vars.len()),
        }
    }

    fn var(&mut self) -> String {
        self.vars.choose(&mut self.rng).map(|(n, _)| n.clone()).unwrap_or_else(|| "0".into())
    }

    fn int_var(&mut self) -> Option<String> {
        let ints: Vec<&String> = self.vars.iter().filter(|(_, t)| *t != Ty::Double).map(|(n, _)| n).collect();
        ints.choose(&mut self.rng).map(|s| s.to_string())
    }

    fn literal(&mut self) -> String {
        match self.rng.random_range(0..6) {
            0 => "0".into(),
            1 => "1".into(),
            2 => "2".into(),
            _ => self.rng.random_range(3..100).to_string(),
        }
    }

    fn atom(&mut self) -> String {
        match self.rng.random_range(0..5) {
            0 | 1 => self.literal(),
            4 if self.has_array => {
                let i = self.int_var().unwrap_or_else(|| "0".into());
                format!("data[{i} % n]")
            }
            _ => self.var(),
        }
    }

    fn expr(&mut self, depth: usize) -> String {
        if depth == 0 || self.rng.random_bool(0.4) {
            return self.atom();
        }
        let op = *["+", "-", "*", "+", "-", "/", "%"].choose(&mut self.rng).unwrap();
        let lhs = self.expr(depth - 1);
        let rhs = if op == "/" || op == "%" {
            self.rng.random_range(2..10).to_string()
        } else {
            self.expr(depth - 1)
        };
        if self.rng.random_bool(0.3) {
            format!("({lhs} {op} {rhs})")
        } else {
            format!("{lhs} {op} {rhs}")
        }
    }

    fn cond(&mut self) -> String {
        let op = *["<", "<=", ">", ">=", "==", "!="].choose(&mut self.rng).unwrap();
        let l = self.var();
        let r = self.expr(1);
        let c = format!("{l} {op} {r}");
        if self.rng.random_bool(0.2) {
            let op2 = *["<", ">", "!="].choose(&mut self.rng).unwrap();
            let l2 = self.var();
            let r2 = self.literal();
            let join = if self.rng.random_bool(0.5) { "&&" } else { "||" };
            format!("{c} {join} {l2} {op2} {r2}")
        } else {
            c
        }
    }

    fn call(&mut self) -> String {
        let name = *HELPERS.choose(&mut self.rng).unwrap();
        let n = self.rng.random_range(1..=3);
        let args: Vec<String> = (0..n).map(|_| self.expr(1)).collect();
        format!("{name}({})", args.join(", "))
    }

    fn stmt(&mut self, indent: usize, depth: usize) {
        let choice = self.rng.random_range(0..12);
        match choice {
            0 | 1 => {
                let ty = match self.rng.random_range(0..8) {
                    0 => Ty::Double,
                    1 => Ty::Long,
                    _ => Ty::Int,
                };
                let name = self.fresh();
                let init = if self.rng.random_bool(0.3) { self.call() } else { self.expr(2) };
                self.line(indent, &format!("{} {name} = {init};", ty.name()));
                self.vars.push((name, ty));
            }
            2 | 3 => {
                let Some(v) = self.int_var() else { return self.stmt(indent, depth) };
                let op = *["=", "+=", "-=", "*=", "+="].choose(&mut self.rng).unwrap();
                let e = self.expr(2);
                self.line(indent, &format!("{v} {op} {e};"));
            }
            4 if depth > 0 && self.loop_depth < 2 => {
                let iv = ["i", "j"][self.loop_depth];
                let bound = if self.has_array { "n".to_string() } else { self.atom() };
                let cmp = if self.rng.random_bool(0.8) { "<" } else { "<=" };
                self.line(indent, &format!("for (int {iv} = 0; {iv} {cmp} {bound}; {iv}++) {{"));
                self.loop_depth += 1;
                self.vars.push((iv.to_string(), Ty::Int));
                let body = self.rng.random_range(1..=3);
                for _ in 0..body {
                    self.stmt(indent + 1, depth - 1);
                }
                self.vars.retain(|(n, _)| n != iv);
                self.loop_depth -= 1;
                self.line(indent, "}");
            }
            5 if depth > 0 => {
                let c = self.cond();
                self.line(indent, &format!("if ({c}) {{"));
                let saved = self.vars.len();
                self.stmt(indent + 1, depth - 1);
                self.vars.truncate(saved);
                if self.rng.random_bool(0.5) {
                    self.line(indent, "} else {");
                    self.stmt(indent + 1, depth - 1);
                    self.vars.truncate(saved);
                }
                self.line(indent, "}");
            }
            6 if depth > 0 => {
                let Some(v) = self.int_var() else { return self.stmt(indent, depth) };
                let k = self.rng.random_range(2..5);
                self.line(indent, &format!("while ({v} > {k}) {{"));
                self.line(indent + 1, &format!("{v} = {v} / {k};"));
                let saved = self.vars.len();
                self.stmt(indent + 1, depth - 1);
                self.vars.truncate(saved);
                self.line(indent, "}");
            }
            7 => {
                let c = self.cond();
                let ret = if self.rng.random_bool(0.5) { "-1" } else { "0" };
                self.line(indent, &format!("if ({c}) {{"));
                self.line(indent + 1, &format!("return {ret};"));
                self.line(indent, "}");
            }
            8 => {
                let c = self.call();
                self.line(indent, &format!("{c};"));
            }
            9 if self.lang == Language::C && self.has_array && !self.has_pointer => {
                self.has_pointer = true;
                let i = self.literal();
                self.line(indent, &format!("int *p = data + {i} % n;"));
                let e = self.expr(1);
                self.line(indent, &format!("*p = {e};"));
            }
            10 if self.has_array => {
                let Some(i) = self.int_var() else { return self.stmt(indent, depth) };
                let e = self.expr(1);
                self.line(indent, &format!("data[{i} % n] = {e};"));
            }
            _ => {
                let Some(v) = self.int_var() else { return self.stmt(indent, depth) };
                let op = if self.rng.random_bool(0.5) { "++" } else { "--" };
                self.line(indent, &format!("{v}{op};"));
            }
        }
    }
}

/// Generates one function. The same `(language, seed)` always yields the
/// same text.
pub fn synth_function(language: Language, seed: u64) -> SourceFunction {
    let mut rng = rng_from_seed(derive_seed(seed, "synth"));
    let verb = *VERBS.choose(&mut rng).unwrap();
    let noun = *NOUNS.choose(&mut rng).unwrap();
    let name = match language {
        Language::Java => format!("{verb}{noun}"),
        _ => format!("{verb}_{}", noun.to_lowercase()),
    };
    let has_array = rng.random_bool(0.6);
    let ret = if rng.random_bool(0.8) { Ty::Int } else { Ty::Long };
    let mut params: Vec<String> = Vec::new();
    let mut vars = Vec::new();
    if has_array {
        params.push(match language {
            Language::Java => "int[] data".into(),
            _ => "int *data".into(),
        });
        params.push("int n".into());
        vars.push(("n".to_string(), Ty::Int));
    }
    let scalars = rng.random_range(1..=3);
    let mut names: Vec<&str> = PARAMS.to_vec();
    for _ in 0..scalars {
        let idx = rng.random_range(0..names.len());
        let p = names.remove(idx);
        params.push(format!("int {p}"));
        vars.push((p.to_string(), Ty::Int));
    }
    let mut g = Gen {
        rng,
        lang: language,
        vars,
        has_array,
        has_pointer: false,
        loop_depth: 0,
        out: String::new(),
    };
    let modifier = if language == Language::Java { "static " } else { "" };
    g.out.push_str(&format!("{modifier}{} {name}({}) {{\n", ret.name(), params.join(", ")));
    let stmts = g.rng.random_range(3..=7);
    for _ in 0..stmts {
        g.stmt(1, 2);
    }
    let r = g.int_var().unwrap_or_else(|| "0".into());
    let tail = if g.rng.random_bool(0.5) { format!("{r}") } else { g.expr(1) };
    let cast = if ret == Ty::Int && g.vars.iter().any(|(n, t)| *t != Ty::Int && tail.contains(n.as_str())) {
        "(int) "
    } else {
        ""
    };
    g.line(1, &format!("return {cast}({tail});"));
    g.out.push('}');
    SourceFunction::new(format!("synth-{}-{seed}", language.name()), language, g.out)
}

/// `count` functions alternating over `languages`, seeded from `seed`.
pub fn synth_corpus(languages: &[Language], count: usize, seed: u64) -> Vec<SourceFunction> {
    (0..count)
        .map(|i| {
            let lang = languages[i % languages.len()];
            synth_function(lang, derive_seed(seed, &format!("fn{i}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast;

    #[test]
    fn synthesized_functions_parse_and_differ() {
        let fs = synth_corpus(&[Language::C, Language::Java, Language::Cpp], 300, 11);
        let mut texts = std::collections::HashSet::new();
        for f in &fs {
            if let Err(e) = ast::parse(f) {
                panic!("{e}\n{}", f.text);
            }
            texts.insert(f.text.clone());
        }
        assert!(texts.len() > 290);
        assert_eq!(synth_function(Language::C, 4), synth_function(Language::C, 4));
    }
}
