use super::*;
use crate::ast::{scope_of, Language, SourceFunction};
use crate::samples::{CPP_COUNT, JAVA_SUM, TF_EVAL};

fn analysed(lang: Language, src: &str) -> (SyntaxTree, ScopeInfo) {
    let tree = parse(&SourceFunction::new("t", lang, src)).unwrap();
    let scope = scope_of(&tree);
    (tree, scope)
}

/// All distinct outputs of injecting at the first `kind` site whose span starts with `target`.
fn outputs_at(lang: Language, src: &str, kind: BugKind, target: &str) -> Vec<String> {
    let (tree, scope) = analysed(lang, src);
    let sites = bug_sites(kind, &tree, &scope);
    let site = sites
        .iter()
        .find(|s| tree.source()[s.span(&tree, &scope).range()].starts_with(target))
        .unwrap_or_else(|| panic!("no {kind} site at {target}"));
    let mut out: Vec<String> = (0..40).filter_map(|seed| inject_bug(site, &tree, &scope, seed).ok()).map(|r| r.text).collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn comparison_is_an_operator_site() {
    let (tree, scope) = analysed(Language::C, "int f(int i, int n){ return i < n; }");
    let sites = bug_sites(BugKind::Operator, &tree, &scope);
    assert_eq!(sites.len(), 1);
    assert_eq!(tree.text(sites[0].node(&scope)), "<");
}

#[test]
fn no_pointer_sites_without_pointers() {
    let (tree, scope) = analysed(Language::C, "int f(int a, int b){ int c = a + b; c = c * 2; return c; }");
    assert!(bug_sites(BugKind::Pointer, &tree, &scope).is_empty());
}

#[test]
fn kernel_loop_bound_becomes_inclusive() {
    let outs = outputs_at(Language::C, TF_EVAL, BugKind::Operator, "<");
    assert!(outs.iter().any(|o| o.contains("i<=lookup_rank-1")), "{outs:?}");
    assert!(outs.iter().all(|o| !o.contains("i<lookup_rank-1")));
}

#[test]
fn kernel_size_type_becomes_int() {
    let (tree, scope) = analysed(Language::C, TF_EVAL);
    let sites = bug_sites(BugKind::DataType, &tree, &scope);
    assert!(sites
        .iter()
        .any(|s| tree.source()[s.span(&tree, &scope).range()] == *"size_t embedding_size=1;"));
    let outs = outputs_at(Language::C, TF_EVAL, BugKind::DataType, "size_t embedding_size");
    assert!(outs.iter().any(|o| o.contains("int embedding_size=1;")), "{outs:?}");
}

#[test]
fn boolean_literal_is_flipped() {
    let outs = outputs_at(Language::Java, "boolean f(){ return true; }", BugKind::Value, "true");
    assert_eq!(outs, vec!["boolean f(){ return false; }"]);
}

#[test]
fn call_arguments_are_swapped() {
    let src = "void f(int a, int b){ g(a, b); }";
    let (tree, scope) = analysed(Language::C, src);
    let call = tree.find_kind(tree.root(), "call_expression").next().unwrap();
    let site = BugSite::Call { call, op: CallMutation::Swap };
    assert!(bug_sites(BugKind::FunctionCall, &tree, &scope).contains(&site));
    let r = inject_bug(&site, &tree, &scope, 4).unwrap();
    assert_eq!(r.text, "void f(int a, int b){ g(b, a); }");
    assert_eq!(r.bug.before, "(a, b)");
    assert_eq!(r.bug.after, "(b, a)");
}

#[test]
fn recursive_calls_take_no_extra_argument() {
    let (tree, scope) = analysed(Language::C, "int f(int n){ return n ? f(n - 1) : 0; }");
    let ops: Vec<_> = bug_sites(BugKind::FunctionCall, &tree, &scope)
        .into_iter()
        .map(|s| match s {
            BugSite::Call { op, .. } => op,
            _ => unreachable!(),
        })
        .collect();
    assert!(!ops.contains(&CallMutation::Add));
    assert!(ops.contains(&CallMutation::Remove));
}

#[test]
fn variable_swap_prefers_same_type() {
    let src = "int f(int a, double d, int b){ return a + (int)d; }";
    let outs = outputs_at(Language::C, src, BugKind::Variable, "a");
    assert_eq!(outs, vec!["int f(int a, double d, int b){ return b + (int)d; }"]);
}

#[test]
fn initializer_removal() {
    let src = "int f(int n){ int s = n; const int k = 2; return s + k; }";
    let (tree, scope) = analysed(Language::C, src);
    let removals: Vec<_> = bug_sites(BugKind::Variable, &tree, &scope)
        .into_iter()
        .filter(|s| matches!(s, BugSite::RemoveInitializer { .. }))
        .collect();
    assert_eq!(removals.len(), 1);
    let r = inject_bug(&removals[0], &tree, &scope, 0).unwrap();
    assert_eq!(r.text, "int f(int n){ int s; const int k = 2; return s + k; }");
}

#[test]
fn pointer_initializer_nulled_or_removed() {
    let src = "int f(int *q){ int *p = q; return *p; }";
    let outs = outputs_at(Language::C, src, BugKind::Pointer, "*p = q");
    assert_eq!(
        outs,
        vec!["int f(int *q){ int *p = NULL; return *p; }", "int f(int *q){ int *p; return *p; }"]
    );
}

#[test]
fn guard_check_is_removed() {
    let src = "int f(int *a, int n, int i){\n  if (i >= n) return -1;\n  return a[i];\n}";
    let outs = outputs_at(Language::C, src, BugKind::Statement, "if");
    assert_eq!(outs, vec!["int f(int *a, int n, int i){\n  return a[i];\n}"]);
    let (tree, scope) = analysed(Language::C, TF_EVAL);
    let checks: Vec<&str> = bug_sites(BugKind::Statement, &tree, &scope)
        .iter()
        .map(|s| &tree.source()[s.span(&tree, &scope).range()])
        .collect();
    assert!(checks.iter().any(|c| c.starts_with("TF_LITE_ENSURE")), "{checks:?}");
}

#[test]
fn case_labels_and_array_sizes_keep_their_literals() {
    let src = "int f(int x){ int a[4]; switch (x) { case 1: return 0; } return a[0]; }";
    let (tree, scope) = analysed(Language::C, src);
    let lits: Vec<&str> = bug_sites(BugKind::Value, &tree, &scope)
        .iter()
        .map(|s| tree.text(s.node(&scope)))
        .collect();
    assert_eq!(lits, vec!["0", "0"]);
}

#[test]
fn empty_function_has_no_deviant() {
    let f = SourceFunction::new("t", Language::C, "void f(){}");
    assert!(matches!(generate_deviant(&f, 1), Err(DeviantError::NoApplicableBug)));
}

#[test]
fn deviants_are_local_valid_and_deterministic() {
    for (lang, src) in [(Language::C, TF_EVAL), (Language::Java, JAVA_SUM), (Language::Cpp, CPP_COUNT)] {
        let f = SourceFunction::new("t", lang, src);
        let tokens = flatten_tokens(&parse(&f).unwrap()).len();
        for seed in 0..60 {
            let r = generate_deviant(&f, seed).unwrap();
            assert_eq!(r, generate_deviant(&f, seed).unwrap());
            assert_ne!(r.text, src);
            assert_ne!(r.bug.before, r.bug.after);
            let mutated = parse(&SourceFunction::new("d", lang, r.text.clone())).unwrap();
            assert!(r.is_local_to(src), "{:?}", r.bug);
            let orig: Vec<String> = flatten_tokens(&parse(&f).unwrap()).into_iter().map(|t| t.text).collect();
            let new: Vec<String> = flatten_tokens(&mutated).into_iter().map(|t| t.text).collect();
            assert!(token_edit_distance(&orig, &new) * 10 <= tokens);
        }
    }
}

#[test]
fn every_kind_fires_on_the_kernel() {
    let f = SourceFunction::new("t", Language::C, TF_EVAL);
    let kinds: std::collections::HashSet<BugKind> = (0..200).map(|s| generate_deviant(&f, s).unwrap().bug.kind).collect();
    for k in [BugKind::Operator, BugKind::DataType, BugKind::Variable, BugKind::Value, BugKind::Pointer, BugKind::Statement, BugKind::FunctionCall] {
        assert!(kinds.contains(&k), "{k} never sampled");
    }
}

#[test]
fn edit_distance_oracle() {
    let a: Vec<char> = "kitten".chars().collect();
    let b: Vec<char> = "sitting".chars().collect();
    assert_eq!(token_edit_distance(&a, &b), 3);
    assert_eq!(token_edit_distance(&a, &a), 0);
    assert_eq!(token_edit_distance::<char>(&[], &b), 7);
}
