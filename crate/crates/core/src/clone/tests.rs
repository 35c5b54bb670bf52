use super::*;
use crate::ast::{Language, SourceFunction};
use crate::samples::TF_EVAL;

fn c(src: &str) -> SourceFunction {
    SourceFunction::new("t", Language::C, src)
}

fn analysed(func: &SourceFunction) -> (SyntaxTree, ScopeInfo) {
    let tree = parse(func).unwrap();
    let scope = scope_of(&tree);
    (tree, scope)
}

/// Applies the first site of `kind` whose span text equals `target`.
fn apply_at(src: &str, lang: Language, kind: CloneTransformKind, target: &str) -> String {
    let func = SourceFunction::new("t", lang, src);
    let (tree, scope) = analysed(&func);
    let site = applicable(kind, &tree, &scope)
        .into_iter()
        .find(|s| tree.source()[s.span(&tree, &scope).range()].starts_with(target))
        .unwrap_or_else(|| panic!("no {kind} site at {target}"));
    apply_transform(&site, &tree, &scope, &CloneContext::default(), 1).unwrap().text
}

#[test]
fn block_rewrite_finds_the_loop() {
    let func = c("int f(int n){ int s = 0; for (int i = 0; i < n; i++) s += i; return s; }");
    let (tree, scope) = analysed(&func);
    let sites = applicable(CloneTransformKind::RewriteBlock, &tree, &scope);
    let lp = tree.find_kind(tree.root(), "for_statement").next().unwrap();
    assert_eq!(sites, vec![CloneSite::ForToWhile { stmt: lp }]);
}

#[test]
fn dependent_declarations_are_not_permuted() {
    let func = c("int f(){ int x = 1; int y = x; return y; }");
    let (tree, scope) = analysed(&func);
    assert!(applicable(CloneTransformKind::PermuteDecls, &tree, &scope).is_empty());
}

#[test]
fn statement_sites_on_kernel_loop_header() {
    let func = c(TF_EVAL);
    let (tree, scope) = analysed(&func);
    let texts: Vec<&str> = applicable(CloneTransformKind::RewriteStatement, &tree, &scope)
        .iter()
        .map(|s| &tree.source()[s.span(&tree, &scope).range()])
        .collect();
    assert!(texts.contains(&"i<lookup_rank-1"), "{texts:?}");
    assert!(texts.contains(&"i++"), "{texts:?}");
}

#[test]
fn ternary_becomes_if_else() {
    let out = apply_at(
        "int f(int x){ int y; y = (x != 0) ? 2/x : 0; return y; }",
        Language::C,
        CloneTransformKind::RewriteStatement,
        "y = (x",
    );
    assert!(out.contains("if (x != 0) {y = 2/x;} else {y = 0;}"), "{out}");
}

#[test]
fn post_increment_assignment_is_split() {
    let out = apply_at(
        "int f(int x){ int y; y = x++; return x + y; }",
        Language::C,
        CloneTransformKind::RewriteStatement,
        "x++",
    );
    assert!(out.contains("y = x; x = x + 1;"), "{out}");
}

#[test]
fn comparison_is_mirrored() {
    let out = apply_at(
        "int f(int x, int y){ if (x > y) return 1; return 0; }",
        Language::C,
        CloneTransformKind::RewriteStatement,
        "x > y",
    );
    assert!(out.contains("if (y < x)"), "{out}");
}

#[test]
fn if_else_swap_negates_integer_comparison() {
    let out = apply_at(
        "void f(int a, int b){ if (a < b) {g(1);} else {g(2);} }",
        Language::C,
        CloneTransformKind::RewriteBlock,
        "if (a < b)",
    );
    assert!(out.contains("if (a >= b) {g(2);} else {g(1);}"), "{out}");
}

#[test]
fn if_else_swap_on_floats_uses_logical_not() {
    let out = apply_at(
        "void f(double a, double b){ if (a < b) {g(1);} else {g(2);} }",
        Language::C,
        CloneTransformKind::RewriteBlock,
        "if (a < b)",
    );
    assert!(out.contains("if (!(a < b)) {g(2);} else {g(1);}"), "{out}");
}

#[test]
fn sub_word_rename_of_snake_case_local() {
    let src = "int f(int n){ int client_server = n * 2; return client_server + 1; }";
    let func = c(src);
    let (tree, scope) = analysed(&func);
    let decl = scope.declarations_named("client_server")[0];
    for seed in 0..8 {
        let r = apply_transform(&CloneSite::Rename { decl }, &tree, &scope, &CloneContext::default(), seed).unwrap();
        let renamed = ["server_client", "client", "server"]
            .iter()
            .find(|n| r.text.contains(&format!("int {n} = n * 2; return {n} + 1;")));
        assert!(renamed.is_some(), "{}", r.text);
    }
}

#[test]
fn independent_declarations_are_permuted() {
    let out = apply_at(
        "int f(){ int x; int y = 0; x = y; return x; }",
        Language::C,
        CloneTransformKind::PermuteDecls,
        "int x;",
    );
    assert!(out.contains("int y = 0; int x;"), "{out}");
}

#[test]
fn for_loop_with_continue_becomes_while() {
    let src = "int f(int n){ int s = 0; for (int i = 0; i < n; i++) { if (i % 2) continue; s += i; } return s; }";
    let out = apply_at(src, Language::C, CloneTransformKind::RewriteBlock, "for");
    assert_eq!(
        out,
        "int f(int n){ int s = 0; { int i = 0; while (i < n) { if (i % 2) { i++; continue; } s += i;  i++; } } return s; }"
    );
}

#[test]
fn dead_code_guard_is_inert() {
    let src = "int f(int n){ int s = n;\n  s += 2;\n  return s; }";
    let out = apply_at(src, Language::C, CloneTransformKind::InsertDeadCode, "s += 2;");
    let inserted_at = out.find("\n  s += 2;").unwrap() + "\n  s += 2;".len();
    let guard_end = out[inserted_at..].find('}').unwrap() + inserted_at + 1;
    let removed = format!("{}{}", &out[..inserted_at], &out[guard_end..]);
    assert_eq!(removed, src);
    assert!(out.contains("if (0)") || out.contains("while (2 < 0)"));
}

#[test]
fn empty_function_has_no_clone() {
    assert!(matches!(generate_clone(&c("void f(){}"), 3), Err(CloneError::NoApplicableTransform)));
}

#[test]
fn generation_is_deterministic() {
    let func = c(TF_EVAL);
    for seed in 0..10 {
        let a = generate_clone(&func, seed).unwrap();
        let b = generate_clone(&func, seed).unwrap();
        assert_eq!(a, b);
        assert!(!a.applied.is_empty());
        assert_ne!(a.text, func.text);
        parse(&c(&a.text)).unwrap();
    }
}

#[test]
fn kernel_clone_can_rename_and_turn_for_into_while() {
    let func = c(TF_EVAL);
    let found = (0..200u64).any(|seed| {
        let r = generate_clone(&func, seed).unwrap();
        let kinds: Vec<_> = r.applied.iter().map(|a| a.kind).collect();
        kinds.contains(&CloneTransformKind::RenameIdentifier)
            && r.applied.iter().any(|a| a.detail == "for -> while")
            && r.text.contains("while (")
    });
    assert!(found);
}

#[test]
fn renaming_preserves_binding_structure() {
    let func = c(TF_EVAL);
    let (tree, scope) = analysed(&func);
    for site in applicable(CloneTransformKind::RenameIdentifier, &tree, &scope) {
        let r = apply_transform(&site, &tree, &scope, &CloneContext::default(), 9).unwrap();
        let (t2, s2) = analysed(&c(&r.text));
        let before = scope.binding_signature();
        let after = s2.binding_signature();
        assert_eq!(before.len(), after.len());
        for (a, b) in before.iter().zip(&after) {
            match (a, b) {
                (Ok(x), Ok(y)) => assert_eq!(x, y),
                (Err(x), Err(y)) => assert_eq!(x, y),
                _ => panic!("binding changed in {}", t2.source()),
            }
        }
    }
}

#[test]
fn java_and_cpp_clones_parse() {
    for (lang, src) in [(Language::Java, crate::samples::JAVA_SUM), (Language::Cpp, crate::samples::CPP_COUNT)] {
        let func = SourceFunction::new("x", lang, src);
        for seed in 0..20 {
            let r = generate_clone(&func, seed).unwrap();
            parse(&SourceFunction::new("x", lang, r.text.clone())).unwrap();
        }
    }
}
