//! Declarations, their uses and the names visible at a few offsets of a
//! function, as computed by the scope analysis that drives renaming.
//!
//! `cargo run --example scope_analysis`

use cloneaware::ast::{self, Language, SourceFunction};
use cloneaware::samples::JAVA_SUM;

fn main() -> anyhow::Result<()> {
    let tree = ast::parse(&SourceFunction::new("sum", Language::Java, JAVA_SUM))?;
    let scope = ast::scope_of(&tree);
    for id in scope.decl_ids() {
        let d = scope.decl(id);
        let uses: Vec<String> = scope.uses_of(id).iter().map(|&u| tree.span(u).to_string()).collect();
        println!("{:<12} {:?} visible from {:>3}, used at {}", d.name, d.kind, d.visible_from, uses.join(" "));
    }
    let external: Vec<&str> = scope
        .uses()
        .iter()
        .filter(|u| u.binding.is_none())
        .map(|u| u.name.as_str())
        .collect();
    println!("unbound names: {external:?}");

    for needle in ["total += values[i]", "return total"] {
        let at = JAVA_SUM.find(needle).unwrap_or(0);
        let names: Vec<&str> = scope.visible_at(at).iter().map(|&d| scope.decl(d).name.as_str()).collect();
        println!("visible at `{needle}`: {names:?}");
    }
    Ok(())
}
