use cloneaware::ast::{self, Language, SourceFunction};
use cloneaware::clone::{generate_clone, CloneTransformKind};
use cloneaware::deviant::generate_deviant;
use cloneaware::labels::label_sequence;
use cloneaware::synth::synth_function;
use proptest::prelude::*;

fn language() -> impl Strategy<Value = Language> {
    prop_oneof![Just(Language::C), Just(Language::Cpp), Just(Language::Java)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn clones_reparse_and_differ(lang in language(), fseed in any::<u64>(), seed in any::<u64>()) {
        let f = synth_function(lang, fseed);
        if let Ok(c) = generate_clone(&f, seed) {
            prop_assert!(ast::parse(&SourceFunction::new("c", lang, c.text.clone())).is_ok(), "{}", c.text);
            prop_assert_ne!(&c.text, &f.text);
            prop_assert!(!c.applied.is_empty());
            prop_assert_eq!(generate_clone(&f, seed).unwrap().text, c.text);
        }
    }

    #[test]
    fn deviants_are_single_site(lang in language(), fseed in any::<u64>(), seed in any::<u64>()) {
        let f = synth_function(lang, fseed);
        if let Ok(d) = generate_deviant(&f, seed) {
            prop_assert!(ast::parse(&SourceFunction::new("d", lang, d.text.clone())).is_ok(), "{}", d.text);
            prop_assert_ne!(&d.text, &f.text);
            let s = d.bug.span;
            prop_assert_eq!(&f.text[s.start..s.end], d.bug.before.as_str());
            let spliced = format!("{}{}{}", &f.text[..s.start], d.bug.after, &f.text[s.end..]);
            prop_assert_eq!(&spliced, &d.text);
        }
    }

    #[test]
    fn labels_ignore_renames_elsewhere(lang in language(), fseed in any::<u64>(), seed in any::<u64>()) {
        let f = synth_function(lang, fseed);
        let tree = ast::parse(&f).unwrap();
        if let Ok(c) = generate_clone(&f, seed) {
            let only_renames = c.applied.iter().all(|a| a.kind == CloneTransformKind::RenameIdentifier);
            if only_renames {
                let ct = ast::parse(&SourceFunction::new("c", lang, c.text.clone())).unwrap();
                prop_assert_eq!(label_sequence(&tree), label_sequence(&ct));
            }
        }
    }
}
