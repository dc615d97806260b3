use proptest::prelude::*;

use rim_core::automata::{compile_regex, to_regex_string, Dfa};
use rim_core::word::{compare_prefix, encode, PrefixRelation, Tag, TaggedWord, Word};
use rim_testkit::oracle::all_words;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(0..2u8, 0..12).prop_map(Word::from_letters)
}

fn tagged() -> impl Strategy<Value = TaggedWord> {
    prop::collection::vec(prop_oneof![Just(Tag::Zero), Just(Tag::One), Just(Tag::Hash)], 0..8).prop_map(TaggedWord)
}

/// Small regular expressions over the workbench syntax.
fn regex() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![Just("0".to_string()), Just("1".to_string()), Just("eps".to_string())];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})|({b})")),
            inner.prop_map(|a| format!("({a})*")),
        ]
    })
}

proptest! {
    #[test]
    fn llex_is_length_then_lexicographic(u in word(), v in word()) {
        let expected = u.len().cmp(&v.len()).then_with(|| u.letters().cmp(v.letters()));
        prop_assert_eq!(u.cmp(&v), expected);
    }

    #[test]
    fn prefix_relation_matches_definition(u in word(), v in word()) {
        let rel = compare_prefix(&u, &v);
        let u_pre = v.letters().starts_with(u.letters());
        let v_pre = u.letters().starts_with(v.letters());
        let expected = match (u_pre, v_pre) {
            (true, true) => PrefixRelation::Equal,
            (true, false) => PrefixRelation::FirstIsPrefix,
            (false, true) => PrefixRelation::SecondIsPrefix,
            _ => PrefixRelation::Incomparable,
        };
        prop_assert_eq!(rel, expected);
    }

    #[test]
    fn encoding_is_a_homomorphism(s in tagged(), t in tagged()) {
        prop_assert_eq!(encode(&s.concat(&t)), encode(&s).concat(&encode(&t)));
        prop_assert_eq!(encode(&s).len(), 2 * s.0.len());
    }

    #[test]
    fn minimization_is_canonical(a in regex(), b in regex()) {
        let (da, db) = (compile_regex(&a).unwrap(), compile_regex(&b).unwrap());
        // language equality on all short words versus structural equality
        let same_short = all_words(8).iter().all(|w| da.accepts(w) == db.accepts(w));
        if da == db {
            prop_assert!(same_short);
        }
        if !same_short {
            prop_assert_ne!(&da, &db);
        }
        let union = da.or(&db);
        prop_assert_eq!(union.clone(), db.or(&da));
        prop_assert_eq!(union.minimize(), union);
    }

    #[test]
    fn regex_rendering_round_trips(a in regex()) {
        let d = compile_regex(&a).unwrap();
        let back = compile_regex(&to_regex_string(&d)).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn rank_unrank_are_inverse(a in regex(), k in 0usize..40) {
        let d = compile_regex(&a).unwrap();
        let members = d.enumerate_up_to(k + 1, 24);
        let mut counter = d.counter();
        for (i, x) in members.iter().enumerate() {
            prop_assert_eq!(counter.rank(x), i as u128);
            prop_assert_eq!(counter.unrank(i as u128, 24), Some(x.clone()));
        }
    }

    #[test]
    fn derived_languages_match_definitions(a in regex()) {
        let d = compile_regex(&a).unwrap();
        let ideal = d.right_ideal_closure();
        let strict = d.strict_extensions();
        let prefixes = d.prefix_closure();
        for w in all_words(7) {
            let pre: Vec<Word> = w.prefixes().collect();
            prop_assert_eq!(ideal.accepts(&w), pre.iter().any(|p| d.accepts(p)));
            prop_assert_eq!(strict.accepts(&w), pre[..w.len()].iter().any(|p| d.accepts(p)));
        }
        for w in d.enumerate_up_to(20, 8) {
            for p in w.prefixes() {
                prop_assert!(prefixes.accepts(&p));
            }
        }
    }
}

#[test]
fn classification_counts_members() {
    let d = compile_regex("(0|1)(0|1)(0|1)|1").unwrap();
    assert_eq!(d.classify(), rim_core::automata::Classification::Finite(9));
    assert!(!compile_regex("0*1").unwrap().is_finite());
    assert!(Dfa::empty().is_empty());
}
