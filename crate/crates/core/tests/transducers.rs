use proptest::prelude::*;
use rand::Rng;

use rim_core::cantor::{cross_check, systematic_ends, CrossCheck};
use rim_core::codes::PrefixCode;
use rim_core::transducer::{
    bd_separating_end, compose, rank_bijection, t_agree, Agreement, EquivMode, TransducerMorphism,
};
use rim_core::word::Word;
use rim_testkit::oracle::all_words;
use rim_testkit::{
    collapse_machine, random_finite_morphism, random_infinite_code, random_machine, random_machine_pair, random_word,
    rng, swap_machine,
};

/// Random words in the domain: members of the domain code followed by a suffix.
fn domain_words<R: Rng>(r: &mut R, m: &TransducerMorphism, n: usize) -> Vec<Word> {
    let members = m.domain_code().members_up_to(10);
    if members.is_empty() {
        return Vec::new();
    }
    (0..n)
        .map(|_| members[r.gen_range(0..members.len())].concat(&random_word(r, 0, 4)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn right_ideal_law(s: u64) {
        let mut r = rng(s);
        let m = random_machine(&mut r, 10);
        for w in domain_words(&mut r, &m, 50) {
            let u = random_word(&mut r, 0, 6);
            prop_assert_eq!(m.eval(&w.concat(&u)).unwrap(), m.eval(&w).unwrap().concat(&u));
        }
    }

    #[test]
    fn composition_is_function_composition(s: u64) {
        let mut r = rng(s);
        let f = random_machine(&mut r, 8);
        let g = random_machine(&mut r, 8);
        let gf = compose(&g, &f).unwrap();
        for w in all_words(8) {
            let direct = f.eval(&w).ok().and_then(|y| g.eval(&y).ok());
            prop_assert_eq!(gf.eval(&w).ok(), direct, "at {}", w);
        }
    }

    #[test]
    fn lift_agrees_with_table(s: u64) {
        let f = random_finite_morphism(&mut rng(s), 12, 6);
        let m = TransducerMorphism::lift(&f);
        for w in all_words(7) {
            prop_assert_eq!(m.eval(&w).ok(), f.eval(&w).ok());
        }
        prop_assert_eq!(m.to_finite(), Some(f));
    }

    #[test]
    fn agreement_matches_exhaustive_comparison(s: u64) {
        let mut r = rng(s);
        let (f, g) = random_machine_pair(&mut r, 12);
        let verdict = t_agree(&f, &g);
        let differs = |w: &Word| matches!((f.eval(w), g.eval(w)), (Ok(a), Ok(b)) if a != b);
        match &verdict {
            Agreement::Disagree(w) => prop_assert!(differs(w), "bogus witness {}", w),
            Agreement::Agree => {
                for w in all_words(9) {
                    prop_assert!(!differs(&w), "missed disagreement at {}", w);
                }
            }
        }
    }

    #[test]
    fn bd_equivalence_matches_action_on_ends(s: u64) {
        let mut r = rng(s);
        let (f, g) = random_machine_pair(&mut r, 12);
        let sample = systematic_ends(4, 3);
        if f.equivalent(&g, EquivMode::Bd) {
            prop_assert_eq!(cross_check(&f, &g, &sample), CrossCheck::ConsistentWithBdEquiv);
        } else {
            let e = bd_separating_end(&f, &g).expect("inequivalent machines have a separating end");
            prop_assert!(matches!(cross_check(&f, &g, &[e]), CrossCheck::Separated(_)));
        }
    }

    #[test]
    fn equivalence_is_a_congruence(s: u64) {
        let mut r = rng(s);
        let f1 = random_machine(&mut r, 6);
        let f2 = f1.restrict(&f1.domain_code().refine(r.gen_range(1..=2))).unwrap();
        prop_assert!(f1.equivalent(&f2, EquivMode::Bd));
        let g = random_machine(&mut r, 6);
        let left = (compose(&g, &f1).unwrap(), compose(&g, &f2).unwrap());
        let right = (compose(&f1, &g).unwrap(), compose(&f2, &g).unwrap());
        prop_assert!(left.0.equivalent(&left.1, EquivMode::Bd));
        prop_assert!(right.0.equivalent(&right.1, EquivMode::Bd));
    }

    #[test]
    fn bd_equivalent_morphisms_have_bd_equivalent_images(s: u64) {
        let mut r = rng(s);
        let (f, g) = random_machine_pair(&mut r, 12);
        if f.equivalent(&g, EquivMode::Bd) {
            prop_assert!(f.image_code().unwrap().bd_compare(&g.image_code().unwrap()).is_equivalent());
        }
    }

    #[test]
    fn image_of_domain_code_is_end_equivalent_to_image_code(s: u64) {
        let m = random_machine(&mut rng(s), 10);
        let (dom, imc) = m.codes().unwrap();
        // every value on the domain code has a prefix in imC, and every
        // member of imC is a prefix of such a value
        let values: Vec<Word> = dom.members_up_to(12).iter().map(|x| m.eval(x).unwrap()).collect();
        for y in &values {
            prop_assert!(imc.prefix_in_code(y).is_some(), "{} has no prefix in imC", y);
        }
        for c in imc.members_up_to(6) {
            prop_assert!(m.image_ideal().accepts(&c));
        }
    }

    #[test]
    fn long_enough_extensions(s: u64) {
        let mut r = rng(s);
        let f1 = random_machine(&mut r, 8);
        let f2 = f1.restrict(&f1.domain_code().refine(r.gen_range(1..=3))).unwrap();
        for x in f1.domain_code().members_up_to(6) {
            let ext = all_words(3).into_iter().find(|v| f2.in_domain(&x.concat(v)));
            let v = ext.expect("some short extension lies in the other domain");
            prop_assert_eq!(f2.eval(&x.concat(&v)).unwrap(), f1.eval(&x).unwrap().concat(&v));
        }
    }
}

#[test]
fn composite_of_swaps_is_end_but_not_bd_equivalent_to_identity() {
    let ss = compose(&swap_machine(), &swap_machine()).unwrap();
    let id = TransducerMorphism::identity();
    assert!(ss.equivalent(&id, EquivMode::End));
    assert!(!ss.equivalent(&id, EquivMode::Bd));
    // no sibling structure to merge: the domain code 0*1 has no sibling pair
    let dom = swap_machine().domain_code();
    for x in dom.members_up_to(12) {
        let last = x.letters().len() - 1;
        let mut sib = x.prefix(last);
        sib.push(1 - x.letters()[last]);
        assert!(!dom.contains(&sib));
    }
}

#[test]
fn collapse_preimages() {
    let c = collapse_machine();
    let ideal_of_eps = c
        .restrict(&PrefixCode::finite([Word::from_letters([1])]).unwrap())
        .unwrap();
    assert_eq!(ideal_of_eps.domain_code().to_string(), "{ 1 }");
    assert_eq!(c.domain_code(), PrefixCode::from_regex("0*1").unwrap());
}

#[test]
fn rank_bijection_is_an_order_isomorphism() {
    let mut r = rng(11);
    let mut pairs = vec![(
        PrefixCode::from_regex("0*1").unwrap(),
        PrefixCode::from_regex("1*0").unwrap(),
    )];
    for _ in 0..5 {
        pairs.push((random_infinite_code(&mut r).0, random_infinite_code(&mut r).0));
    }
    for (p, q) in pairs {
        let a = rank_bijection(&p, &q).unwrap();
        let sample = a.sample(300);
        let qs = q.first_members(300);
        for (i, (_, y)) in sample.iter().enumerate() {
            assert_eq!(y, &qs[i]);
        }
    }
}
