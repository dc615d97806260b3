use proptest::prelude::*;
use rand::Rng;

use rim_core::cantor::{cross_check, systematic_ends, CrossCheck};
use rim_core::morphism::{compose, extend_inverse, FiniteMorphism};
use rim_testkit::oracle::{all_words, eval_table, merge_fixed_points};
use rim_testkit::{random_finite_morphism, random_v_element, rng, sibling_split};

fn table(f: &FiniteMorphism) -> Vec<(rim_core::Word, rim_core::Word)> {
    f.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eval_matches_table_scan(s: u64) {
        let f = random_finite_morphism(&mut rng(s), 12, 6);
        let t = f.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        for w in all_words(7) {
            prop_assert_eq!(f.eval(&w).ok(), eval_table(&t, &w));
        }
    }

    #[test]
    fn composition_is_function_composition(s: u64) {
        let mut r = rng(s);
        let f = random_finite_morphism(&mut r, 10, 5);
        let g = random_finite_morphism(&mut r, 10, 5);
        let gf = compose(&g, &f);
        for w in all_words(9) {
            let direct = f.eval(&w).ok().and_then(|y| g.eval(&y).ok());
            prop_assert_eq!(gf.eval(&w).ok(), direct, "at {}", w);
        }
    }

    #[test]
    fn bmax_is_the_unique_merge_fixed_point(s: u64) {
        let f = random_finite_morphism(&mut rng(s), 16, 8);
        let t = f.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let fixed = merge_fixed_points(&t);
        prop_assert_eq!(fixed.len(), 1);
        prop_assert_eq!(fixed.into_iter().next().unwrap(), table(&f.bmax()));
        prop_assert_eq!(f.bmax().bmax(), f.bmax());
    }

    #[test]
    fn equivalence_is_a_congruence(s: u64) {
        let mut r = rng(s);
        let f1 = random_finite_morphism(&mut r, 10, 6);
        let once = sibling_split(&mut r, &f1.bmax(), 8);
        let f2 = sibling_split(&mut r, &once, 8);
        prop_assert!(f1.equivalent(&f2));
        let g = random_finite_morphism(&mut r, 10, 6);
        prop_assert!(compose(&g, &f1).equivalent(&compose(&g, &f2)));
        prop_assert!(compose(&f1, &g).equivalent(&compose(&f2, &g)));
    }

    #[test]
    fn equivalence_matches_action_on_ends(s: u64) {
        let mut r = rng(s);
        let f = random_finite_morphism(&mut r, 8, 4);
        let g = if r.gen_bool(0.5) { sibling_split(&mut r, &f, 6) } else { random_finite_morphism(&mut r, 8, 4) };
        let ends = systematic_ends(5, 3);
        let consistent = cross_check(&f, &g, &ends) == CrossCheck::ConsistentWithBdEquiv;
        prop_assert_eq!(f.equivalent(&g), consistent);
    }

    #[test]
    fn canonical_inverse_laws(s: u64) {
        let f = random_finite_morphism(&mut rng(s), 12, 6);
        let g = f.canonical_inverse().unwrap();
        prop_assert_eq!(compose(&f, &compose(&g, &f)), f.clone());
        prop_assert_eq!(compose(&g, &compose(&f, &g)), g.clone());
        prop_assert!(g.is_injective());
        for inv in f.all_injective_inverses(16).unwrap() {
            prop_assert!(inv.is_inverse_of(&f));
        }
    }

    #[test]
    fn regular_sandwich(s: u64) {
        let mut r = rng(s);
        let h = random_finite_morphism(&mut r, 8, 5);
        let g = if r.gen_bool(0.5) { h.canonical_inverse().unwrap() } else { random_finite_morphism(&mut r, 8, 5) };
        let hgh = compose(&h, &compose(&g, &h));
        if hgh.equivalent(&h) {
            prop_assert_eq!(compose(&hgh, &compose(&g, &hgh)), hgh.clone());
            for (k, v) in hgh.iter() {
                prop_assert_eq!(h.eval(k), Ok(v.clone()));
            }
        }
    }

    #[test]
    fn normalization_keeps_image(s: u64) {
        let f = random_finite_morphism(&mut rng(s), 12, 6);
        let (normal, fn_) = f.normalize().unwrap();
        prop_assert!(fn_.is_normal());
        prop_assert_eq!(normal, fn_ == f);
        prop_assert_eq!(fn_.image_code().unwrap(), f.image_code().unwrap());
        for (k, v) in fn_.iter() {
            prop_assert_eq!(f.get(k), Some(v));
        }
    }

    #[test]
    fn green_orders_are_preorders(s: u64) {
        let mut r = rng(s);
        let f = random_finite_morphism(&mut r, 8, 5);
        let g = random_finite_morphism(&mut r, 8, 5);
        prop_assert!(f.leq_r(&f).unwrap());
        prop_assert!(f.leq_l(&f).unwrap());
        // g∘f lies below g in the R-order, and below f in the L-order when nonempty
        let gf = compose(&g, &f);
        if !gf.is_empty() {
            prop_assert!(gf.leq_r(&g).unwrap());
        }
    }

    #[test]
    fn thompson_group_elements(s: u64) {
        let mut r = rng(s);
        let v = random_v_element(&mut r, 16, 8);
        let w = random_v_element(&mut r, 16, 8);
        let vi = v.v_inverse().unwrap();
        prop_assert!(compose(&vi, &v).equivalent(&FiniteMorphism::identity()));
        prop_assert!(compose(&v, &vi).equivalent(&FiniteMorphism::identity()));
        prop_assert!(compose(&v, &w).bmax().is_v_element());
    }

    #[test]
    fn extension_of_inverses(s: u64) {
        let mut r = rng(s);
        let (_, f) = random_finite_morphism(&mut r, 8, 5).normalize().unwrap();
        let mut f0 = f.clone();
        for _ in 0..r.gen_range(0..4) {
            f0 = sibling_split(&mut r, &f0, 8);
        }
        let invs = f0.all_injective_inverses(64).unwrap();
        let fp0 = &invs[r.gen_range(0..invs.len())];
        let f1 = extend_inverse(fp0, &f0, &f).unwrap();
        prop_assert!(f1.is_inverse_of(&f));
        prop_assert!(compose(&f0, &compose(&f1, &f0)).equivalent(&f0));
        prop_assert!(f1.is_injective());
        prop_assert_eq!(f1.domain_code(), f.image_code().unwrap());
    }
}
