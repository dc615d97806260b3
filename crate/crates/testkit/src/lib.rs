//! Seeded generators of words, codes, finite morphisms and machines, shared
//! by the property and acceptance tests.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use rim_core::cantor::UpEnd;
use rim_core::codes::PrefixCode;
use rim_core::morphism::FiniteMorphism;
use rim_core::transducer::{MachineSpec, TransducerMorphism};
use rim_core::word::{encode, Tag, TaggedWord, Word};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word<R: Rng>(rng: &mut R, min_len: usize, max_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len);
    Word::from_letters((0..len).map(|_| rng.gen_range(0..2u8)))
}

/// Leaves of a random binary tree: a maximal finite prefix code with
/// `leaves` members, none deeper than `max_depth` (fewer if the depth runs out).
pub fn random_maximal_code<R: Rng>(rng: &mut R, leaves: usize, max_depth: usize) -> Vec<Word> {
    let mut code = vec![Word::empty()];
    while code.len() < leaves {
        let splittable: Vec<usize> = (0..code.len()).filter(|&i| code[i].len() < max_depth).collect();
        let Some(&i) = splittable.choose(rng) else { break };
        let x = code.swap_remove(i);
        code.push(x.child(0));
        code.push(x.child(1));
    }
    code.sort();
    code
}

/// A random finite prefix code: leaves of a random tree with some removed.
pub fn random_finite_code<R: Rng>(rng: &mut R, max_leaves: usize, max_depth: usize) -> Vec<Word> {
    let n = rng.gen_range(1..=max_leaves);
    let mut code = random_maximal_code(rng, n, max_depth);
    let keep = rng.gen_range(1..=code.len());
    code.shuffle(rng);
    code.truncate(keep);
    code.sort();
    code
}

/// Splits the rule at a random key (if any key is shallower than `max_depth`).
pub fn sibling_split<R: Rng>(rng: &mut R, f: &FiniteMorphism, max_depth: usize) -> FiniteMorphism {
    let keys: Vec<Word> = f.keys().filter(|k| k.len() < max_depth).cloned().collect();
    match keys.choose(rng) {
        Some(k) => f.split_at(k).unwrap(),
        None => f.clone(),
    }
}

/// Random table with at most `max_rules` rules and keys of depth at most
/// `max_depth`. Half of the tables are built by splitting a coarser table,
/// so sibling-mergeable structure is common.
pub fn random_finite_morphism<R: Rng>(rng: &mut R, max_rules: usize, max_depth: usize) -> FiniteMorphism {
    if rng.gen_bool(0.5) {
        let keys = random_finite_code(rng, max_rules, max_depth);
        let table = keys.into_iter().map(|k| (k, random_word(rng, 0, 4)));
        return FiniteMorphism::new(table).unwrap();
    }
    let coarse_rules = rng.gen_range(1..=max_rules.div_ceil(2));
    let keys = random_finite_code(rng, coarse_rules, max_depth.saturating_sub(2));
    let mut f = FiniteMorphism::new(keys.into_iter().map(|k| (k, random_word(rng, 0, 3)))).unwrap();
    let splits = rng.gen_range(0..=max_rules);
    for _ in 0..splits {
        if f.len() + 1 > max_rules {
            break;
        }
        f = sibling_split(rng, &f, max_depth);
    }
    f
}

/// Random element of Thompson's group V: a bijection between two random
/// maximal codes with the same number of leaves.
pub fn random_v_element<R: Rng>(rng: &mut R, max_leaves: usize, max_depth: usize) -> FiniteMorphism {
    loop {
        let n = rng.gen_range(1..=max_leaves);
        let dom = random_maximal_code(rng, n, max_depth);
        let mut im = random_maximal_code(rng, n, max_depth);
        if dom.len() != im.len() {
            continue;
        }
        im.shuffle(rng);
        return FiniteMorphism::new(dom.into_iter().zip(im)).unwrap();
    }
}

/// Random table whose keys have the shape `code(w)·11`, `w ∈ {0,1}*`.
pub fn random_encoded_table<R: Rng>(rng: &mut R, max_rules: usize, max_word_len: usize) -> FiniteMorphism {
    let n = rng.gen_range(1..=max_rules);
    let mut keys = BTreeSet::new();
    for _ in 0..n {
        let w = random_word(rng, 0, max_word_len);
        let mut t = TaggedWord::from_word(&w);
        t.0.push(Tag::Hash);
        keys.insert(encode(&t));
    }
    FiniteMorphism::new(keys.into_iter().map(|k| (k, random_word(rng, 0, 4)))).unwrap()
}

/// Infinite regular prefix codes used as building blocks.
pub const INFINITE_BASES: &[&str] = &[
    "0*1",
    "1*0",
    "(0|10)*11",
    "(00)*1",
    "(0|11)*10",
    "(01)*00",
    "0*11",
    "(1|00)*01",
];

/// A random infinite regular prefix code: a finite tree with a base code
/// grafted onto some of its leaves. Returns the code and its expression.
pub fn random_infinite_code<R: Rng>(rng: &mut R) -> (PrefixCode, String) {
    loop {
        let leaves = random_finite_code(rng, 5, 3);
        let mut parts = Vec::new();
        let mut grafted = false;
        for leaf in &leaves {
            let prefix = if leaf.is_empty() {
                String::new()
            } else {
                leaf.to_string()
            };
            if rng.gen_bool(0.5) {
                let base = INFINITE_BASES.choose(rng).unwrap();
                parts.push(format!("{prefix}({base})"));
                grafted = true;
            } else if leaf.is_empty() {
                parts.push("eps".to_string());
            } else {
                parts.push(prefix);
            }
        }
        if !grafted {
            continue;
        }
        let expr = parts.join("|");
        let code = PrefixCode::from_regex(&expr).expect("grafting keeps the code prefix-free");
        if code.is_infinite() {
            return (code, expr);
        }
    }
}

/// A random regular prefix code, finite or infinite.
pub fn random_regular_code<R: Rng>(rng: &mut R) -> PrefixCode {
    if rng.gen_bool(0.7) {
        random_infinite_code(rng).0
    } else {
        PrefixCode::finite(random_finite_code(rng, 8, 4)).unwrap()
    }
}

/// `head·period^ω` with `|head| ≤ max_head` and `1 ≤ |period| ≤ max_period`.
pub fn random_end<R: Rng>(rng: &mut R, max_head: usize, max_period: usize) -> UpEnd {
    let head = random_word(rng, 0, max_head);
    let period = random_word(rng, 1, max_period);
    UpEnd::new(head, period).unwrap()
}

/// A random end of `P·A^ω` (falls back to extending a member of `P`).
pub fn random_end_in<R: Rng>(rng: &mut R, p: &PrefixCode, max_head: usize, max_period: usize) -> UpEnd {
    for _ in 0..64 {
        let e = random_end(rng, max_head, max_period);
        if rim_core::cantor::member_ends(p, &e) {
            return e;
        }
    }
    let members = p.first_members(16);
    let x = members.choose(rng).expect("nonempty code");
    random_end(rng, 2, max_period).prepend(x)
}

/// A random trimmed machine with at most `max_states` states before trimming.
pub fn random_machine<R: Rng>(rng: &mut R, max_states: usize) -> TransducerMorphism {
    loop {
        let n = rng.gen_range(2..=max_states.max(2));
        let finals = rng.gen_range(1..=n.div_ceil(3));
        let name = |i: usize| format!("q{i}");
        let mut spec = MachineSpec::new("q0");
        for i in n - finals..n {
            spec = spec.final_state(&name(i), random_word(rng, 0, 2));
        }
        for i in 0..n - finals {
            for a in 0..2u8 {
                if rng.gen_bool(0.85) {
                    let t = rng.gen_range(0..n);
                    spec = spec.edge(&name(i), a, &name(t), random_word(rng, 0, 2));
                }
            }
        }
        let (m, _) = TransducerMorphism::make(&spec).expect("generated machines are valid");
        if !m.is_empty() {
            return m;
        }
    }
}

/// Replaces the output of one random transition or final output.
pub fn mutate_machine<R: Rng>(rng: &mut R, m: &TransducerMorphism) -> TransducerMorphism {
    let text = m.to_text();
    let lines: Vec<&str> = text.lines().collect();
    let editable: Vec<usize> = (0..lines.len()).filter(|&i| lines[i].contains('/')).collect();
    let i = *editable.choose(rng).expect("nonempty machine has a final state");
    let (head, _) = lines[i].split_once('/').unwrap();
    let replaced = format!("{head}/ {}", random_word(rng, 0, 2));
    let mut out: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    out[i] = replaced;
    TransducerMorphism::parse(&out.join("\n")).expect("mutation keeps the machine valid")
}

/// `0^{2n}1 ↦ 0^{2n+1}1`, `0^{2n+1}1 ↦ 0^{2n}1`.
pub fn swap_machine() -> TransducerMorphism {
    TransducerMorphism::parse(
        "transducer\nstart: even\nfinal: done / eps\n\
         even 0 -> odd / eps\nodd 0 -> even / 00\neven 1 -> done / 01\nodd 1 -> done / 1\n",
    )
    .unwrap()
}

/// `0^n1 ↦ 0^n`.
pub fn collapse_machine() -> TransducerMorphism {
    TransducerMorphism::parse("transducer\nstart: q\nfinal: done / eps\nq 0 -> q / 0\nq 1 -> done / eps\n").unwrap()
}

/// A pair of machines with at most `max_states` states each, drawn from a
/// mix of related and unrelated constructions so that both outcomes of a
/// bd-equivalence test are common.
pub fn random_machine_pair<R: Rng>(rng: &mut R, max_states: usize) -> (TransducerMorphism, TransducerMorphism) {
    loop {
        let f = random_machine(rng, max_states.min(8));
        let g = match rng.gen_range(0..7) {
            0 => f.clone(),
            1 => f.restrict(&f.domain_code().refine(rng.gen_range(1..=2))).unwrap(),
            2 => mutate_machine(rng, &f),
            3 => random_machine(rng, max_states.min(8)),
            4 => {
                let dom = f.domain_code();
                let e = random_end_in(rng, &dom, 4, 3);
                match dom.puncture(&e) {
                    Ok(p) => f.restrict(&p).unwrap(),
                    Err(_) => continue,
                }
            }
            5 => match f.to_finite() {
                Some(t) => TransducerMorphism::lift(&t.bmax()),
                None => f.restrict(&f.domain_code().refine(1)).unwrap(),
            },
            _ => {
                let id = TransducerMorphism::identity_on(&random_regular_code(rng));
                match rim_core::transducer::compose_bounded(&id, &f, 10_000) {
                    Ok(c) if !c.is_empty() => c,
                    _ => continue,
                }
            }
        };
        if g.num_states() <= max_states && f.num_states() <= max_states && !g.is_empty() {
            return (f, g);
        }
    }
}

pub mod oracle;
