//! Brute-force reference implementations. They share no code with the
//! library beyond the `Word` type and are only fit for small inputs.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rim_core::word::Word;

pub type Table = BTreeMap<Word, Word>;

pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|w| [w.child(0), w.child(1)]).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn single_merges(t: &Table) -> Vec<Table> {
    let mut out = Vec::new();
    for (k, v) in t {
        let (kl, vl) = (k.letters(), v.letters());
        if kl.last() != Some(&0) || vl.last() != Some(&0) {
            continue;
        }
        let x = Word::from_letters(kl[..kl.len() - 1].iter().copied());
        let y = Word::from_letters(vl[..vl.len() - 1].iter().copied());
        let mut x1 = x.clone();
        x1.push(1);
        let mut y1 = y.clone();
        y1.push(1);
        if t.get(&x1) == Some(&y1) {
            let mut next = t.clone();
            next.remove(k);
            next.remove(&x1);
            next.insert(x, y);
            out.push(next);
        }
    }
    out
}

/// Every table reachable by exhaustive sibling merging that admits no
/// further merge, over all merge orders.
pub fn merge_fixed_points(t: &Table) -> BTreeSet<Vec<(Word, Word)>> {
    let mut seen: HashSet<Vec<(Word, Word)>> = HashSet::new();
    let mut stack = vec![t.clone()];
    let mut fixed = BTreeSet::new();
    while let Some(cur) = stack.pop() {
        let key: Vec<(Word, Word)> = cur.clone().into_iter().collect();
        if !seen.insert(key.clone()) {
            continue;
        }
        let next = single_merges(&cur);
        if next.is_empty() {
            fixed.insert(key);
        }
        stack.extend(next);
    }
    fixed
}

/// Value of a table on `w`, scanning all keys.
pub fn eval_table(t: &Table, w: &Word) -> Option<Word> {
    t.iter()
        .find(|(k, _)| k.is_prefix_of(w))
        .map(|(k, v)| v.concat(&w.suffix_from(k.len())))
}

fn comparable(u: &Word, v: &Word) -> bool {
    u.is_prefix_of(v) || v.is_prefix_of(u)
}

/// End-equivalence of finite codes: every word up to the longest member
/// length is comparable to one code iff to the other.
pub fn finite_end_equivalent(p: &[Word], q: &[Word]) -> bool {
    let l = p.iter().chain(q).map(Word::len).max().unwrap_or(0);
    all_words(l)
        .iter()
        .all(|w| p.iter().any(|x| comparable(x, w)) == q.iter().any(|x| comparable(x, w)))
}

/// Equality of `P·A^ω` and `Q·A^ω` for finite codes: the same words of the
/// longest member length have a prefix in each.
pub fn finite_ends_equal(p: &[Word], q: &[Word]) -> bool {
    let l = p.iter().chain(q).map(Word::len).max().unwrap_or(0);
    all_words(l)
        .iter()
        .filter(|w| w.len() == l)
        .all(|w| p.iter().any(|x| x.is_prefix_of(w)) == q.iter().any(|x| x.is_prefix_of(w)))
}
