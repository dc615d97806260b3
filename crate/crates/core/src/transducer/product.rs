//! Product constructions: lifting tables, identities on codes, composition
//! and restriction all build a machine by exploring a synchronized state
//! space from a start key.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use super::{State, TransducerError, TransducerMorphism};
use crate::codes::PrefixCode;
use crate::morphism::FiniteMorphism;
use crate::word::{Letter, Word};

/// Default bound on the number of product states.
pub const DEFAULT_STATE_BOUND: usize = 100_000;

enum Init<K> {
    /// Nothing is accepted.
    Empty,
    /// `ε` is in the domain code, with this value.
    Immediate(Word),
    /// Start in this key, having already emitted the pending word.
    Resolved(K, Word),
}

enum Step<K> {
    Stuck,
    To(K, Word),
    Finish(Word),
}

fn build<K, F>(init: Init<K>, mut step: F, bound: usize) -> Result<TransducerMorphism, TransducerError>
where
    K: Hash + Eq + Clone,
    F: FnMut(&K, Letter) -> Step<K>,
{
    let (start_key, pending) = match init {
        Init::Empty => return Ok(TransducerMorphism::zero()),
        Init::Immediate(out) => {
            let mut st = State::blank();
            st.final_out = Some(out);
            return Ok(TransducerMorphism {
                start: 0,
                states: vec![st],
            });
        }
        Init::Resolved(k, pending) => (k, pending),
    };
    // state 0 is the shared final state, 1 the start key
    let mut states = vec![State::blank()];
    states[0].final_out = Some(Word::empty());
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut keys = vec![start_key.clone()];
    index.insert(start_key, 1);
    states.push(State::blank());
    let mut queue = VecDeque::from([1usize]);
    while let Some(id) = queue.pop_front() {
        let key = keys[id - 1].clone();
        for a in 0..2 {
            let edge = match step(&key, a) {
                Step::Stuck => None,
                Step::Finish(out) => Some((0, out)),
                Step::To(k, out) => {
                    let t = match index.get(&k) {
                        Some(&t) => t,
                        None => {
                            if keys.len() >= bound {
                                return Err(TransducerError::CompositionBlowup(bound));
                            }
                            let t = states.len();
                            index.insert(k.clone(), t);
                            keys.push(k);
                            states.push(State::blank());
                            queue.push_back(t);
                            t
                        }
                    };
                    Some((t, out))
                }
            };
            states[id].edges[a as usize] = edge;
        }
    }
    let mut start = 1;
    if !pending.is_empty() {
        // a fresh start state carrying the pending output on its edges
        let mut st = State::blank();
        for a in 0..2 {
            st.edges[a] = states[1].edges[a].as_ref().map(|(t, out)| (*t, pending.concat(out)));
        }
        start = states.len();
        states.push(st);
    }
    Ok(TransducerMorphism { start, states }.trim().0)
}

/// Result of feeding a word into a machine from a non-final state.
enum Feed {
    Stuck,
    /// Consumed everything, now in this non-final state.
    In(usize, Word),
    /// Reached a final state; output includes the final output and the
    /// copied remainder.
    Done(Word),
}

fn feed(m: &TransducerMorphism, mut q: usize, chunk: &Word) -> Feed {
    let mut out = Word::empty();
    for (i, &a) in chunk.letters().iter().enumerate() {
        if let Some(f) = m.final_output(q) {
            out.extend_from(f);
            out.extend_from(&chunk.suffix_from(i));
            return Feed::Done(out);
        }
        match m.transition(q, a) {
            None => return Feed::Stuck,
            Some((t, o)) => {
                out.extend_from(o);
                q = t;
            }
        }
    }
    match m.final_output(q) {
        Some(f) => {
            out.extend_from(f);
            Feed::Done(out)
        }
        None => Feed::In(q, out),
    }
}

impl TransducerMorphism {
    /// Trie-shaped machine computing a finite table.
    pub fn lift(f: &FiniteMorphism) -> TransducerMorphism {
        if f.is_empty() {
            return Self::zero();
        }
        if let Some(v) = f.get(&Word::empty()) {
            return build::<Word, _>(Init::Immediate(v.clone()), |_, _| Step::Stuck, 1).unwrap();
        }
        let prefixes: std::collections::HashSet<Word> = f
            .keys()
            .flat_map(|k| (1..k.len()).map(|i| k.prefix(i)).collect::<Vec<_>>())
            .collect();
        let step = |x: &Word, a: Letter| {
            let y = x.child(a);
            if let Some(v) = f.get(&y) {
                Step::Finish(v.clone())
            } else if prefixes.contains(&y) {
                Step::To(y, Word::empty())
            } else {
                Step::Stuck
            }
        };
        build(Init::Resolved(Word::empty(), Word::empty()), step, usize::MAX).unwrap()
    }

    /// `{ε ↦ ε}`
    pub fn identity() -> TransducerMorphism {
        Self::identity_on(&PrefixCode::epsilon())
    }

    /// The identity restricted to `code·A*`.
    pub fn identity_on(code: &PrefixCode) -> TransducerMorphism {
        let d = code.dfa();
        let live = d.live_states();
        let init = if d.is_accepting(d.start()) {
            Init::Immediate(Word::empty())
        } else if !live[d.start()] {
            Init::Empty
        } else {
            Init::Resolved(d.start(), Word::empty())
        };
        let step = |&s: &usize, a: Letter| {
            let t = d.next(s, a);
            if d.is_accepting(t) {
                Step::Finish(Word::from_letters([a]))
            } else if live[t] {
                Step::To(t, Word::from_letters([a]))
            } else {
                Step::Stuck
            }
        };
        build(init, step, usize::MAX).unwrap()
    }

    /// `g ∘ self` with the default state bound.
    pub fn then(&self, g: &TransducerMorphism) -> Result<TransducerMorphism, TransducerError> {
        compose(g, self)
    }

    /// Restriction to `c·A*`, which must lie inside the domain.
    pub fn restrict(&self, c: &PrefixCode) -> Result<TransducerMorphism, TransducerError> {
        let dom = self.domain_code().ideal();
        if let Some(x) = c.ideal().subset_witness(&dom) {
            return Err(TransducerError::NotASubIdeal(x));
        }
        Ok(restrict_unchecked(self, c))
    }
}

/// `g ∘ f` with the default state bound.
pub fn compose(g: &TransducerMorphism, f: &TransducerMorphism) -> Result<TransducerMorphism, TransducerError> {
    compose_bounded(g, f, DEFAULT_STATE_BOUND)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Phase {
    /// Both running: `f` in `p`, `g` in `q`.
    Both(usize, usize),
    /// `g` is done; `f` still running, its output copied.
    FOnly(usize),
    /// `f` is done; the input is fed straight into `g`.
    GOnly(usize),
}

/// `g ∘ f`: simulate `f`, feeding its output into `g`; after `f` finishes,
/// its final output and then the copied input go into `g`.
pub fn compose_bounded(
    g: &TransducerMorphism,
    f: &TransducerMorphism,
    bound: usize,
) -> Result<TransducerMorphism, TransducerError> {
    if f.is_empty() || g.is_empty() {
        return Ok(TransducerMorphism::zero());
    }
    // f has just reached state p with g-side feed result `fed`
    let settle = |p: usize, fed: Feed, mut out: Word| -> Step<Phase> {
        match fed {
            Feed::Stuck => Step::Stuck,
            Feed::In(q, o) => {
                out.extend_from(&o);
                match f.final_output(p) {
                    None => Step::To(Phase::Both(p, q), out),
                    Some(fo) => match feed(g, q, fo) {
                        Feed::Stuck => Step::Stuck,
                        Feed::In(q2, o2) => Step::To(Phase::GOnly(q2), out.concat(&o2)),
                        Feed::Done(o2) => Step::Finish(out.concat(&o2)),
                    },
                }
            }
            Feed::Done(o) => {
                out.extend_from(&o);
                match f.final_output(p) {
                    None => Step::To(Phase::FOnly(p), out),
                    Some(fo) => Step::Finish(out.concat(fo)),
                }
            }
        }
    };
    let init = match settle(f.start(), feed(g, g.start(), &Word::empty()), Word::empty()) {
        Step::Stuck => Init::Empty,
        Step::Finish(out) => Init::Immediate(out),
        Step::To(k, out) => Init::Resolved(k, out),
    };
    let step = |k: &Phase, a: Letter| -> Step<Phase> {
        match *k {
            Phase::Both(p, q) => match f.transition(p, a) {
                None => Step::Stuck,
                Some((p2, u)) => settle(p2, feed(g, q, u), Word::empty()),
            },
            Phase::FOnly(p) => match f.transition(p, a) {
                None => Step::Stuck,
                Some((p2, u)) => match f.final_output(p2) {
                    None => Step::To(Phase::FOnly(p2), u.clone()),
                    Some(fo) => Step::Finish(u.concat(fo)),
                },
            },
            Phase::GOnly(q) => match feed(g, q, &Word::from_letters([a])) {
                Feed::Stuck => Step::Stuck,
                Feed::In(q2, o) => Step::To(Phase::GOnly(q2), o),
                Feed::Done(o) => Step::Finish(o),
            },
        }
    };
    build(init, step, bound)
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct RestrictKey {
    /// `None` once the machine has finished.
    m: Option<usize>,
    /// `None` once a code member has been read.
    c: Option<usize>,
}

/// `m` on `Dom(m) ∩ c·A*`.
pub(crate) fn restrict_unchecked(m: &TransducerMorphism, c: &PrefixCode) -> TransducerMorphism {
    if m.is_empty() {
        return TransducerMorphism::zero();
    }
    let d = c.dfa();
    let live = d.live_states();
    let mut pending = Word::empty();
    let mk = match m.final_output(m.start()) {
        Some(fo) => {
            pending = fo.clone();
            None
        }
        None => Some(m.start()),
    };
    let ck = if d.is_accepting(d.start()) {
        None
    } else {
        Some(d.start())
    };
    let init = if !live[d.start()] {
        Init::Empty
    } else if mk.is_none() && ck.is_none() {
        Init::Immediate(pending)
    } else {
        Init::Resolved(RestrictKey { m: mk, c: ck }, pending)
    };
    let step = |k: &RestrictKey, a: Letter| -> Step<RestrictKey> {
        let (m2, out) = match k.m {
            None => (None, Word::from_letters([a])),
            Some(p) => match m.transition(p, a) {
                None => return Step::Stuck,
                Some((p2, u)) => match m.final_output(p2) {
                    None => (Some(p2), u.clone()),
                    Some(fo) => (None, u.concat(fo)),
                },
            },
        };
        let c2 = match k.c {
            None => None,
            Some(s) => {
                let t = d.next(s, a);
                if d.is_accepting(t) {
                    None
                } else if live[t] {
                    Some(t)
                } else {
                    return Step::Stuck;
                }
            }
        };
        if m2.is_none() && c2.is_none() {
            Step::Finish(out)
        } else {
            Step::To(RestrictKey { m: m2, c: c2 }, out)
        }
    };
    build(init, step, usize::MAX).unwrap()
}

#[cfg(test)]
mod tests {
    use super::super::tests::{collapse, swap};
    use super::super::EquivMode;
    use super::*;
    use crate::word::w;

    fn fm(s: &str) -> FiniteMorphism {
        s.parse().unwrap()
    }

    #[test]
    fn lift_examples() {
        let m = TransducerMorphism::lift(&fm("0 -> 1, 1 -> 0"));
        assert_eq!(m.eval(&w("011")), Ok(w("111")));
        assert_eq!(m.to_finite(), Some(fm("0 -> 1, 1 -> 0")));
        assert!(TransducerMorphism::lift(&FiniteMorphism::zero()).is_empty());
        let f = fm("0 -> 0, 1 -> 10");
        let (d, i) = TransducerMorphism::lift(&f).codes().unwrap();
        assert_eq!(d, PrefixCode::finite([w("0"), w("1")]).unwrap());
        assert_eq!(i, PrefixCode::finite([w("0"), w("10")]).unwrap());
        let deep = fm("00 -> 1, 010 -> eps, 1 -> 11");
        assert_eq!(TransducerMorphism::lift(&deep).to_finite(), Some(deep));
        let eps = TransducerMorphism::lift(&FiniteMorphism::prepend(w("10")));
        assert_eq!(eps.eval(&w("1")), Ok(w("101")));
    }

    #[test]
    fn compose_examples() {
        let id01 = TransducerMorphism::identity_on(&PrefixCode::from_regex("0*1").unwrap());
        let ss = compose(&swap(), &swap()).unwrap();
        assert!(ss.equivalent(&id01, EquivMode::Bd));
        for x in ["1", "01", "0001", "0000110"] {
            assert_eq!(ss.eval(&w(x)), Ok(w(x)));
        }
        let c = compose(&collapse(), &TransducerMorphism::lift(&fm("1 -> 1"))).unwrap();
        assert_eq!(c.domain_code(), PrefixCode::finite([w("1")]).unwrap());
        assert_eq!(c.eval(&w("10")), Ok(w("0")));
        let id = compose(&TransducerMorphism::identity(), &swap()).unwrap();
        assert!(id.equivalent(&swap(), EquivMode::End));
        // pending initial output from the second machine
        let pre = TransducerMorphism::lift(&FiniteMorphism::prepend(w("0")));
        let c = compose(&swap(), &pre).unwrap();
        assert_eq!(c.eval(&w("1")), Ok(w("1")));
        assert_eq!(c.eval(&w("01")), Ok(w("0001")));
        let c = compose(&pre, &pre).unwrap();
        assert_eq!(c.eval(&w("eps")), Ok(w("00")));
    }

    #[test]
    fn blowup_is_reported() {
        assert_eq!(
            compose_bounded(&swap(), &swap(), 1),
            Err(TransducerError::CompositionBlowup(1))
        );
    }

    #[test]
    fn restrict_examples() {
        let p = PrefixCode::from_regex("0*1").unwrap();
        let r = TransducerMorphism::identity().restrict(&p).unwrap();
        assert_eq!(r, TransducerMorphism::identity_on(&p));
        assert!(swap().restrict(&p).unwrap().equivalent(&swap(), EquivMode::Bd));
        let one = collapse().restrict(&PrefixCode::finite([w("1")]).unwrap()).unwrap();
        assert_eq!(one.to_finite(), Some(fm("1 -> eps")));
        assert_eq!(
            swap().restrict(&PrefixCode::epsilon()),
            Err(TransducerError::NotASubIdeal(w("eps")))
        );
    }
}
