//! Deciding whether two machines agree on the intersection of their domains.
//!
//! Run both machines in lockstep. A pair state is *useful* if some
//! continuation from it lies in both domains. If the machines agree, every
//! input reaching a useful pair state leaves the same output lag (the part
//! of one output the other has not produced yet): otherwise appending a
//! common continuation would give different values on at least one of the
//! two inputs. So a breadth-first search that assigns one lag per useful
//! pair state either finishes (agreement) or finds a conflict, and each
//! conflict yields a concrete input on which the values differ.

use std::collections::{HashMap, VecDeque};

use super::TransducerMorphism;
use crate::cantor::{EndAction, UpEnd};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// An input in both domains with different values.
    Disagree(Word),
}

/// `None` once the machine has reached a final state.
type Side = Option<usize>;
type Pair = (Side, Side);

fn init(m: &TransducerMorphism) -> (Side, Word) {
    match m.final_output(m.start()) {
        Some(fo) => (None, fo.clone()),
        None => (Some(m.start()), Word::empty()),
    }
}

fn advance(m: &TransducerMorphism, s: Side, a: Letter) -> Option<(Side, Word)> {
    match s {
        None => Some((None, Word::from_letters([a]))),
        Some(p) => {
            let (t, out) = m.transition(p, a)?;
            Some(match m.final_output(t) {
                Some(fo) => (None, out.concat(fo)),
                None => (Some(t), out.clone()),
            })
        }
    }
}

/// Signed difference of the two outputs: `f_out = g_out·w` when `f_ahead`,
/// `g_out = f_out·w` otherwise. Balanced lags use `f_ahead = true`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Lag {
    f_ahead: bool,
    w: Word,
}

impl Lag {
    fn balanced() -> Self {
        Lag {
            f_ahead: true,
            w: Word::empty(),
        }
    }

    /// The lag after `f` emits `uf` and `g` emits `ug`; `None` if the
    /// outputs become prefix-incomparable.
    fn extend(&self, uf: &Word, ug: &Word) -> Option<Lag> {
        let (ft, gt) = if self.f_ahead {
            (self.w.concat(uf), ug.clone())
        } else {
            (uf.clone(), self.w.concat(ug))
        };
        if let Some(rest) = ft.strip_prefix(&gt) {
            Some(Lag { f_ahead: true, w: rest })
        } else {
            gt.strip_prefix(&ft).map(|rest| Lag {
                f_ahead: false,
                w: rest,
            })
        }
    }
}

/// Successor pair with the outputs of both machines.
type PairEdge = Option<(Pair, Word, Word)>;

struct PairGraph {
    edges: HashMap<Pair, [PairEdge; 2]>,
    useful: HashMap<Pair, bool>,
}

fn pair_graph(f: &TransducerMorphism, g: &TransducerMorphism, start: Pair) -> PairGraph {
    let mut edges: HashMap<Pair, [PairEdge; 2]> = HashMap::new();
    let mut rev: HashMap<Pair, Vec<Pair>> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    edges.insert(start, [None, None]);
    while let Some(n) = queue.pop_front() {
        let mut row = [None, None];
        for a in 0..2 {
            let (Some((sf, uf)), Some((sg, ug))) = (advance(f, n.0, a), advance(g, n.1, a)) else {
                continue;
            };
            let t = (sf, sg);
            rev.entry(t).or_default().push(n);
            if let std::collections::hash_map::Entry::Vacant(e) = edges.entry(t) {
                e.insert([None, None]);
                queue.push_back(t);
            }
            row[a as usize] = Some((t, uf, ug));
        }
        edges.insert(n, row);
    }
    let mut useful: HashMap<Pair, bool> = edges.keys().map(|&n| (n, false)).collect();
    let done = (None, None);
    if edges.contains_key(&done) {
        useful.insert(done, true);
        let mut queue = VecDeque::from([done]);
        while let Some(n) = queue.pop_front() {
            for &p in rev.get(&n).map(Vec::as_slice).unwrap_or(&[]) {
                if !useful[&p] {
                    useful.insert(p, true);
                    queue.push_back(p);
                }
            }
        }
    }
    PairGraph { edges, useful }
}

impl PairGraph {
    /// Shortest continuation from `n` reaching both final states.
    fn completion(&self, n: Pair) -> Word {
        let mut parent: HashMap<Pair, (Pair, Letter)> = HashMap::new();
        let mut queue = VecDeque::from([n]);
        let mut seen = std::collections::HashSet::from([n]);
        while let Some(s) = queue.pop_front() {
            if s == (None, None) {
                let mut letters = Vec::new();
                let mut cur = s;
                while cur != n {
                    let (p, a) = parent[&cur];
                    letters.push(a);
                    cur = p;
                }
                letters.reverse();
                return Word::from_letters(letters);
            }
            for (a, e) in self.edges[&s].iter().enumerate() {
                if let Some((t, _, _)) = e {
                    if self.useful[t] && seen.insert(*t) {
                        parent.insert(*t, (s, a as Letter));
                        queue.push_back(*t);
                    }
                }
            }
        }
        unreachable!("completion requested from a useless pair state")
    }
}

/// Whether `f` and `g` coincide on `Dom(f) ∩ Dom(g)`.
pub fn t_agree(f: &TransducerMorphism, g: &TransducerMorphism) -> Agreement {
    if f.is_empty() || g.is_empty() {
        return Agreement::Agree;
    }
    let (sf, of) = init(f);
    let (sg, og) = init(g);
    let start = (sf, sg);
    let graph = pair_graph(f, g, start);
    if !graph.useful[&start] {
        return Agreement::Agree;
    }
    let differs = |x: &Word| f.eval(x).ok() != g.eval(x).ok();
    let pick = |cands: Vec<Word>| -> Agreement {
        let found = cands.into_iter().find(|x| differs(x));
        Agreement::Disagree(found.expect("lag conflict implies a disagreement"))
    };
    let Some(lag0) = Lag::balanced().extend(&of, &og) else {
        return pick(vec![graph.completion(start)]);
    };
    let mut assigned: HashMap<Pair, (Lag, Word)> = HashMap::new();
    let mut queue = VecDeque::new();
    assigned.insert(start, (lag0, Word::empty()));
    queue.push_back(start);
    while let Some(n) = queue.pop_front() {
        let (lag, path) = assigned[&n].clone();
        if n == (None, None) && !lag.w.is_empty() {
            return pick(vec![path]);
        }
        for (a, e) in graph.edges[&n].iter().enumerate() {
            let Some((t, uf, ug)) = e else { continue };
            if !graph.useful[t] {
                continue;
            }
            let next_path = path.child(a as Letter);
            let Some(next_lag) = lag.extend(uf, ug) else {
                return pick(vec![next_path.concat(&graph.completion(*t))]);
            };
            match assigned.get(t) {
                Some((old_lag, old_path)) => {
                    if *old_lag != next_lag {
                        let u = graph.completion(*t);
                        return pick(vec![old_path.concat(&u), next_path.concat(&u)]);
                    }
                }
                None => {
                    assigned.insert(*t, (next_lag, next_path));
                    queue.push_back(*t);
                }
            }
        }
    }
    Agreement::Agree
}

/// An end on which the actions of `f` and `g` differ, whenever they are not
/// bd-equivalent: either an end in exactly one domain, or an extension of a
/// disagreement witness.
pub fn bd_separating_end(f: &TransducerMorphism, g: &TransducerMorphism) -> Option<UpEnd> {
    let verdict = f.domain_code().bd_compare(&g.domain_code());
    if !verdict.is_equivalent() {
        return verdict.witness;
    }
    match t_agree(f, g) {
        Agreement::Agree => None,
        Agreement::Disagree(x) => (0..2)
            .map(|a| UpEnd::new(x.clone(), Word::from_letters([a])).unwrap())
            .find(|e| f.apply_end(e).ok() != g.apply_end(e).ok()),
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{collapse, swap};
    use super::super::EquivMode;
    use super::*;
    use crate::codes::PrefixCode;
    use crate::word::w;

    fn lift(s: &str) -> TransducerMorphism {
        TransducerMorphism::lift(&s.parse().unwrap())
    }

    #[test]
    fn agree_examples() {
        assert_eq!(t_agree(&swap(), &lift("1 -> 01, 01 -> 1")), Agreement::Agree);
        let id01 = TransducerMorphism::identity_on(&PrefixCode::from_regex("0*1").unwrap());
        assert_eq!(t_agree(&swap(), &id01), Agreement::Disagree(w("1")));
        assert_eq!(t_agree(&swap(), &swap()), Agreement::Agree);
        assert_eq!(t_agree(&collapse(), &collapse()), Agreement::Agree);
        assert_eq!(t_agree(&swap(), &TransducerMorphism::zero()), Agreement::Agree);
    }

    #[test]
    fn lag_conflicts_are_found() {
        // agree on 0^k1 for k < 3, then differ
        let f = lift("1 -> 1, 01 -> 01, 001 -> 001, 0001 -> 1");
        let id = TransducerMorphism::identity();
        assert_eq!(t_agree(&f, &id), Agreement::Disagree(w("0001")));
        // outputs differ only by where a letter is emitted
        let a: TransducerMorphism = "start: s\nfinal: f / 1\ns 0 -> s / 0\ns 1 -> f / eps".parse().unwrap();
        let b: TransducerMorphism = "start: s\nfinal: f / eps\ns 0 -> s / 0\ns 1 -> f / 1".parse().unwrap();
        assert_eq!(t_agree(&a, &b), Agreement::Agree);
        let c: TransducerMorphism = "start: s\nfinal: f / eps\ns 0 -> s / 0\ns 1 -> f / 0".parse().unwrap();
        assert_eq!(t_agree(&a, &c), Agreement::Disagree(w("1")));
        // growing lag: 0^n1 ↦ 0^{2n}1 against 0^n1 ↦ 0^n1
        let d: TransducerMorphism = "start: s\nfinal: f / eps\ns 0 -> s / 00\ns 1 -> f / 1".parse().unwrap();
        let e = TransducerMorphism::identity();
        assert_eq!(t_agree(&d, &e), Agreement::Disagree(w("01")));
    }

    #[test]
    fn equivalence_examples() {
        let id = TransducerMorphism::identity();
        let id01 = TransducerMorphism::identity_on(&PrefixCode::from_regex("0*1").unwrap());
        assert!(id.equivalent(&id01, EquivMode::End));
        assert!(!id.equivalent(&id01, EquivMode::Bd));
        let refined = swap().restrict(&PrefixCode::from_regex("0*1(0|1)").unwrap()).unwrap();
        assert!(swap().equivalent(&refined, EquivMode::Bd));
    }

    #[test]
    fn separating_ends() {
        let id = TransducerMorphism::identity();
        let id01 = TransducerMorphism::identity_on(&PrefixCode::from_regex("0*1").unwrap());
        assert_eq!(bd_separating_end(&id, &id01), Some("(0)".parse().unwrap()));
        let e = bd_separating_end(
            &swap(),
            &lift("0 -> 0, 1 -> 1")
                .restrict(&PrefixCode::from_regex("0*1").unwrap())
                .unwrap(),
        );
        assert_eq!(e, Some("1(0)".parse().unwrap()));
        assert_eq!(bd_separating_end(&swap(), &swap()), None);
    }
}
