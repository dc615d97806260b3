//! Complete deterministic automata over `{0,1}`.
//!
//! Every [`Dfa`] carries a total transition function (a dead state is an
//! ordinary state), so complementation is a flip of the accepting flags.
//! [`Dfa::minimize`] produces the minimal automaton with states numbered in
//! breadth-first order from the start state, which makes minimized automata
//! of equal languages structurally equal.

mod nfa;
mod regex;
mod to_regex;

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::word::{Letter, Word};

pub use nfa::Nfa;
pub use regex::{compile_regex, Regex};
pub use to_regex::to_regex_string;

/// Default cap on word length for enumeration.
pub const DEFAULT_MAX_ENUM_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not a right ideal: {word} is in the language but {word}{letter} is not")]
    NotARightIdeal { word: Word, letter: Letter },
    #[error("malformed automaton dump: {0}")]
    Dump(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    Diff,
    Xor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Empty,
    Finite(u128),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derived {
    /// `L·A*`
    RightIdealClosure,
    /// `L·A⁺`
    StrictExtensions,
    /// all prefixes of words of `L`
    PrefixClosure,
    /// `L − L·A⁺`, defined when `L` is a right ideal
    PrefCodeOfIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    start: usize,
    trans: Vec<[usize; 2]>,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Assembles an automaton from raw tables; the result is not minimized.
    pub fn from_parts(start: usize, trans: Vec<[usize; 2]>, accepting: Vec<bool>) -> Self {
        assert_eq!(trans.len(), accepting.len());
        assert!(start < trans.len());
        assert!(trans.iter().flatten().all(|&t| t < trans.len()));
        Dfa {
            start,
            trans,
            accepting,
        }
    }

    pub fn empty() -> Self {
        Dfa::from_parts(0, vec![[0, 0]], vec![false])
    }

    pub fn universal() -> Self {
        Dfa::from_parts(0, vec![[0, 0]], vec![true])
    }

    pub fn epsilon() -> Self {
        Dfa::from_parts(0, vec![[1, 1], [1, 1]], vec![true, false])
    }

    /// Minimal automaton of a finite set of words (trie, then minimize).
    pub fn from_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let mut trans = vec![[usize::MAX; 2]];
        let mut accepting = vec![false];
        for word in words {
            let mut s = 0;
            for &a in word.letters() {
                if trans[s][a as usize] == usize::MAX {
                    trans.push([usize::MAX; 2]);
                    accepting.push(false);
                    trans[s][a as usize] = trans.len() - 1;
                }
                s = trans[s][a as usize];
            }
            accepting[s] = true;
        }
        let dead = trans.len();
        trans.push([dead, dead]);
        accepting.push(false);
        for row in &mut trans {
            for t in row.iter_mut() {
                if *t == usize::MAX {
                    *t = dead;
                }
            }
        }
        Dfa::from_parts(0, trans, accepting).minimize()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn num_states(&self) -> usize {
        self.trans.len()
    }

    pub fn next(&self, s: usize, a: Letter) -> usize {
        self.trans[s][a as usize]
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn run(&self, from: usize, w: &Word) -> usize {
        w.letters().iter().fold(from, |s, &a| self.next(s, a))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.accepting[self.run(self.start, w)]
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.start];
        seen[self.start] = true;
        while let Some(s) = stack.pop() {
            for &t in &self.trans[s] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, row) in self.trans.iter().enumerate() {
            for &t in row {
                rev[t].push(s);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(t) = stack.pop() {
            for &s in &rev[t] {
                if !live[s] {
                    live[s] = true;
                    stack.push(s);
                }
            }
        }
        live
    }

    /// Minimal automaton, states renumbered breadth-first from the start.
    pub fn minimize(&self) -> Dfa {
        let reach = self.reachable();
        let old: Vec<usize> = (0..self.num_states()).filter(|&s| reach[s]).collect();
        let mut class = vec![usize::MAX; self.num_states()];
        for &s in &old {
            class[s] = usize::from(self.accepting[s]);
        }
        let mut count = {
            let has_acc = old.iter().any(|&s| self.accepting[s]);
            let has_rej = old.iter().any(|&s| !self.accepting[s]);
            usize::from(has_acc) + usize::from(has_rej)
        };
        loop {
            let mut ids = std::collections::HashMap::new();
            let mut next_class = vec![usize::MAX; self.num_states()];
            for &s in &old {
                let sig = (class[s], class[self.trans[s][0]], class[self.trans[s][1]]);
                let fresh = ids.len();
                next_class[s] = *ids.entry(sig).or_insert(fresh);
            }
            let new_count = ids.len();
            class = next_class;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        // canonical BFS numbering of the classes
        let mut order = vec![usize::MAX; count];
        let mut rep = Vec::with_capacity(count);
        let mut queue = VecDeque::from([self.start]);
        order[class[self.start]] = 0;
        rep.push(self.start);
        while let Some(s) = queue.pop_front() {
            for a in 0..2 {
                let t = self.trans[s][a];
                if order[class[t]] == usize::MAX {
                    order[class[t]] = rep.len();
                    rep.push(t);
                    queue.push_back(t);
                }
            }
        }
        let trans = rep
            .iter()
            .map(|&s| [order[class[self.trans[s][0]]], order[class[self.trans[s][1]]]])
            .collect();
        let accepting = rep.iter().map(|&s| self.accepting[s]).collect();
        Dfa {
            start: 0,
            trans,
            accepting,
        }
    }

    pub fn complement(&self) -> Dfa {
        Dfa {
            start: self.start,
            trans: self.trans.clone(),
            accepting: self.accepting.iter().map(|a| !a).collect(),
        }
        .minimize()
    }

    /// Product construction, minimized.
    pub fn combine(&self, other: &Dfa, op: BoolOp) -> Dfa {
        let m = other.num_states();
        let idx = |p: usize, q: usize| p * m + q;
        let mut trans = Vec::with_capacity(self.num_states() * m);
        let mut accepting = Vec::with_capacity(self.num_states() * m);
        for p in 0..self.num_states() {
            for q in 0..m {
                trans.push([
                    idx(self.trans[p][0], other.trans[q][0]),
                    idx(self.trans[p][1], other.trans[q][1]),
                ]);
                let (x, y) = (self.accepting[p], other.accepting[q]);
                accepting.push(match op {
                    BoolOp::And => x && y,
                    BoolOp::Or => x || y,
                    BoolOp::Diff => x && !y,
                    BoolOp::Xor => x != y,
                });
            }
        }
        Dfa {
            start: idx(self.start, other.start),
            trans,
            accepting,
        }
        .minimize()
    }

    pub fn and(&self, other: &Dfa) -> Dfa {
        self.combine(other, BoolOp::And)
    }

    pub fn or(&self, other: &Dfa) -> Dfa {
        self.combine(other, BoolOp::Or)
    }

    pub fn diff(&self, other: &Dfa) -> Dfa {
        self.combine(other, BoolOp::Diff)
    }

    /// `L(self)·L(other)`.
    pub fn concat(&self, other: &Dfa) -> Dfa {
        let mut nfa = Nfa::new();
        let a = nfa.embed(self);
        let b = nfa.embed(other);
        let start = nfa.start();
        nfa.add_eps(start, a + self.start);
        for s in 0..self.num_states() {
            if self.accepting[s] {
                nfa.set_accepting(a + s, false);
                nfa.add_eps(a + s, b + other.start);
            }
        }
        nfa.to_dfa()
    }

    /// `{0,1}^n`.
    pub fn all_of_length(n: usize) -> Dfa {
        let mut trans: Vec<[usize; 2]> = (0..n).map(|i| [i + 1, i + 1]).collect();
        trans.push([n + 1, n + 1]);
        trans.push([n + 1, n + 1]);
        let mut accepting = vec![false; n + 2];
        accepting[n] = true;
        Dfa::from_parts(0, trans, accepting).minimize()
    }

    /// Shortest (and among those length-lexicographically least) accepted word.
    pub fn shortest_word(&self) -> Option<Word> {
        self.shortest_from(self.start)
    }

    pub(crate) fn shortest_from(&self, from: usize) -> Option<Word> {
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; self.num_states()];
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(s) = queue.pop_front() {
            if self.accepting[s] {
                let mut letters = Vec::new();
                let mut cur = s;
                while let Some((p, a)) = parent[cur] {
                    letters.push(a);
                    cur = p;
                }
                letters.reverse();
                return Some(Word::from_letters(letters));
            }
            for a in 0..2u8 {
                let t = self.trans[s][a as usize];
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((s, a));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_word().is_none()
    }

    pub fn is_universal(&self) -> bool {
        self.complement().is_empty()
    }

    /// Shortest word of `L(self) − L(other)`, if any.
    pub fn subset_witness(&self, other: &Dfa) -> Option<Word> {
        self.diff(other).shortest_word()
    }

    pub fn is_subset(&self, other: &Dfa) -> bool {
        self.subset_witness(other).is_none()
    }

    /// Shortest word in the symmetric difference, if the languages differ.
    pub fn difference_witness(&self, other: &Dfa) -> Option<Word> {
        let a = self.subset_witness(other);
        let b = other.subset_witness(self);
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    /// Language equality, decided as emptiness of both differences.
    pub fn equivalent(&self, other: &Dfa) -> bool {
        self.difference_witness(other).is_none()
    }

    pub fn classify(&self) -> Classification {
        let reach = self.reachable();
        let live = self.live_states();
        let useful: Vec<bool> = (0..self.num_states()).map(|s| reach[s] && live[s]).collect();
        if !useful[self.start] {
            return Classification::Empty;
        }
        // Kahn's algorithm on the useful subgraph
        let n = self.num_states();
        let mut indeg = vec![0usize; n];
        for s in 0..n {
            if useful[s] {
                for &t in &self.trans[s] {
                    if useful[t] {
                        indeg[t] += 1;
                    }
                }
            }
        }
        let mut order = Vec::new();
        let mut stack: Vec<usize> = (0..n).filter(|&s| useful[s] && indeg[s] == 0).collect();
        while let Some(s) = stack.pop() {
            order.push(s);
            for &t in &self.trans[s] {
                if useful[t] {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        if order.len() < useful.iter().filter(|&&u| u).count() {
            return Classification::Infinite;
        }
        let mut count = vec![0u128; n];
        for &s in order.iter().rev() {
            let mut c = u128::from(self.accepting[s]);
            for &t in &self.trans[s] {
                if useful[t] {
                    c = c.saturating_add(count[t]);
                }
            }
            count[s] = c;
        }
        Classification::Finite(count[self.start])
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self.classify(), Classification::Infinite)
    }

    /// Per-length word counts for rank/unrank and enumeration.
    pub fn counter(&self) -> LengthCounter<'_> {
        LengthCounter {
            dfa: self,
            table: vec![self.accepting.iter().map(|&a| u128::from(a)).collect()],
        }
    }

    /// First `k` accepted words in length-lexicographic order, considering
    /// words of length at most [`DEFAULT_MAX_ENUM_LEN`].
    pub fn enumerate(&self, k: usize) -> Vec<Word> {
        self.enumerate_up_to(k, DEFAULT_MAX_ENUM_LEN)
    }

    pub fn enumerate_up_to(&self, k: usize, max_len: usize) -> Vec<Word> {
        let mut out = Vec::new();
        if k == 0 {
            return out;
        }
        let mut counter = self.counter();
        // stop early once no longer words exist
        let finite_bound = match self.classify() {
            Classification::Empty => return out,
            Classification::Finite(_) => self.num_states(),
            Classification::Infinite => usize::MAX,
        };
        for len in 0..=max_len.min(finite_bound) {
            counter.ensure(len);
            if counter.count(self.start, len) == 0 {
                continue;
            }
            let mut prefix = Word::empty();
            counter.collect(self.start, len, &mut prefix, &mut out, k);
            if out.len() >= k {
                break;
            }
        }
        out
    }

    pub fn derived(&self, kind: Derived) -> Result<Dfa, AutomataError> {
        match kind {
            Derived::RightIdealClosure => Ok(self.seen_product(true)),
            Derived::StrictExtensions => Ok(self.seen_product(false)),
            Derived::PrefixClosure => Ok(Dfa {
                start: self.start,
                trans: self.trans.clone(),
                accepting: self.live_states(),
            }
            .minimize()),
            Derived::PrefCodeOfIdeal => {
                let closure = self.seen_product(true);
                if let Some(z) = closure.subset_witness(self) {
                    let mut word = z.clone();
                    let letter = word.pop().expect("ε cannot separate L·A* from L");
                    return Err(AutomataError::NotARightIdeal { word, letter });
                }
                Ok(self.diff(&self.seen_product(false)))
            }
        }
    }

    pub fn right_ideal_closure(&self) -> Dfa {
        self.seen_product(true)
    }

    pub fn strict_extensions(&self) -> Dfa {
        self.seen_product(false)
    }

    pub fn prefix_closure(&self) -> Dfa {
        self.derived(Derived::PrefixClosure).expect("infallible")
    }

    pub fn is_right_ideal(&self) -> bool {
        self.right_ideal_closure().is_subset(self)
    }

    /// Product with a flag recording whether a proper prefix (or, when
    /// `include_self`, the word itself) has been accepted.
    fn seen_product(&self, include_self: bool) -> Dfa {
        let n = self.num_states();
        let idx = |q: usize, seen: bool| 2 * q + usize::from(seen);
        let mut trans = vec![[0; 2]; 2 * n];
        let mut accepting = vec![false; 2 * n];
        for q in 0..n {
            for seen in [false, true] {
                let now = seen || self.accepting[q];
                for a in 0..2 {
                    trans[idx(q, seen)][a] = idx(self.trans[q][a], now);
                }
                accepting[idx(q, seen)] = if include_self { now } else { seen };
            }
        }
        Dfa {
            start: idx(self.start, false),
            trans,
            accepting,
        }
        .minimize()
    }

    /// Text dump: `start: s`, `accept: s1 s2 ...`, then `state letter -> state`.
    pub fn to_dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "start: {}", self.start);
        let acc: Vec<String> = (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .map(|s| s.to_string())
            .collect();
        let _ = writeln!(out, "accept: {}", acc.join(" "));
        for (s, row) in self.trans.iter().enumerate() {
            for (a, t) in row.iter().enumerate() {
                let _ = writeln!(out, "{s} {a} -> {t}");
            }
        }
        out
    }

    pub fn from_dump(text: &str) -> Result<Dfa, AutomataError> {
        let bad = |m: &str| AutomataError::Dump(m.to_string());
        let mut start = None;
        let mut accept = Vec::new();
        let mut edges = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("start:") {
                start = Some(rest.trim().parse::<usize>().map_err(|_| bad("bad start"))?);
            } else if let Some(rest) = line.strip_prefix("accept:") {
                for tok in rest.split_whitespace() {
                    accept.push(tok.parse::<usize>().map_err(|_| bad("bad accept"))?);
                }
            } else {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[2] != "->" {
                    return Err(bad(line));
                }
                let s: usize = parts[0].parse().map_err(|_| bad(line))?;
                let a: usize = parts[1].parse().map_err(|_| bad(line))?;
                let t: usize = parts[3].parse().map_err(|_| bad(line))?;
                if a > 1 {
                    return Err(bad("letter must be 0 or 1"));
                }
                edges.push((s, a, t));
            }
        }
        let start = start.ok_or_else(|| bad("missing start"))?;
        let n = edges
            .iter()
            .flat_map(|&(s, _, t)| [s, t])
            .chain(accept.iter().copied())
            .chain([start])
            .max()
            .unwrap()
            + 1;
        let mut trans = vec![[usize::MAX; 2]; n];
        for (s, a, t) in edges {
            if trans[s][a] != usize::MAX && trans[s][a] != t {
                return Err(bad("nondeterministic transition"));
            }
            trans[s][a] = t;
        }
        if trans.iter().flatten().any(|&t| t == usize::MAX) {
            return Err(bad("transition function is not total"));
        }
        let mut accepting = vec![false; n];
        for s in accept {
            accepting[s] = true;
        }
        Ok(Dfa::from_parts(start, trans, accepting))
    }
}

/// Lazily extended table `count(s, n)` = number of accepted words of length
/// `n` readable from state `s` (saturating at `u128::MAX`).
pub struct LengthCounter<'a> {
    dfa: &'a Dfa,
    table: Vec<Vec<u128>>,
}

impl LengthCounter<'_> {
    pub fn ensure(&mut self, len: usize) {
        while self.table.len() <= len {
            let prev = self.table.last().unwrap();
            let row = (0..self.dfa.num_states())
                .map(|s| prev[self.dfa.trans[s][0]].saturating_add(prev[self.dfa.trans[s][1]]))
                .collect();
            self.table.push(row);
        }
    }

    pub fn count(&mut self, state: usize, len: usize) -> u128 {
        self.ensure(len);
        self.table[len][state]
    }

    fn collect(&mut self, s: usize, len: usize, prefix: &mut Word, out: &mut Vec<Word>, k: usize) {
        if out.len() >= k {
            return;
        }
        if len == 0 {
            if self.dfa.accepting[s] {
                out.push(prefix.clone());
            }
            return;
        }
        for a in 0..2u8 {
            let t = self.dfa.next(s, a);
            if self.count(t, len - 1) > 0 {
                prefix.push(a);
                self.collect(t, len - 1, prefix, out, k);
                prefix.pop();
            }
        }
    }

    /// Number of accepted words strictly llex-smaller than `x`.
    pub fn rank(&mut self, x: &Word) -> u128 {
        let start = self.dfa.start;
        let mut r: u128 = 0;
        for len in 0..x.len() {
            r = r.saturating_add(self.count(start, len));
        }
        let mut s = start;
        for (i, &a) in x.letters().iter().enumerate() {
            let remaining = x.len() - i - 1;
            if a == 1 {
                r = r.saturating_add(self.count(self.dfa.next(s, 0), remaining));
            }
            s = self.dfa.next(s, a);
        }
        r
    }

    /// The accepted word of strict-llex rank `n`, searching lengths up to
    /// `max_len`.
    pub fn unrank(&mut self, mut n: u128, max_len: usize) -> Option<Word> {
        let start = self.dfa.start;
        let mut len = 0;
        loop {
            if len > max_len {
                return None;
            }
            let c = self.count(start, len);
            if n < c {
                break;
            }
            n -= c;
            len += 1;
        }
        let mut s = start;
        let mut out = Word::empty();
        for remaining in (0..len).rev() {
            let t0 = self.dfa.next(s, 0);
            let c0 = self.count(t0, remaining);
            if n < c0 {
                out.push(0);
                s = t0;
            } else {
                n -= c0;
                out.push(1);
                s = self.dfa.next(s, 1);
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn re(s: &str) -> Dfa {
        compile_regex(s).unwrap()
    }

    fn words(v: &[&str]) -> Vec<Word> {
        v.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn compile_examples() {
        let d = re("0*1");
        for s in ["1", "01", "001", "0001"] {
            assert!(d.accepts(&w(s)));
        }
        for s in ["eps", "0", "10", "011"] {
            assert!(!d.accepts(&w(s)));
        }
        let e = re("eps");
        assert!(e.accepts(&Word::empty()));
        assert_eq!(e.classify(), Classification::Finite(1));
        let c = re("(00|01)*11");
        assert!(c.accepts(&w("11")));
        assert!(c.accepts(&w("000111")));
        assert!(!c.accepts(&w("1011")));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(
            compile_regex("(01"),
            Err(AutomataError::Syntax { pos: 3, .. })
        ));
        assert!(matches!(compile_regex("0|"), Err(AutomataError::Syntax { .. })));
        assert!(matches!(compile_regex("02"), Err(AutomataError::Syntax { pos: 1, .. })));
    }

    #[test]
    fn combine_examples() {
        let l = re("0*1");
        assert!(l.and(&re("1")).equivalent(&Dfa::from_words(&words(&["1"]))));
        assert!(l.diff(&l).is_empty());
        assert!(re("0").or(&re("1")).equivalent(&Dfa::from_words(&words(&["0", "1"]))));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(re("0*1").classify(), Classification::Infinite);
        assert_eq!(re("00|01|11").classify(), Classification::Finite(3));
        assert_eq!(Dfa::empty().classify(), Classification::Empty);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(re("0*1").enumerate(3), words(&["1", "01", "001"]));
        assert_eq!(Dfa::empty().enumerate(5), Vec::<Word>::new());
        assert_eq!(re("0|1").enumerate(10), words(&["0", "1"]));
    }

    #[test]
    fn derived_examples() {
        let code = re("0*1(0|1)*").derived(Derived::PrefCodeOfIdeal).unwrap();
        assert!(code.equivalent(&re("0*1")));
        let ideal = re("1").derived(Derived::RightIdealClosure).unwrap();
        assert!(ideal.equivalent(&re("1(0|1)*")));
        let pc = re("10|11").derived(Derived::PrefixClosure).unwrap();
        assert!(pc.equivalent(&Dfa::from_words(&words(&["eps", "1", "10", "11"]))));
        let strict = re("1").derived(Derived::StrictExtensions).unwrap();
        assert!(strict.equivalent(&re("1(0|1)(0|1)*")));
    }

    #[test]
    fn pref_code_of_non_ideal_reports_witness() {
        match re("0|01").derived(Derived::PrefCodeOfIdeal) {
            Err(AutomataError::NotARightIdeal { word, letter }) => {
                assert!(re("0|01").accepts(&word));
                assert!(!re("0|01").accepts(&word.child(letter)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rank_unrank_small() {
        let d = re("0*1");
        let mut c = d.counter();
        assert_eq!(c.rank(&w("1")), 0);
        assert_eq!(c.rank(&w("01")), 1);
        assert_eq!(c.rank(&w("001")), 2);
        assert_eq!(c.unrank(2, 64), Some(w("001")));
    }

    #[test]
    fn dump_round_trip() {
        let d = re("(00|01)*11");
        let back = Dfa::from_dump(&d.to_dump()).unwrap();
        assert_eq!(back, d);
        assert!(Dfa::from_dump("start: 0\n0 0 -> 0\n").is_err());
    }

    #[test]
    fn minimization_is_canonical_on_equal_languages() {
        assert_eq!(re("(0|1)*"), re("(0*1*)*"));
        assert_eq!(re("0*1"), re("(eps|0*0)1"));
        assert_eq!(re("(0|1)*"), Dfa::universal().minimize());
    }
}
