//! Right-ideal morphisms with regular domain codes, presented as
//! subsequential machines.
//!
//! A machine reads its input from the start state, emitting a word on every
//! transition. The first time it reaches a final state, having consumed `x`,
//! it emits that state's final output and from then on copies the rest of
//! the input. Final states have no outgoing transitions, so the words that
//! reach them form a prefix code: the domain code.

mod agree;
mod pointwise;
mod product;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automata::{Classification, Dfa, Nfa};
use crate::codes::{CodeError, PrefixCode};
use crate::morphism::FiniteMorphism;
use crate::word::{Letter, Word};

pub use agree::{bd_separating_end, t_agree, Agreement};
pub use pointwise::{rank_bijection, PointwiseMorphism, Side};
pub use product::{compose, compose_bounded, DEFAULT_STATE_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransducerError {
    #[error("state {state} has two transitions on letter {letter}")]
    NondeterministicTransition { state: String, letter: Letter },
    #[error("final state {0} has an outgoing transition")]
    FinalStateHasOutgoing(String),
    #[error("state {0} is declared final twice")]
    DuplicateFinal(String),
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0} is outside the domain")]
    OutsideDomain(Word),
    #[error("operation needs a nonempty morphism")]
    EmptyMorphism,
    #[error("product construction exceeded {0} states")]
    CompositionBlowup(usize),
    #[error("code is not inside the domain: {0} is in c·A* but not in Dom(m)")]
    NotASubIdeal(Word),
    #[error("the {0} code is not infinite")]
    CodeNotInfinite(Side),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Problems repaired while building a machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Warning {
    /// Not reachable from the start state; removed.
    UnreachableState(String),
    /// Cannot reach a final state; removed.
    DeadState(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::UnreachableState(s) => write!(f, "state {s} is unreachable; removed"),
            Warning::DeadState(s) => write!(f, "state {s} cannot reach a final state; removed"),
        }
    }
}

/// A machine as written by a user: named states, possibly untrimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MachineSpec {
    pub start: String,
    pub finals: Vec<(String, Word)>,
    pub edges: Vec<(String, Letter, String, Word)>,
}

impl MachineSpec {
    pub fn new(start: &str) -> Self {
        MachineSpec {
            start: start.to_string(),
            ..Default::default()
        }
    }

    pub fn edge(mut self, from: &str, letter: Letter, to: &str, out: Word) -> Self {
        self.edges.push((from.to_string(), letter, to.to_string(), out));
        self
    }

    pub fn final_state(mut self, state: &str, out: Word) -> Self {
        self.finals.push((state.to_string(), out));
        self
    }

    /// Parses the line format:
    ///
    /// ```text
    /// transducer
    /// start: q0
    /// final: q2 / eps
    /// q0 0 -> q1 / 00
    /// ```
    ///
    /// The header line is optional and `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, TransducerError> {
        let mut spec = MachineSpec::default();
        let mut start = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| TransducerError::Syntax { line: line_no, msg };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() || line == "transducer" {
                continue;
            }
            let parse_out = |s: Option<&str>| -> Result<Word, TransducerError> {
                match s {
                    None => Ok(Word::empty()),
                    Some(s) => s.trim().parse().map_err(|e| err(format!("{e}"))),
                }
            };
            if let Some(rest) = line.strip_prefix("start:") {
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err(format!("bad start state {name:?}")));
                }
                if start.replace(name.to_string()).is_some() {
                    return Err(err("start state given twice".into()));
                }
            } else if let Some(rest) = line.strip_prefix("final:") {
                let mut parts = rest.splitn(2, '/');
                let name = parts.next().unwrap().trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err(format!("bad final state {name:?}")));
                }
                spec.finals.push((name.to_string(), parse_out(parts.next())?));
            } else {
                let (lhs, rhs) = line
                    .split_once("->")
                    .ok_or_else(|| err(format!("expected `from letter -> to / out`, got {line:?}")))?;
                let lhs: Vec<&str> = lhs.split_whitespace().collect();
                let [from, letter] = lhs[..] else {
                    return Err(err(format!("expected `from letter` before `->` in {line:?}")));
                };
                let letter = match letter {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(err(format!("bad letter {other:?}"))),
                };
                let mut parts = rhs.splitn(2, '/');
                let to = parts.next().unwrap().trim();
                if to.is_empty() || to.contains(char::is_whitespace) {
                    return Err(err(format!("bad target state {to:?}")));
                }
                spec.edges
                    .push((from.to_string(), letter, to.to_string(), parse_out(parts.next())?));
            }
        }
        spec.start = start.ok_or(TransducerError::Syntax {
            line: text.lines().count().max(1),
            msg: "missing `start:` line".into(),
        })?;
        Ok(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct State {
    edges: [Option<(usize, Word)>; 2],
    final_out: Option<Word>,
}

impl State {
    fn blank() -> Self {
        State {
            edges: [None, None],
            final_out: None,
        }
    }
}

/// A trimmed subsequential machine with identity copy after the domain code.
///
/// States are numbered breadth-first from the start (letter 0 before 1), so
/// machines built the same way compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransducerMorphism {
    start: usize,
    states: Vec<State>,
}

impl TransducerMorphism {
    /// Validates, trims and renumbers a machine description.
    pub fn make(spec: &MachineSpec) -> Result<(Self, Vec<Warning>), TransducerError> {
        let mut ids2: HashMap<String, usize> = HashMap::new();
        let mut names: Vec<String> = Vec::new();
        let mut intern = |name: &str| -> usize {
            *ids2.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        };
        let start = intern(&spec.start);
        for (from, _, to, _) in &spec.edges {
            intern(from);
            intern(to);
        }
        for (s, _) in &spec.finals {
            intern(s);
        }
        let mut states = vec![State::blank(); ids2.len()];
        for (s, out) in &spec.finals {
            let i = ids2[s];
            if states[i].final_out.replace(out.clone()).is_some() {
                return Err(TransducerError::DuplicateFinal(s.clone()));
            }
        }
        for (from, a, to, out) in &spec.edges {
            let i = ids2[from];
            if states[i].final_out.is_some() {
                return Err(TransducerError::FinalStateHasOutgoing(from.clone()));
            }
            let slot = &mut states[i].edges[*a as usize];
            if slot.is_some() {
                return Err(TransducerError::NondeterministicTransition {
                    state: from.clone(),
                    letter: *a,
                });
            }
            *slot = Some((ids2[to], out.clone()));
        }
        let raw = TransducerMorphism { start, states };
        let (m, removed) = raw.trim();
        let warnings = removed
            .into_iter()
            .map(|(i, reachable)| {
                if reachable {
                    Warning::DeadState(names[i].clone())
                } else {
                    Warning::UnreachableState(names[i].clone())
                }
            })
            .collect();
        Ok((m, warnings))
    }

    /// Parses the text format and builds the machine, discarding warnings.
    pub fn parse(text: &str) -> Result<Self, TransducerError> {
        Ok(Self::make(&MachineSpec::parse(text)?)?.0)
    }

    /// The empty morphism.
    pub fn zero() -> Self {
        TransducerMorphism {
            start: 0,
            states: Vec::new(),
        }
    }

    /// Removes unreachable and dead states and renumbers breadth-first.
    /// Returns the removed original indices, flagged with reachability.
    fn trim(&self) -> (TransducerMorphism, Vec<(usize, bool)>) {
        let n = self.states.len();
        if n == 0 {
            return (Self::zero(), Vec::new());
        }
        let mut reach = vec![false; n];
        let mut queue = VecDeque::from([self.start]);
        reach[self.start] = true;
        while let Some(s) = queue.pop_front() {
            for (t, _) in self.states[s].edges.iter().flatten() {
                if !reach[*t] {
                    reach[*t] = true;
                    queue.push_back(*t);
                }
            }
        }
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, st) in self.states.iter().enumerate() {
            for (t, _) in st.edges.iter().flatten() {
                rev[*t].push(s);
            }
        }
        let mut live = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&s| self.states[s].final_out.is_some()).collect();
        for &s in &queue {
            live[s] = true;
        }
        while let Some(s) = queue.pop_front() {
            for &p in &rev[s] {
                if !live[p] {
                    live[p] = true;
                    queue.push_back(p);
                }
            }
        }
        let removed: Vec<(usize, bool)> = (0..n)
            .filter(|&s| !(reach[s] && live[s]))
            .map(|s| (s, reach[s]))
            .collect();
        if !live[self.start] {
            return (Self::zero(), removed);
        }
        let keep = |s: usize| reach[s] && live[s];
        let mut new_id = vec![usize::MAX; n];
        let mut order = vec![self.start];
        new_id[self.start] = 0;
        let mut i = 0;
        while i < order.len() {
            let s = order[i];
            i += 1;
            for (t, _) in self.states[s].edges.iter().flatten() {
                if keep(*t) && new_id[*t] == usize::MAX {
                    new_id[*t] = order.len();
                    order.push(*t);
                }
            }
        }
        let states = order
            .iter()
            .map(|&s| {
                let old = &self.states[s];
                let mut st = State::blank();
                st.final_out = old.final_out.clone();
                for a in 0..2 {
                    st.edges[a] = old.edges[a]
                        .as_ref()
                        .filter(|(t, _)| keep(*t))
                        .map(|(t, out)| (new_id[*t], out.clone()));
                }
                st
            })
            .collect();
        (TransducerMorphism { start: 0, states }, removed)
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn transition(&self, s: usize, a: Letter) -> Option<(usize, &Word)> {
        self.states[s].edges[a as usize].as_ref().map(|(t, o)| (*t, o))
    }

    pub fn final_output(&self, s: usize) -> Option<&Word> {
        self.states[s].final_out.as_ref()
    }

    /// Runs until a final state is reached; returns the number of letters
    /// consumed and the output emitted up to and including the final output.
    pub fn run_until_final<I: IntoIterator<Item = Letter>>(&self, letters: I) -> Option<(usize, Word)> {
        if self.is_empty() {
            return None;
        }
        let mut s = self.start;
        let mut out = Word::empty();
        let mut consumed = 0;
        let mut it = letters.into_iter();
        loop {
            if let Some(f) = &self.states[s].final_out {
                out.extend_from(f);
                return Some((consumed, out));
            }
            let a = it.next()?;
            let (t, o) = self.states[s].edges[a as usize].as_ref()?;
            out.extend_from(o);
            consumed += 1;
            s = *t;
        }
    }

    pub fn eval(&self, w: &Word) -> Result<Word, TransducerError> {
        let (n, mut out) = self
            .run_until_final(w.letters().iter().copied())
            .ok_or_else(|| TransducerError::OutsideDomain(w.clone()))?;
        out.extend_from(&w.suffix_from(n));
        Ok(out)
    }

    pub fn in_domain(&self, w: &Word) -> bool {
        self.run_until_final(w.letters().iter().copied()).is_some()
    }

    /// Automaton accepting exactly the domain code.
    pub fn domain_dfa(&self) -> Dfa {
        let n = self.states.len();
        if n == 0 {
            return Dfa::empty();
        }
        let dead = n;
        let mut trans = vec![[dead, dead]; n + 1];
        let mut accepting = vec![false; n + 1];
        for (s, st) in self.states.iter().enumerate() {
            accepting[s] = st.final_out.is_some();
            for a in 0..2 {
                if let Some((t, _)) = &st.edges[a] {
                    trans[s][a] = *t;
                }
            }
        }
        Dfa::from_parts(self.start, trans, accepting).minimize()
    }

    pub fn domain_code(&self) -> PrefixCode {
        PrefixCode::regular(&self.domain_dfa()).expect("final states are absorbing")
    }

    /// Automaton of the right ideal `Im(m) = m(domC)·A*`.
    pub fn image_ideal(&self) -> Dfa {
        if self.is_empty() {
            return Dfa::empty();
        }
        let mut nfa = Nfa::new();
        let base = nfa.start();
        let ids: Vec<usize> = (0..self.states.len())
            .map(|s| if s == self.start { base } else { nfa.add_state() })
            .collect();
        let sink = nfa.add_state();
        nfa.set_accepting(sink, true);
        nfa.add_edge(sink, 0, sink);
        nfa.add_edge(sink, 1, sink);
        for (s, st) in self.states.iter().enumerate() {
            for (t, out) in st.edges.iter().flatten() {
                let end = nfa.add_path(ids[s], out);
                nfa.add_eps(end, ids[*t]);
            }
            if let Some(out) = &st.final_out {
                let end = nfa.add_path(ids[s], out);
                nfa.add_eps(end, sink);
            }
        }
        nfa.to_dfa()
    }

    /// Automaton of `{x ∈ Dom(m) : m(x) ∈ L(target)}`.
    pub fn preimage(&self, target: &Dfa) -> Dfa {
        if self.is_empty() {
            return Dfa::empty();
        }
        // (machine state, or None once final; target state), plus a dead state
        let mut ids: HashMap<(Option<usize>, usize), usize> = HashMap::new();
        let mut keys = Vec::new();
        let mut intern = |k: (Option<usize>, usize), keys: &mut Vec<_>| {
            *ids.entry(k).or_insert_with(|| {
                keys.push(k);
                keys.len() - 1
            })
        };
        let settle = |s: usize, d: usize| match &self.states[s].final_out {
            Some(out) => (None, target.run(d, out)),
            None => (Some(s), d),
        };
        let start = intern(settle(self.start, target.start()), &mut keys);
        let mut trans: Vec<[usize; 2]> = Vec::new();
        let mut i = 0;
        const DEAD: usize = usize::MAX;
        while i < keys.len() {
            let (ms, d) = keys[i];
            let mut row = [DEAD; 2];
            for a in 0..2u8 {
                let next = match ms {
                    None => Some((None, target.next(d, a))),
                    Some(s) => self.states[s].edges[a as usize]
                        .as_ref()
                        .map(|(t, out)| settle(*t, target.run(d, out))),
                };
                if let Some(k) = next {
                    row[a as usize] = intern(k, &mut keys);
                }
            }
            trans.push(row);
            i += 1;
        }
        let dead = keys.len();
        let mut accepting: Vec<bool> = keys
            .iter()
            .map(|&(ms, d)| ms.is_none() && target.is_accepting(d))
            .collect();
        accepting.push(false);
        let mut trans: Vec<[usize; 2]> = trans
            .into_iter()
            .map(|r| r.map(|t| if t == DEAD { dead } else { t }))
            .collect();
        trans.push([dead, dead]);
        Dfa::from_parts(start, trans, accepting).minimize()
    }

    /// `(domC, imC)`.
    pub fn codes(&self) -> Result<(PrefixCode, PrefixCode), TransducerError> {
        if self.is_empty() {
            return Err(TransducerError::EmptyMorphism);
        }
        let imc = PrefixCode::of_ideal(&self.image_ideal())?;
        Ok((self.domain_code(), imc))
    }

    pub fn image_code(&self) -> Result<PrefixCode, TransducerError> {
        Ok(self.codes()?.1)
    }

    /// Zero for the empty morphism, otherwise by finiteness of the image code.
    pub fn classify_dclass(&self) -> DClass {
        match self.image_code() {
            Err(_) => DClass::Zero,
            Ok(c) => match c.classify() {
                Classification::Empty => DClass::Zero,
                Classification::Finite(_) => DClass::D1,
                Classification::Infinite => DClass::D2,
            },
        }
    }

    /// Exact equivalence: the domain codes are equivalent under the chosen
    /// relation and the two morphisms agree where both are defined.
    pub fn equivalent(&self, other: &TransducerMorphism, mode: EquivMode) -> bool {
        let (p, q) = (self.domain_code(), other.domain_code());
        let codes_ok = match mode {
            EquivMode::End => p.end_compare(&q).is_equivalent(),
            EquivMode::Bd => p.bd_compare(&q).is_equivalent(),
        };
        codes_ok && t_agree(self, other) == Agreement::Agree
    }

    /// The finite table when the domain code is finite.
    pub fn to_finite(&self) -> Option<FiniteMorphism> {
        if self.is_empty() {
            return Some(FiniteMorphism::zero());
        }
        let code = self.domain_code();
        let keys = code.members()?;
        FiniteMorphism::new(keys.iter().map(|x| (x.clone(), self.eval(x).expect("code member")))).ok()
    }

    /// The line format read by [`MachineSpec::parse`], with states `q0, q1, …`.
    pub fn to_text(&self) -> String {
        let mut out = String::from("transducer\n");
        if self.is_empty() {
            // a start state that never reaches a final state
            out.push_str("start: q0\n");
            return out;
        }
        out.push_str(&format!("start: q{}\n", self.start));
        for (s, st) in self.states.iter().enumerate() {
            if let Some(f) = &st.final_out {
                out.push_str(&format!("final: q{s} / {f}\n"));
            }
        }
        for (s, st) in self.states.iter().enumerate() {
            for (a, e) in st.edges.iter().enumerate() {
                if let Some((t, o)) = e {
                    out.push_str(&format!("q{s} {a} -> q{t} / {o}\n"));
                }
            }
        }
        out
    }

    /// Evaluation table on the members of the domain code up to `max_len`.
    pub fn sample_table(&self, max_len: usize) -> BTreeMap<Word, Word> {
        if self.is_empty() {
            return BTreeMap::new();
        }
        self.domain_code()
            .members_up_to(max_len)
            .into_iter()
            .map(|x| {
                let y = self.eval(&x).expect("code member");
                (x, y)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivMode {
    End,
    Bd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DClass {
    Zero,
    D1,
    D2,
}

impl fmt::Display for DClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DClass::Zero => "ZERO",
            DClass::D1 => "D1",
            DClass::D2 => "D2",
        })
    }
}

impl fmt::Debug for TransducerMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransducerMorphism {{\n{}}}", self.to_text())
    }
}

impl FromStr for TransducerMorphism {
    type Err = TransducerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::word::w;

    pub(crate) fn swap() -> TransducerMorphism {
        "start: e\nfinal: f / eps\ne 0 -> o / eps\no 0 -> e / 00\ne 1 -> f / 01\no 1 -> f / 1"
            .parse()
            .unwrap()
    }

    pub(crate) fn collapse() -> TransducerMorphism {
        "start: q\nfinal: f / eps\nq 0 -> q / 0\nq 1 -> f / eps"
            .parse()
            .unwrap()
    }

    #[test]
    fn preimages() {
        let c = collapse();
        let of_eps = c.preimage(&Dfa::epsilon());
        assert_eq!(PrefixCode::regular(&of_eps).unwrap().to_string(), "{ 1 }");
        // everything in the domain maps into A*
        assert_eq!(c.preimage(&Dfa::universal()), c.domain_code().ideal());
        let s = swap();
        let odd = s.preimage(&crate::automata::compile_regex("0(00)*1").unwrap());
        assert_eq!(
            PrefixCode::regular(&odd).unwrap(),
            PrefixCode::from_regex("(00)*1").unwrap()
        );
    }

    #[test]
    fn make_examples() {
        assert_eq!(swap().num_states(), 3);
        assert_eq!(collapse().num_states(), 2);
        let bad = MachineSpec::parse("start: a\nfinal: b / eps\na 0 -> b / 0\nb 0 -> a / eps").unwrap();
        assert_eq!(
            TransducerMorphism::make(&bad),
            Err(TransducerError::FinalStateHasOutgoing("b".into()))
        );
        let nondet = MachineSpec::new("a")
            .final_state("b", w("eps"))
            .edge("a", 0, "b", w("0"))
            .edge("a", 0, "a", w("1"));
        assert!(matches!(
            TransducerMorphism::make(&nondet),
            Err(TransducerError::NondeterministicTransition { letter: 0, .. })
        ));
        let untrimmed = MachineSpec::new("a")
            .final_state("b", w("eps"))
            .edge("a", 0, "b", w("0"))
            .edge("a", 1, "c", w("1"))
            .edge("d", 1, "b", w("1"));
        let (m, warnings) = TransducerMorphism::make(&untrimmed).unwrap();
        assert_eq!(m.num_states(), 2);
        assert!(warnings.contains(&Warning::DeadState("c".into())));
        assert!(warnings.contains(&Warning::UnreachableState("d".into())));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(swap().eval(&w("1")), Ok(w("01")));
        assert_eq!(swap().eval(&w("001")), Ok(w("0001")));
        assert_eq!(swap().eval(&w("01")), Ok(w("1")));
        assert_eq!(collapse().eval(&w("0011")), Ok(w("001")));
        assert_eq!(swap().eval(&w("00")), Err(TransducerError::OutsideDomain(w("00"))));
    }

    #[test]
    fn codes_examples() {
        let p = PrefixCode::from_regex("0*1").unwrap();
        assert_eq!(swap().codes(), Ok((p.clone(), p.clone())));
        assert_eq!(collapse().codes(), Ok((p, PrefixCode::epsilon())));
        assert_eq!(TransducerMorphism::zero().codes(), Err(TransducerError::EmptyMorphism));
    }

    #[test]
    fn dclass_examples() {
        assert_eq!(swap().classify_dclass(), DClass::D2);
        assert_eq!(collapse().classify_dclass(), DClass::D1);
        assert_eq!(TransducerMorphism::zero().classify_dclass(), DClass::Zero);
    }

    #[test]
    fn text_round_trip() {
        for m in [swap(), collapse(), TransducerMorphism::zero()] {
            assert_eq!(m.to_text().parse::<TransducerMorphism>().unwrap(), m);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "final: f / eps".parse::<TransducerMorphism>(),
            Err(TransducerError::Syntax { .. })
        ));
        assert!(matches!(
            "start: a\na 2 -> b / 0".parse::<TransducerMorphism>(),
            Err(TransducerError::Syntax { line: 2, .. })
        ));
    }
}
