use std::collections::{BTreeSet, HashMap, VecDeque};

use super::Dfa;
use crate::word::{Letter, Word};

/// Nondeterministic automaton with ε-moves, used only as an intermediate
/// form on the way to a [`Dfa`].
#[derive(Debug, Clone)]
pub struct Nfa {
    pub(crate) start: usize,
    pub(crate) eps: Vec<Vec<usize>>,
    pub(crate) trans: Vec<[Vec<usize>; 2]>,
    pub(crate) accepting: Vec<bool>,
}

impl Nfa {
    pub fn new() -> Self {
        let mut nfa = Nfa {
            start: 0,
            eps: Vec::new(),
            trans: Vec::new(),
            accepting: Vec::new(),
        };
        nfa.start = nfa.add_state();
        nfa
    }

    pub fn add_state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.trans.push([Vec::new(), Vec::new()]);
        self.accepting.push(false);
        self.eps.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, letter: Letter, to: usize) {
        self.trans[from][letter as usize].push(to);
    }

    pub fn add_eps(&mut self, from: usize, to: usize) {
        self.eps[from].push(to);
    }

    pub fn set_accepting(&mut self, s: usize, acc: bool) {
        self.accepting[s] = acc;
    }

    pub fn start(&self) -> usize {
        self.start
    }

    /// Adds a chain of fresh states spelling `w` from `from`, returning the
    /// last state of the chain (`from` itself when `w` is empty).
    pub fn add_path(&mut self, from: usize, w: &Word) -> usize {
        let mut cur = from;
        for &a in w.letters() {
            let next = self.add_state();
            self.add_edge(cur, a, next);
            cur = next;
        }
        cur
    }

    /// Copies `dfa` into this automaton and returns the index offset of its
    /// states. Accepting flags are copied as well.
    pub fn embed(&mut self, dfa: &Dfa) -> usize {
        let offset = self.eps.len();
        for _ in 0..dfa.num_states() {
            self.add_state();
        }
        for s in 0..dfa.num_states() {
            for a in 0..2u8 {
                self.add_edge(offset + s, a, offset + dfa.next(s, a));
            }
            self.accepting[offset + s] = dfa.is_accepting(s);
        }
        offset
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(s) = stack.pop() {
            for &t in &self.eps[s] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// Subset construction followed by minimization.
    pub fn to_dfa(&self) -> Dfa {
        let mut init = BTreeSet::from([self.start]);
        self.closure(&mut init);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut sets = vec![init.clone()];
        index.insert(init, 0);
        let mut trans: Vec<[usize; 2]> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            let mut row = [0usize; 2];
            for a in 0..2usize {
                let mut next = BTreeSet::new();
                for &s in &sets[i] {
                    next.extend(self.trans[s][a].iter().copied());
                }
                self.closure(&mut next);
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = sets.len();
                        sets.push(next.clone());
                        index.insert(next, id);
                        queue.push_back(id);
                        id
                    }
                };
                row[a] = id;
            }
            if trans.len() <= i {
                trans.resize(i + 1, [0, 0]);
            }
            trans[i] = row;
        }
        let accepting = sets.iter().map(|set| set.iter().any(|&s| self.accepting[s])).collect();
        Dfa::from_parts(0, trans, accepting).minimize()
    }
}

impl Default for Nfa {
    fn default() -> Self {
        Self::new()
    }
}
