//! Prefix codes and the right ideals they generate.
//!
//! A [`PrefixCode`] is either an explicit finite set or a regular language
//! given by a [`Dfa`]; both forms carry a minimal automaton, and every
//! operation works on either. Comparison under end-equivalence goes through
//! the language of words prefix-comparable to the code; comparison under
//! bounded end-equivalence compares the open sets `P·A^ω` by a lasso search
//! in a product automaton.

mod bound;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::automata::{compile_regex, to_regex_string, AutomataError, Classification, Dfa};
use crate::cantor::{member_ends, UpEnd};
use crate::word::{compare_prefix, Letter, PrefixRelation, Word};

pub use bound::BoundFunction;

/// Regular codes with at most this many members are stored as explicit sets.
const MATERIALIZE_LIMIT: u128 = 4096;

/// Longest word considered when unranking.
const MAX_UNRANK_LEN: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("not prefix-free: {shorter} is a proper prefix of {longer}")]
    NotPrefixFree { shorter: Word, longer: Word },
    #[error("operation needs a nonempty prefix code")]
    EmptyCode,
    #[error("end {0} is not in ends of the code")]
    EndNotInEnds(UpEnd),
    #[error("{0} is not a member of the code")]
    NotAMember(Word),
    #[error("index {0} out of range")]
    IndexOutOfRange(u128),
    #[error("padding a regular code needs a constant bound")]
    UnsupportedRepresentation,
    #[error("invalid bound function: {0}")]
    InvalidBound(String),
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

/// Verdict of a preorder comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Equivalent,
    FirstBelow,
    SecondBelow,
    Incomparable,
}

/// A relation plus a separating witness when the relation is not
/// `Equivalent`: for `FirstBelow` the witness lies on the second side only,
/// otherwise on the first side only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub relation: Relation,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn from_inclusions(first_minus_second: Option<W>, second_minus_first: Option<W>) -> Self {
        let (relation, witness) = match (first_minus_second, second_minus_first) {
            (None, None) => (Relation::Equivalent, None),
            (None, Some(w)) => (Relation::FirstBelow, Some(w)),
            (Some(w), None) => (Relation::SecondBelow, Some(w)),
            (Some(w), Some(_)) => (Relation::Incomparable, Some(w)),
        };
        Verdict { relation, witness }
    }

    pub fn is_equivalent(&self) -> bool {
        self.relation == Relation::Equivalent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// Rank convention: 0-based strict count, or 1-based count of `z ≤ x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RankBase {
    #[default]
    Zero,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauFailure {
    /// The codes are not end-equivalent; the word is comparable to members
    /// of exactly one side.
    NotEndEquivalent(Word),
    /// A prefix-comparable pair violating the length bound.
    LengthBound(Word, Word),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauVerdict {
    PassUpTo(usize),
    Fail(TauFailure),
}

#[derive(Debug, Clone)]
enum Repr {
    Finite(BTreeSet<Word>),
    Regular,
}

/// A prefix-free language over `{0,1}`.
#[derive(Debug, Clone)]
pub struct PrefixCode {
    repr: Repr,
    dfa: Dfa,
}

impl PartialEq for PrefixCode {
    fn eq(&self, other: &Self) -> bool {
        // minimized automata are canonical
        self.dfa == other.dfa
    }
}

impl Eq for PrefixCode {}

fn finite_witness(words: &BTreeSet<Word>) -> Option<(Word, Word)> {
    // in dictionary order a proper prefix sits directly before some extension
    let mut sorted: Vec<&Word> = words.iter().collect();
    sorted.sort_by(|a, b| a.letters().cmp(b.letters()));
    sorted
        .windows(2)
        .find_map(|pair| match compare_prefix(pair[0], pair[1]) {
            PrefixRelation::FirstIsPrefix => Some((pair[0].clone(), pair[1].clone())),
            _ => None,
        })
}

impl PrefixCode {
    pub fn finite<I: IntoIterator<Item = Word>>(words: I) -> Result<Self, CodeError> {
        let set: BTreeSet<Word> = words.into_iter().collect();
        if let Some((shorter, longer)) = finite_witness(&set) {
            return Err(CodeError::NotPrefixFree { shorter, longer });
        }
        let dfa = Dfa::from_words(&set);
        Ok(PrefixCode {
            repr: Repr::Finite(set),
            dfa,
        })
    }

    pub fn empty() -> Self {
        PrefixCode::finite([]).unwrap()
    }

    /// `{ε}`, generating the whole of `A*`.
    pub fn epsilon() -> Self {
        PrefixCode::finite([Word::empty()]).unwrap()
    }

    /// Accepts any automaton whose language is prefix-free; finite
    /// languages are stored explicitly.
    pub fn regular(dfa: &Dfa) -> Result<Self, CodeError> {
        let dfa = dfa.minimize();
        if let Some(longer) = dfa.and(&dfa.strict_extensions()).shortest_word() {
            let shorter = longer
                .prefixes()
                .find(|p| dfa.accepts(p))
                .expect("some proper prefix is accepted");
            return Err(CodeError::NotPrefixFree { shorter, longer });
        }
        Ok(Self::from_prefix_free(dfa))
    }

    pub fn from_regex(expr: &str) -> Result<Self, CodeError> {
        Self::regular(&compile_regex(expr)?)
    }

    /// The generating code of a right ideal.
    pub fn of_ideal(ideal: &Dfa) -> Result<Self, CodeError> {
        let code = ideal.derived(crate::automata::Derived::PrefCodeOfIdeal)?;
        Ok(Self::from_prefix_free(code))
    }

    pub(crate) fn from_prefix_free(dfa: Dfa) -> Self {
        let dfa = dfa.minimize();
        debug_assert!(dfa.and(&dfa.strict_extensions()).is_empty());
        match dfa.classify() {
            Classification::Empty => PrefixCode::empty(),
            Classification::Finite(n) if n <= MATERIALIZE_LIMIT => {
                let words: BTreeSet<Word> = dfa.enumerate_up_to(n as usize, dfa.num_states()).into_iter().collect();
                PrefixCode {
                    repr: Repr::Finite(words),
                    dfa,
                }
            }
            _ => PrefixCode {
                repr: Repr::Regular,
                dfa,
            },
        }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    /// The explicit member set, when the code is stored as one.
    pub fn members(&self) -> Option<&BTreeSet<Word>> {
        match &self.repr {
            Repr::Finite(s) => Some(s),
            Repr::Regular => None,
        }
    }

    /// Automaton of the right ideal `P·A*`.
    pub fn ideal(&self) -> Dfa {
        self.dfa.right_ideal_closure()
    }

    pub fn contains(&self, x: &Word) -> bool {
        self.dfa.accepts(x)
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.repr, Repr::Finite(s) if s.is_empty())
    }

    pub fn classify(&self) -> Classification {
        self.dfa.classify()
    }

    pub fn is_infinite(&self) -> bool {
        self.classify() == Classification::Infinite
    }

    /// Members of length at most `max_len`, in length-lexicographic order.
    pub fn members_up_to(&self, max_len: usize) -> Vec<Word> {
        match &self.repr {
            Repr::Finite(s) => s.iter().filter(|x| x.len() <= max_len).cloned().collect(),
            Repr::Regular => self.dfa.enumerate_up_to(usize::MAX, max_len),
        }
    }

    /// First `k` members in length-lexicographic order.
    pub fn first_members(&self, k: usize) -> Vec<Word> {
        match &self.repr {
            Repr::Finite(s) => s.iter().take(k).cloned().collect(),
            Repr::Regular => self.dfa.enumerate_up_to(k, MAX_UNRANK_LEN),
        }
    }

    /// The member that is a prefix of `w`, if any.
    pub fn prefix_in_code(&self, w: &Word) -> Option<Word> {
        let mut s = self.dfa.start();
        for i in 0..=w.len() {
            if self.dfa.is_accepting(s) {
                return Some(w.prefix(i));
            }
            if i < w.len() {
                s = self.dfa.next(s, w.letters()[i]);
            }
        }
        None
    }

    /// Words comparable in the prefix order to some member:
    /// prefix closure of `P` together with `P·A*`.
    pub fn comparable_language(&self) -> Dfa {
        self.dfa.prefix_closure().or(&self.ideal())
    }

    pub fn is_maximal(&self) -> Result<bool, CodeError> {
        Ok(self.maximality_witness()?.is_none())
    }

    /// Shortest word comparable to no member, if the code is not maximal.
    pub fn maximality_witness(&self) -> Result<Option<Word>, CodeError> {
        if self.is_empty() {
            return Err(CodeError::EmptyCode);
        }
        Ok(self.comparable_language().complement().shortest_word())
    }

    pub fn lattice_op(&self, other: &PrefixCode, op: LatticeOp) -> PrefixCode {
        let (a, b) = (self.ideal(), other.ideal());
        let ideal = match op {
            LatticeOp::Meet => a.and(&b),
            LatticeOp::Join => a.or(&b),
        };
        PrefixCode::of_ideal(&ideal).expect("boolean combinations of right ideals are right ideals")
    }

    pub fn meet(&self, other: &PrefixCode) -> PrefixCode {
        self.lattice_op(other, LatticeOp::Meet)
    }

    pub fn join(&self, other: &PrefixCode) -> PrefixCode {
        self.lattice_op(other, LatticeOp::Join)
    }

    /// `P·A^n`
    pub fn refine(&self, n: usize) -> PrefixCode {
        PrefixCode::from_prefix_free(self.dfa.concat(&Dfa::all_of_length(n)))
    }

    /// `⋃_{x∈P} x·A^{β(|x|)}`.
    pub fn pad(&self, beta: &BoundFunction) -> Result<PrefixCode, CodeError> {
        match &self.repr {
            Repr::Finite(set) => {
                let mut out = BTreeSet::new();
                for x in set {
                    let k = beta.eval(x.len() as u64);
                    if k > 20 {
                        return Err(CodeError::InvalidBound(format!(
                            "padding by {k} letters is too large to materialize"
                        )));
                    }
                    for bits in 0..(1u64 << k) {
                        let mut y = x.clone();
                        for i in (0..k).rev() {
                            y.push(((bits >> i) & 1) as Letter);
                        }
                        out.insert(y);
                    }
                }
                PrefixCode::finite(out)
            }
            Repr::Regular => match beta.as_constant() {
                Some(c) => Ok(self.refine(c as usize)),
                None => Err(CodeError::UnsupportedRepresentation),
            },
        }
    }

    /// Comparison under end-equivalence; witnesses are words.
    pub fn end_compare(&self, other: &PrefixCode) -> Verdict<Word> {
        let (c1, c2) = (self.comparable_language(), other.comparable_language());
        Verdict::from_inclusions(c1.subset_witness(&c2), c2.subset_witness(&c1))
    }

    /// Comparison of the open sets `P·A^ω`; witnesses are ends.
    pub fn bd_compare(&self, other: &PrefixCode) -> Verdict<UpEnd> {
        let (r1, r2) = (self.ideal(), other.ideal());
        Verdict::from_inclusions(ends_difference(&r1, &r2), ends_difference(&r2, &r1))
    }

    /// Bounded verification of a length bound between prefix-comparable
    /// members of length at most `depth`.
    pub fn tau_check(&self, other: &PrefixCode, tau: &BoundFunction, depth: usize) -> Result<TauVerdict, CodeError> {
        let end = self.end_compare(other);
        if !end.is_equivalent() {
            let witness = end.witness.expect("non-equivalent verdicts carry a witness");
            return Ok(TauVerdict::Fail(TauFailure::NotEndEquivalent(witness)));
        }
        tau.validate(depth as u64)?;
        let m1 = self.members_up_to(depth);
        let m2 = other.members_up_to(depth);
        let s1: HashSet<&Word> = m1.iter().collect();
        let s2: HashSet<&Word> = m2.iter().collect();
        let mut pairs = BTreeSet::new();
        for x1 in &m1 {
            for p in x1.prefixes() {
                if s2.contains(&p) {
                    pairs.insert((x1.clone(), p));
                }
            }
        }
        for x2 in &m2 {
            for p in x2.prefixes() {
                if s1.contains(&p) {
                    pairs.insert((p, x2.clone()));
                }
            }
        }
        for (x1, x2) in pairs {
            let (l1, l2) = (x1.len() as u64, x2.len() as u64);
            if l1 > tau.eval(l2) || l2 > tau.eval(l1) {
                return Ok(TauVerdict::Fail(TauFailure::LengthBound(x1, x2)));
            }
        }
        Ok(TauVerdict::PassUpTo(depth))
    }

    /// Removes the single end `v` from `ends(P)`: the member on `v` is
    /// replaced by the border of `v` below it.
    pub fn puncture(&self, v: &UpEnd) -> Result<PrefixCode, CodeError> {
        if !member_ends(self, v) {
            return Err(CodeError::EndNotInEnds(v.clone()));
        }
        let mut s = self.dfa.start();
        let mut i0 = 0;
        while !self.dfa.is_accepting(s) {
            s = self.dfa.next(s, v.letter(i0));
            i0 += 1;
        }
        let member = v.prefix(i0);
        let border = border_dfa(v, i0);
        let rest = self.dfa.diff(&Dfa::from_words([&member]));
        Ok(PrefixCode::from_prefix_free(rest.or(&border)))
    }

    /// 0-based number of members strictly llex-smaller than `x`.
    pub fn rank(&self, x: &Word) -> Result<u128, CodeError> {
        if !self.contains(x) {
            return Err(CodeError::NotAMember(x.clone()));
        }
        Ok(self.dfa.counter().rank(x))
    }

    pub fn rank_with_base(&self, x: &Word, base: RankBase) -> Result<u128, CodeError> {
        let r = self.rank(x)?;
        Ok(match base {
            RankBase::Zero => r,
            RankBase::One => r + 1,
        })
    }

    /// Inverse of [`PrefixCode::rank`].
    pub fn unrank(&self, n: u128) -> Result<Word, CodeError> {
        match self.classify() {
            Classification::Empty => return Err(CodeError::IndexOutOfRange(n)),
            Classification::Finite(c) if n >= c => return Err(CodeError::IndexOutOfRange(n)),
            _ => {}
        }
        self.dfa
            .counter()
            .unrank(n, MAX_UNRANK_LEN)
            .ok_or(CodeError::IndexOutOfRange(n))
    }

    pub fn unrank_with_base(&self, n: u128, base: RankBase) -> Result<Word, CodeError> {
        match base {
            RankBase::Zero => self.unrank(n),
            RankBase::One if n == 0 => Err(CodeError::IndexOutOfRange(0)),
            RankBase::One => self.unrank(n - 1),
        }
    }
}

/// Automaton of the border `{v₁…v_j·v̄_{j+1} : j ≥ i0}` of an end.
fn border_dfa(v: &UpEnd, i0: usize) -> Dfa {
    let lim = i0.max(v.head().len()) + v.period().len();
    let hit = lim;
    let dead = lim + 1;
    let mut trans = vec![[dead, dead]; lim + 2];
    let mut accepting = vec![false; lim + 2];
    accepting[hit] = true;
    for k in 0..lim {
        let a = v.letter(k) as usize;
        let next = if k + 1 == lim { lim - v.period().len() } else { k + 1 };
        trans[k][a] = next;
        trans[k][1 - a] = if k >= i0 { hit } else { dead };
    }
    Dfa::from_parts(0, trans, accepting).minimize()
}

/// An end in `ends(R1) − ends(R2)` for right ideals `R1`, `R2`: a lasso in
/// the product automaton that stays outside `R2`, enters `R1`, and closes a
/// cycle there.
fn ends_difference(r1: &Dfa, r2: &Dfa) -> Option<UpEnd> {
    let m = r2.num_states();
    let n = r1.num_states() * m;
    let split = |s: usize| (s / m, s % m);
    let step = |s: usize, a: Letter| {
        let (p, q) = split(s);
        r1.next(p, a) * m + r2.next(q, a)
    };
    let avoid = |s: usize| !r2.is_accepting(split(s).1);
    let start = r1.start() * m + r2.start();
    if !avoid(start) {
        return None;
    }
    // breadth-first from the start within the avoid region
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(s) = queue.pop_front() {
        order.push(s);
        for a in 0..2 {
            let t = step(s, a);
            if avoid(t) && !seen[t] {
                seen[t] = true;
                parent[t] = Some((s, a));
                queue.push_back(t);
            }
        }
    }
    let path_to = |mut s: usize| {
        let mut letters = Vec::new();
        while let Some((p, a)) = parent[s] {
            letters.push(a);
            s = p;
        }
        letters.reverse();
        Word::from_letters(letters)
    };
    for &c in &order {
        if !r1.is_accepting(split(c).0) {
            continue;
        }
        if let Some(cycle) = shortest_cycle(c, &step, &avoid, n) {
            return Some(UpEnd::new(path_to(c), cycle).unwrap());
        }
    }
    None
}

fn shortest_cycle(
    c: usize,
    step: &impl Fn(usize, Letter) -> usize,
    avoid: &impl Fn(usize) -> bool,
    n: usize,
) -> Option<Word> {
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for a in 0..2 {
        let t = step(c, a);
        if !avoid(t) {
            continue;
        }
        if t == c {
            return Some(Word::from_letters([a]));
        }
        if !seen[t] {
            seen[t] = true;
            parent[t] = Some((c, a));
            queue.push_back(t);
        }
    }
    while let Some(s) = queue.pop_front() {
        for a in 0..2 {
            let t = step(s, a);
            if !avoid(t) {
                continue;
            }
            if t == c {
                let mut letters = vec![a];
                let mut cur = s;
                while cur != c {
                    let (p, b) = parent[cur].unwrap();
                    letters.push(b);
                    cur = p;
                }
                letters.reverse();
                return Some(Word::from_letters(letters));
            }
            if !seen[t] {
                seen[t] = true;
                parent[t] = Some((s, a));
                queue.push_back(t);
            }
        }
    }
    None
}

impl fmt::Display for PrefixCode {
    /// `{ w1, w2, ... }` for finite codes, `/regex/` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Finite(set) if set.is_empty() => f.write_str("{ }"),
            Repr::Finite(set) => {
                let items: Vec<String> = set.iter().map(Word::to_string).collect();
                write!(f, "{{ {} }}", items.join(", "))
            }
            Repr::Regular => write!(f, "/{}/", to_regex_string(&self.dfa)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn fin(v: &[&str]) -> PrefixCode {
        PrefixCode::finite(v.iter().map(|s| w(s))).unwrap()
    }

    fn reg(s: &str) -> PrefixCode {
        PrefixCode::from_regex(s).unwrap()
    }

    fn end(s: &str) -> UpEnd {
        s.parse().unwrap()
    }

    #[test]
    fn make_examples() {
        assert!(PrefixCode::finite([w("00"), w("01"), w("11")]).is_ok());
        assert_eq!(
            PrefixCode::finite([w("0"), w("01")]),
            Err(CodeError::NotPrefixFree {
                shorter: w("0"),
                longer: w("01")
            })
        );
        assert!(PrefixCode::from_regex("0*1").is_ok());
        assert_eq!(
            PrefixCode::from_regex("0*"),
            Err(CodeError::NotPrefixFree {
                shorter: w("eps"),
                longer: w("0")
            })
        );
    }

    #[test]
    fn maximality_examples() {
        assert_eq!(fin(&["0", "1"]).is_maximal(), Ok(true));
        assert_eq!(reg("0*1").is_maximal(), Ok(true));
        assert_eq!(fin(&["00", "1"]).maximality_witness(), Ok(Some(w("01"))));
        assert_eq!(PrefixCode::empty().is_maximal(), Err(CodeError::EmptyCode));
    }

    #[test]
    fn lattice_examples() {
        let (a, b) = (fin(&["1"]), fin(&["10", "11"]));
        assert_eq!(a.meet(&b), fin(&["10", "11"]));
        assert_eq!(a.join(&b), fin(&["1"]));
        let p = reg("0*1");
        assert_eq!(p.meet(&p), p);
    }

    #[test]
    fn comparable_language_examples() {
        assert!(PrefixCode::epsilon().comparable_language().is_universal());
        assert!(reg("0*1").comparable_language().is_universal());
        let c = fin(&["10"]).comparable_language();
        assert!(c.equivalent(&compile_regex("eps|1|10(0|1)*").unwrap()));
    }

    #[test]
    fn end_compare_examples() {
        assert!(fin(&["1"]).end_compare(&fin(&["10", "11"])).is_equivalent());
        assert!(reg("0*1").end_compare(&PrefixCode::epsilon()).is_equivalent());
        let v = fin(&["0"]).end_compare(&fin(&["1"]));
        assert_eq!(v.relation, Relation::Incomparable);
        assert_eq!(v.witness, Some(w("0")));
        assert_eq!(fin(&["00"]).end_compare(&fin(&["0"])).relation, Relation::FirstBelow);
        assert_eq!(
            fin(&["00"]).end_compare(&fin(&["0", "1"])).relation,
            Relation::FirstBelow
        );
    }

    #[test]
    fn bd_compare_examples() {
        let v = fin(&["0", "1"]).bd_compare(&reg("0*1"));
        assert_eq!(v.relation, Relation::SecondBelow);
        assert_eq!(v.witness, Some(end("(0)")));
        let p = fin(&["0", "1"]);
        assert!(p.bd_compare(&p.refine(2)).is_equivalent());
        assert!(fin(&["1"]).bd_compare(&fin(&["10", "11"])).is_equivalent());
        assert_eq!(
            reg("0*1").bd_compare(&PrefixCode::epsilon()).relation,
            Relation::FirstBelow
        );
    }

    #[test]
    fn tau_check_examples() {
        let eps = PrefixCode::epsilon();
        let a2 = fin(&["00", "01", "10", "11"]);
        assert_eq!(
            eps.tau_check(&a2, &BoundFunction::shift(2), 8),
            Ok(TauVerdict::PassUpTo(8))
        );
        assert_eq!(
            eps.tau_check(&a2, &BoundFunction::shift(1), 8),
            Ok(TauVerdict::Fail(TauFailure::LengthBound(w("eps"), w("00"))))
        );
        let p = reg("0*1");
        assert_eq!(
            p.tau_check(&p, &BoundFunction::shift(0), 10),
            Ok(TauVerdict::PassUpTo(10))
        );
        assert!(matches!(
            fin(&["0"]).tau_check(&fin(&["1"]), &BoundFunction::shift(0), 4),
            Ok(TauVerdict::Fail(TauFailure::NotEndEquivalent(_)))
        ));
    }

    #[test]
    fn puncture_examples() {
        assert_eq!(fin(&["0", "1"]).puncture(&end("(0)")).unwrap(), reg("0*1"));
        assert_eq!(PrefixCode::epsilon().puncture(&end("(0)")).unwrap(), reg("0*1"));
        assert_eq!(fin(&["0", "1"]).puncture(&end("(1)")).unwrap(), reg("1*0"));
        assert_eq!(
            reg("0*1").puncture(&end("(0)")),
            Err(CodeError::EndNotInEnds(end("(0)")))
        );
    }

    #[test]
    fn rank_examples() {
        let p = reg("0*1");
        assert_eq!(p.rank(&w("1")), Ok(0));
        assert_eq!(p.rank(&w("01")), Ok(1));
        assert_eq!(p.rank(&w("001")), Ok(2));
        assert_eq!(p.unrank(2), Ok(w("001")));
        assert_eq!(fin(&["0", "1"]).rank(&w("0")), Ok(0));
        assert_eq!(p.rank(&w("0")), Err(CodeError::NotAMember(w("0"))));
        assert_eq!(fin(&["0", "1"]).unrank(2), Err(CodeError::IndexOutOfRange(2)));
        assert_eq!(p.rank_with_base(&w("01"), RankBase::One), Ok(2));
        assert_eq!(p.unrank_with_base(2, RankBase::One), Ok(w("01")));
    }

    #[test]
    fn pad_examples() {
        let p = fin(&["0", "1"]);
        assert_eq!(p.pad(&BoundFunction::shift(0)).unwrap(), fin(&["00", "01", "10", "11"]));
        assert_eq!(
            PrefixCode::epsilon().pad(&BoundFunction::constant(2)).unwrap(),
            fin(&["00", "01", "10", "11"])
        );
        assert_eq!(reg("0*1").pad(&BoundFunction::constant(1)).unwrap(), reg("0*1(0|1)"));
        assert_eq!(
            reg("0*1").pad(&BoundFunction::shift(0)),
            Err(CodeError::UnsupportedRepresentation)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(fin(&["11", "00", "01"]).to_string(), "{ 00, 01, 11 }");
        assert_eq!(PrefixCode::empty().to_string(), "{ }");
        assert_eq!(PrefixCode::epsilon().to_string(), "{ eps }");
        let text = reg("0*1").to_string();
        let back = PrefixCode::from_regex(text.trim_matches('/')).unwrap();
        assert_eq!(back, reg("0*1"));
    }
}
