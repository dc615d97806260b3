//! Ultimately periodic ends `u·v^ω` and the action of morphisms on them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codes::PrefixCode;
use crate::morphism::FiniteMorphism;
use crate::transducer::TransducerMorphism;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CantorError {
    #[error("period of an end must be nonempty")]
    EmptyPeriod,
    #[error("end {0} is outside the domain")]
    EndOutsideDomain(UpEnd),
    #[error("malformed end literal {0:?}")]
    Syntax(String),
}

/// The infinite word `head·period^ω`, kept in canonical form: the period is
/// primitive and the head is as short as possible. Two values are equal iff
/// they denote the same infinite word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpEnd {
    head: Word,
    period: Word,
}

fn primitive_root(p: &Word) -> Word {
    let n = p.len();
    // failure function of the period
    let s = p.letters();
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let d = n - fail[n - 1];
    if n.is_multiple_of(d) {
        p.prefix(d)
    } else {
        p.clone()
    }
}

impl UpEnd {
    pub fn new(head: Word, period: Word) -> Result<UpEnd, CantorError> {
        if period.is_empty() {
            return Err(CantorError::EmptyPeriod);
        }
        let mut head = head;
        let mut period = primitive_root(&period);
        while !head.is_empty() && head.last() == period.last() {
            head.pop();
            let last = period.last().unwrap();
            let mut rotated = Word::from_letters([last]);
            rotated.extend_from(&period.prefix(period.len() - 1));
            period = rotated;
        }
        Ok(UpEnd { head, period })
    }

    /// `a^ω`.
    pub fn constant(a: Letter) -> UpEnd {
        UpEnd::new(Word::empty(), Word::from_letters([a])).unwrap()
    }

    pub fn head(&self) -> &Word {
        &self.head
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn letter(&self, i: usize) -> Letter {
        if i < self.head.len() {
            self.head.letters()[i]
        } else {
            self.period.letters()[(i - self.head.len()) % self.period.len()]
        }
    }

    /// The first `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        Word::from_letters((0..n).map(|i| self.letter(i)))
    }

    pub fn has_prefix(&self, w: &Word) -> bool {
        w.letters().iter().enumerate().all(|(i, &a)| self.letter(i) == a)
    }

    /// The end obtained by deleting the first `n` letters.
    pub fn drop(&self, n: usize) -> UpEnd {
        if n <= self.head.len() {
            return UpEnd::new(self.head.suffix_from(n), self.period.clone()).unwrap();
        }
        let shift = (n - self.head.len()) % self.period.len();
        let mut rotated = self.period.suffix_from(shift);
        rotated.extend_from(&self.period.prefix(shift));
        UpEnd::new(Word::empty(), rotated).unwrap()
    }

    /// `w·self`.
    pub fn prepend(&self, w: &Word) -> UpEnd {
        UpEnd::new(w.concat(&self.head), self.period.clone()).unwrap()
    }
}

impl fmt::Display for UpEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.head.is_empty() {
            write!(f, "{}", self.head)?;
        }
        write!(f, "({})", self.period)
    }
}

impl fmt::Debug for UpEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UpEnd({self})")
    }
}

impl FromStr for UpEnd {
    type Err = CantorError;

    /// `u(v)` for `u·v^ω`, e.g. `0(01)` or `(0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CantorError::Syntax(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        let close = s.strip_suffix(')').ok_or_else(bad)?;
        let head_src = &s[..open];
        let period_src = &close[open + 1..];
        let head: Word = if head_src.is_empty() {
            Word::empty()
        } else {
            head_src.parse().map_err(|_| bad())?
        };
        if period_src.is_empty() || period_src == "eps" {
            return Err(CantorError::EmptyPeriod);
        }
        let period: Word = period_src.parse().map_err(|_| bad())?;
        UpEnd::new(head, period)
    }
}

/// Whether some finite prefix of `e` lies in `p`.
pub fn member_ends(p: &PrefixCode, e: &UpEnd) -> bool {
    let ideal = p.ideal();
    let mut s = ideal.run(ideal.start(), e.head());
    if ideal.is_accepting(s) {
        return true;
    }
    let mut seen = BTreeSet::new();
    while seen.insert(s) {
        s = ideal.run(s, e.period());
        if ideal.is_accepting(s) {
            return true;
        }
    }
    false
}

/// Morphisms that act on ends: `f(p·w) = f(p)·w` for `p` in the domain code.
pub trait EndAction {
    /// Length of the domain-code prefix of `e` and its image, if `e` has one.
    fn code_prefix_of_end(&self, e: &UpEnd) -> Option<(usize, Word)>;

    fn end_in_domain(&self, e: &UpEnd) -> bool {
        self.code_prefix_of_end(e).is_some()
    }

    fn apply_end(&self, e: &UpEnd) -> Result<UpEnd, CantorError> {
        match self.code_prefix_of_end(e) {
            Some((n, out)) => Ok(e.drop(n).prepend(&out)),
            None => Err(CantorError::EndOutsideDomain(e.clone())),
        }
    }
}

impl EndAction for FiniteMorphism {
    fn code_prefix_of_end(&self, e: &UpEnd) -> Option<(usize, Word)> {
        self.iter()
            .find(|(k, _)| e.has_prefix(k))
            .map(|(k, v)| (k.len(), v.clone()))
    }
}

impl EndAction for TransducerMorphism {
    fn code_prefix_of_end(&self, e: &UpEnd) -> Option<(usize, Word)> {
        let limit = e.head().len() + (self.num_states() + 1) * e.period().len();
        self.run_until_final((0..=limit).map(|i| e.letter(i)))
    }
}

/// Result of comparing two actions on a sample of ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCheck {
    ConsistentWithBdEquiv,
    Separated(UpEnd),
}

/// Compares the actions of `f` and `g` on `ends`: an end in exactly one
/// domain, or mapped to different ends, separates them.
pub fn cross_check<F, G>(f: &F, g: &G, ends: &[UpEnd]) -> CrossCheck
where
    F: EndAction + ?Sized,
    G: EndAction + ?Sized,
{
    for e in ends {
        let same = match (f.apply_end(e), g.apply_end(e)) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        };
        if !same {
            return CrossCheck::Separated(e.clone());
        }
    }
    CrossCheck::ConsistentWithBdEquiv
}

/// Primitive words of length `1..=max_len`.
fn primitive_words(max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            let p = Word::from_letters((0..len).rev().map(|i| ((bits >> i) & 1) as u8));
            if primitive_root(&p).len() == len {
                out.push(p);
            }
        }
    }
    out
}

/// All distinct ends `u·v^ω` with `|u| ≤ max_head` and primitive `v`,
/// `|v| ≤ max_period`, in a deterministic order.
pub fn systematic_ends(max_head: usize, max_period: usize) -> Vec<UpEnd> {
    let periods = primitive_words(max_period);
    let mut set = BTreeSet::new();
    for len in 0..=max_head {
        for bits in 0..(1u64 << len) {
            let head = Word::from_letters((0..len).rev().map(|i| ((bits >> i) & 1) as u8));
            for p in &periods {
                set.insert(UpEnd::new(head.clone(), p.clone()).unwrap());
            }
        }
    }
    set.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn end(s: &str) -> UpEnd {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(end("0(0)"), end("(0)"));
        assert_eq!(end("(0101)"), end("(01)"));
        assert_eq!(end("1(01)"), end("(10)"));
        assert_eq!(end("0(10)"), end("(01)"));
        assert_eq!(end("0(10)").to_string(), "(01)");
        assert_eq!(end("0(01)").to_string(), "0(01)");
        assert_ne!(end("(01)"), end("(10)"));
        assert!(matches!("0()".parse::<UpEnd>(), Err(CantorError::EmptyPeriod)));
    }

    #[test]
    fn drop_and_prepend() {
        let e = end("01(011)");
        assert_eq!(e.prefix(8), w("01011011"));
        assert_eq!(e.drop(3), end("(110)"));
        assert_eq!(e.drop(2).prepend(&w("01")), e);
    }

    #[test]
    fn membership_examples() {
        let p = PrefixCode::from_regex("0*1").unwrap();
        assert!(!member_ends(&p, &end("(0)")));
        assert!(member_ends(&p, &end("0(1)")));
        let all = PrefixCode::finite([Word::empty()]).unwrap();
        assert!(member_ends(&all, &end("(0)")));
        assert!(member_ends(&all, &end("101(10)")));
    }

    #[test]
    fn systematic_enumeration_is_canonical_and_distinct() {
        let ends = systematic_ends(2, 2);
        let set: BTreeSet<_> = ends.iter().cloned().collect();
        assert_eq!(set.len(), ends.len());
        assert!(ends.contains(&end("(0)")));
        assert!(ends.contains(&end("11(01)")));
    }
}
