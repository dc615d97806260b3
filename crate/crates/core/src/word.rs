//! Finite words over `{0,1}`, the prefix order, the length-lexicographic
//! order and the block encoding of words over `{0,1,#}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A letter of the binary alphabet, stored as `0` or `1`.
pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {0:?} at position {1}")]
    InvalidLetter(char, usize),
}

/// A finite word over `{0,1}`.
///
/// `Ord` is the length-lexicographic order (shorter words first, then
/// dictionary order with `0 < 1`), so ordered collections of words iterate
/// in the canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from letters; panics if a letter is not 0 or 1.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let v: Vec<Letter> = letters.into_iter().collect();
        assert!(v.iter().all(|&a| a <= 1), "letters must be 0 or 1");
        Word(v)
    }

    /// `a^n`.
    pub fn repeat(letter: Letter, n: usize) -> Self {
        Word::from_letters(std::iter::repeat_n(letter, n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<Letter> {
        self.0.get(i).copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, a: Letter) {
        assert!(a <= 1);
        self.0.push(a);
    }

    pub fn pop(&mut self) -> Option<Letter> {
        self.0.pop()
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// The word with `a` appended.
    pub fn child(&self, a: Letter) -> Word {
        let mut w = self.clone();
        w.push(a);
        w
    }

    /// Prefix of length `n` (or the whole word if shorter).
    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n.min(self.len())].to_vec())
    }

    /// Suffix starting at position `n`.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n.min(self.len())..].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    /// If `self = p·rest`, returns `rest`.
    pub fn strip_prefix(&self, p: &Word) -> Option<Word> {
        self.0.strip_prefix(p.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    /// If `self = rest·s`, returns `rest`.
    pub fn strip_suffix(&self, s: &Word) -> Option<Word> {
        self.0.strip_suffix(s.0.as_slice()).map(|r| Word(r.to_vec()))
    }

    pub fn is_comparable(&self, other: &Word) -> bool {
        self.is_prefix_of(other) || other.is_prefix_of(self)
    }

    /// All prefixes, from ε up to the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.len()).map(move |i| self.prefix(i))
    }
}

/// How two words sit in the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixRelation {
    Equal,
    FirstIsPrefix,
    SecondIsPrefix,
    Incomparable,
}

pub fn compare_prefix(u: &Word, v: &Word) -> PrefixRelation {
    let common = u.0.iter().zip(&v.0).take_while(|(a, b)| a == b).count();
    match (common == u.len(), common == v.len()) {
        (true, true) => PrefixRelation::Equal,
        (true, false) => PrefixRelation::FirstIsPrefix,
        (false, true) => PrefixRelation::SecondIsPrefix,
        (false, false) => PrefixRelation::Incomparable,
    }
}

/// Length-lexicographic comparison.
pub fn llex_compare(u: &Word, v: &Word) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.0.cmp(&v.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        llex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("eps");
        }
        for &a in &self.0 {
            f.write_str(if a == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Parses a run of `0`/`1`; `eps` (or the empty string) is ε.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "eps" || s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordError::InvalidLetter(c, i)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Shorthand used throughout tests: `w("010")`, `w("eps")`.
pub fn w(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    Zero,
    One,
    Hash,
}

/// A word over `{0,1,#}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TaggedWord(pub Vec<Tag>);

impl TaggedWord {
    pub fn from_word(w: &Word) -> Self {
        TaggedWord(
            w.letters()
                .iter()
                .map(|&a| if a == 0 { Tag::Zero } else { Tag::One })
                .collect(),
        )
    }

    pub fn concat(&self, other: &TaggedWord) -> TaggedWord {
        TaggedWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl FromStr for TaggedWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "eps" {
            return Ok(TaggedWord::default());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(Tag::Zero),
                '1' => Ok(Tag::One),
                '#' => Ok(Tag::Hash),
                _ => Err(WordError::InvalidLetter(c, i)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TaggedWord)
    }
}

/// Block code `0 ↦ 00`, `1 ↦ 01`, `# ↦ 11`.
pub fn encode(t: &TaggedWord) -> Word {
    let mut out = Vec::with_capacity(2 * t.0.len());
    for tag in &t.0 {
        let block: [Letter; 2] = match tag {
            Tag::Zero => [0, 0],
            Tag::One => [0, 1],
            Tag::Hash => [1, 1],
        };
        out.extend_from_slice(&block);
    }
    Word(out)
}

/// `(code(x)·11, code(y)·11)`: one input/output pair of an encoded function.
pub fn encode_io_pair(x: &Word, y: &Word) -> (Word, Word) {
    let marker = TaggedWord(vec![Tag::Hash]);
    (
        encode(&TaggedWord::from_word(x).concat(&marker)),
        encode(&TaggedWord::from_word(y).concat(&marker)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefix_relation_examples() {
        assert_eq!(compare_prefix(&w("eps"), &w("1")), PrefixRelation::FirstIsPrefix);
        assert_eq!(compare_prefix(&w("10"), &w("10")), PrefixRelation::Equal);
        assert_eq!(compare_prefix(&w("01"), &w("001")), PrefixRelation::Incomparable);
        assert_eq!(compare_prefix(&w("011"), &w("0")), PrefixRelation::SecondIsPrefix);
    }

    #[test]
    fn llex_examples() {
        assert_eq!(llex_compare(&w("1"), &w("01")), Ordering::Less);
        assert_eq!(llex_compare(&w("01"), &w("10")), Ordering::Less);
        assert_eq!(llex_compare(&w("eps"), &w("eps")), Ordering::Equal);
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&"01#".parse().unwrap()), w("000111"));
        assert_eq!(encode(&TaggedWord::default()), Word::empty());
        assert_eq!(encode(&"0".parse().unwrap()), w("00"));
    }

    #[test]
    fn encode_io_pair_examples() {
        assert_eq!(encode_io_pair(&w("0"), &w("1")), (w("0011"), w("0111")));
        assert_eq!(encode_io_pair(&w("eps"), &w("eps")), (w("11"), w("11")));
        assert_eq!(encode_io_pair(&w("1"), &w("00")), (w("0111"), w("000011")));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("eps").to_string(), "eps");
        assert_eq!(w("0110").to_string(), "0110");
        assert!("012".parse::<Word>().is_err());
    }
}
