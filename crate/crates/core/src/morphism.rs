//! Right-ideal morphisms given by finite tables.
//!
//! A table maps the members of a finite prefix code (the domain code) to
//! words; the morphism is `x·w ↦ table(x)·w`. Tables are stored keyed by the
//! domain code, which is also the canonical representation of the function:
//! two tables are equal iff they define the same partial function.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codes::{CodeError, PrefixCode};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VReason {
    NotInjective,
    DomainNotMaximal,
    ImageNotMaximal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("keys are not prefix-free: {shorter} is a proper prefix of {longer}")]
    NotPrefixFree { shorter: Word, longer: Word },
    #[error("key {0} appears twice")]
    DuplicateKey(Word),
    #[error("{0} is outside the domain")]
    OutsideDomain(Word),
    #[error("operation needs a nonempty morphism")]
    EmptyMorphism,
    #[error("not an element of V: {0:?}")]
    NotAVElement(VReason),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the two morphisms disagree at {0}")]
    Disagree(Word),
    #[error("syntax error: {0}")]
    Syntax(String),
}

/// A right-ideal morphism with a finite domain code.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FiniteMorphism {
    table: BTreeMap<Word, Word>,
}

impl FiniteMorphism {
    pub fn new<I: IntoIterator<Item = (Word, Word)>>(rules: I) -> Result<Self, MorphismError> {
        let mut table = BTreeMap::new();
        for (k, v) in rules {
            if table.insert(k.clone(), v).is_some() {
                return Err(MorphismError::DuplicateKey(k));
            }
        }
        if let Err(CodeError::NotPrefixFree { shorter, longer }) = PrefixCode::finite(table.keys().cloned()) {
            return Err(MorphismError::NotPrefixFree { shorter, longer });
        }
        Ok(FiniteMorphism { table })
    }

    fn from_table(table: BTreeMap<Word, Word>) -> Self {
        FiniteMorphism { table }
    }

    /// The empty morphism.
    pub fn zero() -> Self {
        FiniteMorphism::default()
    }

    /// `{ε → ε}`
    pub fn identity() -> Self {
        Self::prepend(Word::empty())
    }

    /// `π_u`: `w ↦ u·w`.
    pub fn prepend(u: Word) -> Self {
        Self::from_table(BTreeMap::from([(Word::empty(), u)]))
    }

    /// `π'_n`: deletes the first `n` letters.
    pub fn drop_prefix(n: usize) -> Self {
        let table = (0..1u64 << n)
            .map(|bits| {
                let x = Word::from_letters((0..n).rev().map(|i| ((bits >> i) & 1) as Letter));
                (x, Word::empty())
            })
            .collect();
        Self::from_table(table)
    }

    /// `(v ← u)`: the single rule `u ↦ v`.
    pub fn single_rule(v: Word, u: Word) -> Self {
        Self::from_table(BTreeMap::from([(u, v)]))
    }

    /// Identity restricted to `P·A*` for a finite code `P`.
    pub fn identity_on(code: &BTreeSet<Word>) -> Self {
        Self::from_table(code.iter().map(|x| (x.clone(), x.clone())).collect())
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, key: &Word) -> Option<&Word> {
        self.table.get(key)
    }

    /// Rules in length-lexicographic key order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.table.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Word> {
        self.table.keys()
    }

    pub fn domain_code(&self) -> PrefixCode {
        PrefixCode::finite(self.table.keys().cloned()).expect("keys are prefix-free")
    }

    /// The multiset of table values, as a set.
    pub fn raw_image(&self) -> BTreeSet<Word> {
        self.table.values().cloned().collect()
    }

    /// The key that is a prefix of `w`, with its value.
    pub fn key_prefix(&self, w: &Word) -> Option<(Word, &Word)> {
        w.prefixes().find_map(|p| self.table.get(&p).map(|v| (p, v)))
    }

    pub fn eval(&self, w: &Word) -> Result<Word, MorphismError> {
        let (k, v) = self
            .key_prefix(w)
            .ok_or_else(|| MorphismError::OutsideDomain(w.clone()))?;
        Ok(v.concat(&w.suffix_from(k.len())))
    }

    pub fn in_domain(&self, w: &Word) -> bool {
        self.key_prefix(w).is_some()
    }

    /// `self ∘ f`: first `f`, then `self`.
    pub fn after(&self, f: &FiniteMorphism) -> FiniteMorphism {
        compose(self, f)
    }

    /// `prefC(Im f)`: the minimal table values.
    pub fn image_code(&self) -> Result<PrefixCode, MorphismError> {
        if self.is_empty() {
            return Err(MorphismError::EmptyMorphism);
        }
        Ok(PrefixCode::finite(minimal_words(self.table.values())).expect("minimal words are prefix-free"))
    }

    fn image_code_set(&self) -> BTreeSet<Word> {
        minimal_words(self.table.values())
    }

    pub fn is_injective(&self) -> bool {
        let values: Vec<&Word> = self.table.values().collect();
        let distinct: BTreeSet<&Word> = values.iter().copied().collect();
        distinct.len() == values.len() && PrefixCode::finite(distinct.into_iter().cloned()).is_ok()
    }

    /// Whether `f(domC) = imC`, together with the normalization: the
    /// restriction of `f` to `f⁻¹(imC(f))·A*`.
    pub fn normalize(&self) -> Result<(bool, FiniteMorphism), MorphismError> {
        if self.is_empty() {
            return Err(MorphismError::EmptyMorphism);
        }
        let imc = self.image_code_set();
        let normal = self.table.values().all(|v| imc.contains(v));
        let restricted = self
            .table
            .iter()
            .filter(|(_, v)| imc.contains(*v))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        Ok((normal, Self::from_table(restricted)))
    }

    pub fn is_normal(&self) -> bool {
        self.normalize().map(|(n, _)| n).unwrap_or(false)
    }

    /// Table-level preimages of each member of `imC(f)`, in llex order.
    fn preimages(&self) -> BTreeMap<Word, Vec<Word>> {
        let imc = self.image_code_set();
        let mut pre: BTreeMap<Word, Vec<Word>> = imc.iter().map(|y| (y.clone(), Vec::new())).collect();
        for (k, v) in &self.table {
            if let Some(list) = pre.get_mut(v) {
                list.push(k.clone());
            }
        }
        pre
    }

    /// The injective inverse with domain code `imC(f)` choosing the
    /// llex-least preimage of each member.
    pub fn canonical_inverse(&self) -> Result<FiniteMorphism, MorphismError> {
        if self.is_empty() {
            return Err(MorphismError::EmptyMorphism);
        }
        let table = self.preimages().into_iter().map(|(y, xs)| (y, xs[0].clone())).collect();
        Ok(Self::from_table(table))
    }

    /// All injective inverses with domain exactly `Im(f)` (one preimage per
    /// member of `imC(f)`), at most `cap` of them.
    pub fn all_injective_inverses(&self, cap: usize) -> Result<Vec<FiniteMorphism>, MorphismError> {
        if self.is_empty() {
            return Err(MorphismError::EmptyMorphism);
        }
        let choices: Vec<(Word, Vec<Word>)> = self.preimages().into_iter().collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; choices.len()];
        while out.len() < cap {
            let table = choices
                .iter()
                .zip(&idx)
                .map(|((y, xs), &i)| (y.clone(), xs[i].clone()))
                .collect();
            out.push(Self::from_table(table));
            // odometer, last position fastest
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < choices[pos].1.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
        Ok(out)
    }

    /// `self ∘ f ∘ self == self`
    pub fn is_inverse_of(&self, f: &FiniteMorphism) -> bool {
        compose(f, &compose(self, f)) == *f
    }

    /// Merges sibling rules `x0 → y0, x1 → y1` into `x → y` until none remain.
    pub fn bmax(&self) -> FiniteMorphism {
        let mut table = self.table.clone();
        loop {
            let merge = table.iter().find_map(|(k, v)| {
                if k.last() != Some(0) || v.last() != Some(0) {
                    return None;
                }
                let parent = k.prefix(k.len() - 1);
                let y = v.prefix(v.len() - 1);
                (table.get(&parent.child(1)) == Some(&y.child(1))).then_some((parent, y))
            });
            match merge {
                Some((x, y)) => {
                    table.remove(&x.child(0));
                    table.remove(&x.child(1));
                    table.insert(x, y);
                }
                None => return Self::from_table(table),
            }
        }
    }

    /// Bounded end-equivalence of finite tables: equal sibling-merge fixed points.
    pub fn equivalent(&self, other: &FiniteMorphism) -> bool {
        self.bmax() == other.bmax()
    }

    /// Replaces the rule at `key` by its two sibling refinements.
    pub fn split_at(&self, key: &Word) -> Option<FiniteMorphism> {
        let v = self.table.get(key)?.clone();
        let mut table = self.table.clone();
        table.remove(key);
        for a in 0..2 {
            table.insert(key.child(a), v.child(a));
        }
        Some(Self::from_table(table))
    }

    /// Restriction to `Dom(self) ∩ code·A*` for a finite code.
    pub fn restrict(&self, code: &PrefixCode) -> FiniteMorphism {
        let meet = self.domain_code().meet(code);
        let table = meet
            .members()
            .expect("meet of finite codes is finite")
            .iter()
            .filter_map(|x| self.eval(x).ok().map(|y| (x.clone(), y)))
            .collect();
        Self::from_table(table)
    }

    /// Union of two morphisms that agree on the intersection of their domains.
    pub fn union(&self, other: &FiniteMorphism) -> Result<FiniteMorphism, MorphismError> {
        let join = self.domain_code().join(&other.domain_code());
        let mut table = BTreeMap::new();
        for x in join.members().expect("join of finite codes is finite") {
            let y = match (self.eval(x), other.eval(x)) {
                (Ok(a), Ok(b)) if a != b => return Err(MorphismError::Disagree(x.clone())),
                (Ok(a), _) => a,
                (_, Ok(b)) => b,
                _ => unreachable!("join members lie in one of the domains"),
            };
            table.insert(x.clone(), y);
        }
        let u = Self::from_table(table);
        for x in self.meet_domain(other).keys() {
            if self.eval(x) != other.eval(x) {
                return Err(MorphismError::Disagree(x.clone()));
            }
        }
        Ok(u)
    }

    /// Restriction of `self` to `Dom(self) ∩ Dom(other)`.
    pub fn meet_domain(&self, other: &FiniteMorphism) -> FiniteMorphism {
        self.restrict(&other.domain_code())
    }

    /// `self ≤_R r`: `Im(self) ⊆ Im(r)`.
    pub fn leq_r(&self, r: &FiniteMorphism) -> Result<bool, MorphismError> {
        Ok(self.leq_r_witness(r)?.is_none())
    }

    /// Shortest word of `Im(self) − Im(r)`, if any.
    pub fn leq_r_witness(&self, r: &FiniteMorphism) -> Result<Option<Word>, MorphismError> {
        if r.is_empty() {
            return Err(MorphismError::EmptyMorphism);
        }
        if self.is_empty() {
            return Ok(None);
        }
        let a = self.image_code()?.ideal();
        let b = r.image_code()?.ideal();
        Ok(a.subset_witness(&b))
    }

    /// `self ≤_L r`: `self ≡ self ∘ r' ∘ r` for `r' = canonical_inverse(r)`.
    pub fn leq_l(&self, r: &FiniteMorphism) -> Result<bool, MorphismError> {
        let r_inv = r.canonical_inverse()?;
        let through = compose(self, &compose(&r_inv, r));
        Ok(through.equivalent(self))
    }

    /// Whether the table is a bijection between finite maximal prefix codes.
    pub fn v_check(&self) -> Result<(), VReason> {
        if !self.is_injective() {
            return Err(VReason::NotInjective);
        }
        let maximal = |c: PrefixCode| c.is_maximal().unwrap_or(false);
        if !maximal(self.domain_code()) {
            return Err(VReason::DomainNotMaximal);
        }
        if !maximal(PrefixCode::finite(self.raw_image()).expect("injective values are prefix-free")) {
            return Err(VReason::ImageNotMaximal);
        }
        Ok(())
    }

    pub fn is_v_element(&self) -> bool {
        self.v_check().is_ok()
    }

    /// Inverse in Thompson's group V: the table with columns swapped.
    pub fn v_inverse(&self) -> Result<FiniteMorphism, MorphismError> {
        self.v_check().map_err(MorphismError::NotAVElement)?;
        Ok(Self::from_table(
            self.table.iter().map(|(k, v)| (v.clone(), k.clone())).collect(),
        ))
    }

    /// Parses rules `x -> y` separated by newlines or commas; `#` starts a
    /// comment and surrounding braces are optional.
    pub fn parse_rules(text: &str) -> Result<Self, MorphismError> {
        let mut body = String::new();
        for line in text.lines() {
            body.push_str(line.split('#').next().unwrap());
            body.push('\n');
        }
        let trimmed = body.trim();
        let inner = match trimmed.strip_prefix('{') {
            Some(rest) => rest
                .strip_suffix('}')
                .ok_or_else(|| MorphismError::Syntax("unbalanced braces".into()))?,
            None => trimmed,
        };
        let mut rules = Vec::new();
        for item in inner.split([',', '\n']) {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let (x, y) = item
                .split_once("->")
                .ok_or_else(|| MorphismError::Syntax(format!("expected `x -> y`, got {item:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<Word>()
                    .map_err(|e| MorphismError::Syntax(format!("{e} in {item:?}")))
            };
            rules.push((parse(x)?, parse(y)?));
        }
        Self::new(rules)
    }

    /// One rule per line, `x -> y`, in key order.
    pub fn to_file_format(&self) -> String {
        self.table.iter().map(|(k, v)| format!("{k} -> {v}\n")).collect()
    }
}

fn minimal_words<'a>(words: impl IntoIterator<Item = &'a Word>) -> BTreeSet<Word> {
    let all: BTreeSet<&Word> = words.into_iter().collect();
    all.iter()
        .filter(|w| !(0..w.len()).any(|i| all.contains(&w.prefix(i))))
        .map(|w| (*w).clone())
        .collect()
}

/// `g ∘ f`. Keys are the minimal words `x·u` with `x` a key of `f` and
/// `f(x)·u` in `Dom(g)`.
pub fn compose(g: &FiniteMorphism, f: &FiniteMorphism) -> FiniteMorphism {
    let mut table = BTreeMap::new();
    for (x, y) in &f.table {
        if let Some((k, gk)) = g.key_prefix(y) {
            table.insert(x.clone(), gk.concat(&y.suffix_from(k.len())));
        } else {
            for (k, gk) in g.table.range(y.clone()..) {
                if let Some(u) = k.strip_prefix(y) {
                    table.insert(x.concat(&u), gk.clone());
                }
            }
        }
    }
    FiniteMorphism::from_table(table)
}

/// Extends an injective inverse of `f0` to an injective inverse of `f`,
/// where `f0 ⊆ f`, `f0 ≡ f` and `f` is normal: for `y ∈ imC(f)`, take the
/// least `q` with `y·0^q ∈ Im(f0)` and strip `0^q` from `f0'(y·0^q)`.
pub fn extend_inverse(
    fprime0: &FiniteMorphism,
    f0: &FiniteMorphism,
    f: &FiniteMorphism,
) -> Result<FiniteMorphism, MorphismError> {
    let violated = |m: &str| Err(MorphismError::PreconditionViolated(m.to_string()));
    if f.is_empty() || f0.is_empty() {
        return Err(MorphismError::EmptyMorphism);
    }
    for (k, v) in f0.iter() {
        if f.eval(k).as_ref() != Ok(v) {
            return violated("f0 is not a restriction of f");
        }
    }
    if !f0.equivalent(f) {
        return violated("f0 is not equivalent to f");
    }
    if !f.is_normal() {
        return violated("f is not normal");
    }
    let imc0 = f0.image_code_set();
    if fprime0.keys().cloned().collect::<BTreeSet<_>>() != imc0 {
        return violated("domain code of f0' is not imC(f0)");
    }
    if !fprime0.is_inverse_of(f0) {
        return violated("f0' is not an inverse of f0");
    }
    let max_len = imc0.iter().map(Word::len).max().unwrap_or(0);
    let mut table = BTreeMap::new();
    for y in f.image_code_set() {
        let mut t = Word::empty();
        while !fprime0.in_domain(&y.concat(&t)) {
            if y.len() + t.len() > max_len {
                return violated("Im(f) has an end outside Im(f0)");
            }
            t.push(0);
        }
        let x = fprime0.eval(&y.concat(&t))?;
        match x.strip_suffix(&t) {
            Some(x1) => {
                table.insert(y, x1);
            }
            None => return violated("f0'(y·t) does not end with t"),
        }
    }
    Ok(FiniteMorphism::from_table(table))
}

impl fmt::Display for FiniteMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{ }");
        }
        let items: Vec<String> = self.table.iter().map(|(k, v)| format!("{k} -> {v}")).collect();
        write!(f, "{{ {} }}", items.join(", "))
    }
}

impl fmt::Debug for FiniteMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMorphism{self}")
    }
}

impl FromStr for FiniteMorphism {
    type Err = MorphismError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_rules(s)
    }
}
