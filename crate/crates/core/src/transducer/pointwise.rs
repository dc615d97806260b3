use std::fmt;

use super::TransducerError;
use crate::codes::PrefixCode;
use crate::word::Word;

/// Which argument of a two-code operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::First => "first",
            Side::Second => "second",
        })
    }
}

/// A morphism known only through pointwise evaluation on its domain code:
/// the order-preserving bijection between two infinite codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointwiseMorphism {
    domain: PrefixCode,
    codomain: PrefixCode,
}

/// `x ↦ unrank(q, rank(p, x))` for infinite regular codes `p`, `q`.
pub fn rank_bijection(p: &PrefixCode, q: &PrefixCode) -> Result<PointwiseMorphism, TransducerError> {
    if !p.is_infinite() {
        return Err(TransducerError::CodeNotInfinite(Side::First));
    }
    if !q.is_infinite() {
        return Err(TransducerError::CodeNotInfinite(Side::Second));
    }
    Ok(PointwiseMorphism {
        domain: p.clone(),
        codomain: q.clone(),
    })
}

impl PointwiseMorphism {
    pub fn domain_code(&self) -> &PrefixCode {
        &self.domain
    }

    pub fn codomain_code(&self) -> &PrefixCode {
        &self.codomain
    }

    pub fn eval(&self, w: &Word) -> Result<Word, TransducerError> {
        let x = self
            .domain
            .prefix_in_code(w)
            .ok_or_else(|| TransducerError::OutsideDomain(w.clone()))?;
        let y = self.codomain.unrank(self.domain.rank(&x)?)?;
        Ok(y.concat(&w.suffix_from(x.len())))
    }

    /// Values on the first `k` members of the domain code.
    pub fn sample(&self, k: usize) -> Vec<(Word, Word)> {
        self.domain
            .first_members(k)
            .into_iter()
            .map(|x| {
                let y = self.eval(&x).expect("member of the domain code");
                (x, y)
            })
            .collect()
    }
}
