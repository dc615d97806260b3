use std::fmt;
use std::str::FromStr;

use super::CodeError;

/// An explicit length bound `n ↦ τ(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundFunction {
    /// `τ(n) = c0 + c1·n + c2·n² + …`
    Polynomial(Vec<u64>),
    /// `τ(n) = values[n]` inside the table, `n + tail_offset` beyond it.
    Table { values: Vec<u64>, tail_offset: u64 },
}

impl BoundFunction {
    pub fn constant(c: u64) -> Self {
        BoundFunction::Polynomial(vec![c])
    }

    /// `n + k`
    pub fn shift(k: u64) -> Self {
        BoundFunction::Polynomial(vec![k, 1])
    }

    pub fn eval(&self, n: u64) -> u64 {
        match self {
            BoundFunction::Polynomial(coeffs) => coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc.saturating_mul(n).saturating_add(c)),
            BoundFunction::Table { values, tail_offset } => match values.get(n as usize) {
                Some(&v) => v,
                None => n.saturating_add(*tail_offset),
            },
        }
    }

    pub fn as_constant(&self) -> Option<u64> {
        match self {
            BoundFunction::Polynomial(c) if c.iter().skip(1).all(|&x| x == 0) => Some(c.first().copied().unwrap_or(0)),
            _ => None,
        }
    }

    /// Checks monotonicity and `τ(n) ≥ n` for `n ≤ upto`.
    pub fn validate(&self, upto: u64) -> Result<(), CodeError> {
        let mut prev = 0;
        for n in 0..=upto {
            let v = self.eval(n);
            if v < n {
                return Err(CodeError::InvalidBound(format!("{self}: τ({n}) = {v} < {n}")));
            }
            if v < prev {
                return Err(CodeError::InvalidBound(format!("{self} decreases at {n}")));
            }
            prev = v;
        }
        Ok(())
    }
}

impl fmt::Display for BoundFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            BoundFunction::Polynomial(c) => write!(f, "poly({})", join(c)),
            BoundFunction::Table { values, tail_offset } => write!(f, "table({};+{})", join(values), tail_offset),
        }
    }
}

impl FromStr for BoundFunction {
    type Err = CodeError;

    /// `poly(c0,c1,...)` or `table(v0,v1,...;+k)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CodeError::InvalidBound(format!("cannot parse bound {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let nums = |body: &str| -> Result<Vec<u64>, CodeError> {
            if body.is_empty() {
                return Ok(Vec::new());
            }
            body.split(',').map(|t| t.parse::<u64>().map_err(|_| bad())).collect()
        };
        if let Some(body) = s.strip_prefix("poly(").and_then(|r| r.strip_suffix(')')) {
            let c = nums(body)?;
            if c.is_empty() {
                return Err(bad());
            }
            Ok(BoundFunction::Polynomial(c))
        } else if let Some(body) = s.strip_prefix("table(").and_then(|r| r.strip_suffix(')')) {
            let (vals, tail) = body.split_once(";+").ok_or_else(bad)?;
            Ok(BoundFunction::Table {
                values: nums(vals)?,
                tail_offset: tail.parse().map_err(|_| bad())?,
            })
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation() {
        let p: BoundFunction = "poly(2,1)".parse().unwrap();
        assert_eq!(p.eval(0), 2);
        assert_eq!(p.eval(5), 7);
        let q: BoundFunction = "poly(1,0,3)".parse().unwrap();
        assert_eq!(q.eval(2), 13);
        let t: BoundFunction = "table(1,3,3;+2)".parse().unwrap();
        assert_eq!(t.eval(1), 3);
        assert_eq!(t.eval(10), 12);
        assert_eq!(t.to_string(), "table(1,3,3;+2)");
        assert_eq!(BoundFunction::constant(2).as_constant(), Some(2));
        assert_eq!(BoundFunction::shift(2).as_constant(), None);
    }

    #[test]
    fn validation() {
        assert!(BoundFunction::shift(0).validate(20).is_ok());
        assert!(BoundFunction::constant(3).validate(20).is_err());
        let dec = BoundFunction::Table {
            values: vec![5, 4],
            tail_offset: 5,
        };
        assert!(dec.validate(3).is_err());
    }
}
