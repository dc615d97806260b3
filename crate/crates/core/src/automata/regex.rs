//! Regular expressions over `{0,1}`: literals, concatenation, `|`, `*`,
//! parentheses, `eps` for the empty word and `empty` for the empty set.

use super::{AutomataError, Dfa, Nfa};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Eps,
    Lit(u8),
    Concat(Vec<Regex>),
    Alt(Vec<Regex>),
    Star(Box<Regex>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> AutomataError {
        AutomataError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn alt(&mut self) -> Result<Regex, AutomataError> {
        let mut branches = vec![self.concat()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            branches.push(self.concat()?);
        }
        Ok(if branches.len() == 1 {
            branches.pop().unwrap()
        } else {
            Regex::Alt(branches)
        })
    }

    fn concat(&mut self) -> Result<Regex, AutomataError> {
        let mut items = Vec::new();
        while let Some(c) = self.peek() {
            if c == b'|' || c == b')' {
                break;
            }
            items.push(self.repeat()?);
        }
        match items.len() {
            0 => Err(self.err("empty expression")),
            1 => Ok(items.pop().unwrap()),
            _ => Ok(Regex::Concat(items)),
        }
    }

    fn repeat(&mut self) -> Result<Regex, AutomataError> {
        let mut r = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, AutomataError> {
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Regex::Lit(0))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Regex::Lit(1))
            }
            Some(b'(') => {
                self.pos += 1;
                let r = self.alt()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(b'e') if self.keyword("eps") => Ok(Regex::Eps),
            Some(b'e') if self.keyword("empty") => Ok(Regex::Empty),
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

impl Regex {
    pub fn parse(src: &str) -> Result<Regex, AutomataError> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let r = p.alt()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(r)
    }

    /// Thompson construction: returns the (entry, exit) pair of the fragment.
    fn build(&self, nfa: &mut Nfa) -> (usize, usize) {
        match self {
            Regex::Empty => (nfa.add_state(), nfa.add_state()),
            Regex::Eps => {
                let s = nfa.add_state();
                (s, s)
            }
            Regex::Lit(a) => {
                let s = nfa.add_state();
                let t = nfa.add_state();
                nfa.add_edge(s, *a, t);
                (s, t)
            }
            Regex::Concat(items) => {
                let s = nfa.add_state();
                let mut cur = s;
                for item in items {
                    let (i, o) = item.build(nfa);
                    nfa.add_eps(cur, i);
                    cur = o;
                }
                (s, cur)
            }
            Regex::Alt(items) => {
                let s = nfa.add_state();
                let t = nfa.add_state();
                for item in items {
                    let (i, o) = item.build(nfa);
                    nfa.add_eps(s, i);
                    nfa.add_eps(o, t);
                }
                (s, t)
            }
            Regex::Star(inner) => {
                let s = nfa.add_state();
                let (i, o) = inner.build(nfa);
                nfa.add_eps(s, i);
                nfa.add_eps(o, s);
                (s, s)
            }
        }
    }

    pub fn to_dfa(&self) -> Dfa {
        let mut nfa = Nfa::new();
        let start = nfa.start();
        let (i, o) = self.build(&mut nfa);
        nfa.add_eps(start, i);
        nfa.set_accepting(o, true);
        nfa.to_dfa()
    }
}

/// Parses and compiles `expr` to a minimal automaton.
pub fn compile_regex(expr: &str) -> Result<Dfa, AutomataError> {
    Ok(Regex::parse(expr)?.to_dfa())
}
