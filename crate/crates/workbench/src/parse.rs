//! Script syntax: statements, and the expressions inside them.
//!
//! A statement is `head arg*`. Statements end at a newline or `;` outside
//! braces and parentheses; `#` starts a comment. Arguments are atoms
//! (names, words, numbers, end literals such as `0(01)`, bounds such as
//! `poly(2,1)`), literals (`{...}`, `/re/`, `code ...`, `morph ...`,
//! `trans ...`, `end ...`) or parenthesized sub-statements.

use crate::WorkbenchError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A bare token: a name, word, number, end or bound.
    Atom(String),
    /// `{ ... }`: a code, or a morphism when the body contains `->`.
    Braces(String),
    /// `/re/`
    Regex(String),
    /// `code <braces|regex>`
    Code(Box<Expr>),
    /// `morph { ... }` or `morph @path`
    Morph(Source),
    /// `trans { ... }` or `trans @path`
    Trans(Source),
    /// A parenthesized statement.
    Sub(Statement),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Inline(String),
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub head: String,
    pub args: Vec<Expr>,
}

/// Splits a script into statements with their 1-based starting lines.
pub fn split_statements(script: &str) -> Result<Vec<(usize, String)>, WorkbenchError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth: i32 = 0;
    let mut line = 1;
    let mut start_line = 1;
    let mut chars = script.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '#' => {
                while let Some(&n) = chars.peek() {
                    if n == '\n' {
                        break;
                    }
                    chars.next();
                }
                continue;
            }
            '{' | '(' => depth += 1,
            '}' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(WorkbenchError::Parse {
                        line,
                        msg: format!("unbalanced `{c}`"),
                    });
                }
            }
            _ => {}
        }
        let ends_statement = (c == '\n' || c == ';') && depth == 0;
        if ends_statement {
            if !cur.trim().is_empty() {
                out.push((start_line, cur.trim().to_string()));
            }
            cur.clear();
        } else {
            if cur.trim().is_empty() && !c.is_whitespace() {
                start_line = line;
            }
            cur.push(c);
        }
        if c == '\n' {
            line += 1;
        }
    }
    if depth != 0 {
        return Err(WorkbenchError::Parse {
            line: start_line,
            msg: "unclosed bracket".into(),
        });
    }
    if !cur.trim().is_empty() {
        out.push((start_line, cur.trim().to_string()));
    }
    Ok(out)
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

fn perr(msg: impl Into<String>) -> WorkbenchError {
    WorkbenchError::Parse {
        line: 0,
        msg: msg.into(),
    }
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    /// Consumes a balanced group starting at the current open bracket and
    /// returns its interior.
    fn group(&mut self, open: char, close: char) -> Result<&'a str, WorkbenchError> {
        debug_assert_eq!(self.peek(), Some(open));
        let start = self.pos + open.len_utf8();
        let mut depth = 0;
        for (i, c) in self.rest().char_indices() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    let end = self.pos + i;
                    self.pos = end + close.len_utf8();
                    return Ok(&self.src[start..end]);
                }
            }
        }
        Err(perr(format!("unclosed `{open}`")))
    }

    fn regex(&mut self) -> Result<&'a str, WorkbenchError> {
        let body_start = self.pos + 1;
        match self.src[body_start..].find('/') {
            Some(i) => {
                self.pos = body_start + i + 1;
                Ok(&self.src[body_start..body_start + i])
            }
            None => Err(perr("unclosed `/`")),
        }
    }

    /// A bare token; a directly following parenthesized group is included,
    /// as in `0(01)` or `poly(1,1)`.
    fn token(&mut self) -> Result<String, WorkbenchError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_whitespace() || "(){};/".contains(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        let mut tok = self.src[start..self.pos].to_string();
        if self.peek() == Some('(') && !tok.is_empty() {
            let inner = self.group('(', ')')?;
            tok = format!("{tok}({inner})");
        }
        if tok.is_empty() {
            return Err(perr(format!("unexpected `{}`", self.peek().unwrap_or(' '))));
        }
        Ok(tok)
    }

    fn source(&mut self, what: &str) -> Result<Source, WorkbenchError> {
        self.skip_ws();
        match self.peek() {
            Some('{') => Ok(Source::Inline(self.group('{', '}')?.to_string())),
            Some('@') => {
                self.pos += 1;
                let start = self.pos;
                while matches!(self.peek(), Some(c) if !c.is_whitespace() && c != ')') {
                    self.pos += self.peek().unwrap().len_utf8();
                }
                if self.pos == start {
                    return Err(perr("expected a path after `@`"));
                }
                Ok(Source::File(self.src[start..self.pos].to_string()))
            }
            _ => Err(perr(format!("expected `{{ ... }}` or `@path` after `{what}`"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, WorkbenchError> {
        self.skip_ws();
        match self.peek() {
            None => Err(perr("expected an argument")),
            Some('(') => {
                let inner = self.group('(', ')')?;
                let t = inner.trim();
                if !t.is_empty() && t.chars().all(|c| c == '0' || c == '1') {
                    return Ok(Expr::Atom(format!("({t})")));
                }
                Ok(Expr::Sub(parse_statement(inner)?))
            }
            Some('{') => Ok(Expr::Braces(self.group('{', '}')?.to_string())),
            Some('/') => Ok(Expr::Regex(self.regex()?.to_string())),
            Some(_) => {
                let tok = self.token()?;
                match tok.as_str() {
                    "code" => {
                        self.skip_ws();
                        match self.peek() {
                            Some('{') => Ok(Expr::Code(Box::new(Expr::Braces(self.group('{', '}')?.to_string())))),
                            Some('/') => Ok(Expr::Code(Box::new(Expr::Regex(self.regex()?.to_string())))),
                            _ => Err(perr("expected `{ ... }` or `/re/` after `code`")),
                        }
                    }
                    "morph" => Ok(Expr::Morph(self.source("morph")?)),
                    "trans" => Ok(Expr::Trans(self.source("trans")?)),
                    "end" => {
                        // `end` introduces an end literal; otherwise it is a plain word
                        let save = self.pos;
                        self.skip_ws();
                        if matches!(self.peek(), Some('(' | '0' | '1')) {
                            let lit = self.token_or_group()?;
                            if lit.contains('(') {
                                return Ok(Expr::Atom(lit));
                            }
                        }
                        self.pos = save;
                        Ok(Expr::Atom(tok))
                    }
                    _ => Ok(Expr::Atom(tok)),
                }
            }
        }
    }

    fn token_or_group(&mut self) -> Result<String, WorkbenchError> {
        if self.peek() == Some('(') {
            let inner = self.group('(', ')')?;
            Ok(format!("({inner})"))
        } else {
            self.token()
        }
    }
}

pub fn parse_statement(src: &str) -> Result<Statement, WorkbenchError> {
    let mut c = Cursor { src, pos: 0 };
    c.skip_ws();
    let head = c.token()?;
    let mut args = Vec::new();
    while !c.at_end() {
        args.push(c.expr()?);
    }
    Ok(Statement { head, args })
}
