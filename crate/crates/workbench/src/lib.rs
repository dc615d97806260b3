//! Scripted access to prefix codes, finite morphisms and transducer
//! morphisms.
//!
//! A [`Session`] runs a script line by line and produces a transcript: one
//! entry per command that prints something, or an `error (line N): ...`
//! entry for a failing command. Execution is deterministic.
//!
//! ```
//! use rim_workbench::{Config, Session};
//!
//! let mut s = Session::new(Config::default());
//! let t = s.run("let f = morph { 0 -> 0, 1 -> 10 }; imc f");
//! assert_eq!(t.lines, vec!["{ 0, 10 }"]);
//! ```

mod parse;
mod value;

use std::collections::BTreeMap;
use std::fs;

use thiserror::Error;

use rim_core::cantor::{cross_check, systematic_ends, CrossCheck, EndAction};
use rim_core::codes::{BoundFunction, RankBase, Relation, TauFailure, TauVerdict};
use rim_core::morphism::{compose, extend_inverse, VReason};
use rim_core::transducer::{
    bd_separating_end, compose_bounded, rank_bijection, t_agree, Agreement, EquivMode, TransducerMorphism,
    DEFAULT_STATE_BOUND,
};
use rim_core::{FiniteMorphism, PrefixCode, UpEnd, Word};

pub use parse::{parse_statement, split_statements, Expr, Source, Statement};
pub use value::{inline_machine, Value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkbenchError {
    #[error("parse error: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Command(String),
}

fn cmd_err(msg: impl Into<String>) -> WorkbenchError {
    WorkbenchError::Command(msg.into())
}

fn lift_err<E: std::fmt::Display>(e: E) -> WorkbenchError {
    WorkbenchError::Command(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// State bound for transducer composition.
    pub max_states: usize,
    /// Default depth for bounded checks and sampled ends.
    pub depth: usize,
    pub rank_base: RankBase,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_states: DEFAULT_STATE_BOUND,
            depth: 8,
            rank_base: RankBase::Zero,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Transcript {
    pub lines: Vec<String>,
    pub errors: usize,
}

impl Transcript {
    pub fn ok(&self) -> bool {
        self.errors == 0
    }

    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        if !s.is_empty() {
            s.push('\n');
        }
        s
    }
}

#[derive(Debug, Clone, Default)]
pub struct Session {
    config: Config,
    bindings: BTreeMap<String, Value>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && s != "eps"
}

const KEYWORDS: &[&str] = &["eps", "end", "bd", "code", "morph", "trans", "let", "let!"];

fn relation_word(r: Relation) -> &'static str {
    match r {
        Relation::Equivalent => "EQUIV",
        Relation::FirstBelow => "LT",
        Relation::SecondBelow => "GT",
        Relation::Incomparable => "INCOMP",
    }
}

fn v_reason(r: VReason) -> &'static str {
    match r {
        VReason::NotInjective => "not-injective",
        VReason::DomainNotMaximal => "domain-not-maximal",
        VReason::ImageNotMaximal => "image-not-maximal",
    }
}

fn truth(b: bool) -> Value {
    Value::verdict(if b { "TRUE" } else { "FALSE" })
}

fn parse_code_body(body: &str) -> Result<PrefixCode, WorkbenchError> {
    let words = body
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Word>().map_err(lift_err))
        .collect::<Result<Vec<_>, _>>()?;
    PrefixCode::finite(words).map_err(lift_err)
}

/// Positional arguments of one command, evaluated on demand.
struct Args<'a> {
    head: &'a str,
    exprs: &'a [Expr],
}

impl Session {
    pub fn new(config: Config) -> Self {
        Session {
            config,
            bindings: BTreeMap::new(),
        }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    /// Runs a whole script; failing commands are reported and skipped.
    pub fn run(&mut self, script: &str) -> Transcript {
        let mut t = Transcript::default();
        let statements = match split_statements(script) {
            Ok(s) => s,
            Err(WorkbenchError::Parse { line, msg }) => {
                t.lines.push(format!("error (line {line}): parse error: {msg}"));
                t.errors += 1;
                return t;
            }
            Err(e) => unreachable!("{e}"),
        };
        for (line, src) in statements {
            let mut warnings = Vec::new();
            let result = self.execute(&src, &mut warnings);
            for w in warnings {
                t.lines.push(format!("warning (line {line}): {w}"));
            }
            match result {
                Ok(Some(v)) => t.lines.extend(v.to_string().lines().map(str::to_string)),
                Ok(None) => {}
                Err(e) => {
                    t.lines.push(format!("error (line {line}): {e}"));
                    t.errors += 1;
                }
            }
        }
        t
    }

    /// Evaluates a single statement to a value, without binding anything
    /// unless it is a `let`.
    pub fn eval_statement(&mut self, src: &str) -> Result<Option<Value>, WorkbenchError> {
        self.execute(src, &mut Vec::new())
    }

    fn execute(&mut self, src: &str, warnings: &mut Vec<String>) -> Result<Option<Value>, WorkbenchError> {
        let st = parse_statement(src)?;
        if st.head == "let" || st.head == "let!" {
            let rebind = st.head == "let!";
            let (name, rhs) = match &st.args[..] {
                [Expr::Atom(name), Expr::Atom(eq), ..] if eq == "=" => (name, &st.args[2..]),
                _ => return Err(cmd_err("expected `let NAME = EXPR`")),
            };
            if !is_name(name) || KEYWORDS.contains(&name.as_str()) {
                return Err(cmd_err(format!("invalid name {name:?}")));
            }
            if !rebind && self.bindings.contains_key(name) {
                return Err(cmd_err(format!("{name} is already bound; use `let!` to rebind")));
            }
            if rebind && !self.bindings.contains_key(name) {
                return Err(cmd_err(format!("{name} is not bound")));
            }
            let value = match rhs {
                [single] => self.eval_expr(single, warnings)?,
                [Expr::Atom(head), rest @ ..] => {
                    let sub = Statement {
                        head: head.clone(),
                        args: rest.to_vec(),
                    };
                    self.eval_command(&sub, warnings)?
                }
                _ => return Err(cmd_err("expected an expression after `=`")),
            };
            let value = match value {
                Value::Verdict { carried: Some(v), .. } => *v,
                Value::Verdict { line, .. } => match (line.parse::<Word>(), line.parse::<u128>()) {
                    (Ok(w), _) => Value::Word(w),
                    (_, Ok(n)) => Value::Number(n),
                    _ => return Err(cmd_err(format!("cannot bind verdict `{line}`"))),
                },
                v => v,
            };
            self.bindings.insert(name.clone(), value);
            return Ok(None);
        }
        self.eval_command(&st, warnings).map(Some)
    }

    fn eval_expr(&mut self, e: &Expr, warnings: &mut Vec<String>) -> Result<Value, WorkbenchError> {
        Ok(match e {
            Expr::Atom(a) => {
                if let Some(v) = self.bindings.get(a) {
                    v.clone()
                } else if a.contains('(') && !a.starts_with("poly(") && !a.starts_with("table(") {
                    Value::End(a.parse::<UpEnd>().map_err(lift_err)?)
                } else if a.starts_with("poly(") || a.starts_with("table(") {
                    Value::Bound(a.parse::<BoundFunction>().map_err(lift_err)?)
                } else if is_name(a) && !KEYWORDS.contains(&a.as_str()) {
                    return Err(cmd_err(format!("unknown name {a}")));
                } else {
                    // words and numbers are told apart by the consuming command
                    Value::Verdict {
                        line: a.clone(),
                        carried: None,
                    }
                }
            }
            Expr::Braces(body) => {
                if body.contains("->") {
                    Value::Morph(body.parse::<FiniteMorphism>().map_err(lift_err)?)
                } else {
                    Value::Code(parse_code_body(body)?)
                }
            }
            Expr::Regex(re) => Value::Code(PrefixCode::from_regex(re.trim()).map_err(lift_err)?),
            Expr::Code(inner) => match self.eval_expr(inner, warnings)? {
                v @ Value::Code(_) => v,
                _ => return Err(cmd_err("`code` expects a word list or regex")),
            },
            Expr::Morph(src) => {
                let text = match src {
                    Source::Inline(s) => s.clone(),
                    Source::File(path) => fs::read_to_string(path).map_err(|e| cmd_err(format!("{path}: {e}")))?,
                };
                Value::Morph(FiniteMorphism::parse_rules(&text).map_err(lift_err)?)
            }
            Expr::Trans(src) => {
                let spec = match src {
                    Source::Inline(s) => {
                        rim_core::transducer::MachineSpec::parse(&s.replace([';', ','], "\n")).map_err(lift_err)?
                    }
                    Source::File(path) => {
                        let text = fs::read_to_string(path).map_err(|e| cmd_err(format!("{path}: {e}")))?;
                        rim_core::transducer::MachineSpec::parse(&text).map_err(lift_err)?
                    }
                };
                let (m, warns) = TransducerMorphism::make(&spec).map_err(lift_err)?;
                warnings.extend(warns.iter().map(|w| w.to_string()));
                Value::Trans(m)
            }
            Expr::Sub(st) => self.eval_command(st, warnings)?,
        })
    }

    fn eval_command(&mut self, st: &Statement, warnings: &mut Vec<String>) -> Result<Value, WorkbenchError> {
        let head = st.head.as_str();
        let a = Args { head, exprs: &st.args };
        let cfg = self.config;
        let v = match head {
            "code" | "morph" | "trans" | "end" => {
                // a literal at statement level prints itself
                let e = match head {
                    "end" => parse_statement(&format!("x end {}", render_exprs(&st.args)))?.args,
                    _ => parse_statement(&format!("x {head} {}", render_exprs(&st.args)))?.args,
                };
                match &e[..] {
                    [single] => self.eval_expr(single, warnings)?,
                    _ => return Err(cmd_err(format!("malformed `{head}` literal"))),
                }
            }
            "show" => {
                a.arity(1)?;
                self.arg(&a, 0, warnings)?
            }
            "endeq" | "endleq" => {
                a.arity(2)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                let v = p.end_compare(&q);
                let word = if head == "endeq" {
                    if v.is_equivalent() {
                        "EQUIV"
                    } else {
                        "NOT-EQUIV"
                    }
                } else {
                    relation_word(v.relation)
                };
                match v.witness {
                    Some(w) => Value::verdict(format!("{word} witness: {w}")),
                    None => Value::verdict(word),
                }
            }
            "bdeq" | "bdleq" => {
                a.arity(2)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                let v = p.bd_compare(&q);
                let word = if head == "bdeq" {
                    if v.is_equivalent() {
                        "EQUIV"
                    } else {
                        "NOT-EQUIV"
                    }
                } else {
                    relation_word(v.relation)
                };
                match v.witness {
                    Some(e) => Value::verdict(format!("{word} witness-end: {e}")),
                    None => Value::verdict(word),
                }
            }
            "taucheck" => {
                a.arity_range(3, 4)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                let tau = self.bound(&a, 2, warnings)?;
                let depth = if a.exprs.len() == 4 {
                    self.number(&a, 3, warnings)? as usize
                } else {
                    cfg.depth
                };
                match p.tau_check(&q, &tau, depth).map_err(lift_err)? {
                    TauVerdict::PassUpTo(n) => Value::verdict(format!("PASS-UP-TO {n}")),
                    TauVerdict::Fail(TauFailure::NotEndEquivalent(w)) => {
                        Value::verdict(format!("FAIL not-end-equivalent witness: {w}"))
                    }
                    TauVerdict::Fail(TauFailure::LengthBound(x1, x2)) => {
                        Value::verdict(format!("FAIL witness: ({x1}, {x2})"))
                    }
                }
            }
            "maximal" => {
                a.arity(1)?;
                let p = self.code(&a, 0, warnings)?;
                match p.maximality_witness().map_err(lift_err)? {
                    None => Value::verdict("MAXIMAL"),
                    Some(w) => Value::verdict(format!("NOT-MAXIMAL witness: {w}")),
                }
            }
            "meet" | "join" => {
                a.arity(2)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                Value::Code(if head == "meet" { p.meet(&q) } else { p.join(&q) })
            }
            "refine" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                Value::Code(p.refine(self.number(&a, 1, warnings)? as usize))
            }
            "puncture" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                let e = self.end(&a, 1, warnings)?;
                Value::Code(p.puncture(&e).map_err(lift_err)?)
            }
            "rank" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                let x = self.word(&a, 1, warnings)?;
                Value::Number(p.rank_with_base(&x, cfg.rank_base).map_err(lift_err)?)
            }
            "unrank" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                let n = self.number(&a, 1, warnings)?;
                Value::Word(p.unrank_with_base(n, cfg.rank_base).map_err(lift_err)?)
            }
            "pad" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                let b = self.bound(&a, 1, warnings)?;
                Value::Code(p.pad(&b).map_err(lift_err)?)
            }
            "endmember" => {
                a.arity(2)?;
                let p = self.code(&a, 0, warnings)?;
                let e = self.end(&a, 1, warnings)?;
                truth(rim_core::cantor::member_ends(&p, &e))
            }
            "eval" | "teval" => {
                a.arity(2)?;
                let f = self.arg(&a, 0, warnings)?;
                let w = self.word(&a, 1, warnings)?;
                Value::Word(match f {
                    Value::Morph(m) if head == "eval" => m.eval(&w).map_err(lift_err)?,
                    Value::Morph(m) => TransducerMorphism::lift(&m).eval(&w).map_err(lift_err)?,
                    Value::Trans(m) => m.eval(&w).map_err(lift_err)?,
                    Value::Pointwise(p) => p.eval(&w).map_err(lift_err)?,
                    other => return Err(a.type_err(0, "a morphism", &other)),
                })
            }
            "compose" => {
                a.arity(2)?;
                match (self.arg(&a, 0, warnings)?, self.arg(&a, 1, warnings)?) {
                    (Value::Morph(g), Value::Morph(f)) => Value::Morph(compose(&g, &f)),
                    _ => Value::Trans(self.tcompose(&a, warnings)?),
                }
            }
            "tcompose" => {
                a.arity(2)?;
                Value::Trans(self.tcompose(&a, warnings)?)
            }
            "imc" => {
                a.arity(1)?;
                match self.arg(&a, 0, warnings)? {
                    Value::Morph(f) => Value::Code(f.image_code().map_err(lift_err)?),
                    Value::Trans(m) => Value::Code(m.image_code().map_err(lift_err)?),
                    other => return Err(a.type_err(0, "a morphism", &other)),
                }
            }
            "domc" => {
                a.arity(1)?;
                match self.arg(&a, 0, warnings)? {
                    Value::Morph(f) => Value::Code(f.domain_code()),
                    Value::Trans(m) => Value::Code(m.domain_code()),
                    Value::Pointwise(p) => Value::Code(p.domain_code().clone()),
                    other => return Err(a.type_err(0, "a morphism", &other)),
                }
            }
            "tcodes" => {
                a.arity(1)?;
                let m = self.trans(&a, 0, warnings)?;
                let (d, i) = m.codes().map_err(lift_err)?;
                Value::verdict(format!("domC: {d} imC: {i}"))
            }
            "normalize" => {
                a.arity(1)?;
                let f = self.morph(&a, 0, warnings)?;
                let (normal, fnorm) = f.normalize().map_err(lift_err)?;
                let line = if normal {
                    "NORMAL".to_string()
                } else {
                    format!("NOT-NORMAL {}", Value::Morph(fnorm.clone()))
                };
                Value::Verdict {
                    line,
                    carried: Some(Box::new(Value::Morph(fnorm))),
                }
            }
            "inverse" => {
                a.arity(1)?;
                Value::Morph(self.morph(&a, 0, warnings)?.canonical_inverse().map_err(lift_err)?)
            }
            "inverses" => {
                a.arity_range(1, 2)?;
                let f = self.morph(&a, 0, warnings)?;
                let cap = if a.exprs.len() == 2 {
                    self.number(&a, 1, warnings)? as usize
                } else {
                    64
                };
                Value::List(
                    f.all_injective_inverses(cap)
                        .map_err(lift_err)?
                        .into_iter()
                        .map(Value::Morph)
                        .collect(),
                )
            }
            "bmax" => {
                a.arity(1)?;
                Value::Morph(self.morph(&a, 0, warnings)?.bmax())
            }
            "equiv" => {
                a.arity(2)?;
                match (self.arg(&a, 0, warnings)?, self.arg(&a, 1, warnings)?) {
                    (Value::Morph(f), Value::Morph(g)) => {
                        if f.equivalent(&g) {
                            Value::verdict("EQUIV")
                        } else {
                            let e = bd_separating_end(&TransducerMorphism::lift(&f), &TransducerMorphism::lift(&g));
                            match e {
                                Some(e) => Value::verdict(format!("NOT-EQUIV witness-end: {e}")),
                                None => Value::verdict("NOT-EQUIV"),
                            }
                        }
                    }
                    _ => self.tequiv(&a, 0, EquivMode::Bd, warnings)?,
                }
            }
            "tequiv" => {
                a.arity(3)?;
                let mode = match &a.exprs[0] {
                    Expr::Atom(m) if m == "end" => EquivMode::End,
                    Expr::Atom(m) if m == "bd" => EquivMode::Bd,
                    _ => return Err(cmd_err("tequiv: mode must be `end` or `bd`")),
                };
                self.tequiv(&a, 1, mode, warnings)?
            }
            "leqR" | "leqL" => {
                a.arity(2)?;
                let (f, r) = (self.morph(&a, 0, warnings)?, self.morph(&a, 1, warnings)?);
                if head == "leqR" {
                    match f.leq_r_witness(&r).map_err(lift_err)? {
                        None => truth(true),
                        Some(w) => Value::verdict(format!("FALSE witness: {w}")),
                    }
                } else {
                    truth(f.leq_l(&r).map_err(lift_err)?)
                }
            }
            "isv" => {
                a.arity(1)?;
                match self.morph(&a, 0, warnings)?.v_check() {
                    Ok(()) => truth(true),
                    Err(reason) => Value::verdict(format!("FALSE {}", v_reason(reason))),
                }
            }
            "vinv" => {
                a.arity(1)?;
                Value::Morph(self.morph(&a, 0, warnings)?.v_inverse().map_err(lift_err)?)
            }
            "extinv" => {
                a.arity(3)?;
                let fp0 = self.morph(&a, 0, warnings)?;
                let f0 = self.morph(&a, 1, warnings)?;
                let f = self.morph(&a, 2, warnings)?;
                Value::Morph(extend_inverse(&fp0, &f0, &f).map_err(lift_err)?)
            }
            "isinverse" => {
                a.arity(2)?;
                let (g, f) = (self.morph(&a, 0, warnings)?, self.morph(&a, 1, warnings)?);
                truth(g.is_inverse_of(&f))
            }
            "tagree" => {
                a.arity(2)?;
                let (f, g) = (self.trans(&a, 0, warnings)?, self.trans(&a, 1, warnings)?);
                match t_agree(&f, &g) {
                    Agreement::Agree => Value::verdict("AGREE"),
                    Agreement::Disagree(w) => Value::verdict(format!("DISAGREE witness: {w}")),
                }
            }
            "dclass" => {
                a.arity(1)?;
                Value::verdict(self.trans(&a, 0, warnings)?.classify_dclass().to_string())
            }
            "trestrict" => {
                a.arity(2)?;
                let m = self.trans(&a, 0, warnings)?;
                let c = self.code(&a, 1, warnings)?;
                Value::Trans(m.restrict(&c).map_err(lift_err)?)
            }
            "tlift" => {
                a.arity(1)?;
                Value::Trans(self.trans(&a, 0, warnings)?)
            }
            "tfinite" => {
                a.arity(1)?;
                match self.trans(&a, 0, warnings)?.to_finite() {
                    Some(f) => Value::Morph(f),
                    None => return Err(cmd_err("tfinite: the domain code is infinite")),
                }
            }
            "rankbij" => {
                a.arity(2)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                Value::Pointwise(rank_bijection(&p, &q).map_err(lift_err)?)
            }
            "sample" => {
                a.arity_range(1, 2)?;
                let k = if a.exprs.len() == 2 {
                    self.number(&a, 1, warnings)? as usize
                } else {
                    cfg.depth
                };
                let pairs: Vec<(Word, Word)> = match self.arg(&a, 0, warnings)? {
                    Value::Pointwise(p) => p.sample(k),
                    Value::Trans(m) => m
                        .domain_code()
                        .first_members(k)
                        .into_iter()
                        .map(|x| {
                            let y = m.eval(&x).expect("code member");
                            (x, y)
                        })
                        .collect(),
                    Value::Morph(f) => f.iter().take(k).map(|(x, y)| (x.clone(), y.clone())).collect(),
                    other => return Err(a.type_err(0, "a morphism", &other)),
                };
                let rules: Vec<String> = pairs.iter().map(|(x, y)| format!("{x} -> {y}")).collect();
                Value::verdict(format!("{{ {} }}", rules.join(", ")))
            }
            "preimage" => {
                a.arity(2)?;
                let m = self.trans(&a, 0, warnings)?;
                let p = self.code(&a, 1, warnings)?;
                Value::Code(PrefixCode::regular(&m.preimage(p.dfa())).map_err(lift_err)?)
            }
            "idealeq" => {
                a.arity(2)?;
                let (p, q) = (self.code(&a, 0, warnings)?, self.code(&a, 1, warnings)?);
                match p.ideal().difference_witness(&q.ideal()) {
                    None => Value::verdict("EQUIV"),
                    Some(w) => Value::verdict(format!("NOT-EQUIV witness: {w}")),
                }
            }
            "applyend" => {
                a.arity(2)?;
                let e = self.end(&a, 1, warnings)?;
                Value::End(match self.arg(&a, 0, warnings)? {
                    Value::Morph(f) => f.apply_end(&e).map_err(lift_err)?,
                    Value::Trans(m) => m.apply_end(&e).map_err(lift_err)?,
                    other => return Err(a.type_err(0, "a morphism", &other)),
                })
            }
            "crosscheck" => {
                a.arity_range(2, 4)?;
                let (f, g) = (self.trans(&a, 0, warnings)?, self.trans(&a, 1, warnings)?);
                let heads = if a.exprs.len() >= 3 {
                    self.number(&a, 2, warnings)? as usize
                } else {
                    cfg.depth
                };
                let periods = if a.exprs.len() == 4 {
                    self.number(&a, 3, warnings)? as usize
                } else {
                    4
                };
                match cross_check(&f, &g, &systematic_ends(heads, periods)) {
                    CrossCheck::ConsistentWithBdEquiv => Value::verdict("CONSISTENT"),
                    CrossCheck::Separated(e) => Value::verdict(format!("SEPARATED witness-end: {e}")),
                }
            }
            name if self.bindings.contains_key(name) && st.args.is_empty() => self.bindings[name].clone(),
            other => return Err(cmd_err(format!("unknown command `{other}`"))),
        };
        Ok(v)
    }

    fn tcompose(&mut self, a: &Args, warnings: &mut Vec<String>) -> Result<TransducerMorphism, WorkbenchError> {
        let g = self.trans(a, 0, warnings)?;
        let f = self.trans(a, 1, warnings)?;
        compose_bounded(&g, &f, self.config.max_states).map_err(lift_err)
    }

    fn tequiv(
        &mut self,
        a: &Args,
        first: usize,
        mode: EquivMode,
        warnings: &mut Vec<String>,
    ) -> Result<Value, WorkbenchError> {
        let f = self.trans(a, first, warnings)?;
        let g = self.trans(a, first + 1, warnings)?;
        if f.equivalent(&g, mode) {
            return Ok(Value::verdict("EQUIV"));
        }
        Ok(match mode {
            EquivMode::Bd => match bd_separating_end(&f, &g) {
                Some(e) => Value::verdict(format!("NOT-EQUIV witness-end: {e}")),
                None => Value::verdict("NOT-EQUIV"),
            },
            EquivMode::End => {
                let v = f.domain_code().end_compare(&g.domain_code());
                let w = match (v.witness, t_agree(&f, &g)) {
                    (Some(w), _) => Some(w),
                    (None, Agreement::Disagree(w)) => Some(w),
                    (None, Agreement::Agree) => None,
                };
                match w {
                    Some(w) => Value::verdict(format!("NOT-EQUIV witness: {w}")),
                    None => Value::verdict("NOT-EQUIV"),
                }
            }
        })
    }

    fn arg(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<Value, WorkbenchError> {
        let e = a
            .exprs
            .get(i)
            .ok_or_else(|| cmd_err(format!("{}: missing argument {}", a.head, i + 1)))?;
        Ok(match self.eval_expr(e, warnings)? {
            Value::Verdict { carried: Some(v), .. } => *v,
            v => v,
        })
    }

    fn code(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<PrefixCode, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Code(c) => Ok(c),
            Value::Verdict { line, .. } if line.chars().all(|c| c == '0' || c == '1') || line == "eps" => {
                // a lone word is the one-member code
                Ok(PrefixCode::finite([line.parse::<Word>().map_err(lift_err)?]).map_err(lift_err)?)
            }
            other => Err(a.type_err(i, "a code", &other)),
        }
    }

    fn morph(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<FiniteMorphism, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Morph(f) => Ok(f),
            Value::Trans(m) => m
                .to_finite()
                .ok_or_else(|| cmd_err(format!("{}: argument {} has an infinite domain code", a.head, i + 1))),
            other => Err(a.type_err(i, "a finite morphism", &other)),
        }
    }

    fn trans(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<TransducerMorphism, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Trans(m) => Ok(m),
            Value::Morph(f) => Ok(TransducerMorphism::lift(&f)),
            other => Err(a.type_err(i, "a transducer", &other)),
        }
    }

    fn end(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<UpEnd, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::End(e) => Ok(e),
            other => Err(a.type_err(i, "an end u(v)", &other)),
        }
    }

    fn word(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<Word, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Word(w) => Ok(w),
            Value::Verdict { line, .. } => line.parse::<Word>().map_err(lift_err),
            other => Err(a.type_err(i, "a word", &other)),
        }
    }

    fn number(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<u128, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Number(n) => Ok(n),
            Value::Verdict { line, .. } => line
                .parse::<u128>()
                .map_err(|_| cmd_err(format!("{}: argument {} must be a number, got {line}", a.head, i + 1))),
            other => Err(a.type_err(i, "a number", &other)),
        }
    }

    fn bound(&mut self, a: &Args, i: usize, warnings: &mut Vec<String>) -> Result<BoundFunction, WorkbenchError> {
        match self.arg(a, i, warnings)? {
            Value::Bound(b) => Ok(b),
            Value::Verdict { line, .. } => match line.parse::<u64>() {
                Ok(c) => Ok(BoundFunction::constant(c)),
                Err(_) => Err(cmd_err(format!("{}: bad bound {line}", a.head))),
            },
            other => Err(a.type_err(i, "a bound", &other)),
        }
    }
}

impl Args<'_> {
    fn arity(&self, n: usize) -> Result<(), WorkbenchError> {
        self.arity_range(n, n)
    }

    fn arity_range(&self, lo: usize, hi: usize) -> Result<(), WorkbenchError> {
        let n = self.exprs.len();
        if n < lo || n > hi {
            let want = if lo == hi {
                lo.to_string()
            } else {
                format!("{lo} to {hi}")
            };
            return Err(cmd_err(format!("{} expects {want} arguments, got {n}", self.head)));
        }
        Ok(())
    }

    fn type_err(&self, i: usize, want: &str, got: &Value) -> WorkbenchError {
        cmd_err(format!(
            "{}: argument {} must be {want}, got {}",
            self.head,
            i + 1,
            got.kind()
        ))
    }
}

/// Re-renders parsed arguments as source text.
fn render_exprs(exprs: &[Expr]) -> String {
    exprs.iter().map(render_expr).collect::<Vec<_>>().join(" ")
}

fn render_expr(e: &Expr) -> String {
    match e {
        Expr::Atom(a) => a.clone(),
        Expr::Braces(b) => format!("{{{b}}}"),
        Expr::Regex(r) => format!("/{r}/"),
        Expr::Code(inner) => format!("code {}", render_expr(inner)),
        Expr::Morph(s) => format!("morph {}", render_source(s)),
        Expr::Trans(s) => format!("trans {}", render_source(s)),
        Expr::Sub(st) => format!("({} {})", st.head, render_exprs(&st.args)),
    }
}

fn render_source(s: &Source) -> String {
    match s {
        Source::Inline(b) => format!("{{{b}}}"),
        Source::File(p) => format!("@{p}"),
    }
}
