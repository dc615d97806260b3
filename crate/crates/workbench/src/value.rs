//! Values bound in a session, and their printed forms.
//!
//! Every object prints in a form the script parser reads back:
//! codes as `{ ... }` or `/re/`, morphisms as `morph { ... }`, machines as
//! `trans { ... }`, ends as `u(v)`, rank bijections as `rankbij P Q`.

use std::fmt;

use rim_core::codes::BoundFunction;
use rim_core::transducer::PointwiseMorphism;
use rim_core::{FiniteMorphism, PrefixCode, TransducerMorphism, UpEnd, Word};

#[derive(Debug, Clone)]
pub enum Value {
    Code(PrefixCode),
    Morph(FiniteMorphism),
    Trans(TransducerMorphism),
    End(UpEnd),
    Word(Word),
    Number(u128),
    Bound(BoundFunction),
    Pointwise(PointwiseMorphism),
    /// A verdict line, optionally carrying the object it describes (e.g.
    /// the normal form produced by `normalize`).
    Verdict {
        line: String,
        carried: Option<Box<Value>>,
    },
    List(Vec<Value>),
}

impl Value {
    pub fn verdict(line: impl Into<String>) -> Value {
        Value::Verdict {
            line: line.into(),
            carried: None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Value::Code(_) => "code",
            Value::Morph(_) => "morphism",
            Value::Trans(_) => "transducer",
            Value::End(_) => "end",
            Value::Word(_) => "word",
            Value::Number(_) => "number",
            Value::Bound(_) => "bound",
            Value::Pointwise(_) => "rank bijection",
            Value::Verdict { .. } => "verdict",
            Value::List(_) => "list",
        }
    }
}

/// One-line inline form of a machine.
pub fn inline_machine(m: &TransducerMorphism) -> String {
    let text = m.to_text();
    let body: Vec<&str> = text.lines().skip(1).collect();
    format!("trans {{ {} }}", body.join("; "))
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Code(c) => write!(f, "{c}"),
            Value::Morph(m) => write!(f, "morph {m}"),
            Value::Trans(m) => f.write_str(&inline_machine(m)),
            Value::End(e) => write!(f, "{e}"),
            Value::Word(w) => write!(f, "{w}"),
            Value::Number(n) => write!(f, "{n}"),
            Value::Bound(b) => write!(f, "{b}"),
            Value::Pointwise(p) => write!(f, "rankbij {} {}", p.domain_code(), p.codomain_code()),
            Value::Verdict { line, .. } => f.write_str(line),
            Value::List(items) => {
                let lines: Vec<String> = items.iter().map(Value::to_string).collect();
                f.write_str(&lines.join("\n"))
            }
        }
    }
}
