//! Algebra of right-ideal morphisms of `{0,1}*`.
//!
//! The crate is layered bottom-up:
//!
//! * [`word`]: binary words, prefix and length-lexicographic orders, block encoding;
//! * [`automata`]: complete minimal DFAs, the regular-language engine;
//! * [`codes`]: prefix codes, end-equivalence, bounded end-equivalence, puncture, rank;
//! * [`morphism`]: finite-table morphisms (the Thompson–Higman monoid and group V);
//! * [`transducer`]: morphisms with regular domain codes given by subsequential machines;
//! * [`cantor`]: the action on ultimately periodic infinite words.

// automata code indexes transition rows by letter throughout
#![allow(clippy::needless_range_loop)]

pub mod automata;
pub mod cantor;
pub mod codes;
pub mod morphism;
pub mod transducer;
pub mod word;

pub use automata::{compile_regex, Dfa};
pub use cantor::UpEnd;
pub use codes::{BoundFunction, PrefixCode};
pub use morphism::FiniteMorphism;
pub use transducer::TransducerMorphism;
pub use word::{w, Word};
