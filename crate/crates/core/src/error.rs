use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid algebra: {0}")]
    InvalidSpec(String),
    #[error(
        "unit axiom violated at (i={i},j={j},k={k}): constant is {value}, expected {expected}"
    )]
    UnitAxiom {
        i: usize,
        j: usize,
        k: usize,
        value: Box<Rational>,
        expected: Box<Rational>,
    },
    #[error("operands belong to different algebras")]
    SpecMismatch,
    #[error("expected {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("slot {slot} out of range for a {arity}-linear map")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("requires associative algebra ({0} is not associative)")]
    NonAssociative(String),
    #[error("requires algebra with conjugation ({0} fails the conjugation check)")]
    NoConjugation(String),

    #[error("unknown catalog algebra {0:?}")]
    UnknownCatalogKey(String),
    #[error("algebra file: {0}")]
    File(String),

    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown symbol {name:?} at {pos}")]
    UnknownSymbol { name: String, pos: usize },
    #[error("{name} takes {expected} argument(s), got {found} (at {pos})")]
    CallArity {
        name: String,
        expected: usize,
        found: usize,
        pos: usize,
    },
    #[error("{call} used on {algebra}, which fails the conjugation check")]
    ConjugationGuard { call: String, algebra: String },
}
