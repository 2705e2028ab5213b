//! Error type shared across the kernel.

use alloc::string::String;
use core::fmt;

use crate::word::Word;

/// Everything that can go wrong inside the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two elements (or an element and a model) belong to different presentations.
    PresentationMismatch,
    /// The structure-table certification found a non-associative triple.
    AssociativityViolation(Word, Word, Word),
    /// A parameter was outside its documented domain.
    ParameterError(String),
    /// A closed-form theorem was invoked on inputs that do not satisfy its hypothesis.
    HypothesisViolation(String),
    /// A claimed one-sided Drazin witness failed its defining equation.
    WitnessInvalid(String),
    /// A documented precondition of an operation was violated by the caller.
    PreconditionViolation(String),
    /// A model could not be built as requested.
    ConstructionFailure(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PresentationMismatch => write!(f, "operands belong to different presentations"),
            Error::AssociativityViolation(u, v, w) => {
                write!(f, "associativity fails on the triple ({u}, {v}, {w})")
            }
            Error::ParameterError(msg) => write!(f, "parameter error: {msg}"),
            Error::HypothesisViolation(msg) => write!(f, "hypothesis violation: {msg}"),
            Error::WitnessInvalid(msg) => write!(f, "invalid witness: {msg}"),
            Error::PreconditionViolation(msg) => write!(f, "precondition violation: {msg}"),
            Error::ConstructionFailure(msg) => write!(f, "construction failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
