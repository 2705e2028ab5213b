//! Library half of the command-line front end.
//!
//! Everything the binary does lives here so the acceptance tests can call
//! the same code paths directly: deterministic sampling, JSON schemas,
//! report assembly, and the verification suites.

pub mod report;
pub mod rng;
pub mod schema;
pub mod suites;

use idempair_core::Error;

/// Process exit code for a kernel error: input problems exit 2, violated
/// closed-form hypotheses exit 3, everything else is a failed check.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::HypothesisViolation(_) => 3,
        Error::ParameterError(_)
        | Error::PresentationMismatch
        | Error::PreconditionViolation(_) => 2,
        Error::WitnessInvalid(_)
        | Error::ConstructionFailure(_)
        | Error::AssociativityViolation(_, _, _) => 1,
    }
}
