//! Exact-arithmetic kernel for algebras spanned by two idempotents.
//!
//! The crate models the finite-dimensional algebras generated by a pair of
//! idempotents `p`, `q` whose alternating products eventually collapse. It
//! provides:
//!
//! * alternating words and their presentations ([`word`], [`pres`]),
//! * sparse elements and certified multiplication tables ([`element`], [`table`]),
//! * exact rational matrices and concrete matrix models ([`matrix`], [`models`]),
//! * Drazin and group inverses, both generic and in closed form ([`drazin`]),
//! * group-invertibility classifiers with spectra and index bounds ([`classify`]).
//!
//! All arithmetic is exact over the rationals; no floating point anywhere.
//! The crate is `no_std` (with `alloc`); serialization and command-line
//! plumbing live in the companion CLI crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod drazin;
pub mod element;
pub mod error;
pub mod matrix;
pub mod models;
pub mod poly;
pub mod pres;
pub mod table;
pub mod word;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
