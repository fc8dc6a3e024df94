//! Exact computations with finite-dimensional, not necessarily associative
//! algebras: descending series, multiplication algebras, quasiinverses,
//! induced maps on surjections, and truncated free algebras with monomial
//! relations.
//!
//! Everything runs over `Q` or a prime field with exact arithmetic. The
//! `examples/` directory has one runnable program per capability, and the
//! `nilplab` binary wraps the same surface for JSON algebra files.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod freetrunc;
pub mod morphism;
pub mod multiplication;
pub mod scenarios;

pub use error::{Error, Result};
