//! Exact scalar and linear algebra over the rationals and prime fields.
//!
//! Dense [`Matrix`] carries the canonical rref and solver; the sparse
//! [`RowSpace`] and [`LinearMap`] types back every span computation in the
//! rest of the crate, and agree with the dense routines by construction.

mod matrix;
mod scalar;
mod sparse;

pub use matrix::{Matrix, Rref};
pub use scalar::{Field, FieldKind, Scalar};
pub(crate) use sparse::accumulate as accumulate_into;
pub use sparse::{LinearMap, RowSpace, SparseVec};
