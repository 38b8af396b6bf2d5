//! Exact integer linear algebra: Smith normal form and invariant factors of
//! finitely presented abelian groups.
//!
//! Everything here is generic over [`IntScalar`]; callers that need exact
//! answers use [`num_bigint::BigInt`] (see [`crate::IntMatrix`]).

mod abelian;
mod matrix;
pub mod modp;
mod snf;
mod sparse;

pub use abelian::{abelian_invariants, p_adic_log, AbelianInvariants};
pub use matrix::{IntScalar, Matrix};
pub use snf::{smith_normal_form, SmithForm};
pub use sparse::{sparse_smith_form, SparseRow};
