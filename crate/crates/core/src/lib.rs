//! Schur multipliers and structural invariants of finite p-groups given by
//! power-commutator presentations.
//!
//! The [`pcgroup`] module does group arithmetic, [`multiplier`] computes
//! `M(G)` from central tails (with a bar-resolution cross-check), [`bounds`]
//! evaluates the known upper bounds and structural conditions on `|M(G)|`,
//! and [`catalog`] builds the named groups.

pub mod error;
pub mod intlinalg;
pub mod multiplier;
pub mod bounds;
pub mod catalog;
pub mod pcgroup;

pub use error::{Error, Result};
pub use intlinalg::{AbelianInvariants, Matrix};
pub use pcgroup::{PcElement, PcPresentation, SubgroupBasis};

/// Exact integer matrix.
pub type IntMatrix = Matrix<num_bigint::BigInt>;
/// Machine-word matrix, for callers that know their entries stay small.
pub type SmallIntMatrix = Matrix<i64>;
