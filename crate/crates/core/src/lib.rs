//! Finite semigroup structure theory on Cayley tables.
//!
//! - [`semigroup`]: verified Cayley tables, powers, idempotents, and
//!   closure of transformation generators.
//! - [`structure`]: principal ideals, simplicity, the natural order on
//!   idempotents, complete simplicity, and maximal subgroups `eSe`.
//! - [`rees`]: Rees matrix semigroups `[X, H, Y]_σ`, the decomposition of
//!   a completely simple semigroup at an idempotent, and its verification.
//! - [`bicyclic`]: normal-form arithmetic in the bicyclic monoid.
//! - [`zoo`]: standard and seeded random test semigroups.
//! - [`cli`]: JSON file formats and the command pipeline behind the
//!   `paragroup` binary.

pub mod bicyclic;
pub mod cli;
pub mod rees;
pub mod semigroup;
pub mod structure;
pub mod zoo;

pub use rees::{ReesDecomposition, ReesMatrixSemigroup, ReesTriple};
pub use semigroup::{validate_table, CayleyTable, Element, FiniteSemigroup, Transformation};
pub use structure::{Group, MaximalSubgroup};
