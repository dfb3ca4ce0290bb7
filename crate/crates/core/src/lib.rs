//! Computations with numerical semigroups.
//!
//! The crate is organized by topic:
//!
//! - [`semigroup`]: the [`NumericalSemigroup`] type, membership, Apéry lists,
//!   Frobenius number, genus, pseudo-Frobenius numbers.
//! - [`classify`]: special gaps, oversemigroups, symmetric / pseudo-symmetric /
//!   irreducible tests, decomposition into irreducibles, MED and free semigroups.
//! - [`presentations`]: factorizations, R-classes, Betti elements, minimal
//!   presentations and their binomials.
//! - [`invariants`]: lengths, elasticity, Delta sets, catenary degree, ω-primality.
//! - [`enumerate`]: semigroups by genus or Frobenius number.
//! - [`curves`]: characteristic sequences of plane branches and δ-sequences.
//! - [`cli`]: the `nsgps` command line front end.

pub mod classify;
pub mod cli;
pub mod curves;
pub mod enumerate;
pub mod error;
pub mod invariants;
pub mod presentations;
pub mod semigroup;

pub use error::{Error, Result};
pub use semigroup::{AperyList, NotableElements, NumericalSemigroup};
