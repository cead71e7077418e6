//! Finite lattices, their congruences, and the pruned-product and
//! cubic-extension constructions used to build isoform lattices.
//!
//! * [`lattice`] holds the [`FiniteLattice`] type, catalog lattices,
//!   products, intervals, isomorphism and Birkhoff duality.
//! * [`congruence`] enumerates congruence lattices and decides regularity,
//!   uniformity, isoformity, permutability and related predicates.
//! * [`constructions`] builds `N(A, B)`, pruned poset products, cubic
//!   extensions and the distributive-to-isoform representation, verifying
//!   each result rather than trusting it.

pub mod bits;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod lattice;
pub mod limits;

pub use error::{Error, Result};
pub use lattice::{Embedding, FiniteLattice, Poset};
pub use limits::Limits;
