//! Finite models and Hilbert calculi for subresiduated lattices and their
//! implicative subreducts.
//!
//! Algebras are small and explicit: carriers are `0..n` and every operation
//! is a lookup table. On top of that the crate provides class membership
//! checks, the pair construction `a → b = max{d ∈ D : d ∧ a ≤ b}`, filter
//! representations, a formula language with proof checking for the calculi
//! R4, R4*, R4† and R4⁺, countermodel search and finite-model shrinking.

use std::collections::BTreeSet;

pub mod algebra;
pub mod calculi;
pub mod classes;
pub mod enumerate;
pub mod filters;
pub mod fixtures;
pub mod io;
pub mod order;
pub mod pair;
pub mod semantics;
pub mod suite;
pub mod syntax;

/// Index of a carrier element.
pub type Elem = usize;

/// A set of carrier elements, ordered for deterministic output.
pub type ElemSet = BTreeSet<Elem>;

pub use algebra::{AlgebraError, FiniteAlgebra, Signature};
pub use classes::{ClassTag, ClassVerdict, Violation};
pub use order::{FiniteLattice, FinitePoset, OrderError, UpsetCaps};
pub use pair::{AlgebraPair, PairError};
pub use syntax::{Formula, ParseError};

/// Size caps for the exhaustive constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier enumerated for the implication-only classes.
    pub enum_implicative: usize,
    /// Largest carrier enumerated for classes with a lattice backbone.
    pub enum_lattice: usize,
    /// Largest carrier whose filters are enumerated by subset scan.
    pub filter_carrier: usize,
    pub upsets: UpsetCaps,
    /// Deepest iteration of the bounded proof search.
    pub search_depth: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_implicative: 4,
            enum_lattice: 5,
            filter_carrier: 6,
            upsets: UpsetCaps::default(),
            search_depth: 4,
        }
    }
}
