//! Computations with the monoid of subadditive functions on a finite group.
//!
//! A function `r: G → ℕ` with `r(1) = 0` and `r(στ) ≤ r(σ) + r(τ)` gives an
//! idempotent weak 2-cocycle (supported where the defect
//! `r(σ) + r(τ) − r(στ)` vanishes), a valued cocycle `u(σ)^r(τ) π^defect`, and
//! a partial order on the cosets of its zero set. This crate builds those
//! objects over Cayley-table groups, with field values modeled as formal
//! monomials (unit word times a power of the uniformizer), and checks every
//! construction exhaustively.
//!
//! Modules:
//! - [`group`]: tables, subgroups, cosets, quotients, BFS word length.
//! - [`slg`]: subadditive functions and their transforms.
//! - [`cocycle`]: idempotent and valued cocycles, decomposition, partners,
//!   restriction, inflation and deflation.
//! - [`order`]: coset posets, Hasse diagrams, DOT output.
//! - [`format`]: JSON file formats and table printing.
//! - [`suite`]: the exhaustive property suite behind `slg check all`.

// Cayley-table code indexes several tables by the same element index.
#![allow(clippy::needless_range_loop)]

pub mod cocycle;
pub mod format;
pub mod group;
pub mod lattice;
pub mod order;
pub mod slg;
pub mod suite;

pub use cocycle::{
    CoboundarySeed, CocycleError, IdempotentCocycle, UnitRelations, UnitSymbol, UnitTag, UnitWord,
    ValuedCocycle, ValuedEntry, ValuedMonomial,
};
pub use group::{
    CosetSpace, FactorizationTree, FiniteGroup, GroupError, GroupSpec, Quotient, Subgroup,
};
pub use order::{CosetPoset, HasseDiagram, OrderError};
pub use slg::{DefectTable, SlgError, SubadditiveFn};
