//! Weak 2-cocycles: idempotent tables, symbolic valued tables, and the maps
//! between them.

mod idempotent;
mod inflation;
mod unit;
mod valued;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::lattice::LatticeError;
use crate::slg::SlgError;

pub use idempotent::IdempotentCocycle;
pub use inflation::{deflate_idempotent, inflate_idempotent};
pub use unit::{UnitRelations, UnitSymbol, UnitTag, UnitWord};
pub use valued::{
    br_from_r, coboundary_from_seed, epsilon_table, CoboundarySeed, ValuedCocycle, ValuedEntry,
    ValuedMonomial, VerifyLevel,
};

/// One failed instance of the normalization or cocycle identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum CocycleViolation {
    /// `f(1,τ)` or `f(σ,1)` is not 1.
    Normalization { s: usize, t: usize },
    /// One side of the identity is zero and the other is not.
    ZeroPattern { s: usize, t: usize, r: usize },
    /// Exponents of the two sides differ.
    Valuation { s: usize, t: usize, r: usize },
    /// Exponents agree but unit words differ modulo the relations.
    Unit { s: usize, t: usize, r: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("table must be {order}×{order}")]
    ShapeMismatch { order: usize },
    #[error("not a cocycle: {} violation(s), first {:?}", .0.len(), .0.first())]
    NotACocycle(Vec<CocycleViolation>),
    #[error("inertial set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("cocycles live on different groups")]
    GroupMismatch,
    #[error("unit symbol refers to an element outside the group")]
    SymbolOutOfRange,
    #[error("unit symbol refers to an element outside the subgroup")]
    SymbolOutsideSubgroup,
    #[error("seed value at the identity must be 1")]
    SeedNotNormalized,
    #[error("value at ({s},{t}) is not in S*")]
    NotIntegral { s: usize, t: usize },
    #[error("value at ({s},{t}) is zero")]
    ZeroEntry { s: usize, t: usize },
    #[error("coboundary value at ({s},{t}) has exponent {exp} < 0")]
    NotIntegralOutput { s: usize, t: usize, exp: i64 },
    #[error("exponent {0} out of range")]
    ExponentOverflow(i64),
    #[error("v(f(σ,σ^-1)) differs from v(f(σ^-1,σ)) at σ = {s}")]
    SymmetryFailure { s: usize },
    #[error("r_f is not subadditive: {0}")]
    SubadditivityFailure(SlgError),
    #[error("cocycle carries no seed; decomposition needs one")]
    MissingSeed,
    #[error("not decomposable: {0}")]
    NotDecomposable(String),
    #[error("normal subgroup is not inside the inertial group; missing {missing:?}")]
    NotInInertialGroup { missing: Vec<usize> },
    #[error("value at ({s},{t}) differs from ({s2},{t2}) in the same coset pair")]
    WellDefinednessFailure {
        s: usize,
        t: usize,
        s2: usize,
        t2: usize,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Slg(#[from] SlgError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The subgroup as a standalone group, elements in member order.
pub(crate) fn subgroup_as_group(m: &Subgroup) -> Result<Arc<FiniteGroup>, CocycleError> {
    let g = m.group();
    let members = m.members();
    let pos = |x: usize| members.binary_search(&x).expect("closed under products");
    let table = members
        .iter()
        .map(|&a| members.iter().map(|&b| pos(g.mul(a, b))).collect())
        .collect();
    let labels = m.labels().into_iter().map(String::from).collect();
    let name = format!("{{{}}} ≤ {}", m.labels().join(","), g.name());
    Ok(Arc::new(FiniteGroup::from_table(name, labels, table)?))
}
