use std::sync::Arc;

use crate::group::{FiniteGroup, Subgroup};
use crate::slg::SubadditiveFn;

use super::{CocycleError, CocycleViolation};

/// A `{0,1}`-valued weak 2-cocycle. Construction checks only the shape;
/// call [`IdempotentCocycle::verify`] for the cocycle identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentCocycle {
    group: Arc<FiniteGroup>,
    values: Vec<Vec<bool>>,
}

impl IdempotentCocycle {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<Vec<bool>>) -> Result<Self, CocycleError> {
        let n = group.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(CocycleError::ShapeMismatch { order: n });
        }
        Ok(IdempotentCocycle {
            group: Arc::clone(group),
            values,
        })
    }

    /// The constant cocycle 1.
    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        IdempotentCocycle {
            group: Arc::clone(group),
            values: vec![vec![true; n]; n],
        }
    }

    /// `e_r(σ,τ) = 1` iff `r(στ) = r(σ) + r(τ)`.
    pub fn from_r(r: &SubadditiveFn) -> Self {
        let g = r.group();
        let n = g.order();
        let values = (0..n)
            .map(|s| (0..n).map(|t| r.defect(s, t) == 0).collect())
            .collect();
        IdempotentCocycle {
            group: Arc::clone(g),
            values,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn get(&self, s: usize, t: usize) -> bool {
        self.values[s][t]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.values
    }

    /// Copy with one cell replaced.
    pub fn with_entry(&self, s: usize, t: usize, v: bool) -> Self {
        let mut out = self.clone();
        out.values[s][t] = v;
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|r| r.iter().all(|&v| v))
    }

    /// Normalization and the cocycle identity on all `n³` triples. The
    /// Galois action fixes 0 and 1, so the identity is plain multiplication.
    pub fn verify(&self) -> Vec<CocycleViolation> {
        let g = &self.group;
        let n = g.order();
        let mut out = Vec::new();
        for j in 0..n {
            if !self.values[0][j] {
                out.push(CocycleViolation::Normalization { s: 0, t: j });
            }
            if j != 0 && !self.values[j][0] {
                out.push(CocycleViolation::Normalization { s: j, t: 0 });
            }
        }
        for s in 0..n {
            for t in 0..n {
                let st = g.mul(s, t);
                for r in 0..n {
                    let lhs = self.values[s][t] && self.values[st][r];
                    let rhs = self.values[t][r] && self.values[s][g.mul(t, r)];
                    if lhs != rhs {
                        out.push(CocycleViolation::ZeroPattern { s, t, r });
                    }
                }
            }
        }
        out
    }

    pub fn require_valid(&self) -> Result<(), CocycleError> {
        let v = self.verify();
        if v.is_empty() {
            Ok(())
        } else {
            Err(CocycleError::NotACocycle(v))
        }
    }

    /// `H(e) = {σ : e(σ, σ^-1) = 1}`.
    pub fn inertial_group(&self) -> Result<Subgroup, CocycleError> {
        let g = &self.group;
        let members: Vec<usize> = (0..g.order())
            .filter(|&s| self.values[s][g.inv(s)])
            .collect();
        Subgroup::from_members(g, &members).map_err(|e| CocycleError::NotASubgroup(e.to_string()))
    }

    /// Restriction to a subgroup, re-indexed to the subgroup's own table.
    pub fn restrict(&self, m: &Subgroup) -> Result<IdempotentCocycle, CocycleError> {
        if **m.group() != *self.group {
            return Err(CocycleError::GroupMismatch);
        }
        let sub = super::subgroup_as_group(m)?;
        let values = m
            .members()
            .iter()
            .map(|&s| m.members().iter().map(|&t| self.values[s][t]).collect())
            .collect();
        Ok(IdempotentCocycle { group: sub, values })
    }
}
