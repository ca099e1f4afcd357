use crate::group::{quotient_group, FiniteGroup, Subgroup};

use super::{CocycleError, IdempotentCocycle};

/// `e(σ,τ) = ε(σN, τN)`. `eps` must live on `G/N` as built by
/// [`quotient_group`].
pub fn inflate_idempotent(
    eps: &IdempotentCocycle,
    normal: &Subgroup,
) -> Result<IdempotentCocycle, CocycleError> {
    let q = quotient_group(normal)?;
    if **q.group() != **eps.group() {
        return Err(CocycleError::GroupMismatch);
    }
    let g = normal.group();
    let n = g.order();
    let values = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| eps.get(q.project(s), q.project(t)))
                .collect()
        })
        .collect();
    IdempotentCocycle::new(g, values)
}

/// The cocycle `ε` on `G/N` with `e = inflate(ε)`. It exists exactly when
/// `N` lies in the inertial group of `e`.
pub fn deflate_idempotent(
    e: &IdempotentCocycle,
    normal: &Subgroup,
) -> Result<IdempotentCocycle, CocycleError> {
    let g: &FiniteGroup = e.group();
    if **normal.group() != *g {
        return Err(CocycleError::GroupMismatch);
    }
    normal.require_normal()?;
    let h = e.inertial_group()?;
    let missing: Vec<usize> = normal
        .members()
        .iter()
        .copied()
        .filter(|&x| !h.contains(x))
        .collect();
    if !missing.is_empty() {
        return Err(CocycleError::NotInInertialGroup { missing });
    }
    let q = quotient_group(normal)?;
    let cosets = q.cosets();
    let m = cosets.len();
    let mut values = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            let (s, t) = (cosets.rep(i), cosets.rep(j));
            let v = e.get(s, t);
            for &s2 in cosets.members(i) {
                for &t2 in cosets.members(j) {
                    if e.get(s2, t2) != v {
                        return Err(CocycleError::WellDefinednessFailure { s, t, s2, t2 });
                    }
                }
            }
            values[i][j] = v;
        }
    }
    IdempotentCocycle::new(q.group(), values)
}
