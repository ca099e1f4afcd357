//! Subadditive functions `r: G → ℕ` with `r(1) = 0`, and the transforms that
//! produce new ones: pointwise sum, bump on a double coset, ceiling half,
//! rounding up to even, and inflation from a quotient.

use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{
    canonical_factorization, double_coset, quotient_group, FiniteGroup, GroupError, Subgroup,
};

/// Enumeration refuses candidate spaces larger than this.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlgError {
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("negative values at {0:?}")]
    NegativeValue(Vec<(usize, i64)>),
    #[error("r(1) = {0}, must be 0")]
    NonzeroAtIdentity(i64),
    #[error("value {value} at {index} does not fit")]
    ValueOverflow { index: usize, value: i64 },
    #[error("not subadditive: r(στ) > r(σ) + r(τ) at {} pair(s), first (σ,τ) = {:?}", .0.len(), .0.first())]
    NotSubadditive(Vec<(usize, usize)>),
    #[error("functions live on different groups")]
    GroupMismatch,
    #[error("element {0} is not in N1(e_r)")]
    NotInN1(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("enumeration would test {candidates} candidates (cap {ENUMERATION_CAP})")]
    TooLarge { candidates: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An element of Sl(G).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubadditiveFn {
    group: Arc<FiniteGroup>,
    values: Vec<u32>,
}

/// Validate raw integer values as a subadditive function on `group`.
///
/// Every failing pair is reported, not just the first.
pub fn validate_r(group: &Arc<FiniteGroup>, values: &[i64]) -> Result<SubadditiveFn, SlgError> {
    let n = group.order();
    if values.len() != n {
        return Err(SlgError::LengthMismatch {
            expected: n,
            got: values.len(),
        });
    }
    let negative: Vec<(usize, i64)> = values
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, v)| v < 0)
        .collect();
    if !negative.is_empty() {
        return Err(SlgError::NegativeValue(negative));
    }
    if values[0] != 0 {
        return Err(SlgError::NonzeroAtIdentity(values[0]));
    }
    let values = values
        .iter()
        .enumerate()
        .map(|(index, &value)| {
            u32::try_from(value).map_err(|_| SlgError::ValueOverflow { index, value })
        })
        .collect::<Result<Vec<u32>, _>>()?;
    SubadditiveFn::new(group, values)
}

fn subadditivity_failures(group: &FiniteGroup, values: &[u32]) -> Vec<(usize, usize)> {
    let n = group.order();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if u64::from(values[group.mul(s, t)]) > u64::from(values[s]) + u64::from(values[t]) {
                out.push((s, t));
            }
        }
    }
    out
}

fn is_subadditive(group: &FiniteGroup, values: &[u32]) -> bool {
    let n = group.order();
    (0..n).all(|s| {
        (0..n).all(|t| {
            u64::from(values[group.mul(s, t)]) <= u64::from(values[s]) + u64::from(values[t])
        })
    })
}

impl SubadditiveFn {
    pub fn new(group: &Arc<FiniteGroup>, values: Vec<u32>) -> Result<Self, SlgError> {
        if values.len() != group.order() {
            return Err(SlgError::LengthMismatch {
                expected: group.order(),
                got: values.len(),
            });
        }
        if values[0] != 0 {
            return Err(SlgError::NonzeroAtIdentity(i64::from(values[0])));
        }
        let bad = subadditivity_failures(group, &values);
        if !bad.is_empty() {
            return Err(SlgError::NotSubadditive(bad));
        }
        Ok(SubadditiveFn {
            group: Arc::clone(group),
            values,
        })
    }

    /// The monoid unit.
    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        SubadditiveFn {
            group: Arc::clone(group),
            values: vec![0; group.order()],
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn value(&self, a: usize) -> u32 {
        self.values[a]
    }

    /// `r(σ) + r(τ) − r(στ)`, never negative for a valid function.
    #[inline]
    pub fn defect(&self, s: usize, t: usize) -> u32 {
        self.values[s] + self.values[t] - self.values[self.group.mul(s, t)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `M_r = {σ : r(σ) = 0}`.
    pub fn m_subgroup(&self) -> Result<Subgroup, SlgError> {
        let zeros: Vec<usize> = (0..self.values.len())
            .filter(|&i| self.values[i] == 0)
            .collect();
        Subgroup::from_members(&self.group, &zeros)
            .map_err(|e| SlgError::InternalInconsistency(format!("M_r is not a subgroup: {e}")))
    }

    pub fn add(&self, other: &SubadditiveFn) -> Result<SubadditiveFn, SlgError> {
        if self.group != other.group {
            return Err(SlgError::GroupMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SubadditiveFn {
            group: Arc::clone(&self.group),
            values,
        })
    }

    pub fn defect_table(&self) -> DefectTable {
        let n = self.group.order();
        let d = (0..n)
            .map(|s| (0..n).map(|t| self.defect(s, t)).collect())
            .collect();
        DefectTable {
            group: Arc::clone(&self.group),
            d,
        }
    }

    /// Word length over a monoid generating set.
    pub fn from_generators(
        group: &Arc<FiniteGroup>,
        generators: &[usize],
    ) -> Result<SubadditiveFn, SlgError> {
        let tree = canonical_factorization(group, generators)?;
        SubadditiveFn::new(group, tree.dist().to_vec())
    }

    /// Elements `σ` with `r(σ) > 0` that admit no factorization `σ = τρ` with
    /// `r(τ), r(ρ) > 0` and `r(σ) = r(τ) + r(ρ)`.
    pub fn n1_set(&self) -> Vec<usize> {
        let n = self.group.order();
        (0..n).filter(|&s| self.in_n1(s)).collect()
    }

    fn in_n1(&self, s: usize) -> bool {
        let g = &self.group;
        if self.values[s] == 0 {
            return false;
        }
        // σ = τ ρ  ⇔  ρ = τ^-1 σ
        !(0..g.order()).any(|t| {
            let rho = g.mul(g.inv(t), s);
            self.values[t] > 0
                && self.values[rho] > 0
                && self.values[s] == self.values[t] + self.values[rho]
        })
    }

    /// Add one on the double coset `M_r a M_r`. Requires `a ∈ N1`.
    pub fn bump(&self, a: usize) -> Result<SubadditiveFn, SlgError> {
        self.group.check_index(a)?;
        if !self.in_n1(a) {
            return Err(SlgError::NotInN1(a));
        }
        let h = self.m_subgroup()?;
        let mut values = self.values.clone();
        for x in double_coset(&h, a)? {
            values[x] += 1;
        }
        let out = SubadditiveFn::new(&self.group, values)
            .map_err(|e| SlgError::InternalInconsistency(format!("bump broke Sl(G): {e}")))?;
        self.same_m_subgroup(&out, "bump")?;
        Ok(out)
    }

    /// Ceiling of `r / 2`.
    pub fn halve(&self) -> SubadditiveFn {
        let values = self.values.iter().map(|&v| v.div_ceil(2)).collect();
        SubadditiveFn {
            group: Arc::clone(&self.group),
            values,
        }
    }

    /// Round odd values up to the next even number; equals `2 · halve(r)`.
    pub fn evenize(&self) -> SubadditiveFn {
        let values = self.values.iter().map(|&v| v + (v & 1)).collect();
        SubadditiveFn {
            group: Arc::clone(&self.group),
            values,
        }
    }

    fn same_m_subgroup(&self, other: &SubadditiveFn, op: &str) -> Result<(), SlgError> {
        let a = self.values.iter().map(|&v| v == 0);
        let b = other.values.iter().map(|&v| v == 0);
        if a.eq(b) {
            Ok(())
        } else {
            Err(SlgError::InternalInconsistency(format!("{op} changed M_r")))
        }
    }

    /// Check the closed-form transforms against the validator. Used by the
    /// property suite; `halve` and `evenize` are subadditive by construction.
    pub fn checked_halve(&self) -> Result<SubadditiveFn, SlgError> {
        let h = self.halve();
        SubadditiveFn::new(&self.group, h.values.clone())?;
        self.same_m_subgroup(&h, "halve")?;
        Ok(h)
    }

    pub fn checked_evenize(&self) -> Result<SubadditiveFn, SlgError> {
        let e = self.evenize();
        SubadditiveFn::new(&self.group, e.values.clone())?;
        self.same_m_subgroup(&e, "evenize")?;
        Ok(e)
    }
}

/// Lift `r_q` on `G/N` to `G` by `r̂(σ) = r_q(σN)`.
pub fn inflate_r(normal: &Subgroup, r_q: &SubadditiveFn) -> Result<SubadditiveFn, SlgError> {
    let q = quotient_group(normal)?;
    if **r_q.group() != **q.group() {
        return Err(SlgError::GroupMismatch);
    }
    let parent = q.parent();
    let values = (0..parent.order())
        .map(|x| r_q.value(q.project(x)))
        .collect();
    let lifted = SubadditiveFn::new(parent, values)
        .map_err(|e| SlgError::InternalInconsistency(format!("inflation broke Sl(G): {e}")))?;
    let expected = q.preimage(&r_q.m_subgroup()?)?;
    if lifted.m_subgroup()? != expected {
        return Err(SlgError::InternalInconsistency(
            "inflated M_r is not the preimage of the quotient M_r".into(),
        ));
    }
    Ok(lifted)
}

/// Every element of Sl(G) with values in `0..=maxval`, in lexicographic order
/// of `(r(g_1), …, r(g_{n-1}))`.
pub fn enumerate_slg(
    group: &Arc<FiniteGroup>,
    maxval: u32,
) -> Result<Vec<SubadditiveFn>, SlgError> {
    let n = group.order();
    let base = u128::from(maxval) + 1;
    let candidates = base.checked_pow((n - 1) as u32).unwrap_or(u128::MAX);
    if candidates > u128::from(ENUMERATION_CAP) {
        return Err(SlgError::TooLarge { candidates });
    }
    let base = base as u64;
    let total = candidates as u64;
    let found: Vec<Vec<u32>> = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut values = vec![0u32; n];
            let mut c = code;
            for slot in values[1..].iter_mut().rev() {
                *slot = (c % base) as u32;
                c /= base;
            }
            is_subadditive(group, &values).then_some(values)
        })
        .collect();
    Ok(found
        .into_iter()
        .map(|values| SubadditiveFn {
            group: Arc::clone(group),
            values,
        })
        .collect())
}

/// The matrix of defects `r(σ) + r(τ) − r(στ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectTable {
    group: Arc<FiniteGroup>,
    d: Vec<Vec<u32>>,
}

impl DefectTable {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.d[s][t]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.d
    }

    /// Triples where `d(σ,τ) + d(στ,ρ) ≠ d(τ,ρ) + d(σ,τρ)`. Always empty for
    /// a table built from a function.
    pub fn telescoping_failures(&self) -> Vec<(usize, usize, usize)> {
        let g = &self.group;
        let n = g.order();
        let mut out = Vec::new();
        for s in 0..n {
            for t in 0..n {
                let st = g.mul(s, t);
                for r in 0..n {
                    let lhs = self.d[s][t] + self.d[st][r];
                    let rhs = self.d[t][r] + self.d[s][g.mul(t, r)];
                    if lhs != rhs {
                        out.push((s, t, r));
                    }
                }
            }
        }
        out
    }

    /// Positions of zero defect, i.e. the support of `e_r`.
    pub fn zero_pattern(&self) -> BTreeSet<(usize, usize)> {
        let n = self.d.len();
        (0..n)
            .flat_map(|s| (0..n).map(move |t| (s, t)))
            .filter(|&(s, t)| self.d[s][t] == 0)
            .collect()
    }
}
