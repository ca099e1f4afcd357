//! Cocycles with values in `S*` (or `L`), modeled as `unit word · π^k`.

use std::sync::Arc;

use crate::group::{FiniteGroup, Subgroup};
use crate::slg::SubadditiveFn;

use super::unit::{UnitRelations, UnitSymbol, UnitTag, UnitWord};
use super::{CocycleError, CocycleViolation};

/// `unit · π^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ValuedMonomial {
    pub unit: UnitWord,
    pub exp: i64,
}

impl ValuedMonomial {
    pub fn one() -> Self {
        ValuedMonomial::default()
    }

    pub fn new(unit: UnitWord, exp: i64) -> Self {
        ValuedMonomial { unit, exp }
    }

    pub fn pi_pow(exp: i64) -> Self {
        ValuedMonomial {
            unit: UnitWord::one(),
            exp,
        }
    }

    pub fn mul(&self, other: &ValuedMonomial) -> ValuedMonomial {
        ValuedMonomial {
            unit: self.unit.mul(&other.unit),
            exp: self.exp + other.exp,
        }
    }

    pub fn inv(&self) -> ValuedMonomial {
        ValuedMonomial {
            unit: self.unit.inv(),
            exp: -self.exp,
        }
    }

    /// `σ(w · π^k) = σ(w) · u(σ)^k · π^k`.
    pub fn act(&self, s: usize, group: &FiniteGroup) -> ValuedMonomial {
        let mut unit = self.unit.act(s, group);
        unit.push(UnitSymbol::u(s), self.exp);
        ValuedMonomial {
            unit,
            exp: self.exp,
        }
    }

    pub fn is_one(&self) -> bool {
        self.exp == 0 && self.unit.is_one()
    }
}

/// A cocycle value: zero (weak cocycles into `L`) or a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ValuedEntry {
    Zero,
    Value(ValuedMonomial),
}

impl ValuedEntry {
    pub fn one() -> Self {
        ValuedEntry::Value(ValuedMonomial::one())
    }

    pub fn mul(&self, other: &ValuedEntry) -> ValuedEntry {
        match (self, other) {
            (ValuedEntry::Value(a), ValuedEntry::Value(b)) => ValuedEntry::Value(a.mul(b)),
            _ => ValuedEntry::Zero,
        }
    }

    pub fn act(&self, s: usize, group: &FiniteGroup) -> ValuedEntry {
        match self {
            ValuedEntry::Zero => ValuedEntry::Zero,
            ValuedEntry::Value(m) => ValuedEntry::Value(m.act(s, group)),
        }
    }

    pub fn exp(&self) -> Option<i64> {
        match self {
            ValuedEntry::Zero => None,
            ValuedEntry::Value(m) => Some(m.exp),
        }
    }

    pub fn monomial(&self) -> Option<&ValuedMonomial> {
        match self {
            ValuedEntry::Zero => None,
            ValuedEntry::Value(m) => Some(m),
        }
    }
}

/// A function `a: G → S*` with `a(1) = 1`, the input of a coboundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoboundarySeed {
    group: Arc<FiniteGroup>,
    values: Vec<ValuedMonomial>,
}

impl CoboundarySeed {
    pub fn new(
        group: &Arc<FiniteGroup>,
        values: Vec<ValuedMonomial>,
    ) -> Result<Self, CocycleError> {
        if values.len() != group.order() {
            return Err(CocycleError::ShapeMismatch {
                order: group.order(),
            });
        }
        if !values[0].is_one() {
            return Err(CocycleError::SeedNotNormalized);
        }
        if values.iter().any(|m| !m.unit.in_range(group.order())) {
            return Err(CocycleError::SymbolOutOfRange);
        }
        Ok(CoboundarySeed {
            group: Arc::clone(group),
            values,
        })
    }

    /// `a_r(σ) = π^r(σ)`.
    pub fn from_r(r: &SubadditiveFn) -> Self {
        CoboundarySeed {
            group: Arc::clone(r.group()),
            values: r
                .values()
                .iter()
                .map(|&v| ValuedMonomial::pi_pow(i64::from(v)))
                .collect(),
        }
    }

    /// `a(σ) = w(σ) · π^exps[σ]`, the shape used in the decomposition proof.
    pub fn from_w_units(group: &Arc<FiniteGroup>, exps: &[i64]) -> Result<Self, CocycleError> {
        let values = exps
            .iter()
            .enumerate()
            .map(|(s, &e)| {
                let unit = if s == 0 {
                    UnitWord::one()
                } else {
                    UnitWord::symbol(UnitSymbol::w(s), 1)
                };
                ValuedMonomial::new(unit, e)
            })
            .collect();
        CoboundarySeed::new(group, values)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[ValuedMonomial] {
        &self.values
    }

    pub fn exps(&self) -> Vec<i64> {
        self.values.iter().map(|m| m.exp).collect()
    }

    /// Pointwise product, which is the seed of the product cocycle.
    pub fn mul(&self, other: &CoboundarySeed) -> Result<CoboundarySeed, CocycleError> {
        if self.group != other.group {
            return Err(CocycleError::GroupMismatch);
        }
        Ok(CoboundarySeed {
            group: Arc::clone(&self.group),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }

    /// Same unit parts, all exponents zero.
    fn unit_part(&self) -> CoboundarySeed {
        CoboundarySeed {
            group: Arc::clone(&self.group),
            values: self
                .values
                .iter()
                .map(|m| ValuedMonomial::new(m.unit.clone(), 0))
                .collect(),
        }
    }
}

/// A table of cocycle values, optionally remembering the seed it was built
/// from (required by [`ValuedCocycle::decompose`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedCocycle {
    group: Arc<FiniteGroup>,
    entries: Vec<Vec<ValuedEntry>>,
    seed: Option<CoboundarySeed>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Compare exponents and zero pattern only.
    Valuation,
    /// Also compare unit words modulo the relation lattice.
    Strict,
}

impl ValuedCocycle {
    pub fn new(
        group: &Arc<FiniteGroup>,
        entries: Vec<Vec<ValuedEntry>>,
    ) -> Result<Self, CocycleError> {
        let n = group.order();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(CocycleError::ShapeMismatch { order: n });
        }
        let in_range = entries.iter().flatten().all(|e| match e {
            ValuedEntry::Zero => true,
            ValuedEntry::Value(m) => m.unit.in_range(n),
        });
        if !in_range {
            return Err(CocycleError::SymbolOutOfRange);
        }
        Ok(ValuedCocycle {
            group: Arc::clone(group),
            entries,
            seed: None,
        })
    }

    /// Attach a seed after checking that it produces exactly these entries.
    pub fn with_seed(self, seed: CoboundarySeed) -> Result<Self, CocycleError> {
        let built = coboundary_from_seed(&seed)?;
        if built.entries != self.entries {
            return Err(CocycleError::NotDecomposable(
                "entries differ from the coboundary of the seed".into(),
            ));
        }
        Ok(built)
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        ValuedCocycle {
            group: Arc::clone(group),
            entries: vec![vec![ValuedEntry::one(); n]; n],
            seed: Some(CoboundarySeed {
                group: Arc::clone(group),
                values: vec![ValuedMonomial::one(); n],
            }),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn get(&self, s: usize, t: usize) -> &ValuedEntry {
        &self.entries[s][t]
    }

    pub fn rows(&self) -> &[Vec<ValuedEntry>] {
        &self.entries
    }

    pub fn seed(&self) -> Option<&CoboundarySeed> {
        self.seed.as_ref()
    }

    /// Exponent matrix; `None` marks zero entries.
    pub fn exps(&self) -> Vec<Vec<Option<i64>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.exp()).collect())
            .collect()
    }

    /// Every value is a nonzero monomial with exponent ≥ 0, i.e. lies in `S*`.
    pub fn is_integral(&self) -> bool {
        self.integrality_witness().is_none()
    }

    fn integrality_witness(&self) -> Option<(usize, usize)> {
        let n = self.group.order();
        (0..n)
            .flat_map(|s| (0..n).map(move |t| (s, t)))
            .find(|&(s, t)| !matches!(self.entries[s][t].exp(), Some(e) if e >= 0))
    }

    fn require_integral(&self) -> Result<(), CocycleError> {
        match self.integrality_witness() {
            None => Ok(()),
            Some((s, t)) => Err(CocycleError::NotIntegral { s, t }),
        }
    }

    fn require_nonzero(&self) -> Result<(), CocycleError> {
        let n = self.group.order();
        for s in 0..n {
            for t in 0..n {
                if self.entries[s][t] == ValuedEntry::Zero {
                    return Err(CocycleError::ZeroEntry { s, t });
                }
            }
        }
        Ok(())
    }

    /// Entrywise product. Seeds multiply when both factors carry one.
    pub fn product(&self, other: &ValuedCocycle) -> Result<ValuedCocycle, CocycleError> {
        if self.group != other.group {
            return Err(CocycleError::GroupMismatch);
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.mul(y)).collect())
            .collect();
        let seed = match (&self.seed, &other.seed) {
            (Some(a), Some(b)) => Some(a.mul(b)?),
            _ => None,
        };
        Ok(ValuedCocycle {
            group: Arc::clone(&self.group),
            entries,
            seed,
        })
    }

    /// Entrywise inverse; all entries must be nonzero.
    pub fn inverse(&self) -> Result<ValuedCocycle, CocycleError> {
        self.require_nonzero()?;
        let entries = self
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        ValuedEntry::Value(m) => ValuedEntry::Value(m.inv()),
                        ValuedEntry::Zero => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        Ok(ValuedCocycle {
            group: Arc::clone(&self.group),
            entries,
            seed: None,
        })
    }

    /// Check normalization and `f(σ,τ) f(στ,ρ) = σ(f(τ,ρ)) f(σ,τρ)` on all
    /// triples. `relations` is only consulted at the strict level.
    pub fn verify(
        &self,
        level: VerifyLevel,
        relations: &UnitRelations,
    ) -> Result<Vec<CocycleViolation>, CocycleError> {
        let g = &self.group;
        let n = g.order();
        let strict = level == VerifyLevel::Strict;
        let mut out = Vec::new();

        let is_one = |e: &ValuedEntry| -> Result<bool, CocycleError> {
            Ok(match e {
                ValuedEntry::Zero => false,
                ValuedEntry::Value(m) => {
                    m.exp == 0 && (!strict || relations.normalize(&m.unit)?.is_one())
                }
            })
        };
        for j in 0..n {
            if !is_one(&self.entries[0][j])? {
                out.push(CocycleViolation::Normalization { s: 0, t: j });
            }
            if j != 0 && !is_one(&self.entries[j][0])? {
                out.push(CocycleViolation::Normalization { s: j, t: 0 });
            }
        }

        for s in 0..n {
            for t in 0..n {
                let st = g.mul(s, t);
                for r in 0..n {
                    let tr = g.mul(t, r);
                    let lhs = self.entries[s][t].mul(&self.entries[st][r]);
                    let rhs = if strict {
                        self.entries[t][r].act(s, g).mul(&self.entries[s][tr])
                    } else {
                        self.entries[t][r].mul(&self.entries[s][tr])
                    };
                    match (&lhs, &rhs) {
                        (ValuedEntry::Zero, ValuedEntry::Zero) => {}
                        (ValuedEntry::Value(a), ValuedEntry::Value(b)) => {
                            if a.exp != b.exp {
                                out.push(CocycleViolation::Valuation { s, t, r });
                            } else if strict && !relations.equal(&a.unit, &b.unit)? {
                                out.push(CocycleViolation::Unit { s, t, r });
                            }
                        }
                        _ => out.push(CocycleViolation::ZeroPattern { s, t, r }),
                    }
                }
            }
        }
        Ok(out)
    }

    /// `H(f) = {σ : f(σ,σ^-1)` is a unit`}`.
    pub fn inertial_group(&self) -> Result<Subgroup, CocycleError> {
        let g = &self.group;
        let members: Vec<usize> = (0..g.order())
            .filter(|&s| self.entries[s][g.inv(s)].exp() == Some(0))
            .collect();
        Subgroup::from_members(g, &members).map_err(|e| CocycleError::NotASubgroup(e.to_string()))
    }

    /// Reduce values modulo `πS`: the unit survives where the exponent is 0,
    /// everything else becomes zero (`None`).
    pub fn reduce_mod_pi(&self) -> Result<Vec<Vec<Option<UnitWord>>>, CocycleError> {
        self.require_integral()?;
        Ok(self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        ValuedEntry::Value(m) if m.exp == 0 => Some(m.unit.clone()),
                        _ => None,
                    })
                    .collect()
            })
            .collect())
    }

    /// Valuation test for the order to be hereditary:
    /// `v(f(σ,σ^-1)) ≤ 1` for every `σ`. A zero value counts as infinite.
    pub fn hereditary_criterion(&self) -> bool {
        let g = &self.group;
        (0..g.order()).all(|s| matches!(self.entries[s][g.inv(s)].exp(), Some(e) if e <= 1))
    }

    /// `r_f(σ) = v(f(σ,σ^-1))`.
    pub fn rf(&self) -> Result<SubadditiveFn, CocycleError> {
        self.require_integral()?;
        let g = &self.group;
        let values: Vec<u32> = (0..g.order())
            .map(|s| {
                let e = self.entries[s][g.inv(s)].exp().expect("integral");
                u32::try_from(e).map_err(|_| CocycleError::ExponentOverflow(e))
            })
            .collect::<Result<_, _>>()?;
        for s in 0..g.order() {
            if values[s] != values[g.inv(s)] {
                return Err(CocycleError::SymmetryFailure { s });
            }
        }
        SubadditiveFn::new(g, values).map_err(CocycleError::SubadditivityFailure)
    }

    /// `h = f^-1 · b_r`, so that `f h = b_r`. Exponents may be negative.
    pub fn partner_h(&self, r: &SubadditiveFn) -> Result<ValuedCocycle, CocycleError> {
        if **r.group() != *self.group {
            return Err(CocycleError::GroupMismatch);
        }
        let b_r = br_from_r(r);
        // Rebind to our group handle so both factors compare equal.
        let b_r = ValuedCocycle {
            group: Arc::clone(&self.group),
            ..b_r
        };
        let mut h = self.inverse()?.product(&b_r)?;
        h.seed = None;
        Ok(h)
    }

    /// Split a seed-built cocycle as `c · b_r` with `c` a unit coboundary
    /// (all exponents 0) and `r = v ∘ a`.
    pub fn decompose(
        &self,
        relations: &UnitRelations,
    ) -> Result<(ValuedCocycle, SubadditiveFn), CocycleError> {
        let seed = self.seed.as_ref().ok_or(CocycleError::MissingSeed)?;
        self.require_integral()?;
        let g = &self.group;
        let n = g.order();
        let exps = seed.exps();
        for s in 0..n {
            for t in 0..n {
                let d = exps[s] + exps[t] - exps[g.mul(s, t)];
                if self.entries[s][t].exp() != Some(d) {
                    return Err(CocycleError::NotDecomposable(format!(
                        "exponent at ({s},{t}) is not the defect {d} of the seed"
                    )));
                }
            }
        }
        let values: Vec<u32> = exps
            .iter()
            .map(|&e| u32::try_from(e).map_err(|_| CocycleError::ExponentOverflow(e)))
            .collect::<Result<_, _>>()
            .map_err(|_| CocycleError::NotDecomposable("seed exponent is negative".into()))?;
        let r = SubadditiveFn::new(g, values)
            .map_err(|e| CocycleError::NotDecomposable(format!("v∘a not in Sl(G): {e}")))?;

        let c = coboundary_from_seed(&seed.unit_part())?;
        let b_r = coboundary_from_seed(&CoboundarySeed::from_r(&r))?;
        let recomposed = c.product(&b_r)?;
        for s in 0..n {
            for t in 0..n {
                let (x, y) = (&self.entries[s][t], &recomposed.entries[s][t]);
                let same = match (x, y) {
                    (ValuedEntry::Value(a), ValuedEntry::Value(b)) => {
                        a.exp == b.exp && relations.equal(&a.unit, &b.unit)?
                    }
                    _ => false,
                };
                if !same {
                    return Err(CocycleError::NotDecomposable(format!(
                        "c · b_r differs from the input at ({s},{t})"
                    )));
                }
            }
        }
        let m_r = r.m_subgroup()?;
        if self.inertial_group()? != m_r {
            return Err(CocycleError::NotDecomposable(
                "inertial group differs from M_r".into(),
            ));
        }
        Ok((c, r))
    }

    /// Restriction to a subgroup, re-indexed to the subgroup's own table.
    /// Fails if some unit symbol mentions an element outside the subgroup.
    pub fn restrict(&self, m: &Subgroup) -> Result<ValuedCocycle, CocycleError> {
        if **m.group() != *self.group {
            return Err(CocycleError::GroupMismatch);
        }
        let sub = super::subgroup_as_group(m)?;
        let pos = |x: usize| m.members().binary_search(&x).ok();
        let reindex = |w: &UnitWord| -> Result<UnitWord, CocycleError> {
            let mut out = UnitWord::one();
            for (sym, p) in w.terms() {
                let twist = pos(sym.twist).ok_or(CocycleError::SymbolOutsideSubgroup)?;
                let b = pos(sym.tag.base()).ok_or(CocycleError::SymbolOutsideSubgroup)?;
                let tag = match sym.tag {
                    UnitTag::U(_) => UnitTag::U(b),
                    UnitTag::W(_) => UnitTag::W(b),
                };
                out.push(UnitSymbol { tag, twist }, p);
            }
            Ok(out)
        };
        let mut entries = Vec::with_capacity(m.order());
        for &s in m.members() {
            let mut row = Vec::with_capacity(m.order());
            for &t in m.members() {
                row.push(match &self.entries[s][t] {
                    ValuedEntry::Zero => ValuedEntry::Zero,
                    ValuedEntry::Value(v) => {
                        ValuedEntry::Value(ValuedMonomial::new(reindex(&v.unit)?, v.exp))
                    }
                });
            }
            entries.push(row);
        }
        Ok(ValuedCocycle {
            group: sub,
            entries,
            seed: None,
        })
    }
}

/// `b_r(σ,τ) = u(σ)^r(τ) · π^(r(σ)+r(τ)−r(στ))`, with seed `π^r`.
pub fn br_from_r(r: &SubadditiveFn) -> ValuedCocycle {
    let g = r.group();
    let n = g.order();
    let entries = (0..n)
        .map(|s| {
            (0..n)
                .map(|t| {
                    let unit = UnitWord::symbol(UnitSymbol::u(s), i64::from(r.value(t)));
                    ValuedEntry::Value(ValuedMonomial::new(unit, i64::from(r.defect(s, t))))
                })
                .collect()
        })
        .collect();
    ValuedCocycle {
        group: Arc::clone(g),
        entries,
        seed: Some(CoboundarySeed::from_r(r)),
    }
}

/// The exponent matrix of `b_r` alone, i.e. the defect table as `i64`.
pub fn epsilon_table(r: &SubadditiveFn) -> Vec<Vec<i64>> {
    r.defect_table()
        .rows()
        .iter()
        .map(|row| row.iter().map(|&d| i64::from(d)).collect())
        .collect()
}

/// `b(σ,τ) = a(σ) · σ(a(τ)) · a(στ)^-1`. Rejects seeds whose coboundary
/// leaves `S*`.
pub fn coboundary_from_seed(seed: &CoboundarySeed) -> Result<ValuedCocycle, CocycleError> {
    let g = seed.group();
    let n = g.order();
    let a = seed.values();
    let mut entries = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(n);
        for t in 0..n {
            let v = a[s].mul(&a[t].act(s, g)).mul(&a[g.mul(s, t)].inv());
            if v.exp < 0 {
                return Err(CocycleError::NotIntegralOutput { s, t, exp: v.exp });
            }
            row.push(ValuedEntry::Value(v));
        }
        entries.push(row);
    }
    Ok(ValuedCocycle {
        group: Arc::clone(g),
        entries,
        seed: Some(seed.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    fn c10() -> Arc<FiniteGroup> {
        FiniteGroup::build(&GroupSpec::Cyclic(10)).unwrap()
    }

    fn d8() -> Arc<FiniteGroup> {
        FiniteGroup::build(&GroupSpec::Dihedral(8)).unwrap()
    }

    const R1: [u32; 10] = [0, 2, 2, 3, 4, 5, 1, 2, 3, 4];
    const R_HAT: [u32; 8] = [0, 1, 0, 1, 1, 2, 1, 2];

    fn r1() -> SubadditiveFn {
        SubadditiveFn::new(&c10(), R1.to_vec()).unwrap()
    }

    fn r_hat() -> SubadditiveFn {
        SubadditiveFn::new(&d8(), R_HAT.to_vec()).unwrap()
    }

    #[test]
    fn br_row_one_exponents() {
        let b = br_from_r(&r1());
        let row: Vec<i64> = (0..10).map(|t| b.get(1, t).exp().unwrap()).collect();
        assert_eq!(row, vec![0, 2, 1, 1, 1, 6, 1, 1, 1, 6]);
        assert!(b.is_integral());
        for t in 0..10 {
            assert_eq!(b.get(0, t), &ValuedEntry::one());
        }
    }

    #[test]
    fn br_d8_entry() {
        let b = br_from_r(&r_hat());
        // (a, s): u(a)^1 π^0
        assert_eq!(
            b.get(1, 4),
            &ValuedEntry::Value(ValuedMonomial::new(
                UnitWord::symbol(UnitSymbol::u(1), 1),
                0
            ))
        );
    }

    #[test]
    fn br_verifies_strictly() {
        let b = br_from_r(&r_hat());
        let rel = UnitRelations::symbolic(b.group()).unwrap();
        assert!(b.verify(VerifyLevel::Strict, &rel).unwrap().is_empty());
        assert!(b.verify(VerifyLevel::Valuation, &rel).unwrap().is_empty());
        assert!(b
            .verify(VerifyLevel::Strict, &UnitRelations::Unramified)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn dropping_units_breaks_strict_check() {
        // ε_r alone is not a cocycle; only the valuation-level check passes.
        let r = r_hat();
        let g = r.group();
        let eps = ValuedCocycle::new(
            g,
            epsilon_table(&r)
                .into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|e| ValuedEntry::Value(ValuedMonomial::pi_pow(e)))
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let rel = UnitRelations::symbolic(g).unwrap();
        assert!(eps.verify(VerifyLevel::Valuation, &rel).unwrap().is_empty());
        let strict = eps.verify(VerifyLevel::Strict, &rel).unwrap();
        assert!(strict
            .iter()
            .any(|v| matches!(v, CocycleViolation::Unit { .. })));
        assert!(eps
            .verify(VerifyLevel::Strict, &UnitRelations::Unramified)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn inertial_groups() {
        assert!(br_from_r(&r1()).inertial_group().unwrap().is_trivial());
        assert_eq!(
            br_from_r(&r_hat()).inertial_group().unwrap().members(),
            &[0, 2]
        );
        assert!(ValuedCocycle::trivial(&d8())
            .inertial_group()
            .unwrap()
            .is_whole());
    }

    #[test]
    fn reduction_mod_pi() {
        let b = br_from_r(&r_hat());
        let red = b.reduce_mod_pi().unwrap();
        assert_eq!(red[1][4], Some(UnitWord::symbol(UnitSymbol::u(1), 1)));
        assert_eq!(red[1][1], None);
        let triv = ValuedCocycle::trivial(&d8()).reduce_mod_pi().unwrap();
        assert!(triv
            .iter()
            .flatten()
            .all(|w| w.as_ref().is_some_and(|w| w.is_one())));

        let b1 = br_from_r(&r1());
        let red = b1.reduce_mod_pi().unwrap();
        let eps = epsilon_table(&r1());
        for s in 0..10 {
            for t in 0..10 {
                assert_eq!(red[s][t].is_none(), eps[s][t] > 0);
            }
        }
        let h = b1.partner_h(&r1().halve()).unwrap();
        assert!(matches!(
            h.reduce_mod_pi(),
            Err(CocycleError::NotIntegral { .. })
        ));
    }

    #[test]
    fn seeds() {
        let r = r_hat();
        assert_eq!(
            coboundary_from_seed(&CoboundarySeed::from_r(&r)).unwrap(),
            br_from_r(&r)
        );
        let g = d8();
        let one = CoboundarySeed::new(&g, vec![ValuedMonomial::one(); 8]).unwrap();
        assert_eq!(
            coboundary_from_seed(&one).unwrap(),
            ValuedCocycle::trivial(&g)
        );

        let c3 = FiniteGroup::build(&GroupSpec::Cyclic(3)).unwrap();
        let bad = CoboundarySeed::from_w_units(&c3, &[0, 1, 3]).unwrap();
        assert_eq!(
            coboundary_from_seed(&bad).unwrap_err(),
            CocycleError::NotIntegralOutput {
                s: 1,
                t: 1,
                exp: -1
            }
        );
        assert_eq!(
            CoboundarySeed::from_w_units(&c3, &[1, 1, 1]).unwrap_err(),
            CocycleError::SeedNotNormalized
        );
    }

    #[test]
    fn decomposition() {
        let g = d8();
        let rel = UnitRelations::symbolic(&g).unwrap();
        let (c, r) = br_from_r(&r_hat()).decompose(&rel).unwrap();
        assert_eq!(r.values(), &R_HAT);
        assert!(c
            .rows()
            .iter()
            .flatten()
            .all(|e| e.monomial().unwrap().is_one()));

        let exps: Vec<i64> = R_HAT.iter().map(|&v| i64::from(v)).collect();
        let seed = CoboundarySeed::from_w_units(&g, &exps).unwrap();
        let b = coboundary_from_seed(&seed).unwrap();
        assert!(b.verify(VerifyLevel::Strict, &rel).unwrap().is_empty());
        let (c, r) = b.decompose(&rel).unwrap();
        assert_eq!(r.values(), &R_HAT);
        assert!(c.rows().iter().flatten().all(|e| e.exp() == Some(0)));
        assert!(c.verify(VerifyLevel::Strict, &rel).unwrap().is_empty());
        assert!(!c.rows()[1][4].monomial().unwrap().unit.is_one());

        let unseeded = ValuedCocycle::new(&g, b.rows().to_vec()).unwrap();
        assert_eq!(
            unseeded.decompose(&rel).unwrap_err(),
            CocycleError::MissingSeed
        );
        assert_eq!(unseeded.clone().with_seed(seed).unwrap(), b);
    }

    #[test]
    fn product_is_br_of_sum() {
        let g = d8();
        let rel = UnitRelations::symbolic(&g).unwrap();
        let a = r_hat();
        let b = a.halve();
        let prod = br_from_r(&a).product(&br_from_r(&b)).unwrap();
        let (_, r) = prod.decompose(&rel).unwrap();
        assert_eq!(r, a.add(&b).unwrap());
        let direct = br_from_r(&a.add(&b).unwrap());
        for s in 0..8 {
            for t in 0..8 {
                let (x, y) = (
                    prod.get(s, t).monomial().unwrap(),
                    direct.get(s, t).monomial().unwrap(),
                );
                assert_eq!(x.exp, y.exp);
                assert!(rel.equal(&x.unit, &y.unit).unwrap());
            }
        }
    }

    #[test]
    fn hereditary() {
        assert!(!br_from_r(&r1()).hereditary_criterion());
        assert!(ValuedCocycle::trivial(&d8()).hereditary_criterion());
        let f = br_from_r(&r1());
        let h = f.partner_h(&f.rf().unwrap().halve()).unwrap();
        assert!(h.hereditary_criterion());
    }

    #[test]
    fn rf_examples() {
        let f = br_from_r(&r1());
        assert_eq!(f.rf().unwrap().values(), &[0, 6, 5, 5, 5, 10, 5, 5, 5, 6]);
        assert!(ValuedCocycle::trivial(&d8()).rf().unwrap().is_zero());
        assert_eq!(
            br_from_r(&r_hat()).rf().unwrap().values(),
            &[0, 2, 0, 2, 2, 4, 2, 4]
        );
    }

    #[test]
    fn partner_examples() {
        let g = c10();
        let rel = UnitRelations::symbolic(&g).unwrap();
        let f = br_from_r(&r1());
        let rf = f.rf().unwrap();
        let h = f.partner_h(&rf).unwrap();
        for s in 0..10 {
            for t in 0..10 {
                let hs = h.get(s, t).exp().unwrap();
                assert_eq!(hs, f.get(g.inv(t), g.inv(s)).exp().unwrap());
                assert!(hs >= 0);
            }
        }
        assert!(h.verify(VerifyLevel::Strict, &rel).unwrap().is_empty());

        let half = rf.halve();
        assert_eq!(half.values(), &[0, 3, 3, 3, 3, 5, 3, 3, 3, 3]);
        let h = f.partner_h(&half).unwrap();
        let anti: Vec<i64> = (0..10).map(|s| h.get(s, g.inv(s)).exp().unwrap()).collect();
        assert_eq!(anti, vec![0, 0, 1, 1, 1, 0, 1, 1, 1, 0]);
        let fh = f.product(&h).unwrap();
        let b_half = br_from_r(&half);
        for s in 0..10 {
            for t in 0..10 {
                let (x, y) = (
                    fh.get(s, t).monomial().unwrap(),
                    b_half.get(s, t).monomial().unwrap(),
                );
                assert_eq!(x.exp, y.exp);
                assert!(rel.equal(&x.unit, &y.unit).unwrap());
            }
        }

        let triv = ValuedCocycle::trivial(&g);
        let h = triv.partner_h(&SubadditiveFn::zero(&g)).unwrap();
        assert!(h
            .rows()
            .iter()
            .flatten()
            .all(|e| e.monomial().unwrap().is_one()));
        assert_eq!(
            triv.partner_h(&r_hat()).unwrap_err(),
            CocycleError::GroupMismatch
        );
    }

    #[test]
    fn valued_restriction() {
        let b = br_from_r(&r_hat());
        let rot = Subgroup::closure(b.group(), &[1]).unwrap();
        let res = b.restrict(&rot).unwrap();
        assert_eq!(res.group().order(), 4);
        let rel = UnitRelations::symbolic(res.group()).unwrap();
        assert!(res.verify(VerifyLevel::Strict, &rel).unwrap().is_empty());
        assert_eq!(res.get(1, 1).exp(), Some(2));
    }
}
