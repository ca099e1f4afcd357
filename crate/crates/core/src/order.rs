//! Partial orders on `G/H` induced by idempotent cocycles.
//!
//! For an idempotent cocycle `e` with inertial group `H`, `σH ≤ τH` iff
//! `e(σ, σ^-1 τ) = 1`. These orders have `H` as least element and are lower
//! subtractive: if `σH ≤ τH` then `σH ≤ ρH ≤ τH` iff `σ^-1ρH ≤ σ^-1τH`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::cocycle::{CocycleError, IdempotentCocycle};
use crate::group::{left_cosets, CosetSpace, FiniteGroup};
use crate::slg::SubadditiveFn;

/// One failed poset axiom. Coset arguments are coset indices; the
/// lower-subtractivity witness is a triple of element indices `(σ, τ, ρ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom")]
pub enum PosetViolation {
    Reflexivity { x: usize },
    Antisymmetry { x: usize, y: usize },
    Transitivity { x: usize, y: usize, z: usize },
    LeastElement { x: usize },
    LowerSubtractivity { s: usize, t: usize, r: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("order relation must be {size}×{size}")]
    ShapeMismatch { size: usize },
    #[error("poset axioms fail: {} violation(s), first {:?}", .0.len(), .0.first())]
    AxiomFailure(Vec<PosetViolation>),
    #[error("comparison of cosets {x} and {y} depends on the representatives")]
    RepresentativeDependence { x: usize, y: usize },
    #[error("order from r differs from the order of e_r")]
    CrossCheckFailure,
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotMode {
    /// One node per coset.
    Coset,
    /// One node per group element; each inherits its coset's edges.
    Expanded,
}

// (node id, height, label)
type DotNode = (usize, usize, String);

/// A relation on the left cosets of a subgroup. Constructors that start from
/// a cocycle verify the axioms; [`CosetPoset::from_relation`] does not.
#[derive(Debug, Clone)]
pub struct CosetPoset {
    cosets: CosetSpace,
    leq: Vec<Vec<bool>>,
}

impl PartialEq for CosetPoset {
    fn eq(&self, other: &Self) -> bool {
        self.cosets.subgroup() == other.cosets.subgroup() && self.leq == other.leq
    }
}

impl Eq for CosetPoset {}

impl CosetPoset {
    pub fn from_relation(cosets: CosetSpace, leq: Vec<Vec<bool>>) -> Result<Self, OrderError> {
        let m = cosets.len();
        if leq.len() != m || leq.iter().any(|r| r.len() != m) {
            return Err(OrderError::ShapeMismatch { size: m });
        }
        Ok(CosetPoset { cosets, leq })
    }

    /// Order induced by `e` on `G/H(e)`, checked for representative
    /// independence and all poset axioms.
    pub fn from_idempotent(e: &IdempotentCocycle) -> Result<Self, OrderError> {
        let g = e.group();
        let h = e.inertial_group()?;
        let cosets = left_cosets(&h);
        let m = cosets.len();
        let mut leq = vec![vec![false; m]; m];
        for x in 0..m {
            for y in 0..m {
                let (s, t) = (cosets.rep(x), cosets.rep(y));
                let v = e.get(s, g.mul(g.inv(s), t));
                for &s2 in cosets.members(x) {
                    for &t2 in cosets.members(y) {
                        if e.get(s2, g.mul(g.inv(s2), t2)) != v {
                            return Err(OrderError::RepresentativeDependence { x, y });
                        }
                    }
                }
                leq[x][y] = v;
            }
        }
        let p = CosetPoset { cosets, leq };
        p.require_valid()?;
        Ok(p)
    }

    /// `σM ≤ τM` iff `r(τ) = r(σ) + r(σ^-1 τ)`, cross-checked against the
    /// order of `e_r`.
    pub fn from_r(r: &SubadditiveFn) -> Result<Self, OrderError> {
        let g = r.group();
        let m_r = r.m_subgroup().map_err(CocycleError::from)?;
        let cosets = left_cosets(&m_r);
        let m = cosets.len();
        let leq: Vec<Vec<bool>> = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        let (s, t) = (cosets.rep(x), cosets.rep(y));
                        r.value(t) == r.value(s) + r.value(g.mul(g.inv(s), t))
                    })
                    .collect()
            })
            .collect();
        let p = CosetPoset { cosets, leq };
        if p != CosetPoset::from_idempotent(&IdempotentCocycle::from_r(r))? {
            return Err(OrderError::CrossCheckFailure);
        }
        Ok(p)
    }

    pub fn group(&self) -> &FiniteGroup {
        self.cosets.group()
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.leq
    }

    /// Node label: the element itself when `H` is trivial, `σH` otherwise.
    pub fn label(&self, x: usize) -> String {
        if self.cosets.subgroup().is_trivial() {
            self.group().label(self.cosets.rep(x)).to_string()
        } else {
            self.cosets.label(x)
        }
    }

    /// Every violated axiom with a witness.
    pub fn verify(&self) -> Vec<PosetViolation> {
        let m = self.len();
        let le = &self.leq;
        let mut out = Vec::new();
        for x in 0..m {
            if !le[x][x] {
                out.push(PosetViolation::Reflexivity { x });
            }
            if !le[0][x] {
                out.push(PosetViolation::LeastElement { x });
            }
            for y in x + 1..m {
                if le[x][y] && le[y][x] {
                    out.push(PosetViolation::Antisymmetry { x, y });
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                if !le[x][y] {
                    continue;
                }
                for z in 0..m {
                    if le[y][z] && !le[x][z] {
                        out.push(PosetViolation::Transitivity { x, y, z });
                    }
                }
            }
        }
        let g = self.group();
        let c = &self.cosets;
        for s in 0..g.order() {
            let x = c.coset_of(s);
            let si = g.inv(s);
            for y in 0..m {
                if !le[x][y] {
                    continue;
                }
                let t = c.rep(y);
                let shifted_t = c.coset_of(g.mul(si, t));
                for z in 0..m {
                    let r = c.rep(z);
                    let between = le[x][z] && le[z][y];
                    let shifted = le[c.coset_of(g.mul(si, r))][shifted_t];
                    if between != shifted {
                        out.push(PosetViolation::LowerSubtractivity { s, t, r });
                    }
                }
            }
        }
        out
    }

    pub fn require_valid(&self) -> Result<(), OrderError> {
        let v = self.verify();
        if v.is_empty() {
            Ok(())
        } else {
            Err(OrderError::AxiomFailure(v))
        }
    }

    /// Length of the longest chain from `H` up to each coset.
    pub fn heights(&self) -> Vec<usize> {
        let m = self.len();
        // number of elements strictly below is a linear extension key
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&x| (0..m).filter(|&y| y != x && self.leq[y][x]).count());
        let mut h = vec![0; m];
        for (i, &x) in order.iter().enumerate() {
            for &y in &order[..i] {
                if y != x && self.leq[y][x] {
                    h[x] = h[x].max(h[y] + 1);
                }
            }
        }
        h
    }

    pub fn hasse(&self) -> HasseDiagram {
        let m = self.len();
        let lt = |x: usize, y: usize| x != y && self.leq[x][y];
        let covers = (0..m)
            .flat_map(|x| (0..m).map(move |y| (x, y)))
            .filter(|&(x, y)| lt(x, y) && !(0..m).any(|z| lt(x, z) && lt(z, y)))
            .collect();
        HasseDiagram {
            poset: self.clone(),
            covers,
        }
    }
}

/// Cover relation of a [`CosetPoset`], edges `(lower, upper)` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    poset: CosetPoset,
    covers: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn poset(&self) -> &CosetPoset {
        &self.poset
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Covers between group elements: every member of the lower coset under
    /// every member of the upper one.
    pub fn expanded_covers(&self) -> Vec<(usize, usize)> {
        let c = self.poset.cosets();
        let set: BTreeSet<(usize, usize)> = self
            .covers
            .iter()
            .flat_map(|&(x, y)| {
                c.members(x)
                    .iter()
                    .flat_map(move |&a| c.members(y).iter().map(move |&b| (a, b)))
            })
            .collect();
        set.into_iter().collect()
    }

    /// Reflexive-transitive closure of the covers.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let m = self.poset.len();
        let mut le = vec![vec![false; m]; m];
        for (x, row) in le.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in &self.covers {
            le[x][y] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if le[i][k] {
                    for j in 0..m {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        le
    }

    /// Graphviz text, lower elements at the bottom, one rank per height.
    pub fn to_dot(&self, mode: DotMode) -> String {
        let p = &self.poset;
        let g = p.group();
        let c = p.cosets();
        let heights = p.heights();
        let (nodes, edges): (Vec<DotNode>, Vec<(usize, usize)>) = match mode {
            DotMode::Coset => (
                (0..p.len()).map(|x| (x, heights[x], p.label(x))).collect(),
                self.covers.clone(),
            ),
            DotMode::Expanded => (
                (0..g.order())
                    .map(|a| (a, heights[c.coset_of(a)], g.label(a).to_string()))
                    .collect(),
                self.expanded_covers(),
            ),
        };
        let prefix = match mode {
            DotMode::Coset => "c",
            DotMode::Expanded => "e",
        };
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", escape(g.name())).unwrap();
        out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
        for (id, _, label) in &nodes {
            writeln!(out, "  {prefix}{id} [label=\"{}\"];", escape(label)).unwrap();
        }
        let top = nodes.iter().map(|n| n.1).max().unwrap_or(0);
        for h in 0..=top {
            let ids: Vec<String> = nodes
                .iter()
                .filter(|n| n.1 == h)
                .map(|n| format!("{prefix}{}", n.0))
                .collect();
            if !ids.is_empty() {
                writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
            }
        }
        for (x, y) in edges {
            writeln!(out, "  {prefix}{x} -> {prefix}{y};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::{GroupSpec, Subgroup};

    fn cyclic(n: usize) -> Arc<FiniteGroup> {
        FiniteGroup::build(&GroupSpec::Cyclic(n)).unwrap()
    }

    fn d8() -> Arc<FiniteGroup> {
        FiniteGroup::build(&GroupSpec::Dihedral(8)).unwrap()
    }

    fn r(g: &Arc<FiniteGroup>, v: &[u32]) -> SubadditiveFn {
        SubadditiveFn::new(g, v.to_vec()).unwrap()
    }

    fn relation(m: usize, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut le = vec![vec![false; m]; m];
        for x in 0..m {
            le[x][x] = true;
        }
        for &(x, y) in pairs {
            le[x][y] = true;
        }
        le
    }

    #[test]
    fn z10_covers() {
        let g = cyclic(10);
        let p = CosetPoset::from_r(&r(&g, &[0, 2, 2, 3, 4, 5, 1, 2, 3, 4])).unwrap();
        assert_eq!(
            p.hasse().covers(),
            &[
                (0, 1),
                (0, 6),
                (0, 7),
                (2, 8),
                (2, 9),
                (3, 9),
                (6, 2),
                (6, 3),
                (7, 3),
                (7, 4),
                (8, 4),
                (8, 5),
                (9, 5)
            ]
        );
        assert_eq!(p.label(6), "6");
    }

    #[test]
    fn d8_covers() {
        let g = d8();
        let p = CosetPoset::from_r(&r(&g, &[0, 1, 0, 1, 1, 2, 1, 2])).unwrap();
        let h = p.hasse();
        assert_eq!(h.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(!p.leq(1, 2) && !p.leq(2, 1));
        assert_eq!(h.expanded_covers().len(), 16);
        assert_eq!(p.heights(), vec![0, 1, 1, 2]);
        assert_eq!(h.closure(), p.relation());
    }

    #[test]
    fn trivial_poset_and_dot() {
        let g = d8();
        let p = CosetPoset::from_idempotent(&IdempotentCocycle::trivial(&g)).unwrap();
        assert_eq!(p.len(), 1);
        let dot = p.hasse().to_dot(DotMode::Coset);
        assert!(!dot.contains("->"));
        assert!(dot.contains("c0 [label=\"H\"]"));
    }

    #[test]
    fn dot_is_deterministic() {
        let g = d8();
        let p = CosetPoset::from_r(&r(&g, &[0, 1, 0, 1, 1, 2, 1, 2])).unwrap();
        let a = p.hasse().to_dot(DotMode::Expanded);
        assert_eq!(a, p.hasse().to_dot(DotMode::Expanded));
        assert_eq!(a.matches("->").count(), 16);
        assert_eq!(p.hasse().to_dot(DotMode::Coset).matches("->").count(), 4);
    }

    #[test]
    fn hand_built_z4_orders() {
        let g = cyclic(4);
        let cosets = left_cosets(&Subgroup::trivial(&g));
        let bad = CosetPoset::from_relation(
            cosets.clone(),
            relation(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        )
        .unwrap();
        let v = bad.verify();
        assert!(v.contains(&PosetViolation::LowerSubtractivity { s: 1, t: 3, r: 2 }));
        assert!(v
            .iter()
            .all(|x| matches!(x, PosetViolation::LowerSubtractivity { .. })));

        let chain = relation(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let total = CosetPoset::from_relation(cosets, chain).unwrap();
        assert!(total.verify().is_empty());
        assert_eq!(total, CosetPoset::from_r(&r(&g, &[0, 1, 2, 3])).unwrap());
        assert_eq!(total.hasse().covers().len(), 3);
    }

    #[test]
    fn axiom_witnesses() {
        let g = cyclic(3);
        let cosets = left_cosets(&Subgroup::trivial(&g));
        let mut le = relation(3, &[(0, 1), (1, 2), (2, 1)]);
        le[2][2] = false;
        let v = CosetPoset::from_relation(cosets, le).unwrap().verify();
        assert!(v.contains(&PosetViolation::Reflexivity { x: 2 }));
        assert!(v.contains(&PosetViolation::LeastElement { x: 2 }));
        assert!(v.contains(&PosetViolation::Antisymmetry { x: 1, y: 2 }));
        assert!(v.contains(&PosetViolation::Transitivity { x: 0, y: 1, z: 2 }));
    }
}
