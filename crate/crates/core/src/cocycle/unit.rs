//! Formal unit words.
//!
//! Values in `U(S)` are never computed; they are products of symbols
//! `g(u(σ))` and `g(w(σ))` in a free commutative group. `u(σ)` is the unit
//! with `σ(π) = u(σ)π`, so applying `g` to `τ(π) = u(τ)π` gives the relation
//! `g(u(στ)) = g(u(σ)) · gσ(u(τ))`, together with `g(u(1)) = 1`. The `w(σ)`
//! symbols (unit parts of a coboundary seed) are free.
//!
//! Equality of words is decided modulo the lattice spanned by those relation
//! vectors; [`UnitRelations`] holds its Hermite normal form.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;
use crate::lattice::{HermiteLattice, LatticeBuilder, LatticeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum UnitTag {
    U(usize),
    W(usize),
}

impl UnitTag {
    pub fn base(self) -> usize {
        match self {
            UnitTag::U(b) | UnitTag::W(b) => b,
        }
    }
}

/// `twist(u(σ))` or `twist(w(σ))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitSymbol {
    pub tag: UnitTag,
    pub twist: usize,
}

impl UnitSymbol {
    pub fn u(base: usize) -> Self {
        UnitSymbol {
            tag: UnitTag::U(base),
            twist: 0,
        }
    }

    pub fn w(base: usize) -> Self {
        UnitSymbol {
            tag: UnitTag::W(base),
            twist: 0,
        }
    }

    pub fn twisted(self, g: usize) -> Self {
        UnitSymbol { twist: g, ..self }
    }

    /// `g(u(1)) = 1` for every `g`.
    fn is_trivial(self) -> bool {
        self.tag == UnitTag::U(0)
    }

    pub fn display(self, group: &FiniteGroup) -> String {
        let (name, b) = match self.tag {
            UnitTag::U(b) => ("u", b),
            UnitTag::W(b) => ("w", b),
        };
        let inner = format!("{name}({})", group.label(b));
        if self.twist == 0 {
            inner
        } else {
            format!("{}({inner})", group.label(self.twist))
        }
    }
}

/// A formal product of unit symbols with integer exponents.
///
/// Zero exponents and `u(1)` symbols are never stored, so two words with the
/// same symbols compare equal directly; equality modulo the `u` relations goes
/// through [`UnitRelations::normalize`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UnitWord {
    terms: BTreeMap<UnitSymbol, i64>,
}

impl UnitWord {
    pub fn one() -> Self {
        UnitWord::default()
    }

    pub fn symbol(sym: UnitSymbol, pow: i64) -> Self {
        let mut w = UnitWord::one();
        w.push(sym, pow);
        w
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (UnitSymbol, i64)>) -> Self {
        let mut w = UnitWord::one();
        for (s, p) in terms {
            w.push(s, p);
        }
        w
    }

    /// Multiply in `sym^pow`.
    pub fn push(&mut self, sym: UnitSymbol, pow: i64) {
        if pow == 0 || sym.is_trivial() {
            return;
        }
        let e = self.terms.entry(sym).or_insert(0);
        *e += pow;
        if *e == 0 {
            self.terms.remove(&sym);
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (UnitSymbol, i64)> + '_ {
        self.terms.iter().map(|(&s, &p)| (s, p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &UnitWord) -> UnitWord {
        let mut out = self.clone();
        for (s, p) in other.terms() {
            out.push(s, p);
        }
        out
    }

    pub fn inv(&self) -> UnitWord {
        UnitWord {
            terms: self.terms.iter().map(|(&s, &p)| (s, -p)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> UnitWord {
        UnitWord::from_terms(self.terms().map(|(s, p)| (s, p * k)))
    }

    /// Apply the automorphism `g` to every symbol: `t(x) ↦ (g t)(x)`.
    pub fn act(&self, g: usize, group: &FiniteGroup) -> UnitWord {
        UnitWord::from_terms(
            self.terms()
                .map(|(s, p)| (s.twisted(group.mul(g, s.twist)), p)),
        )
    }

    /// All indices stay below `n`.
    pub fn in_range(&self, n: usize) -> bool {
        self.terms.keys().all(|s| s.twist < n && s.tag.base() < n)
    }

    pub fn display(&self, group: &FiniteGroup) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.terms()
            .map(|(s, p)| {
                let base = s.display(group);
                if p == 1 {
                    base
                } else {
                    format!("{base}^{p}")
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

impl fmt::Display for UnitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, p)| {
                let (name, b) = match s.tag {
                    UnitTag::U(b) => ("U", b),
                    UnitTag::W(b) => ("W", b),
                };
                format!("[{}]{name}{b}^{p}", s.twist)
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// How unit words are compared.
#[derive(Debug, Clone)]
pub enum UnitRelations {
    /// The general model: `u` symbols are reduced modulo the relation
    /// lattice of the group.
    Symbolic {
        group: Arc<FiniteGroup>,
        lattice: HermiteLattice,
    },
    /// Unramified shortcut: with a uniformizer taken from the base ring every
    /// `u(σ)` is 1, so all `u` symbols are dropped.
    Unramified,
}

impl UnitRelations {
    /// Build the Hermite basis of the `u`-relation lattice for `group`.
    ///
    /// Coordinates are the `n²` symbols `g(u(x))`. The relation vectors are
    /// `g(u(στ)) − g(u(σ)) − gσ(u(τ))` for all `g, σ, τ` and `g(u(1))` for all `g`.
    pub fn symbolic(group: &Arc<FiniteGroup>) -> Result<Self, LatticeError> {
        let n = group.order();
        let dim = n * n;
        let mut builder = LatticeBuilder::new(dim);
        let mut v = vec![0i64; dim];
        for g in 0..n {
            v.fill(0);
            v[coord(n, g, 0)] = 1;
            builder.insert(&v)?;
        }
        for g in 0..n {
            for s in 0..n {
                for t in 0..n {
                    v.fill(0);
                    v[coord(n, g, group.mul(s, t))] += 1;
                    v[coord(n, g, s)] -= 1;
                    v[coord(n, group.mul(g, s), t)] -= 1;
                    builder.insert(&v)?;
                }
            }
        }
        Ok(UnitRelations::Symbolic {
            group: Arc::clone(group),
            lattice: builder.finish()?,
        })
    }

    pub fn lattice(&self) -> Option<&HermiteLattice> {
        match self {
            UnitRelations::Symbolic { lattice, .. } => Some(lattice),
            UnitRelations::Unramified => None,
        }
    }

    /// Canonical representative of a word modulo the relations. Idempotent;
    /// two words are equal iff their normal forms are identical.
    pub fn normalize(&self, w: &UnitWord) -> Result<UnitWord, LatticeError> {
        let mut out = UnitWord::one();
        match self {
            UnitRelations::Unramified => {
                for (s, p) in w.terms() {
                    if let UnitTag::W(_) = s.tag {
                        out.push(s, p);
                    }
                }
            }
            UnitRelations::Symbolic { group, lattice } => {
                let n = group.order();
                let mut v = vec![0i64; n * n];
                for (s, p) in w.terms() {
                    match s.tag {
                        UnitTag::U(b) => v[coord(n, s.twist, b)] += p,
                        UnitTag::W(_) => out.push(s, p),
                    }
                }
                lattice.reduce(&mut v)?;
                for (k, &p) in v.iter().enumerate() {
                    if p != 0 {
                        let (twist, base) = uncoord(n, k);
                        out.push(UnitSymbol::u(base).twisted(twist), p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn equal(&self, a: &UnitWord, b: &UnitWord) -> Result<bool, LatticeError> {
        Ok(self.normalize(&a.mul(&b.inv()))?.is_one())
    }
}

// Twist-identity coordinates go last so that the Hermite pivots land on the
// twisted symbols and the free coordinates are the plain u(σ), σ ≠ 1.
fn coord(n: usize, twist: usize, base: usize) -> usize {
    if twist == 0 {
        (n - 1) * n + base
    } else {
        (twist - 1) * n + base
    }
}

fn uncoord(n: usize, k: usize) -> (usize, usize) {
    let (block, base) = (k / n, k % n);
    let twist = if block == n - 1 { 0 } else { block + 1 };
    (twist, base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    /// Independent route: the relations are exactly those of a crossed
    /// homomorphism, and `g(u(x)) ↦ g·x − g` in the group ring is the
    /// universal one. Two words are equal iff their images agree.
    fn augmentation_image(group: &FiniteGroup, w: &UnitWord) -> (Vec<i64>, Vec<(UnitSymbol, i64)>) {
        let n = group.order();
        let mut v = vec![0i64; n];
        let mut rest = Vec::new();
        for (s, p) in w.terms() {
            match s.tag {
                UnitTag::U(b) => {
                    v[group.mul(s.twist, b)] += p;
                    v[s.twist] -= p;
                }
                UnitTag::W(_) => rest.push((s, p)),
            }
        }
        (v, rest)
    }

    fn groups() -> Vec<Arc<FiniteGroup>> {
        [
            GroupSpec::Cyclic(2),
            GroupSpec::Cyclic(5),
            GroupSpec::Symmetric(3),
            GroupSpec::Dihedral(8),
        ]
        .iter()
        .map(|s| FiniteGroup::build(s).unwrap())
        .collect()
    }

    #[test]
    fn coordinates_round_trip() {
        for n in [1, 2, 5, 8] {
            for k in 0..n * n {
                let (t, b) = uncoord(n, k);
                assert_eq!(coord(n, t, b), k);
            }
        }
    }

    #[test]
    fn lattice_rank_is_n_squared_minus_n_plus_one() {
        for g in groups() {
            let n = g.order();
            let rel = UnitRelations::symbolic(&g).unwrap();
            let lat = rel.lattice().unwrap();
            assert_eq!(lat.rank(), n * n - (n - 1), "{}", g.name());
            // the quotient is free: all pivots are 1
            assert!(lat.pivots().iter().all(|&(_, d)| d == 1));
        }
    }

    #[test]
    fn single_relation_application() {
        for g in groups() {
            let rel = UnitRelations::symbolic(&g).unwrap();
            let n = g.order();
            for s in 0..n {
                for t in 0..n {
                    let lhs = UnitWord::symbol(UnitSymbol::u(g.mul(s, t)), 1);
                    let rhs = UnitWord::from_terms([
                        (UnitSymbol::u(s), 1),
                        (UnitSymbol::u(t).twisted(s), 1),
                    ]);
                    assert_eq!(rel.normalize(&lhs).unwrap(), rel.normalize(&rhs).unwrap());
                }
            }
        }
    }

    #[test]
    fn identity_and_w_symbols() {
        let g = &groups()[3];
        let rel = UnitRelations::symbolic(g).unwrap();
        assert!(UnitWord::symbol(UnitSymbol::u(0).twisted(3), 5).is_one());
        let w = UnitWord::from_terms([(UnitSymbol::w(3).twisted(2), 2), (UnitSymbol::w(1), -1)]);
        assert_eq!(rel.normalize(&w).unwrap(), w);
        assert_eq!(UnitRelations::Unramified.normalize(&w).unwrap(), w);
        let u = UnitWord::symbol(UnitSymbol::u(2), 3);
        assert!(UnitRelations::Unramified.normalize(&u).unwrap().is_one());
        assert!(!rel.normalize(&u).unwrap().is_one());
    }

    #[test]
    fn normal_form_agrees_with_augmentation_image() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in groups() {
            let n = g.order();
            let rel = UnitRelations::symbolic(&g).unwrap();
            for _ in 0..200 {
                let mut w = UnitWord::one();
                for _ in 0..rng.gen_range(0..6) {
                    let tag = if rng.gen_bool(0.8) {
                        UnitTag::U(rng.gen_range(0..n))
                    } else {
                        UnitTag::W(rng.gen_range(0..n))
                    };
                    let sym = UnitSymbol {
                        tag,
                        twist: rng.gen_range(0..n),
                    };
                    w.push(sym, rng.gen_range(-3..=3));
                }
                let nf = rel.normalize(&w).unwrap();
                assert_eq!(rel.normalize(&nf).unwrap(), nf, "idempotent");
                assert_eq!(augmentation_image(&g, &nf), augmentation_image(&g, &w));
                // normal form uses only untwisted u symbols
                assert!(nf
                    .terms()
                    .all(|(s, _)| matches!(s.tag, UnitTag::W(_)) || s.twist == 0));
                let is_one = nf.is_one();
                let (img, rest) = augmentation_image(&g, &w);
                assert_eq!(is_one, img.iter().all(|&x| x == 0) && rest.is_empty());
            }
        }
    }
}
