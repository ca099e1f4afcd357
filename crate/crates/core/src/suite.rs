//! Exhaustive property suite over every element of Sl(G) up to a bound.
//!
//! Each item checks one family of statements for every enumerated `r` (or
//! every pair, for the product law, a seeded random sample of pairs). Work
//! is spread over rayon workers; the report is assembled in enumeration
//! order, so two runs with the same seed print the same thing.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cocycle::{
    br_from_r, coboundary_from_seed, deflate_idempotent, inflate_idempotent, CoboundarySeed,
    IdempotentCocycle, UnitRelations, ValuedCocycle, VerifyLevel,
};
use crate::group::{double_coset, quotient_group, FiniteGroup, Subgroup};
use crate::order::CosetPoset;
use crate::slg::{enumerate_slg, inflate_r, SlgError, SubadditiveFn};

/// Failures kept per item; the count is always exact.
const KEEP: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    /// `e_r` and `b_r` satisfy the cocycle identity (strict for `b_r`).
    CocycleIdentity,
    /// `H(e_r) = H(b_r) = M_r`.
    InertialGroups,
    /// `r ↦` defect table is injective.
    DefectInjective,
    /// `v(b(σ,τ)) + v(b(τ^-1,σ^-1)) = r_f(σ) + r_f(τ) − r_f(στ)`.
    ValuationIdentity,
    /// `H(b) ≠ G` implies the hereditary test fails.
    NonHereditary,
    /// Seed round trip through `decompose` and `b_r b_s = c · b_(r+s)`.
    Decomposition,
    /// `r_f` is symmetric under inversion and `M_(r_f) = H(f)`.
    RfProperties,
    /// Partner for `halve(r_f)` has anti-diagonal exponents in `{0,1}`.
    BoundedPartner,
    /// Deflation succeeds iff `N ⊆ H(e)`; coset invariance; round trips.
    Inflation,
    /// Coset posets are lower subtractive and consistent.
    Posets,
    /// bump / halve / evenize / add stay in Sl(G) and keep `M_r`.
    Transforms,
}

impl Item {
    pub const ALL: [Item; 11] = [
        Item::CocycleIdentity,
        Item::InertialGroups,
        Item::DefectInjective,
        Item::ValuationIdentity,
        Item::NonHereditary,
        Item::Decomposition,
        Item::RfProperties,
        Item::BoundedPartner,
        Item::Inflation,
        Item::Posets,
        Item::Transforms,
    ];

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn title(self) -> &'static str {
        match self {
            Item::CocycleIdentity => "cocycle identity for e_r and b_r",
            Item::InertialGroups => "inertial groups equal M_r",
            Item::DefectInjective => "defect table determines r",
            Item::ValuationIdentity => "valuation identity",
            Item::NonHereditary => "non-trivial inertia is not hereditary",
            Item::Decomposition => "decomposition and product law",
            Item::RfProperties => "r_f symmetry and M_(r_f) = H(f)",
            Item::BoundedPartner => "bounded partner cocycle",
            Item::Inflation => "inflation criterion and invariance",
            Item::Posets => "lower subtractive coset posets",
            Item::Transforms => "Sl(G) transforms",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub maxval: u32,
    pub seed: u64,
    /// Random `(r, s)` pairs for the product law.
    pub pair_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            maxval: 3,
            seed: 0x5eed,
            pair_samples: 200,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemReport {
    pub item: Item,
    pub checks: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl ItemReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub group: String,
    pub functions: usize,
    pub normal_subgroups: usize,
    pub items: Vec<ItemReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(ItemReport::passed)
    }

    pub fn item(&self, item: Item) -> &ItemReport {
        &self.items[item as usize]
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} functions, {} normal subgroups",
            self.group, self.functions, self.normal_subgroups
        )?;
        for it in &self.items {
            let status = if it.passed() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "  ({}) {:<40} {:>8} checks  {}",
                it.item.letter(),
                it.item.title(),
                it.checks,
                status
            )?;
            for w in &it.witnesses {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checks: [usize; Item::ALL.len()],
    failures: [usize; Item::ALL.len()],
    witnesses: [Vec<String>; Item::ALL.len()],
}

impl Tally {
    fn check(&mut self, item: Item, ok: bool, witness: impl FnOnce() -> String) {
        let i = item as usize;
        self.checks[i] += 1;
        if !ok {
            self.failures[i] += 1;
            if self.witnesses[i].len() < KEEP {
                self.witnesses[i].push(witness());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..Item::ALL.len() {
            self.checks[i] += other.checks[i];
            self.failures[i] += other.failures[i];
            let room = KEEP.saturating_sub(self.witnesses[i].len());
            self.witnesses[i].extend(other.witnesses[i].iter().take(room).cloned());
        }
        self
    }
}

struct Context {
    group: Arc<FiniteGroup>,
    relations: UnitRelations,
    normals: Vec<Subgroup>,
}

/// Every normal subgroup, sorted by member list. Generating pairs suffice
/// for all groups the suite is meant for; larger ones fall back to triples.
pub fn normal_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut add = |seed: &[usize]| {
        let h = Subgroup::closure(g, seed).expect("indices in range");
        if seen.insert(h.members().to_vec()) && h.is_normal() {
            out.push(h);
        }
    };
    for a in 0..n {
        for b in a..n {
            add(&[a, b]);
        }
    }
    if n > 16 {
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    add(&[a, b, c]);
                }
            }
        }
    }
    out.sort_by(|x, y| x.members().cmp(y.members()));
    out
}

fn name(r: &SubadditiveFn) -> String {
    format!("r = {:?}", r.values())
}

fn approx_equal(
    rel: &UnitRelations,
    a: &ValuedCocycle,
    b: &ValuedCocycle,
) -> Result<bool, crate::cocycle::CocycleError> {
    let n = a.group().order();
    for s in 0..n {
        for t in 0..n {
            match (a.get(s, t).monomial(), b.get(s, t).monomial()) {
                (None, None) => {}
                (Some(x), Some(y)) => {
                    if x.exp != y.exp || !rel.equal(&x.unit, &y.unit)? {
                        return Ok(false);
                    }
                }
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

fn check_one(ctx: &Context, r: &SubadditiveFn) -> Tally {
    let mut t = Tally::default();
    let g = &ctx.group;
    let n = g.order();
    let rel = &ctx.relations;
    let who = name(r);

    let m_r = r.m_subgroup().expect("valid r");
    let e = IdempotentCocycle::from_r(r);
    let b = br_from_r(r);

    // (a)
    let ev = e.verify();
    t.check(Item::CocycleIdentity, ev.is_empty(), || {
        format!("{who}: e_r {:?}", ev.first())
    });
    let bv = b.verify(VerifyLevel::Strict, rel);
    t.check(
        Item::CocycleIdentity,
        matches!(&bv, Ok(v) if v.is_empty()),
        || format!("{who}: b_r {bv:?}"),
    );
    let doubled = r.add(r).expect("same group");
    t.check(
        Item::CocycleIdentity,
        IdempotentCocycle::from_r(&doubled) == e,
        || format!("{who}: e_r differs from e_(2r)"),
    );

    // (b)
    let he = e.inertial_group();
    t.check(Item::InertialGroups, he.as_ref().ok() == Some(&m_r), || {
        format!("{who}: H(e_r) = {he:?}")
    });
    let hb = b.inertial_group();
    t.check(Item::InertialGroups, hb.as_ref().ok() == Some(&m_r), || {
        format!("{who}: H(b_r) = {hb:?}")
    });

    // (g), also feeding (d), (h)
    let rf = match b.rf() {
        Ok(rf) => rf,
        Err(err) => {
            t.check(Item::RfProperties, false, || format!("{who}: r_f {err}"));
            return t;
        }
    };
    let sym = (0..n).all(|s| rf.value(s) == rf.value(g.inv(s)));
    t.check(Item::RfProperties, sym, || {
        format!("{who}: r_f not symmetric")
    });
    t.check(
        Item::RfProperties,
        rf.m_subgroup().ok().as_ref() == Some(&m_r),
        || format!("{who}: M_(r_f) differs from H(b_r)"),
    );

    // (d)
    let mut lemma = true;
    for s in 0..n {
        for u in 0..n {
            let lhs = b.get(s, u).exp().unwrap() + b.get(g.inv(u), g.inv(s)).exp().unwrap();
            let rhs = i64::from(rf.defect(s, u));
            if lhs != rhs {
                lemma = false;
                t.check(Item::ValuationIdentity, false, || {
                    format!("{who}: (σ,τ) = ({s},{u}) gives {lhs} vs {rhs}")
                });
            }
        }
    }
    if lemma {
        t.check(Item::ValuationIdentity, true, String::new);
    }

    // (e), (f) with a seed carrying free unit parts
    let exps: Vec<i64> = r.values().iter().map(|&v| i64::from(v)).collect();
    let w_seed = CoboundarySeed::from_w_units(g, &exps).expect("normalized seed");
    let bw = coboundary_from_seed(&w_seed).expect("subadditive exponents");
    for (label, coc) in [("b_r", &b), ("w-seeded b", &bw)] {
        let whole = coc.inertial_group().map(|h| h.is_whole()).unwrap_or(false);
        t.check(
            Item::NonHereditary,
            whole || !coc.hereditary_criterion(),
            || format!("{who}: {label} hereditary with H ≠ G"),
        );
    }
    match bw.decompose(rel) {
        Ok((c, rr)) => {
            let unit_only = c.rows().iter().flatten().all(|x| x.exp() == Some(0));
            let c_ok = matches!(c.verify(VerifyLevel::Strict, rel), Ok(v) if v.is_empty());
            t.check(Item::Decomposition, rr == *r && unit_only && c_ok, || {
                format!("{who}: decomposition returned {:?}", rr.values())
            });
        }
        Err(err) => t.check(Item::Decomposition, false, || format!("{who}: {err}")),
    }

    // (h), plus integrality of the unbounded partner
    match b.partner_h(&rf) {
        Ok(h) => t.check(
            Item::BoundedPartner,
            h.rows()
                .iter()
                .flatten()
                .all(|x| x.exp().is_some_and(|k| k >= 0)),
            || format!("{who}: partner for r_f leaves S*"),
        ),
        Err(err) => t.check(Item::BoundedPartner, false, || format!("{who}: {err}")),
    }
    let half = rf.halve();
    match b.partner_h(&half) {
        Ok(h) => {
            let bounded = (0..n).all(|s| matches!(h.get(s, g.inv(s)).exp(), Some(0 | 1)));
            t.check(Item::BoundedPartner, bounded, || {
                format!("{who}: anti-diagonal of h outside {{0,1}}")
            });
            let fh = b.product(&h).expect("same group");
            let ok = approx_equal(rel, &fh, &br_from_r(&half)).unwrap_or(false);
            t.check(Item::BoundedPartner, ok, || {
                format!("{who}: f·h ≠ b_(r_f/2)")
            });
        }
        Err(err) => t.check(Item::BoundedPartner, false, || format!("{who}: {err}")),
    }

    // (i)
    for nn in &ctx.normals {
        let inside = nn.is_subset_of(&m_r);
        match deflate_idempotent(&e, nn) {
            Ok(eps) => {
                t.check(Item::Inflation, inside, || {
                    format!("{who}: deflated along {:?} outside H", nn.members())
                });
                let back = inflate_idempotent(&eps, nn);
                t.check(Item::Inflation, back.as_ref().ok() == Some(&e), || {
                    format!("{who}: inflate ∘ deflate ≠ id along {:?}", nn.members())
                });
                let mut invariant = true;
                'outer: for s in 0..n {
                    for u in 0..n {
                        for &n1 in nn.members() {
                            for &n2 in nn.members() {
                                if e.get(s, u) != e.get(g.mul(s, n1), g.mul(u, n2)) {
                                    invariant = false;
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
                t.check(Item::Inflation, invariant, || {
                    format!("{who}: e not constant on N-cosets for {:?}", nn.members())
                });
            }
            Err(err) => t.check(Item::Inflation, !inside, || {
                format!("{who}: deflation along {:?} refused: {err}", nn.members())
            }),
        }
    }

    // (j)
    match CosetPoset::from_r(r) {
        Ok(p) => {
            t.check(Item::Posets, p.verify().is_empty(), || {
                format!("{who}: poset axioms")
            });
            let heights = p.heights();
            let c = p.cosets();
            let bounded = (0..n).all(|s| heights[c.coset_of(s)] as u32 <= r.value(s));
            t.check(Item::Posets, bounded, || format!("{who}: height exceeds r"));
            t.check(Item::Posets, p.hasse().closure() == p.relation(), || {
                format!("{who}: Hasse closure differs")
            });
        }
        Err(err) => t.check(Item::Posets, false, || format!("{who}: {err}")),
    }

    // transforms
    for a in r.n1_set() {
        let dc = double_coset(&m_r, a).expect("in range");
        let n1 = r.n1_set();
        t.check(Item::Transforms, dc.iter().all(|x| n1.contains(x)), || {
            format!("{who}: N1 not a union of double cosets at {a}")
        });
        let bumped = r.bump(a);
        t.check(
            Item::Transforms,
            bumped.and_then(|x| x.m_subgroup()).ok().as_ref() == Some(&m_r),
            || format!("{who}: bump at {a}"),
        );
    }
    let h = r.checked_halve();
    let ev = r.checked_evenize();
    let ok = match (&h, &ev) {
        (Ok(h), Ok(ev)) => h.add(h).ok().as_ref() == Some(ev),
        _ => false,
    };
    t.check(Item::Transforms, ok, || {
        format!("{who}: halve/evenize {h:?} {ev:?}")
    });
    t
}

/// Product law on sampled pairs.
fn check_pairs(ctx: &Context, fns: &[SubadditiveFn], cfg: &SuiteConfig) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(usize, usize)> = (0..cfg.pair_samples)
        .map(|_| (rng.gen_range(0..fns.len()), rng.gen_range(0..fns.len())))
        .collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut t = Tally::default();
            let (r, s) = (&fns[i], &fns[j]);
            let sum = r.add(s).expect("same group");
            let prod = br_from_r(r).product(&br_from_r(s)).expect("same group");
            let ok = match prod.decompose(&ctx.relations) {
                Ok((_, rr)) => rr == sum,
                Err(_) => false,
            };
            t.check(Item::Decomposition, ok, || {
                format!("product law for {:?} + {:?}", r.values(), s.values())
            });
            t.check(Item::Posets, CosetPoset::from_r(&sum).is_ok(), || {
                format!("poset of {:?}", sum.values())
            });
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Inflation from each quotient: every `r` on `G/N` with trivial `M_r`
/// inflates to a cocycle with inertial group `N` that deflates back.
fn check_quotients(ctx: &Context, cfg: &SuiteConfig) -> Result<Tally, SlgError> {
    let mut t = Tally::default();
    for nn in &ctx.normals {
        let q = quotient_group(nn)?;
        for rq in enumerate_slg(q.group(), cfg.maxval)? {
            if !rq.m_subgroup()?.is_trivial() {
                continue;
            }
            let who = format!("N = {:?}, r = {:?}", nn.members(), rq.values());
            let eps = IdempotentCocycle::from_r(&rq);
            let e = match inflate_idempotent(&eps, nn) {
                Ok(e) => e,
                Err(err) => {
                    t.check(Item::Inflation, false, || format!("{who}: {err}"));
                    continue;
                }
            };
            t.check(
                Item::Inflation,
                e.inertial_group().ok().as_ref() == Some(nn),
                || format!("{who}: inflated inertial group differs from N"),
            );
            let back = deflate_idempotent(&e, nn);
            t.check(Item::Inflation, back.ok().as_ref() == Some(&eps), || {
                format!("{who}: deflate ∘ inflate ≠ id")
            });
            let lifted = inflate_r(nn, &rq)?;
            t.check(
                Item::Inflation,
                IdempotentCocycle::from_r(&lifted) == e,
                || format!("{who}: e of the inflated r differs from the inflated e"),
            );
        }
    }
    Ok(t)
}

/// Run every item for one group.
pub fn run_suite(group: &Arc<FiniteGroup>, cfg: &SuiteConfig) -> Result<SuiteReport, SlgError> {
    let fns = enumerate_slg(group, cfg.maxval)?;
    let relations = UnitRelations::symbolic(group)
        .map_err(|e| SlgError::InternalInconsistency(format!("relation lattice: {e}")))?;
    let ctx = Context {
        group: Arc::clone(group),
        relations,
        normals: normal_subgroups(group),
    };

    let mut tally = fns
        .par_iter()
        .map(|r| check_one(&ctx, r))
        .reduce(Tally::default, Tally::merge);

    let mut tables = HashSet::new();
    for r in &fns {
        let fresh = tables.insert(r.defect_table().rows().to_vec());
        tally.check(Item::DefectInjective, fresh, || {
            format!("defect table of {:?} already seen", r.values())
        });
    }

    if !fns.is_empty() {
        tally = tally.merge(check_pairs(&ctx, &fns, cfg));
    }
    tally = tally.merge(check_quotients(&ctx, cfg)?);

    let items = Item::ALL
        .iter()
        .map(|&item| {
            let i = item as usize;
            ItemReport {
                item,
                checks: tally.checks[i],
                failures: tally.failures[i],
                witnesses: tally.witnesses[i].clone(),
            }
        })
        .collect();
    Ok(SuiteReport {
        group: group.name().to_string(),
        functions: fns.len(),
        normal_subgroups: ctx.normals.len(),
        items,
    })
}
