//! Acceptance checks 1-7.
//!
//! Runs without the libtest harness so each criterion prints exactly one
//! PASS/FAIL line. Exit status is non-zero if any criterion fails.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use slg_core::cocycle::{br_from_r, deflate_idempotent, epsilon_table, inflate_idempotent};
use slg_core::group::{quotient_group, FiniteGroup, GroupSpec, Subgroup};
use slg_core::order::CosetPoset;
use slg_core::slg::{enumerate_slg, inflate_r};
use slg_core::suite::{run_suite, SuiteConfig};
use slg_core::{IdempotentCocycle, SubadditiveFn};

/// Time limit for the single-example criteria.
const FAST: Duration = Duration::from_millis(100);
/// Time limit for the whole property suite.
const SUITE: Duration = Duration::from_secs(60);

const R1: [u32; 10] = [0, 2, 2, 3, 4, 5, 1, 2, 3, 4];

/// Exponents of ε_{r₁} over ℤ/10ℤ as printed (1 ↦ 0, π ↦ 1, π^k ↦ k).
const EPS_R1: [[i64; 10]; 10] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 1, 1, 1, 6, 1, 1, 1, 6],
    [0, 1, 0, 0, 5, 5, 0, 0, 5, 4],
    [0, 1, 0, 5, 5, 5, 0, 5, 4, 5],
    [0, 1, 5, 5, 5, 5, 5, 4, 5, 5],
    [0, 6, 5, 5, 5, 10, 4, 5, 5, 5],
    [0, 1, 0, 0, 5, 4, 0, 0, 0, 0],
    [0, 1, 0, 5, 4, 5, 0, 0, 0, 5],
    [0, 1, 5, 4, 5, 5, 0, 0, 5, 5],
    [0, 6, 4, 5, 5, 5, 0, 5, 5, 5],
];

/// Row/column order of the printed D₈ tables: 1, a², a, a³, σ, a²σ, aσ, a³σ.
const D8_PRINTED: [&str; 8] = ["1", "a2", "a", "a3", "s", "a2s", "as", "a3s"];

const E_RHAT: [[u8; 8]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0],
];

const EPS_RHAT: [[i64; 8]; 8] = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 2, 0, 0, 2, 2],
    [0, 0, 2, 2, 0, 0, 2, 2],
    [0, 0, 0, 0, 2, 2, 2, 2],
    [0, 0, 0, 0, 2, 2, 2, 2],
    [0, 0, 2, 2, 2, 2, 4, 4],
    [0, 0, 2, 2, 2, 2, 4, 4],
];

/// ε_r on D₈/{1,a²} in the order H, aH, σH, aσH.
const EPS_QUOTIENT: [[u8; 4]; 4] = [[1, 1, 1, 1], [1, 0, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(format!("{:.1} ms", took.as_secs_f64() * 1e3))
}

fn group(spec: GroupSpec) -> Arc<FiniteGroup> {
    FiniteGroup::build(&spec).expect("preset")
}

fn idx(g: &FiniteGroup, label: &str) -> usize {
    g.index_of(label)
        .unwrap_or_else(|| panic!("no element {label}"))
}

fn label_edges(g: &FiniteGroup, edges: &[(usize, usize)]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|&(x, y)| (g.label(x).to_string(), g.label(y).to_string()))
        .collect()
}

fn str_edges(edges: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|&(x, y)| (x.to_string(), y.to_string()))
        .collect()
}

fn golden_table() -> Outcome {
    let start = Instant::now();
    let g = group(GroupSpec::Cyclic(10));
    let r1 = SubadditiveFn::new(&g, R1.to_vec()).map_err(|e| e.to_string())?;
    let eps = epsilon_table(&r1);
    let bad: Vec<(usize, usize)> = (0..10)
        .flat_map(|s| (0..10).map(move |t| (s, t)))
        .filter(|&(s, t)| eps[s][t] != EPS_R1[s][t])
        .collect();
    ensure(bad.is_empty(), || format!("cells differ at {bad:?}"))?;
    Ok(format!("100/100 cells, {}", within(start, FAST)?))
}

fn golden_chain() -> Outcome {
    let start = Instant::now();
    let g = group(GroupSpec::Cyclic(10));
    let r = SubadditiveFn::from_generators(&g, &[1, 6]).map_err(|e| e.to_string())?;
    ensure(r.values() == [0, 1, 2, 3, 4, 5, 1, 2, 3, 4], || {
        format!("word length {:?}", r.values())
    })?;
    ensure(r.n1_set() == [1, 6], || format!("N1 = {:?}", r.n1_set()))?;
    let r1 = r.bump(1).map_err(|e| e.to_string())?;
    ensure(r1.values() == R1, || {
        format!("bump gives {:?}", r1.values())
    })?;
    let h = br_from_r(&r1).inertial_group().map_err(|e| e.to_string())?;
    ensure(h.members() == [0], || {
        format!("H(b_r1) = {:?}", h.members())
    })?;
    within(start, FAST)
}

fn golden_transforms() -> Outcome {
    let g = group(GroupSpec::Cyclic(10));
    let r1 = SubadditiveFn::new(&g, R1.to_vec()).map_err(|e| e.to_string())?;
    let half = r1.checked_halve().map_err(|e| e.to_string())?;
    let even = r1.checked_evenize().map_err(|e| e.to_string())?;
    ensure(half.values() == [0, 1, 1, 2, 2, 3, 1, 1, 2, 2], || {
        format!("halve {:?}", half.values())
    })?;
    ensure(even.values() == [0, 2, 2, 4, 4, 6, 2, 2, 4, 4], || {
        format!("evenize {:?}", even.values())
    })?;
    let ph = CosetPoset::from_r(&half).map_err(|e| e.to_string())?;
    let pe = CosetPoset::from_r(&even).map_err(|e| e.to_string())?;
    ensure(ph == pe, || "posets of halve and evenize differ".into())?;
    let covers = ph.hasse();
    let expected = str_edges(&[
        ("0", "1"),
        ("0", "2"),
        ("0", "6"),
        ("0", "7"),
        ("1", "3"),
        ("1", "8"),
        ("6", "3"),
        ("6", "8"),
        ("2", "3"),
        ("2", "4"),
        ("2", "8"),
        ("2", "9"),
        ("7", "3"),
        ("7", "4"),
        ("7", "8"),
        ("7", "9"),
        ("3", "5"),
        ("4", "5"),
        ("8", "5"),
        ("9", "5"),
    ]);
    let got = label_edges(&g, covers.covers());
    ensure(got == expected, || format!("covers {got:?}"))?;
    Ok(format!("common poset, {} covers", got.len()))
}

fn golden_d8() -> Outcome {
    let start = Instant::now();
    let g = group(GroupSpec::Dihedral(8));
    let n = Subgroup::closure(&g, &[idx(&g, "a2")]).map_err(|e| e.to_string())?;
    let q = quotient_group(&n).map_err(|e| e.to_string())?;
    let qg = q.group();
    let r = SubadditiveFn::from_generators(qg, &[idx(qg, "aH"), idx(qg, "sH")])
        .map_err(|e| e.to_string())?;
    ensure(r.values() == [0, 1, 1, 2], || {
        format!("quotient r {:?}", r.values())
    })?;
    let r_hat = inflate_r(&n, &r).map_err(|e| e.to_string())?;
    ensure(r_hat.values() == [0, 1, 0, 1, 1, 2, 1, 2], || {
        format!("r̂ {:?}", r_hat.values())
    })?;

    let order: Vec<usize> = D8_PRINTED.iter().map(|l| idx(&g, l)).collect();
    let e = IdempotentCocycle::from_r(&r_hat);
    let eps = epsilon_table(&r_hat);
    for (i, &s) in order.iter().enumerate() {
        for (j, &t) in order.iter().enumerate() {
            ensure(e.get(s, t) == (E_RHAT[i][j] == 1), || {
                format!("e_r̂ differs at ({}, {})", D8_PRINTED[i], D8_PRINTED[j])
            })?;
            ensure(eps[s][t] == EPS_RHAT[i][j], || {
                format!("ε_r̂ differs at ({}, {})", D8_PRINTED[i], D8_PRINTED[j])
            })?;
        }
    }

    let down = deflate_idempotent(&e, &n).map_err(|e| e.to_string())?;
    let quotient_labels: Vec<&str> = qg.labels().iter().map(String::as_str).collect();
    ensure(quotient_labels == ["H", "aH", "sH", "asH"], || {
        format!("quotient labels {quotient_labels:?}")
    })?;
    for i in 0..4 {
        for j in 0..4 {
            ensure(down.get(i, j) == (EPS_QUOTIENT[i][j] == 1), || {
                format!("deflated table differs at ({i}, {j})")
            })?;
        }
    }
    ensure(down == IdempotentCocycle::from_r(&r), || {
        "deflation is not ε_r".into()
    })?;
    let up = inflate_idempotent(&down, &n).map_err(|e| e.to_string())?;
    ensure(up == e, || "inflate ∘ deflate is not the identity".into())?;
    within(start, FAST)
}

fn golden_graphs() -> Outcome {
    let z10 = group(GroupSpec::Cyclic(10));
    let r1 = SubadditiveFn::new(&z10, R1.to_vec()).map_err(|e| e.to_string())?;
    let h1 = CosetPoset::from_r(&r1).map_err(|e| e.to_string())?.hasse();
    let fig1 = str_edges(&[
        ("0", "1"),
        ("0", "6"),
        ("0", "7"),
        ("6", "2"),
        ("6", "3"),
        ("7", "3"),
        ("7", "4"),
        ("2", "8"),
        ("2", "9"),
        ("3", "9"),
        ("8", "4"),
        ("8", "5"),
        ("9", "5"),
    ]);
    let got1 = label_edges(&z10, h1.covers());
    ensure(got1 == fig1, || format!("ℤ/10 covers {got1:?}"))?;

    let d8 = group(GroupSpec::Dihedral(8));
    let r_hat = SubadditiveFn::new(&d8, vec![0, 1, 0, 1, 1, 2, 1, 2]).map_err(|e| e.to_string())?;
    let h2 = CosetPoset::from_r(&r_hat)
        .map_err(|e| e.to_string())?
        .hasse();
    let p = h2.poset();
    let got2: BTreeSet<(String, String)> = h2
        .covers()
        .iter()
        .map(|&(x, y)| (p.label(x), p.label(y)))
        .collect();
    let fig2 = str_edges(&[("H", "aH"), ("H", "sH"), ("aH", "asH"), ("sH", "asH")]);
    ensure(got2 == fig2 && p.len() == 4, || {
        format!("coset covers {got2:?}")
    })?;

    let got3 = label_edges(&d8, &h2.expanded_covers());
    let mut fig3 = Vec::new();
    for low in ["1", "a2"] {
        for mid in ["s", "a2s", "a", "a3"] {
            fig3.push((low, mid));
        }
    }
    for mid in ["s", "a2s", "a", "a3"] {
        for top in ["as", "a3s"] {
            fig3.push((mid, top));
        }
    }
    ensure(got3 == str_edges(&fig3), || {
        format!("expanded covers {got3:?}")
    })?;
    Ok(format!(
        "{} + {} + {} edges",
        got1.len(),
        got2.len(),
        got3.len()
    ))
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let cfg = SuiteConfig::default();
    let groups = [
        GroupSpec::Cyclic(2),
        GroupSpec::Cyclic(3),
        GroupSpec::Cyclic(4),
        GroupSpec::Cyclic(5),
        GroupSpec::Cyclic(6),
        GroupSpec::Symmetric(3),
        GroupSpec::Dihedral(8),
    ];
    let mut functions = 0;
    let mut checks = 0;
    for spec in groups {
        let g = group(spec);
        let report = run_suite(&g, &cfg).map_err(|e| e.to_string())?;
        print!("{report}");
        ensure(report.passed(), || format!("{} failed", report.group))?;
        functions += report.functions;
        checks += report.items.iter().map(|i| i.checks).sum::<usize>();
    }
    let t = within(start, SUITE)?;
    Ok(format!("{functions} functions, {checks} checks, {t}"))
}

fn oracle_counts() -> Outcome {
    let c2 = enumerate_slg(&group(GroupSpec::Cyclic(2)), 2).map_err(|e| e.to_string())?;
    let c3 = enumerate_slg(&group(GroupSpec::Cyclic(3)), 1).map_err(|e| e.to_string())?;
    ensure(c2.len() == 3 && c3.len() == 2, || {
        format!("counts {} and {}", c2.len(), c3.len())
    })?;
    let c3_values: Vec<&[u32]> = c3.iter().map(|r| r.values()).collect();
    ensure(c3_values == [&[0, 0, 0][..], &[0, 1, 1][..]], || {
        format!("C3 functions {c3_values:?}")
    })?;
    Ok("C2: 3, C3: 2".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 7] = [
        ("golden ε table over ℤ/10", golden_table),
        ("construction chain over ℤ/10", golden_chain),
        ("halve / evenize and their common poset", golden_transforms),
        ("D8 lifting example", golden_d8),
        ("Hasse diagrams", golden_graphs),
        ("exhaustive property suite", property_suite),
        ("enumeration oracle counts", oracle_counts),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
