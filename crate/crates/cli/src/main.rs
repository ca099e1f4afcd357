mod args;

use std::fmt;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;

use slg_core::cocycle::{deflate_idempotent, epsilon_table, inflate_idempotent, VerifyLevel};
use slg_core::format::{
    self, cocycle_from_json, group_from_json, poset_from_json, r_from_json, AnyCocycle,
    FormatError, GroupDoc,
};
use slg_core::group::{quotient_group, verify_group_axioms, FiniteGroup};
use slg_core::order::{CosetPoset, DotMode};
use slg_core::suite::{run_suite, SuiteConfig};
use slg_core::{
    CocycleError, GroupSpec, IdempotentCocycle, SubadditiveFn, Subgroup, UnitRelations,
    ValuedCocycle,
};

use args::*;

/// Exit 1: a check failed or the mathematics refused. Exit 2: bad input.
enum Exit {
    Failed(String),
    BadInput(String),
}

type Res<T> = Result<T, Exit>;

fn failed<E: fmt::Display + fmt::Debug>(e: E) -> Exit {
    Exit::Failed(format!("{e}\nwitness: {e:?}"))
}

fn bad_input(e: impl fmt::Display) -> Exit {
    Exit::BadInput(e.to_string())
}

fn from_format(e: FormatError) -> Exit {
    match &e {
        FormatError::Json(_)
        | FormatError::Io { .. }
        | FormatError::WrongKind { .. }
        | FormatError::CosetMismatch
        | FormatError::Group(_)
        | FormatError::Cocycle(
            CocycleError::ShapeMismatch { .. }
            | CocycleError::SymbolOutOfRange
            | CocycleError::SeedNotNormalized,
        ) => bad_input(e),
        _ => failed(e),
    }
}

/// Document text plus the directory relative group paths resolve against.
fn read_input(input: &Input) -> Res<(String, PathBuf)> {
    match input.file.as_deref() {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| bad_input(format!("cannot read {}: {e}", p.display())))?;
            let base = p.parent().map(Path::to_path_buf).unwrap_or_default();
            Ok((text, base))
        }
    }
}

fn read_stdin() -> Res<(String, PathBuf)> {
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| bad_input(format!("cannot read stdin: {e}")))?;
    Ok((text, PathBuf::from(".")))
}

fn read_group(input: &Input) -> Res<Arc<FiniteGroup>> {
    let (text, _) = read_input(input)?;
    group_from_json(&text).map_err(from_format)
}

fn read_group_file(path: &Path) -> Res<Arc<FiniteGroup>> {
    read_group(&Input {
        file: Some(path.to_path_buf()),
    })
}

fn read_r(input: &Input) -> Res<SubadditiveFn> {
    let (text, base) = read_input(input)?;
    r_from_json(&text, &base).map_err(from_format)
}

fn read_cocycle(input: &Input) -> Res<AnyCocycle> {
    let (text, base) = read_input(input)?;
    cocycle_from_json(&text, &base).map_err(from_format)
}

fn read_idempotent(input: &Input) -> Res<IdempotentCocycle> {
    match read_cocycle(input)? {
        AnyCocycle::Idempotent(e) => Ok(e),
        AnyCocycle::Valued(_) => Err(from_format(FormatError::WrongKind {
            expected: "idempotent cocycle",
            got: "valued cocycle".into(),
        })),
    }
}

fn read_valued(input: &Input) -> Res<ValuedCocycle> {
    match read_cocycle(input)? {
        AnyCocycle::Valued(f) => Ok(f),
        AnyCocycle::Idempotent(_) => Err(from_format(FormatError::WrongKind {
            expected: "valued cocycle",
            got: "idempotent cocycle".into(),
        })),
    }
}

/// An element given by label, or by index if no label matches.
fn element(g: &FiniteGroup, s: &str) -> Res<usize> {
    let s = s.trim();
    if let Some(i) = g.index_of(s) {
        return Ok(i);
    }
    match s.parse::<usize>() {
        Ok(i) if i < g.order() => Ok(i),
        _ => Err(bad_input(format!(
            "{s:?} is not an element of {}",
            g.name()
        ))),
    }
}

fn elements(g: &FiniteGroup, list: &[String]) -> Res<Vec<usize>> {
    list.iter().map(|s| element(g, s)).collect()
}

fn closure(g: &Arc<FiniteGroup>, seed: &[String]) -> Res<Subgroup> {
    let seed = elements(g, seed)?;
    Subgroup::closure(g, &seed).map_err(failed)
}

fn label_set(g: &FiniteGroup, xs: &[usize]) -> String {
    let labels: Vec<&str> = xs.iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn relations(g: &Arc<FiniteGroup>, unramified: bool) -> Res<UnitRelations> {
    if unramified {
        Ok(UnitRelations::Unramified)
    } else {
        UnitRelations::symbolic(g).map_err(failed)
    }
}

fn preset(p: Preset, n: usize) -> Res<Arc<FiniteGroup>> {
    let spec = match p {
        Preset::Cyclic => GroupSpec::Cyclic(n),
        Preset::Dihedral => GroupSpec::Dihedral(n),
        Preset::Symmetric => GroupSpec::Symmetric(n),
    };
    FiniteGroup::build(&spec).map_err(bad_input)
}

fn out(text: &str) -> Res<()> {
    let mut stdout = io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| bad_input(format!("cannot write output: {e}")))
}

fn run_group(cmd: GroupCmd) -> Res<()> {
    match cmd {
        GroupCmd::Make { preset: p, n } => out(&format::group_to_json(&*preset(p, n)?)),
        GroupCmd::Verify(input) => {
            let (text, _) = read_input(&input)?;
            let doc: GroupDoc = serde_json::from_str(&text).map_err(bad_input)?;
            let violations = verify_group_axioms(&doc.table);
            if violations.is_empty() && doc.elements.len() == doc.table.len() {
                return out(&format!(
                    "ok: {} is a group of order {}\n",
                    doc.name,
                    doc.table.len()
                ));
            }
            let mut msg = format!("{} is not a group", doc.name);
            if doc.elements.len() != doc.table.len() {
                msg.push_str(&format!(
                    "\n{} labels for a table of order {}",
                    doc.elements.len(),
                    doc.table.len()
                ));
            }
            for v in &violations {
                msg.push_str(&format!("\n{v}"));
            }
            Err(Exit::Failed(msg))
        }
        GroupCmd::Quotient { input, normal } => {
            let g = read_group(&input)?;
            let n = closure(&g, &normal)?;
            let q = quotient_group(&n).map_err(failed)?;
            out(&format::group_to_json(q.group()))
        }
    }
}

fn run_r(cmd: RCmd) -> Res<()> {
    match cmd {
        RCmd::FromGens { input, gens } => {
            let g = read_group(&input)?;
            let gens = elements(&g, &gens)?;
            let r = SubadditiveFn::from_generators(&g, &gens).map_err(failed)?;
            out(&format::r_to_json(&r))
        }
        RCmd::Validate(input) => {
            let r = read_r(&input)?;
            let g = r.group();
            let m = r.m_subgroup().map_err(failed)?;
            out(&format!(
                "valid: r = {:?}\nM_r = {}\nN1 = {}\n",
                r.values(),
                label_set(g, m.members()),
                label_set(g, &r.n1_set())
            ))
        }
        RCmd::Transform {
            input,
            op,
            at,
            parent,
            normal,
        } => {
            let r = read_r(&input)?;
            let result = match op {
                TransformOp::Bump => {
                    let at = at.ok_or_else(|| bad_input("bump needs --at"))?;
                    let a = element(r.group(), &at)?;
                    r.bump(a).map_err(failed)?
                }
                TransformOp::Halve => r.halve(),
                TransformOp::Evenize => r.evenize(),
                TransformOp::Inflate => {
                    let parent = parent.ok_or_else(|| bad_input("inflate needs --parent"))?;
                    if normal.is_empty() {
                        return Err(bad_input("inflate needs --normal"));
                    }
                    let g = read_group_file(&parent)?;
                    let n = closure(&g, &normal)?;
                    slg_core::slg::inflate_r(&n, &r).map_err(failed)?
                }
            };
            out(&format::r_to_json(&result))
        }
        RCmd::Enumerate { input, max } => {
            let g = read_group(&input)?;
            let all = slg_core::slg::enumerate_slg(&g, max).map_err(failed)?;
            let text: String = all.iter().map(format::r_to_json).collect();
            out(&text)
        }
    }
}

fn run_cocycle(cmd: CocycleCmd) -> Res<()> {
    match cmd {
        CocycleCmd::Er(input) => out(&format::idempotent_to_json(&IdempotentCocycle::from_r(
            &read_r(&input)?,
        ))),
        CocycleCmd::Br(input) => out(&format::valued_to_json(&slg_core::cocycle::br_from_r(
            &read_r(&input)?,
        ))),
        CocycleCmd::EpsTable { input, raw } => {
            let r = read_r(&input)?;
            let exps: Vec<Vec<Option<i64>>> = epsilon_table(&r)
                .into_iter()
                .map(|row| row.into_iter().map(Some).collect())
                .collect();
            out(&format::exponent_table(r.group(), &exps, raw))
        }
        CocycleCmd::Show(input) => match read_cocycle(&input)? {
            AnyCocycle::Idempotent(e) => out(&format::idempotent_table(&e)),
            AnyCocycle::Valued(f) => out(&format::valued_table(&f)),
        },
        CocycleCmd::Verify {
            input,
            level,
            unramified,
        } => {
            let violations = match read_cocycle(&input)? {
                AnyCocycle::Idempotent(e) => e.verify(),
                AnyCocycle::Valued(f) => {
                    let rel = relations(f.group(), unramified)?;
                    let level = match level {
                        Level::Valuation => VerifyLevel::Valuation,
                        Level::Strict => VerifyLevel::Strict,
                    };
                    f.verify(level, &rel).map_err(failed)?
                }
            };
            if violations.is_empty() {
                out("ok\n")
            } else {
                let lines: Vec<String> = violations.iter().map(|v| format!("{v:?}")).collect();
                Err(Exit::Failed(format!(
                    "{} violation(s)\n{}",
                    violations.len(),
                    lines.join("\n")
                )))
            }
        }
        CocycleCmd::Decompose {
            input,
            c_out,
            unramified,
        } => {
            let f = read_valued(&input)?;
            let rel = relations(f.group(), unramified)?;
            let (c, r) = f.decompose(&rel).map_err(failed)?;
            if let Some(path) = c_out {
                std::fs::write(&path, format::valued_to_json(&c))
                    .map_err(|e| bad_input(format!("cannot write {}: {e}", path.display())))?;
            }
            out(&format::r_to_json(&r))
        }
        CocycleCmd::Hereditary(input) => {
            let f = read_valued(&input)?;
            out(&format!("{}\n", f.hereditary_criterion()))
        }
        CocycleCmd::Rf(input) => {
            let f = read_valued(&input)?;
            out(&format::r_to_json(&f.rf().map_err(failed)?))
        }
        CocycleCmd::Partner { input, r } => {
            let f = read_valued(&input)?;
            let rf = f.rf().map_err(failed)?;
            let target = match r {
                PartnerR::Rf => rf,
                PartnerR::Half => rf.halve(),
            };
            out(&format::valued_to_json(
                &f.partner_h(&target).map_err(failed)?,
            ))
        }
        CocycleCmd::Inflate {
            input,
            parent,
            normal,
        } => {
            let eps = read_idempotent(&input)?;
            let g = read_group_file(&parent)?;
            let n = closure(&g, &normal)?;
            let e = inflate_idempotent(&eps, &n).map_err(failed)?;
            out(&format::idempotent_to_json(&e))
        }
        CocycleCmd::Deflate { input, normal } => {
            let e = read_idempotent(&input)?;
            let n = closure(e.group(), &normal)?;
            let eps = deflate_idempotent(&e, &n).map_err(failed)?;
            out(&format::idempotent_to_json(&eps))
        }
    }
}

fn run_poset(cmd: PosetCmd) -> Res<()> {
    match cmd {
        PosetCmd::FromR(input) => {
            let p = CosetPoset::from_r(&read_r(&input)?).map_err(failed)?;
            out(&format::poset_to_json(&p))
        }
        PosetCmd::FromE(input) => {
            let p = CosetPoset::from_idempotent(&read_idempotent(&input)?).map_err(failed)?;
            out(&format::poset_to_json(&p))
        }
        PosetCmd::Verify(input) => {
            let (text, base) = read_input(&input)?;
            let p = poset_from_json(&text, &base).map_err(from_format)?;
            let v = p.verify();
            if v.is_empty() {
                out("ok\n")
            } else {
                let lines: Vec<String> = v.iter().map(|x| format!("{x:?}")).collect();
                Err(Exit::Failed(format!(
                    "{} violation(s)\n{}",
                    v.len(),
                    lines.join("\n")
                )))
            }
        }
        PosetCmd::Dot { input, mode } => {
            let (text, base) = read_input(&input)?;
            let p = poset_from_json(&text, &base).map_err(from_format)?;
            p.require_valid().map_err(failed)?;
            let mode = match mode {
                DotModeArg::Coset => DotMode::Coset,
                DotModeArg::Expanded => DotMode::Expanded,
            };
            out(&p.hasse().to_dot(mode))
        }
    }
}

fn run_check(cmd: CheckCmd) -> Res<()> {
    match cmd {
        CheckCmd::All {
            preset: p,
            n,
            max,
            seed,
            pairs,
        } => {
            let g = preset(p, n)?;
            let cfg = SuiteConfig {
                maxval: max,
                seed,
                pair_samples: pairs,
            };
            let report = run_suite(&g, &cfg).map_err(failed)?;
            out(&report.to_string())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Exit::Failed(format!(
                    "property suite failed for {}",
                    report.group
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Group(c) => run_group(c),
        Command::R(c) => run_r(c),
        Command::Cocycle(c) => run_cocycle(c),
        Command::Poset(c) => run_poset(c),
        Command::Check(c) => run_check(c),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Exit::BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
