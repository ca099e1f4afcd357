//! JSON interchange formats and plain-text tables.
//!
//! Every producer emits one of four documents (group, r-function, cocycle,
//! poset) and every consumer accepts the same, so command-line tools can be
//! chained. Groups always appear inline in output; an r-function may also
//! name its group by file path.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cocycle::{
    CoboundarySeed, CocycleError, IdempotentCocycle, UnitSymbol, UnitTag, UnitWord, ValuedCocycle,
    ValuedEntry, ValuedMonomial,
};
use crate::group::{left_cosets, FiniteGroup, GroupError, GroupSpec, Subgroup};
use crate::order::{CosetPoset, OrderError};
use crate::slg::{validate_r, SlgError, SubadditiveFn};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("expected a {expected} document, got {got}")]
    WrongKind { expected: &'static str, got: String },
    #[error("cosets listed in the file do not match the left cosets of the subgroup")]
    CosetMismatch,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Slg(#[from] SlgError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupDoc {
            name: g.name().to_string(),
            elements: g.labels().to_vec(),
            table: g.table().to_vec(),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteGroup>, GroupError> {
        FiniteGroup::build(&GroupSpec::Explicit {
            name: self.name.clone(),
            elements: self.elements.clone(),
            table: self.table.clone(),
        })
    }
}

/// A group given inline or by a path to a group file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupDoc),
}

impl GroupRef {
    /// Relative paths are resolved against `base`.
    pub fn resolve(&self, base: &Path) -> Result<Arc<FiniteGroup>, FormatError> {
        match self {
            GroupRef::Inline(doc) => Ok(doc.build()?),
            GroupRef::Path(p) => {
                let path = base.join(p);
                let text = std::fs::read_to_string(&path).map_err(|source| FormatError::Io {
                    path: path.clone(),
                    source,
                })?;
                let doc: GroupDoc = serde_json::from_str(&text)?;
                Ok(doc.build()?)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RDoc {
    pub group: GroupRef,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolDoc {
    pub twist: usize,
    pub tag: TagDoc,
    pub base: usize,
    pub pow: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TagDoc {
    U,
    W,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialDoc {
    pub exp: i64,
    #[serde(default)]
    pub unit: Vec<SymbolDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Zero(ZeroTag),
    Value(MonomialDoc),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroTag {
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CocycleEntries {
    Idempotent {
        entries: Vec<Vec<u8>>,
    },
    Valued {
        entries: Vec<Vec<EntryDoc>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<Vec<MonomialDoc>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleDoc {
    pub group: GroupRef,
    #[serde(flatten)]
    pub body: CocycleEntries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub group: GroupRef,
    /// Members of each left coset; the first list is the subgroup.
    pub cosets: Vec<Vec<usize>>,
    pub leq: Vec<Vec<bool>>,
}

/// A parsed cocycle file.
#[derive(Debug, Clone)]
pub enum AnyCocycle {
    Idempotent(IdempotentCocycle),
    Valued(ValuedCocycle),
}

fn word_to_doc(w: &UnitWord) -> Vec<SymbolDoc> {
    w.terms()
        .map(|(s, pow)| {
            let (tag, base) = match s.tag {
                UnitTag::U(b) => (TagDoc::U, b),
                UnitTag::W(b) => (TagDoc::W, b),
            };
            SymbolDoc {
                twist: s.twist,
                tag,
                base,
                pow,
            }
        })
        .collect()
}

fn word_from_doc(d: &[SymbolDoc]) -> UnitWord {
    UnitWord::from_terms(d.iter().map(|s| {
        let tag = match s.tag {
            TagDoc::U => UnitTag::U(s.base),
            TagDoc::W => UnitTag::W(s.base),
        };
        (
            UnitSymbol {
                tag,
                twist: s.twist,
            },
            s.pow,
        )
    }))
}

fn monomial_to_doc(m: &ValuedMonomial) -> MonomialDoc {
    MonomialDoc {
        exp: m.exp,
        unit: word_to_doc(&m.unit),
    }
}

fn monomial_from_doc(d: &MonomialDoc) -> ValuedMonomial {
    ValuedMonomial::new(word_from_doc(&d.unit), d.exp)
}

fn inline(g: &FiniteGroup) -> GroupRef {
    GroupRef::Inline(GroupDoc::from_group(g))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    to_json(&GroupDoc::from_group(g))
}

pub fn group_from_json(text: &str) -> Result<Arc<FiniteGroup>, FormatError> {
    let doc: GroupDoc = serde_json::from_str(text)?;
    Ok(doc.build()?)
}

pub fn r_to_json(r: &SubadditiveFn) -> String {
    to_json(&RDoc {
        group: inline(r.group()),
        values: r.values().iter().map(|&v| i64::from(v)).collect(),
    })
}

/// Parse and validate an r-function; a group path is resolved against `base`.
pub fn r_from_json(text: &str, base: &Path) -> Result<SubadditiveFn, FormatError> {
    let doc: RDoc = serde_json::from_str(text)?;
    let g = doc.group.resolve(base)?;
    Ok(validate_r(&g, &doc.values)?)
}

pub fn idempotent_to_json(e: &IdempotentCocycle) -> String {
    to_json(&CocycleDoc {
        group: inline(e.group()),
        body: CocycleEntries::Idempotent {
            entries: e
                .rows()
                .iter()
                .map(|r| r.iter().map(|&b| u8::from(b)).collect())
                .collect(),
        },
    })
}

pub fn valued_to_json(f: &ValuedCocycle) -> String {
    to_json(&CocycleDoc {
        group: inline(f.group()),
        body: CocycleEntries::Valued {
            entries: f
                .rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|e| match e {
                            ValuedEntry::Zero => EntryDoc::Zero(ZeroTag::Zero),
                            ValuedEntry::Value(m) => EntryDoc::Value(monomial_to_doc(m)),
                        })
                        .collect()
                })
                .collect(),
            seed: f
                .seed()
                .map(|s| s.values().iter().map(monomial_to_doc).collect()),
        },
    })
}

/// Parse a cocycle file. Only the shape is checked here; the cocycle
/// identity is left to the verifiers.
pub fn cocycle_from_json(text: &str, base: &Path) -> Result<AnyCocycle, FormatError> {
    let doc: CocycleDoc = serde_json::from_str(text)?;
    let g = doc.group.resolve(base)?;
    match doc.body {
        CocycleEntries::Idempotent { entries } => {
            let n = g.order();
            if entries.iter().flatten().any(|&v| v > 1) {
                return Err(CocycleError::ShapeMismatch { order: n }.into());
            }
            let values = entries
                .iter()
                .map(|r| r.iter().map(|&v| v == 1).collect())
                .collect();
            Ok(AnyCocycle::Idempotent(IdempotentCocycle::new(&g, values)?))
        }
        CocycleEntries::Valued { entries, seed } => {
            let rows = entries
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|e| match e {
                            EntryDoc::Zero(_) => ValuedEntry::Zero,
                            EntryDoc::Value(m) => ValuedEntry::Value(monomial_from_doc(m)),
                        })
                        .collect()
                })
                .collect();
            let mut f = ValuedCocycle::new(&g, rows)?;
            if let Some(seed) = seed {
                let seed = CoboundarySeed::new(&g, seed.iter().map(monomial_from_doc).collect())?;
                f = f.with_seed(seed)?;
            }
            Ok(AnyCocycle::Valued(f))
        }
    }
}

pub fn poset_to_json(p: &CosetPoset) -> String {
    let c = p.cosets();
    to_json(&PosetDoc {
        group: inline(p.group()),
        cosets: (0..c.len()).map(|i| c.members(i).to_vec()).collect(),
        leq: p.relation().to_vec(),
    })
}

/// Parse a poset file. The relation is not verified; the cosets must be the
/// left cosets of the first listed set, in representative order.
pub fn poset_from_json(text: &str, base: &Path) -> Result<CosetPoset, FormatError> {
    let doc: PosetDoc = serde_json::from_str(text)?;
    let g = doc.group.resolve(base)?;
    let first = doc.cosets.first().ok_or(FormatError::CosetMismatch)?;
    let h = Subgroup::from_members(&g, first)?;
    let cosets = left_cosets(&h);
    let matches = cosets.len() == doc.cosets.len()
        && doc.cosets.iter().enumerate().all(|(i, m)| {
            let mut m = m.clone();
            m.sort_unstable();
            m == cosets.members(i)
        });
    if !matches {
        return Err(FormatError::CosetMismatch);
    }
    Ok(CosetPoset::from_relation(cosets, doc.leq)?)
}

/// `1`, `π`, `π^k`; negative exponents print as `π^-k`.
pub fn pi_power(exp: i64) -> String {
    match exp {
        0 => "1".to_string(),
        1 => "π".to_string(),
        k => format!("π^{k}"),
    }
}

/// A square table with a header row and column of element labels, columns
/// padded to equal width. `None` cells print as `0`.
pub fn render_table(labels: &[String], cells: &[Vec<String>]) -> String {
    let corner = "(σ,τ)".to_string();
    let width = std::iter::once(&corner)
        .chain(labels)
        .chain(cells.iter().flatten())
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let pad = |s: &str| format!("{s}{}", " ".repeat(width - s.chars().count()));
    let mut out = String::new();
    let line = |first: &str, rest: &mut dyn Iterator<Item = &String>| {
        let mut parts = vec![pad(first)];
        parts.extend(rest.map(|s| pad(s)));
        let mut l = parts.join(" ");
        l.truncate(l.trim_end().len());
        l.push('\n');
        l
    };
    out.push_str(&line(&corner, &mut labels.iter()));
    for (label, row) in labels.iter().zip(cells) {
        out.push_str(&line(label, &mut row.iter()));
    }
    out
}

/// Exponent table in π-power typography, or plain integers when `raw`.
pub fn exponent_table(group: &FiniteGroup, exps: &[Vec<Option<i64>>], raw: bool) -> String {
    let cells: Vec<Vec<String>> = exps
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| match (e, raw) {
                    (None, _) => "0".to_string(),
                    (Some(k), true) => k.to_string(),
                    (Some(k), false) => pi_power(*k),
                })
                .collect()
        })
        .collect();
    render_table(group.labels(), &cells)
}

pub fn idempotent_table(e: &IdempotentCocycle) -> String {
    let cells: Vec<Vec<String>> = e
        .rows()
        .iter()
        .map(|r| r.iter().map(|&b| u8::from(b).to_string()).collect())
        .collect();
    render_table(e.group().labels(), &cells)
}

/// Full values `unit·π^k`, unit words in symbol notation.
pub fn valued_table(f: &ValuedCocycle) -> String {
    let g = f.group();
    let cells: Vec<Vec<String>> = f
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|e| match e {
                    ValuedEntry::Zero => "0".to_string(),
                    ValuedEntry::Value(m) => match (m.unit.is_one(), m.exp) {
                        (true, k) => pi_power(k),
                        (false, 0) => m.unit.display(g),
                        (false, k) => format!("{}·{}", m.unit.display(g), pi_power(k)),
                    },
                })
                .collect()
        })
        .collect();
    render_table(g.labels(), &cells)
}
