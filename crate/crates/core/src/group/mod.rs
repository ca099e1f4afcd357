//! Finite groups given by Cayley tables.
//!
//! Elements are plain indices `0..n` with the identity pinned to index 0.
//! Everything downstream (subadditive functions, cocycle tables, coset
//! posets) is indexed the same way, so a table printed for one object can be
//! compared cell-by-cell with a table printed for another.

mod factorization;
mod presets;
mod subgroup;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use factorization::{canonical_factorization, FactorizationTree};
pub use presets::GroupSpec;
pub use subgroup::{double_coset, left_cosets, quotient_group, CosetSpace, Quotient, Subgroup};

/// Largest group order accepted by the validators.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not a group: {}", format_violations(.0))]
    NonGroupTable(Vec<AxiomViolation>),
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("label list has {labels} entries but the table has {order} rows")]
    LabelMismatch { labels: usize, order: usize },
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error(
        "subgroup is not normal: {conjugator} * {member} * {conjugator}^-1 leaves the subgroup"
    )]
    NotNormal { conjugator: usize, member: usize },
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("generators do not reach elements {unreached:?}")]
    NotGenerating { unreached: Vec<usize> },
    #[error("subgroup belongs to a different group")]
    GroupMismatch,
}

fn format_violations(v: &[AxiomViolation]) -> String {
    let shown: Vec<String> = v.iter().take(4).map(|x| x.to_string()).collect();
    let mut s = shown.join("; ");
    if v.len() > 4 {
        s.push_str(&format!("; ... ({} more)", v.len() - 4));
    }
    s
}

/// One failed group axiom, with the indices that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    Empty,
    TooLarge {
        order: usize,
    },
    NotSquare {
        row: usize,
        len: usize,
    },
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    RowNotPermutation {
        row: usize,
        repeated: usize,
    },
    ColumnNotPermutation {
        col: usize,
        repeated: usize,
    },
    LeftIdentity {
        col: usize,
    },
    RightIdentity {
        row: usize,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
    },
    NoInverse {
        element: usize,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use AxiomViolation::*;
        match *self {
            Empty => write!(f, "empty table"),
            TooLarge { order } => write!(f, "order {order} exceeds the cap of {MAX_ORDER}"),
            NotSquare { row, len } => write!(f, "row {row} has length {len}"),
            EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} out of range")
            }
            RowNotPermutation { row, repeated } => {
                write!(f, "row {row} repeats {repeated}")
            }
            ColumnNotPermutation { col, repeated } => {
                write!(f, "column {col} repeats {repeated}")
            }
            LeftIdentity { col } => write!(f, "0 * {col} != {col}"),
            RightIdentity { row } => write!(f, "{row} * 0 != {row}"),
            Associativity { a, b, c } => write!(f, "({a}*{b})*{c} != {a}*({b}*{c})"),
            NoInverse { element } => write!(f, "{element} has no two-sided inverse"),
        }
    }
}

/// Check every group axiom on a raw table, assuming the identity sits at
/// index 0. An empty result means the table is a group.
///
/// Shape and range problems are reported first; the algebraic checks only
/// run on a well-formed square table.
pub fn verify_group_axioms(table: &[Vec<usize>]) -> Vec<AxiomViolation> {
    let n = table.len();
    if n == 0 {
        return vec![AxiomViolation::Empty];
    }
    let mut out = Vec::new();
    if n > MAX_ORDER {
        out.push(AxiomViolation::TooLarge { order: n });
        return out;
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            out.push(AxiomViolation::NotSquare { row, len: r.len() });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (row, r) in table.iter().enumerate() {
        for (col, &value) in r.iter().enumerate() {
            if value >= n {
                out.push(AxiomViolation::EntryOutOfRange { row, col, value });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }

    for (row, r) in table.iter().enumerate() {
        if let Some(repeated) = first_repeat(r.iter().copied(), n) {
            out.push(AxiomViolation::RowNotPermutation { row, repeated });
        }
    }
    for col in 0..n {
        if let Some(repeated) = first_repeat(table.iter().map(|r| r[col]), n) {
            out.push(AxiomViolation::ColumnNotPermutation { col, repeated });
        }
    }
    for j in 0..n {
        if table[0][j] != j {
            out.push(AxiomViolation::LeftIdentity { col: j });
        }
        if table[j][0] != j {
            out.push(AxiomViolation::RightIdentity { row: j });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    out.push(AxiomViolation::Associativity { a, b, c });
                }
            }
        }
    }
    for a in 0..n {
        let has_inverse = (0..n).any(|b| table[a][b] == 0 && table[b][a] == 0);
        if !has_inverse {
            out.push(AxiomViolation::NoInverse { element: a });
        }
    }
    out
}

fn first_repeat(it: impl Iterator<Item = usize>, n: usize) -> Option<usize> {
    let mut seen = vec![false; n];
    for v in it {
        if seen[v] {
            return Some(v);
        }
        seen[v] = true;
    }
    None
}

/// A validated finite group. Immutable after construction.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl PartialEq for FiniteGroup {
    /// Structural equality: same multiplication table on the same indices.
    /// Names and labels are presentation only.
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn from_table(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let violations = verify_group_axioms(&table);
        if !violations.is_empty() {
            return Err(GroupError::NonGroupTable(violations));
        }
        if elements.len() != table.len() {
            return Err(GroupError::LabelMismatch {
                labels: elements.len(),
                order: table.len(),
            });
        }
        let n = table.len();
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("checked above"))
            .collect();
        Ok(FiniteGroup {
            name: name.into(),
            elements,
            table,
            inverses,
        })
    }

    /// Build a preset or explicit group and wrap it for sharing.
    pub fn build(spec: &GroupSpec) -> Result<Arc<Self>, GroupError> {
        spec.build().map(Arc::new)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    /// `g x g^-1`
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<(), GroupError> {
        if a < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange(a))
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}
