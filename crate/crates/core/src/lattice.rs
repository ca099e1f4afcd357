//! Integer lattices in Hermite normal form, for exact coset representatives.
//!
//! A [`LatticeBuilder`] takes generating vectors one at a time and keeps an
//! echelon basis whose pivot at column `p` generates every leading
//! coefficient a lattice vector can have there. After [`LatticeBuilder::finish`]
//! the entries above each pivot are reduced into `[0, pivot)`, so
//! [`HermiteLattice::reduce`] sends every vector of a coset `x + L` to the
//! same representative.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("vector has length {got}, lattice dimension is {dim}")]
    DimensionMismatch { dim: usize, got: usize },
    #[error("integer overflow during normal form computation")]
    Overflow,
}

#[derive(Debug, Clone)]
pub struct LatticeBuilder {
    dim: usize,
    // rows[p] has its leading entry at column p
    rows: Vec<Option<Vec<i64>>>,
}

/// Extended gcd: returns `(g, x, y)` with `g = x a + y b`, `g > 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// `a·x + b·y` elementwise, checked.
fn combine(a: i64, x: &[i64], b: i64, y: &[i64], from: usize) -> Result<Vec<i64>, LatticeError> {
    let mut out = vec![0; x.len()];
    for k in from..x.len() {
        let l = a.checked_mul(x[k]).ok_or(LatticeError::Overflow)?;
        let r = b.checked_mul(y[k]).ok_or(LatticeError::Overflow)?;
        out[k] = l.checked_add(r).ok_or(LatticeError::Overflow)?;
    }
    Ok(out)
}

fn sub_multiple(x: &mut [i64], q: i64, row: &[i64], from: usize) -> Result<(), LatticeError> {
    if q == 0 {
        return Ok(());
    }
    for k in from..x.len() {
        let m = q.checked_mul(row[k]).ok_or(LatticeError::Overflow)?;
        x[k] = x[k].checked_sub(m).ok_or(LatticeError::Overflow)?;
    }
    Ok(())
}

impl LatticeBuilder {
    pub fn new(dim: usize) -> Self {
        LatticeBuilder {
            dim,
            rows: vec![None; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Add a generator to the lattice.
    pub fn insert(&mut self, v: &[i64]) -> Result<(), LatticeError> {
        if v.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                dim: self.dim,
                got: v.len(),
            });
        }
        let mut v = v.to_vec();
        let mut start = 0;
        loop {
            let Some(p) = (start..self.dim).find(|&k| v[k] != 0) else {
                return Ok(());
            };
            match self.rows[p].take() {
                None => {
                    if v[p] < 0 {
                        for x in v[p..].iter_mut() {
                            *x = -*x;
                        }
                    }
                    self.rows[p] = Some(v);
                    return Ok(());
                }
                Some(row) => {
                    let a = row[p];
                    let b = v[p];
                    if b % a == 0 {
                        sub_multiple(&mut v, b / a, &row, p)?;
                        self.rows[p] = Some(row);
                    } else {
                        let (g, x, y) = ext_gcd(a, b);
                        let new_row = combine(x, &row, y, &v, p)?;
                        let rest = combine(a / g, &v, -(b / g), &row, p)?;
                        debug_assert_eq!(new_row[p], g);
                        debug_assert_eq!(rest[p], 0);
                        self.rows[p] = Some(new_row);
                        v = rest;
                    }
                    start = p + 1;
                }
            }
        }
    }

    /// Reduce above-pivot entries and freeze the basis.
    pub fn finish(mut self) -> Result<HermiteLattice, LatticeError> {
        let pivots: Vec<usize> = (0..self.dim).filter(|&p| self.rows[p].is_some()).collect();
        for (i, &p) in pivots.iter().enumerate() {
            let row_p = self.rows[p].clone().expect("pivot");
            let d = row_p[p];
            for &q in &pivots[..i] {
                let row_q = self.rows[q].as_mut().expect("pivot");
                let m = row_q[p].div_euclid(d);
                sub_multiple(row_q, m, &row_p, p)?;
            }
        }
        let rows = pivots
            .iter()
            .map(|&p| {
                let row = self.rows[p].take().expect("pivot");
                let entries = row
                    .iter()
                    .enumerate()
                    .skip(p)
                    .filter(|(_, &x)| x != 0)
                    .map(|(k, &x)| (k, x))
                    .collect();
                SparseRow { pivot: p, entries }
            })
            .collect();
        Ok(HermiteLattice {
            dim: self.dim,
            rows,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SparseRow {
    pivot: usize,
    // (column, value); first entry is the pivot itself
    entries: Vec<(usize, i64)>,
}

/// A lattice basis in Hermite normal form, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteLattice {
    dim: usize,
    rows: Vec<SparseRow>,
}

impl HermiteLattice {
    pub fn from_generators<'a>(
        dim: usize,
        gens: impl IntoIterator<Item = &'a [i64]>,
    ) -> Result<Self, LatticeError> {
        let mut b = LatticeBuilder::new(dim);
        for g in gens {
            b.insert(g)?;
        }
        b.finish()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `(pivot column, pivot value)` for each basis row.
    pub fn pivots(&self) -> Vec<(usize, i64)> {
        self.rows
            .iter()
            .map(|r| (r.pivot, r.entries[0].1))
            .collect()
    }

    /// Basis rows as dense vectors.
    pub fn basis(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut v = vec![0; self.dim];
                for &(k, x) in &r.entries {
                    v[k] = x;
                }
                v
            })
            .collect()
    }

    /// Replace `x` by the canonical representative of `x + L`: every pivot
    /// coordinate ends up in `[0, pivot)`.
    pub fn reduce(&self, x: &mut [i64]) -> Result<(), LatticeError> {
        if x.len() != self.dim {
            return Err(LatticeError::DimensionMismatch {
                dim: self.dim,
                got: x.len(),
            });
        }
        for row in &self.rows {
            let d = row.entries[0].1;
            let q = x[row.pivot].div_euclid(d);
            if q == 0 {
                continue;
            }
            for &(k, v) in &row.entries {
                let m = q.checked_mul(v).ok_or(LatticeError::Overflow)?;
                x[k] = x[k].checked_sub(m).ok_or(LatticeError::Overflow)?;
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool, LatticeError> {
        let mut y = x.to_vec();
        self.reduce(&mut y)?;
        Ok(y.iter().all(|&v| v == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ext_gcd_identity() {
        for (a, b) in [(4, 6), (-4, 6), (7, -3), (0, 5), (5, 0), (12, 18)] {
            let (g, x, y) = ext_gcd(a, b);
            assert_eq!(g, x * a + y * b);
            assert!(g > 0);
            assert_eq!(a % g, 0);
            assert_eq!(b % g, 0);
        }
    }

    #[test]
    fn small_lattice() {
        // L = span{(2,1), (0,3)}
        let l = HermiteLattice::from_generators(2, [&[2i64, 1][..], &[0, 3]]).unwrap();
        assert_eq!(l.pivots(), vec![(0, 2), (1, 3)]);
        assert!(l.contains(&[2, 4]).unwrap());
        assert!(!l.contains(&[1, 0]).unwrap());
        assert!(l.contains(&[4, 2]).unwrap());
        // (2,1) and (0,3) reduce everything into [0,2) x [0,3)
        let mut x = vec![5, 7];
        l.reduce(&mut x).unwrap();
        assert_eq!(x, vec![1, 2]);
    }

    #[test]
    fn gcd_merging() {
        // (4,0,1), (6,1,0) → leading gcd 2
        let l = HermiteLattice::from_generators(3, [&[4i64, 0, 1][..], &[6, 1, 0]]).unwrap();
        assert_eq!(l.rank(), 2);
        assert_eq!(l.pivots()[0], (0, 2));
        assert!(l.contains(&[4, 0, 1]).unwrap());
        assert!(l.contains(&[6, 1, 0]).unwrap());
        assert!(l.contains(&[2, 1, -1]).unwrap());
        assert!(!l.contains(&[2, 0, 0]).unwrap());
    }

    fn gens_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 1..5)
    }

    proptest! {
        // Reduction depends only on the coset: x and x + (integer combination
        // of generators) have the same representative.
        #[test]
        fn reduce_is_coset_invariant(
            gens in gens_strategy(),
            x in prop::collection::vec(-20i64..=20, 4),
            coeffs in prop::collection::vec(-3i64..=3, 5),
        ) {
            let l = HermiteLattice::from_generators(4, gens.iter().map(|g| g.as_slice())).unwrap();
            let mut y = x.clone();
            for (g, c) in gens.iter().zip(&coeffs) {
                for k in 0..4 {
                    y[k] += c * g[k];
                }
            }
            let mut rx = x.clone();
            let mut ry = y;
            l.reduce(&mut rx).unwrap();
            l.reduce(&mut ry).unwrap();
            prop_assert_eq!(&rx, &ry);
            let mut again = rx.clone();
            l.reduce(&mut again).unwrap();
            prop_assert_eq!(again, rx);
            for g in &gens {
                prop_assert!(l.contains(g).unwrap());
            }
        }
    }
}
