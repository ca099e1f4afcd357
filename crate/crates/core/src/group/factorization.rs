use std::sync::Arc;

use super::{FiniteGroup, GroupError};

/// Breadth-first factorization of every element as a product of generators,
/// multiplying on the left and never using inverses.
#[derive(Debug, Clone)]
pub struct FactorizationTree {
    group: Arc<FiniteGroup>,
    generators: Vec<usize>,
    parent_edge: Vec<Option<(usize, usize)>>,
    dist: Vec<u32>,
}

/// Build the BFS tree. Each level is processed in increasing index order and
/// generators are tried in increasing index order, so the result depends only
/// on the table and the generator set.
pub fn canonical_factorization(
    group: &Arc<FiniteGroup>,
    generators: &[usize],
) -> Result<FactorizationTree, GroupError> {
    for &s in generators {
        group.check_index(s)?;
    }
    let mut gens = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();

    let n = group.order();
    let mut dist = vec![u32::MAX; n];
    let mut parent_edge = vec![None; n];
    dist[0] = 0;
    let mut level = vec![0usize];
    let mut depth = 0;
    while !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &p in &level {
            for &s in &gens {
                let w = group.mul(s, p);
                if dist[w] == u32::MAX {
                    dist[w] = depth;
                    parent_edge[w] = Some((s, p));
                    next.push(w);
                }
            }
        }
        next.sort_unstable();
        level = next;
    }

    let unreached: Vec<usize> = (0..n).filter(|&w| dist[w] == u32::MAX).collect();
    if !unreached.is_empty() {
        return Err(GroupError::NotGenerating { unreached });
    }
    Ok(FactorizationTree {
        group: Arc::clone(group),
        generators: gens,
        parent_edge,
        dist,
    })
}

impl FactorizationTree {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Word length over the generators.
    pub fn dist(&self) -> &[u32] {
        &self.dist
    }

    /// `(s, w')` with `w = s · w'`; `None` for the identity.
    pub fn parent_edge(&self, w: usize) -> Option<(usize, usize)> {
        self.parent_edge[w]
    }

    /// Generators `[s1, s2, …, sk]` with `w = s1 · s2 ⋯ sk`.
    pub fn word(&self, w: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dist[w] as usize);
        let mut cur = w;
        while let Some((s, rest)) = self.parent_edge[cur] {
            out.push(s);
            cur = rest;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;

    #[test]
    fn cyclic_ten_with_one_and_six() {
        let g = FiniteGroup::build(&GroupSpec::Cyclic(10)).unwrap();
        let t = canonical_factorization(&g, &[1, 6]).unwrap();
        assert_eq!(t.dist(), &[0, 1, 2, 3, 4, 5, 1, 2, 3, 4]);
        for w in 0..10 {
            let word = t.word(w);
            assert_eq!(word.len() as u32, t.dist()[w]);
            let prod = word.iter().rev().fold(0, |acc, &s| g.mul(s, acc));
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn c2_and_failure() {
        let c2 = FiniteGroup::build(&GroupSpec::Cyclic(2)).unwrap();
        assert_eq!(canonical_factorization(&c2, &[1]).unwrap().dist(), &[0, 1]);
        let c10 = FiniteGroup::build(&GroupSpec::Cyclic(10)).unwrap();
        let err = canonical_factorization(&c10, &[2]).unwrap_err();
        assert_eq!(
            err,
            GroupError::NotGenerating {
                unreached: vec![1, 3, 5, 7, 9]
            }
        );
    }

    #[test]
    fn parent_edges_step_down() {
        let g = FiniteGroup::build(&GroupSpec::Symmetric(3)).unwrap();
        let t = canonical_factorization(&g, &[1, 2]).unwrap();
        for w in 1..g.order() {
            let (s, rest) = t.parent_edge(w).unwrap();
            assert_eq!(g.mul(s, rest), w);
            assert_eq!(t.dist()[rest] + 1, t.dist()[w]);
        }
    }
}
