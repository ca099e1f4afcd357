use std::collections::BTreeSet;
use std::sync::Arc;

use super::{FiniteGroup, GroupError};

/// A subgroup of a shared parent group, stored as its sorted member indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    members: Vec<usize>,
}

impl Subgroup {
    /// Smallest subgroup containing `seed`.
    pub fn closure(group: &Arc<FiniteGroup>, seed: &[usize]) -> Result<Self, GroupError> {
        for &s in seed {
            group.check_index(s)?;
        }
        // In a finite group closure under products already gives inverses.
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier: Vec<usize> = seed.to_vec();
        while let Some(x) = frontier.pop() {
            if !set.insert(x) {
                continue;
            }
            let current: Vec<usize> = set.iter().copied().collect();
            for y in current {
                for z in [group.mul(x, y), group.mul(y, x)] {
                    if !set.contains(&z) {
                        frontier.push(z);
                    }
                }
            }
        }
        Ok(Subgroup {
            group: Arc::clone(group),
            members: set.into_iter().collect(),
        })
    }

    /// Wrap an explicit element set, checking that it is a subgroup.
    pub fn from_members(group: &Arc<FiniteGroup>, members: &[usize]) -> Result<Self, GroupError> {
        for &m in members {
            group.check_index(m)?;
        }
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if !set.contains(&0) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&group.inv(a)) {
                return Err(GroupError::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                let ab = group.mul(a, b);
                if !set.contains(&ab) {
                    return Err(GroupError::NotASubgroup(format!(
                        "{a} * {b} = {ab} missing"
                    )));
                }
            }
        }
        Ok(Subgroup {
            group: Arc::clone(group),
            members: set.into_iter().collect(),
        })
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            group: Arc::clone(group),
            members: vec![0],
        }
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Subgroup {
            group: Arc::clone(group),
            members: (0..group.order()).collect(),
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    /// `g H g^-1 = H` for every `g`.
    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    fn normality_witness(&self) -> Option<(usize, usize)> {
        let g = &self.group;
        (0..g.order())
            .flat_map(|c| self.members.iter().map(move |&m| (c, m)))
            .find(|&(c, m)| !self.contains(g.conjugate(c, m)))
    }

    pub fn require_normal(&self) -> Result<(), GroupError> {
        match self.normality_witness() {
            None => Ok(()),
            Some((conjugator, member)) => Err(GroupError::NotNormal { conjugator, member }),
        }
    }

    /// Labels of the members, for messages and file output.
    pub fn labels(&self) -> Vec<&str> {
        self.members.iter().map(|&m| self.group.label(m)).collect()
    }
}

/// Left cosets `gH` of a subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: Subgroup,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

/// Partition `G` into left cosets. Each representative is the smallest index
/// in its coset, so coset 0 is `H` itself.
pub fn left_cosets(subgroup: &Subgroup) -> CosetSpace {
    let g = subgroup.group();
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut members = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        let mut m: Vec<usize> = subgroup.members().iter().map(|&h| g.mul(x, h)).collect();
        m.sort_unstable();
        for &y in &m {
            coset_of[y] = idx;
        }
        members.push(m);
    }
    CosetSpace {
        subgroup: subgroup.clone(),
        reps,
        coset_of,
        members,
    }
}

impl CosetSpace {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.group()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, coset: usize) -> usize {
        self.reps[coset]
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn members(&self, coset: usize) -> &[usize] {
        &self.members[coset]
    }

    /// Printable name such as `aH`; the subgroup itself prints as `H`.
    pub fn label(&self, coset: usize) -> String {
        coset_label(self.group(), self.reps[coset])
    }
}

fn coset_label(g: &FiniteGroup, rep: usize) -> String {
    if rep == 0 {
        "H".to_string()
    } else {
        format!("{}H", g.label(rep))
    }
}

/// `H a H`, sorted.
pub fn double_coset(subgroup: &Subgroup, a: usize) -> Result<Vec<usize>, GroupError> {
    let g = subgroup.group();
    g.check_index(a)?;
    let set: BTreeSet<usize> = subgroup
        .members()
        .iter()
        .flat_map(|&h1| {
            subgroup
                .members()
                .iter()
                .map(move |&h2| g.mul(g.mul(h1, a), h2))
        })
        .collect();
    Ok(set.into_iter().collect())
}

/// A quotient group `G/N` together with the projection `G → G/N`.
///
/// Quotient element `i` is the coset with index `i` in [`left_cosets`], so
/// the identity coset `N` is element 0.
#[derive(Debug, Clone)]
pub struct Quotient {
    group: Arc<FiniteGroup>,
    cosets: CosetSpace,
}

pub fn quotient_group(normal: &Subgroup) -> Result<Quotient, GroupError> {
    normal.require_normal()?;
    let parent = normal.group();
    let cosets = left_cosets(normal);
    let m = cosets.len();
    let table = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| cosets.coset_of(parent.mul(cosets.rep(i), cosets.rep(j))))
                .collect()
        })
        .collect();
    let labels = (0..m).map(|i| cosets.label(i)).collect();
    let name = format!("{}/{{{}}}", parent.name(), normal.labels().join(","));
    let group = FiniteGroup::from_table(name, labels, table)?;
    Ok(Quotient {
        group: Arc::new(group),
        cosets,
    })
}

impl Quotient {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        self.cosets.group()
    }

    pub fn kernel(&self) -> &Subgroup {
        self.cosets.subgroup()
    }

    pub fn cosets(&self) -> &CosetSpace {
        &self.cosets
    }

    #[inline]
    pub fn project(&self, x: usize) -> usize {
        self.cosets.coset_of(x)
    }

    /// Preimage of a subgroup of the quotient.
    pub fn preimage(&self, sub: &Subgroup) -> Result<Subgroup, GroupError> {
        if **sub.group() != *self.group {
            return Err(GroupError::GroupMismatch);
        }
        let members: Vec<usize> = (0..self.parent().order())
            .filter(|&x| sub.contains(self.project(x)))
            .collect();
        Subgroup::from_members(self.parent(), &members)
    }
}
