use super::{FiniteGroup, GroupError, MAX_ORDER};

/// How to build a group: a named preset or an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// ℤ/nℤ with elements `0..n` and table `(i + j) mod n`.
    Cyclic(usize),
    /// Dihedral group of the given order `2n`, elements ordered
    /// `1, a, …, a^(n-1), s, as, …, a^(n-1)s` with `a^n = s^2 = 1`, `s a s^-1 = a^-1`.
    Dihedral(usize),
    /// Symmetric group on `n ≤ 4` points, permutations in lexicographic order.
    Symmetric(usize),
    Explicit {
        name: String,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(order) => dihedral(*order),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Explicit {
                name,
                elements,
                table,
            } => FiniteGroup::from_table(name.clone(), elements.clone(), table.clone()),
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GroupError::UnsupportedSpec(format!("cyclic {n}")));
    }
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_table(format!("C{n}"), labels, table)
}

fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order < 2 || !order.is_multiple_of(2) || order > MAX_ORDER {
        return Err(GroupError::UnsupportedSpec(format!("dihedral {order}")));
    }
    let n = order / 2;
    // index i < n is a^i, index n + i is a^i s
    let decode = |x: usize| (x % n, x / n);
    let encode = |rot: usize, refl: usize| refl * n + rot;
    let table = (0..order)
        .map(|x| {
            let (i, s1) = decode(x);
            (0..order)
                .map(|y| {
                    let (j, s2) = decode(y);
                    // a^i s^s1 a^j s^s2 = a^(i ± j) s^(s1+s2)
                    let rot = if s1 == 0 {
                        (i + j) % n
                    } else {
                        (i + n - j) % n
                    };
                    encode(rot, (s1 + s2) % 2)
                })
                .collect()
        })
        .collect();
    let rot_label = |i: usize| match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a{i}"),
    };
    let labels = (0..order)
        .map(|x| {
            let (i, s) = decode(x);
            match (i, s) {
                (0, 0) => "1".to_string(),
                (_, 0) => rot_label(i),
                (_, _) => format!("{}s", rot_label(i)),
            }
        })
        .collect();
    FiniteGroup::from_table(format!("D{order}"), labels, table)
}

fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 4 {
        return Err(GroupError::UnsupportedSpec(format!("symmetric {n}")));
    }
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let table = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    // (p q)(x) = p(q(x))
                    let pq: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                    index(&pq)
                })
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| p.iter().map(|x| (x + 1).to_string()).collect())
        .collect();
    FiniteGroup::from_table(format!("S{n}"), labels, table)
}

/// All permutations of `0..n` in lexicographic order (identity first).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}
