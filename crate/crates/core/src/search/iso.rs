//! Isomorphism tests and the class index used to deduplicate enumerations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equivalence {
    Isomorphism,
    /// Isomorphic to the table or to its transpose.
    #[default]
    IsoOrAntiIso,
}

type Signature = (u32, bool, (u32, u32), u32, u32, u32);

/// Per-element data preserved by relabelling; with `symmetric` it is also
/// preserved by transposing the table.
fn signatures(n: usize, t: &[u16], symmetric: bool) -> Vec<Signature> {
    let op = |i: usize, j: usize| t[i * n + j] as usize;
    let mut hits = vec![0u32; n];
    let mut roots = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            hits[op(i, j)] += 1;
        }
        roots[op(i, i)] += 1;
    }
    (0..n)
        .map(|z| {
            let mut seen = vec![false; n];
            let mut cur = z;
            let mut ord = 0;
            while !seen[cur] {
                seen[cur] = true;
                ord += 1;
                cur = op(cur, z);
            }
            let image = |f: &dyn Fn(usize) -> usize| {
                let mut s = vec![false; n];
                (0..n).filter(|&x| !std::mem::replace(&mut s[f(x)], true)).count() as u32
            };
            let row = image(&|x| op(z, x));
            let col = image(&|x| op(x, z));
            let sides = if symmetric {
                (row.min(col), row.max(col))
            } else {
                (row, col)
            };
            let commuting = (0..n).filter(|&x| op(x, z) == op(z, x)).count() as u32;
            (ord, op(z, z) == z, sides, commuting, roots[z], hits[z])
        })
        .collect()
}

fn transpose(n: usize, t: &[u16]) -> Vec<u16> {
    (0..n * n).map(|k| t[(k % n) * n + k / n]).collect()
}

/// Backtracking search for a bijection `f` with `f(a_i + a_j) = f(a_i) +' f(a_j)`.
fn find_isomorphism(n: usize, a: &[u16], b: &[u16], sa: &[Signature], sb: &[Signature]) -> bool {
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn consistent(n: usize, a: &[u16], b: &[u16], f: &[usize], upto: usize) -> bool {
        // only pairs involving the element just mapped need rechecking
        let k = upto;
        for i in 0..=k {
            for (x, y) in [(i, k), (k, i)] {
                let v = a[x * n + y] as usize;
                let w = b[f[x] * n + f[y]] as usize;
                if f[v] != usize::MAX {
                    if f[v] != w {
                        return false;
                    }
                } else if f.contains(&w) {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        n: usize,
        k: usize,
        a: &[u16],
        b: &[u16],
        sa: &[Signature],
        sb: &[Signature],
        f: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == n {
            return (0..n).all(|i| (0..n).all(|j| f[a[i * n + j] as usize] == b[f[i] * n + f[j]] as usize));
        }
        for c in 0..n {
            if used[c] || sa[k] != sb[c] {
                continue;
            }
            f[k] = c;
            used[c] = true;
            if consistent(n, a, b, f, k) && go(n, k + 1, a, b, sa, sb, f, used) {
                return true;
            }
            used[c] = false;
            f[k] = usize::MAX;
        }
        false
    }

    go(n, 0, a, b, sa, sb, &mut f, &mut used)
}

fn iso_flat(n: usize, a: &[u16], b: &[u16]) -> bool {
    let sa = signatures(n, a, false);
    let sb = signatures(n, b, false);
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort_unstable();
    kb.sort_unstable();
    ka == kb && find_isomorphism(n, a, b, &sa, &sb)
}

/// Whether some relabelling of the carrier turns `a` into `b`.
pub fn is_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    a.order() == b.order() && iso_flat(a.order(), &flat_u16(a), &flat_u16(b))
}

/// Whether `a` is isomorphic to the opposite of `b`.
pub fn is_anti_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    a.order() == b.order() && iso_flat(a.order(), &flat_u16(a), &transpose(b.order(), &flat_u16(b)))
}

pub fn equivalent(a: &FiniteSemigroup, b: &FiniteSemigroup, eq: Equivalence) -> bool {
    is_isomorphic(a, b) || (eq == Equivalence::IsoOrAntiIso && is_anti_isomorphic(a, b))
}

fn flat_u16(s: &FiniteSemigroup) -> Vec<u16> {
    s.flat_table().to_vec()
}

/// Distinct classes seen so far, bucketed by a relabelling-invariant key.
pub struct ClassIndex {
    equivalence: Equivalence,
    buckets: HashMap<Vec<Signature>, Vec<usize>>,
    reps: Vec<Vec<u16>>,
}

impl ClassIndex {
    pub fn new(equivalence: Equivalence) -> Self {
        ClassIndex {
            equivalence,
            buckets: HashMap::new(),
            reps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Records `t` and returns its class number if it starts a new class.
    pub fn insert(&mut self, n: usize, t: &[u16]) -> Option<usize> {
        let symmetric = self.equivalence == Equivalence::IsoOrAntiIso;
        let mut key = signatures(n, t, symmetric);
        key.sort_unstable();
        let bucket = self.buckets.entry(key).or_default();
        let transposed = symmetric.then(|| transpose(n, t));
        let known = bucket.iter().any(|&k| {
            let r = &self.reps[k];
            iso_flat(n, t, r) || transposed.as_ref().is_some_and(|tt| iso_flat(n, tt, r))
        });
        if known {
            return None;
        }
        let k = self.reps.len();
        bucket.push(k);
        self.reps.push(t.to_vec());
        Some(k)
    }
}
