//! Congruences of finite semigroups via principal-congruence closure.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Largest order accepted by the congruence routines.
pub const DEFAULT_BOUND: usize = 40;

/// A partition of the element set, stored as canonical class labels: the
/// class of `x` is numbered by first occurrence scanning `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition((0..n).collect())
    }

    pub fn universal(n: usize) -> Self {
        Partition(vec![0; n])
    }

    fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut classes = Vec::with_capacity(n);
        for x in 0..n {
            let r = uf.find(x);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            classes.push(label[r]);
        }
        Partition(classes)
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn classes(&self) -> &[usize] {
        &self.0
    }

    pub fn class_count(&self) -> usize {
        self.0.iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.class_count() == self.0.len()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count() <= 1
    }

    /// True when `a ~ b` implies `xa ~ xb` and `ax ~ bx` for all `x`.
    pub fn is_congruence_of(&self, s: &FiniteSemigroup) -> bool {
        let n = s.order();
        for a in 0..n {
            for b in a + 1..n {
                if self.0[a] != self.0[b] {
                    continue;
                }
                for x in 0..n {
                    if self.0[s.mul(x, a)] != self.0[s.mul(x, b)]
                        || self.0[s.mul(a, x)] != self.0[s.mul(b, x)]
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Equivalence join.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.0.len();
        let mut uf = UnionFind::new(n);
        let mut first_a = vec![usize::MAX; n];
        let mut first_b = vec![usize::MAX; n];
        for x in 0..n {
            for (first, class) in [(&mut first_a, self.0[x]), (&mut first_b, other.0[x])] {
                if first[class] == usize::MAX {
                    first[class] = x;
                } else {
                    uf.union(first[class], x);
                }
            }
        }
        Partition::from_union_find(&mut uf)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

fn check_bound(s: &FiniteSemigroup, bound: usize) -> Result<()> {
    if s.order() > bound {
        Err(Error::TooLarge {
            order: s.order(),
            bound,
        })
    } else {
        Ok(())
    }
}

/// Smallest congruence identifying `a` and `b`: the equivalence closure of
/// `{(x·a·y, x·b·y) : x, y ∈ S¹}`.
pub fn principal(s: &FiniteSemigroup, a: usize, b: usize) -> Partition {
    let n = s.order();
    let mut uf = UnionFind::new(n);
    uf.union(a, b);
    // left translates x·a, x·b for x ∈ S¹
    let mut left: Vec<(usize, usize)> = vec![(a, b)];
    left.extend((0..n).map(|x| (s.mul(x, a), s.mul(x, b))));
    for &(la, lb) in &left {
        uf.union(la, lb);
        for y in 0..n {
            uf.union(s.mul(la, y), s.mul(lb, y));
        }
    }
    Partition::from_union_find(&mut uf)
}

/// All congruences, sorted, computed by closing the principal congruences
/// under joins.
pub fn congruence_lattice(s: &FiniteSemigroup) -> Result<Vec<Partition>> {
    congruence_lattice_bounded(s, DEFAULT_BOUND)
}

pub fn congruence_lattice_bounded(s: &FiniteSemigroup, bound: usize) -> Result<Vec<Partition>> {
    check_bound(s, bound)?;
    let n = s.order();
    let mut principals: Vec<Partition> = Vec::new();
    let mut seen: HashSet<Partition> = HashSet::new();
    for a in 0..n {
        for b in a + 1..n {
            let p = principal(s, a, b);
            if seen.insert(p.clone()) {
                principals.push(p);
            }
        }
    }
    let identity = Partition::identity(n);
    seen.insert(identity.clone());
    let mut all: Vec<Partition> = principals.clone();
    all.push(identity);
    // every congruence is a join of principal ones
    let mut frontier = principals.clone();
    while let Some(c) = frontier.pop() {
        for p in &principals {
            let j = c.join(p);
            if seen.insert(j.clone()) {
                all.push(j.clone());
                frontier.push(j);
            }
        }
    }
    all.sort();
    Ok(all)
}

/// True iff the only congruences are the identity and the universal one.
pub fn is_congruence_free(s: &FiniteSemigroup) -> Result<bool> {
    is_congruence_free_bounded(s, DEFAULT_BOUND)
}

pub fn is_congruence_free_bounded(s: &FiniteSemigroup, bound: usize) -> Result<bool> {
    check_bound(s, bound)?;
    let n = s.order();
    for a in 0..n {
        for b in a + 1..n {
            if !principal(s, a, b).is_universal() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::matrix_units;
    use crate::catalog;
    use crate::semigroup::default_labels;

    /// All set partitions of `0..n`, restricted-growth encoded.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            let max = prefix.iter().copied().max().map_or(0, |m| m + 1);
            for c in 0..=max {
                prefix.push(c);
                go(prefix, n, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&mut Vec::new(), n, &mut out);
        out
    }

    /// Brute-force oracle: filter every set partition by compatibility.
    fn brute_force_congruences(s: &FiniteSemigroup) -> Vec<Partition> {
        let mut v: Vec<Partition> = all_partitions(s.order())
            .into_iter()
            .map(Partition)
            .filter(|p| p.is_congruence_of(s))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn lattice_matches_brute_force_on_small_catalog() {
        let mut samples: Vec<FiniteSemigroup> =
            catalog::corpus().into_iter().map(|(_, s)| s).collect();
        samples.push(matrix_units(2));
        samples.push(catalog::rectangular_band_with_unity_and_zero());
        for s in samples {
            assert_eq!(congruence_lattice(&s).unwrap(), brute_force_congruences(&s), "{s:?}");
        }
    }

    #[test]
    fn matrix_units_are_congruence_free() {
        assert!(is_congruence_free(&matrix_units(2)).unwrap());
        assert!(is_congruence_free(&matrix_units(3)).unwrap());
        let lattice = congruence_lattice(&matrix_units(2)).unwrap();
        assert_eq!(lattice.len(), 2);
    }

    #[test]
    fn two_element_semigroups_are_congruence_free() {
        // the null semigroup, the left-zero band, the semilattice, Z/2
        let tables = [
            vec![vec![0, 0], vec![0, 0]],
            vec![vec![0, 0], vec![1, 1]],
            vec![vec![0, 0], vec![0, 1]],
            vec![vec![0, 1], vec![1, 0]],
        ];
        for t in tables {
            let s = FiniteSemigroup::new(t, default_labels(2), None, None).unwrap();
            assert!(is_congruence_free(&s).unwrap());
        }
    }

    #[test]
    fn chain_is_not_congruence_free() {
        let e = catalog::example_e();
        assert!(!is_congruence_free(&e).unwrap());
        let b = e.index_of("b").unwrap();
        let c = e.index_of("c").unwrap();
        let p = principal(&e, b, c);
        assert!(!p.is_universal() && p.is_congruence_of(&e));
    }

    #[test]
    fn lattice_contains_identity_and_universal() {
        for (_, s) in catalog::corpus() {
            let l = congruence_lattice(&s).unwrap();
            assert!(l.contains(&Partition::identity(s.order())));
            assert!(l.contains(&Partition::universal(s.order())));
            assert!(l.iter().all(|p| p.is_congruence_of(&s)));
        }
    }

    #[test]
    fn bound_is_enforced() {
        let big = matrix_units(7); // 50 elements
        assert_eq!(
            is_congruence_free(&big).unwrap_err(),
            Error::TooLarge { order: 50, bound: 40 }
        );
        assert!(is_congruence_free_bounded(&big, 64).unwrap());
    }
}
