//! Isomorphism search between finite semigroups.
//!
//! Candidates are pruned by element invariants; the search assigns images
//! to a generating set of the source and propagates products eagerly.

use std::collections::BTreeMap;

use crate::order::IdempotentOrder;
use crate::semigroup::FiniteSemigroup;

/// Isomorphism-invariant summary of one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    idempotent: bool,
    is_zero: bool,
    is_identity: bool,
    /// Index and period of the monogenic subsemigroup.
    index: usize,
    period: usize,
    left_stabilizer: usize,
    right_stabilizer: usize,
    right_ideal: usize,
    left_ideal: usize,
    square_roots: usize,
}

fn monogenic(s: &FiniteSemigroup, x: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; s.order()];
    let mut p = x;
    let mut k = 1;
    loop {
        if seen[p] != usize::MAX {
            return (seen[p], k - seen[p]);
        }
        seen[p] = k;
        p = s.mul(p, x);
        k += 1;
    }
}

fn profiles(s: &FiniteSemigroup) -> Vec<Profile> {
    let n = s.order();
    let mut roots = vec![0; n];
    for y in 0..n {
        roots[s.mul(y, y)] += 1;
    }
    (0..n)
        .map(|x| {
            let (index, period) = monogenic(s, x);
            let mut right = vec![false; n];
            let mut left = vec![false; n];
            for y in 0..n {
                right[s.mul(x, y)] = true;
                left[s.mul(y, x)] = true;
            }
            Profile {
                idempotent: s.is_idempotent(x),
                is_zero: s.zero() == Some(x),
                is_identity: s.identity() == Some(x),
                index,
                period,
                left_stabilizer: (0..n).filter(|&y| s.mul(y, x) == x).count(),
                right_stabilizer: (0..n).filter(|&y| s.mul(x, y) == x).count(),
                right_ideal: right.iter().filter(|&&b| b).count(),
                left_ideal: left.iter().filter(|&&b| b).count(),
                square_roots: roots[x],
            }
        })
        .collect()
}

/// Sorted (down-set size, up-set size) pairs of the idempotent order.
fn idempotent_shape(s: &FiniteSemigroup) -> Vec<(usize, usize)> {
    let o = IdempotentOrder::of(s);
    let es = o.idempotents();
    let mut shape: Vec<(usize, usize)> = es
        .iter()
        .map(|&e| {
            let down = es.iter().filter(|&&f| o.leq(f, e)).count();
            let up = es.iter().filter(|&&f| o.leq(e, f)).count();
            (down, up)
        })
        .collect();
    shape.sort_unstable();
    shape
}

fn multiset(p: &[Profile]) -> BTreeMap<Profile, usize> {
    let mut m = BTreeMap::new();
    for &x in p {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

struct Search<'a> {
    a: &'a FiniteSemigroup,
    b: &'a FiniteSemigroup,
    pa: Vec<Profile>,
    pb: Vec<Profile>,
    gens: Vec<usize>,
}

#[derive(Clone)]
struct State {
    map: Vec<usize>,
    used: Vec<bool>,
    defined: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Search<'_> {
    /// Assigns `x ↦ y` and closes under products; false on contradiction.
    fn assign(&self, st: &mut State, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if st.map[x] != UNSET {
                if st.map[x] != y {
                    return false;
                }
                continue;
            }
            if st.used[y] || self.pa[x] != self.pb[y] {
                return false;
            }
            st.map[x] = y;
            st.used[y] = true;
            st.defined.push(x);
            for k in 0..st.defined.len() {
                let u = st.defined[k];
                let fu = st.map[u];
                queue.push((self.a.mul(x, u), self.b.mul(y, fu)));
                queue.push((self.a.mul(u, x), self.b.mul(fu, y)));
            }
        }
        true
    }

    fn run(&self, st: State, depth: usize) -> Option<Vec<usize>> {
        if depth == self.gens.len() {
            return Some(st.map);
        }
        let g = self.gens[depth];
        if st.map[g] != UNSET {
            return self.run(st, depth + 1);
        }
        for y in 0..self.b.order() {
            if st.used[y] || self.pa[g] != self.pb[y] {
                continue;
            }
            let mut next = st.clone();
            if self.assign(&mut next, g, y) {
                if let Some(w) = self.run(next, depth + 1) {
                    return Some(w);
                }
            }
        }
        None
    }
}

/// Verifies that `map` is a bijective homomorphism `a → b`.
pub fn is_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup, map: &[usize]) -> bool {
    if a.order() != b.order() || map.len() != a.order() {
        return false;
    }
    let mut hit = vec![false; b.order()];
    for &y in map {
        if y >= b.order() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    (0..a.order()).all(|x| (0..a.order()).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])))
}

/// Returns an isomorphism `a → b` (as an index map) or `None`.
pub fn iso_search(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.idempotents().len() != b.idempotents().len() {
        return None;
    }
    if idempotent_shape(a) != idempotent_shape(b) {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    if multiset(&pa) != multiset(&pb) {
        return None;
    }
    let search = Search {
        a,
        b,
        pa,
        pb,
        gens: a.generating_set(),
    };
    let n = a.order();
    let st = State {
        map: vec![UNSET; n],
        used: vec![false; n],
        defined: Vec::with_capacity(n),
    };
    let w = search.run(st, 0)?;
    debug_assert!(is_isomorphism(a, b, &w));
    is_isomorphism(a, b, &w).then_some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{brandt_extension, matrix_units};
    use crate::catalog;

    #[test]
    fn b2_automorphisms() {
        let b2 = matrix_units(2);
        let w = iso_search(&b2, &b2).unwrap();
        assert!(is_isomorphism(&b2, &b2, &w));
        let idx = |l: &str| b2.index_of(l).unwrap();
        // swapping both coordinates is an automorphism
        let mut swap = vec![0; 5];
        swap[0] = 0;
        swap[idx("(1,1)")] = idx("(2,2)");
        swap[idx("(2,2)")] = idx("(1,1)");
        swap[idx("(1,2)")] = idx("(2,1)");
        swap[idx("(2,1)")] = idx("(1,2)");
        assert!(is_isomorphism(&b2, &b2, &swap));
        // the transpose reverses products, so it is an anti-automorphism only
        let mut transpose = vec![0; 5];
        transpose[idx("(1,1)")] = idx("(1,1)");
        transpose[idx("(2,2)")] = idx("(2,2)");
        transpose[idx("(1,2)")] = idx("(2,1)");
        transpose[idx("(2,1)")] = idx("(1,2)");
        assert!(!is_isomorphism(&b2, &b2, &transpose));
    }

    #[test]
    fn different_idempotent_counts() {
        assert!(iso_search(&matrix_units(2), &catalog::chain(5)).is_none());
    }

    #[test]
    fn nested_extension_of_two_element_is_b4() {
        let two = catalog::two_element();
        let inner = brandt_extension(&two, 2).unwrap();
        let outer = brandt_extension(inner.carrier(), 2).unwrap();
        let b4 = matrix_units(4);
        assert_eq!(outer.carrier().order(), 17);
        let w = iso_search(outer.carrier(), &b4).unwrap();
        assert!(is_isomorphism(outer.carrier(), &b4, &w));
    }

    #[test]
    fn permuted_copies_are_found() {
        let s = brandt_extension(&catalog::cyclic_group_with_zero(3), 2).unwrap();
        let n = s.carrier().order();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        let p = s.carrier().permuted(&perm).unwrap();
        let w = iso_search(s.carrier(), &p).unwrap();
        assert!(is_isomorphism(s.carrier(), &p, &w));
    }

    #[test]
    fn non_isomorphic_same_order() {
        // Z/3 with zero against the 4-chain: both order 4, different idempotents
        assert!(iso_search(&catalog::cyclic_group_with_zero(3), &catalog::chain(4)).is_none());
        // left-zero monoid against the diamond semilattice: same idempotent count
        assert!(iso_search(&catalog::left_zero_monoid(), &catalog::diamond()).is_none());
    }
}
