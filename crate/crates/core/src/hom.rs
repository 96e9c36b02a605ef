//! Homomorphisms between finite semigroups: checking and enumeration.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::function::{check_map_into, Magma};
use crate::semigroup::FiniteSemigroup;

/// A verified homomorphism, stored as its map table.
///
/// Two homomorphisms are equal when their tables (and target orders) agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Homomorphism {
    map: Vec<usize>,
    target_order: usize,
    source_zero: Option<usize>,
    target_zero: Option<usize>,
}

impl Homomorphism {
    fn from_verified(map: Vec<usize>, source: &FiniteSemigroup, target: &FiniteSemigroup) -> Self {
        Homomorphism {
            map,
            target_order: target.order(),
            source_zero: source.zero(),
            target_zero: target.zero(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn source_order(&self) -> usize {
        self.map.len()
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    /// Constant map.
    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&y| y == self.map[0])
    }

    pub fn preserves_zero(&self) -> bool {
        matches!((self.source_zero, self.target_zero), (Some(a), Some(b)) if self.map[a] == b)
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        self.map.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|b| b)
    }

    /// Sorted distinct image elements.
    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `self` followed by `next` (the right-action composite `x ↦ ((x)self)next`).
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism> {
        if self.target_order != next.source_order() {
            return Err(Error::Mismatch(format!(
                "target order {} differs from next source order {}",
                self.target_order,
                next.source_order()
            )));
        }
        Ok(Homomorphism {
            map: self.map.iter().map(|&y| next.map[y]).collect(),
            target_order: next.target_order,
            source_zero: self.source_zero,
            target_zero: next.target_zero,
        })
    }

    /// The constant map onto `value`, which must be idempotent.
    pub fn constant(source: &FiniteSemigroup, target: &FiniteSemigroup, value: usize) -> Result<Self> {
        check_homomorphism(&vec![value; source.order()], source, target)
    }

    pub fn identity(s: &FiniteSemigroup) -> Self {
        Homomorphism::from_verified((0..s.order()).collect(), s, s)
    }

    /// One-line tuple rendering, e.g. `(0,2,1)`.
    pub fn tuple(&self) -> String {
        let parts: Vec<String> = self.map.iter().map(|y| y.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Verifies the product law over all pairs and returns the homomorphism.
pub fn check_homomorphism(map: &[usize], source: &FiniteSemigroup, target: &FiniteSemigroup) -> Result<Homomorphism> {
    if let Some(&y) = map.iter().find(|&&y| y >= target.order()) {
        return Err(Error::Mismatch(format!("image {y} outside target of order {}", target.order())));
    }
    check_map_into(source, target, map)?;
    Ok(Homomorphism::from_verified(map.to_vec(), source, target))
}

/// Checks a map into a function-backed target; see [`check_map_into`].
pub fn check_homomorphism_into<M: Magma>(map: &[M::Elem], source: &FiniteSemigroup, target: &M) -> Result<()> {
    check_map_into(source, target, map)
}

/// Limits for the combinatorial searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of image assignments tried before giving up.
    pub node_budget: u64,
}

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

const UNSET: usize = usize::MAX;

struct HomSearch<'a> {
    s: &'a FiniteSemigroup,
    t: &'a FiniteSemigroup,
    gens: Vec<usize>,
    budget: u64,
    nodes: &'a AtomicU64,
    exhausted: &'a AtomicBool,
}

#[derive(Clone)]
struct Partial {
    map: Vec<usize>,
    defined: Vec<usize>,
}

impl HomSearch<'_> {
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }

    /// Sets `x ↦ y` and propagates products; false on a clash.
    fn assign(&self, p: &mut Partial, x: usize, y: usize) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if p.map[x] != UNSET {
                if p.map[x] != y {
                    return false;
                }
                continue;
            }
            p.map[x] = y;
            p.defined.push(x);
            for k in 0..p.defined.len() {
                let u = p.defined[k];
                let fu = p.map[u];
                queue.push((self.s.mul(x, u), self.t.mul(y, fu)));
                queue.push((self.s.mul(u, x), self.t.mul(fu, y)));
            }
        }
        true
    }

    fn dfs(&self, p: Partial, depth: usize, out: &mut Vec<Vec<usize>>) {
        if self.exhausted.load(Ordering::Relaxed) {
            return;
        }
        if depth == self.gens.len() {
            out.push(p.map);
            return;
        }
        let g = self.gens[depth];
        if p.map[g] != UNSET {
            return self.dfs(p, depth + 1, out);
        }
        for y in 0..self.t.order() {
            if !self.tick() {
                return;
            }
            let mut next = p.clone();
            if self.assign(&mut next, g, y) {
                self.dfs(next, depth + 1, out);
            }
        }
    }
}

/// All homomorphisms `s → t` (non-constant ones only when `nontrivial_only`),
/// sorted lexicographically by map table.
pub fn enumerate_homs(s: &FiniteSemigroup, t: &FiniteSemigroup, nontrivial_only: bool) -> Result<Vec<Homomorphism>> {
    enumerate_homs_with(s, t, nontrivial_only, &SearchConfig::default())
}

pub fn enumerate_homs_with(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    nontrivial_only: bool,
    config: &SearchConfig,
) -> Result<Vec<Homomorphism>> {
    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);
    let search = HomSearch {
        s,
        t,
        gens: s.generating_set(),
        budget: config.node_budget,
        nodes: &nodes,
        exhausted: &exhausted,
    };
    let empty = Partial {
        map: vec![UNSET; s.order()],
        defined: Vec::with_capacity(s.order()),
    };
    let first = search.gens[0];
    // the first generator's image choices are independent subtrees
    let mut maps: Vec<Vec<usize>> = (0..t.order())
        .into_par_iter()
        .flat_map_iter(|y| {
            let mut out = Vec::new();
            if search.tick() {
                let mut p = empty.clone();
                if search.assign(&mut p, first, y) {
                    search.dfs(p, 1, &mut out);
                }
            }
            out
        })
        .collect();
    if exhausted.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded {
            budget: config.node_budget,
        });
    }
    if nontrivial_only {
        maps.retain(|m| m.iter().any(|&y| y != m[0]));
    }
    maps.sort_unstable();
    Ok(maps
        .into_iter()
        .map(|m| {
            debug_assert!(check_map_into(s, t, &m).is_ok());
            Homomorphism::from_verified(m, s, t)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{brandt_extension, matrix_units};
    use crate::catalog;

    /// Exhaustive oracle over all |T|^|S| maps.
    fn brute_force(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<Vec<usize>> {
        let n = s.order();
        let mut out = Vec::new();
        let mut map = vec![0; n];
        loop {
            if check_map_into(s, t, &map).is_ok() {
                out.push(map.clone());
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                map[i] += 1;
                if map[i] < t.order() {
                    break;
                }
                map[i] = 0;
            }
        }
    }

    #[test]
    fn enumeration_matches_exhaustive_oracle() {
        let mut samples: Vec<FiniteSemigroup> = catalog::corpus().into_iter().map(|(_, s)| s).collect();
        samples.push(matrix_units(2));
        samples.push(catalog::left_zero_monoid());
        for s in &samples {
            for t in &samples {
                if t.order().pow(s.order() as u32) > 200_000 {
                    continue;
                }
                let found: Vec<Vec<usize>> = enumerate_homs(s, t, false)
                    .unwrap()
                    .into_iter()
                    .map(|h| h.map().to_vec())
                    .collect();
                assert_eq!(found, brute_force(s, t), "{s:?} -> {t:?}");
            }
        }
    }

    #[test]
    fn b2_has_two_nontrivial_endomorphisms() {
        let b2 = matrix_units(2);
        let homs = enumerate_homs(&b2, &b2, true).unwrap();
        assert_eq!(homs.len(), 2);
        assert!(homs.contains(&Homomorphism::identity(&b2)));
        assert!(homs.iter().all(|h| h.is_injective() && h.is_surjective()));
    }

    #[test]
    fn trivial_semigroup_has_one_endomorphism() {
        let t = catalog::trivial();
        let homs = enumerate_homs(&t, &t, false).unwrap();
        assert_eq!(homs.len(), 1);
        assert!(homs[0].is_trivial());
        assert!(enumerate_homs(&t, &t, true).unwrap().is_empty());
    }

    #[test]
    fn constant_to_zero_is_trivial_hom() {
        let b2 = matrix_units(2);
        let h = Homomorphism::constant(&b2, &b2, 0).unwrap();
        assert!(h.is_trivial() && h.preserves_zero());
        let off = b2.index_of("(1,2)").unwrap();
        assert!(Homomorphism::constant(&b2, &b2, off).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let s = brandt_extension(&catalog::chain(4), 2).unwrap();
        let err = enumerate_homs_with(s.carrier(), s.carrier(), false, &SearchConfig { node_budget: 10 })
            .unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn composition() {
        let b2 = matrix_units(2);
        let homs = enumerate_homs(&b2, &b2, true).unwrap();
        for f in &homs {
            for g in &homs {
                let fg = f.then(g).unwrap();
                assert!(check_homomorphism(fg.map(), &b2, &b2).is_ok());
            }
        }
        let z = Homomorphism::constant(&b2, &catalog::two_element(), 0).unwrap();
        assert!(z.then(&homs[0]).is_err());
    }
}
