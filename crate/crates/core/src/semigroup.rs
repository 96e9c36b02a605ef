//! Cayley-table semigroups.
//!
//! Elements are the indices `0..order`; labels are carried for display and
//! for the text format but play no role in any computation.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A finite semigroup given by its multiplication table.
///
/// Constructed only through validating constructors, so every value
/// satisfies associativity and the zero/identity laws of its cached
/// elements.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    zero: Option<usize>,
    identity: Option<usize>,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .field("zero", &self.zero)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

impl FiniteSemigroup {
    /// Validates a table and builds the semigroup.
    ///
    /// A declared zero or identity is checked against its law; an undeclared
    /// one is detected by scanning all elements.
    pub fn new(
        table: Vec<Vec<usize>>,
        labels: Vec<String>,
        declared_zero: Option<usize>,
        declared_identity: Option<usize>,
    ) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::Shape("table is empty".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat, labels, declared_zero, declared_identity)
    }

    /// Builds a semigroup from a product function evaluated on every pair.
    pub fn from_fn(
        order: usize,
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut flat = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                flat.push(product(i, j));
            }
        }
        Self::from_flat(order, flat, labels, None, None)
    }

    fn from_flat(
        order: usize,
        table: Vec<usize>,
        labels: Vec<String>,
        declared_zero: Option<usize>,
        declared_identity: Option<usize>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Shape("table is empty".into()));
        }
        if let Some(pos) = table.iter().position(|&x| x >= order) {
            return Err(Error::Shape(format!(
                "entry [{}][{}] = {} is out of range 0..{order}",
                pos / order,
                pos % order,
                table[pos]
            )));
        }
        if labels.len() != order {
            return Err(Error::Shape(format!(
                "{} labels given for {order} elements",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Shape(format!("invalid label {l:?}")));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::Shape(format!("duplicate label {l:?}")));
            }
        }
        let mut s = FiniteSemigroup {
            order,
            table,
            labels,
            zero: None,
            identity: None,
        };
        if let Some((i, j, k)) = s.associativity_witness() {
            return Err(Error::NonAssociative { i, j, k });
        }
        s.zero = match declared_zero {
            Some(z) if z >= order => return Err(Error::Shape(format!("zero {z} out of range"))),
            Some(z) if !s.is_zero_element(z) => return Err(Error::BadZero(z)),
            Some(z) => Some(z),
            None => (0..order).find(|&z| s.is_zero_element(z)),
        };
        s.identity = match declared_identity {
            Some(e) if e >= order => {
                return Err(Error::Shape(format!("identity {e} out of range")))
            }
            Some(e) if !s.is_identity_element(e) => return Err(Error::BadIdentity(e)),
            Some(e) => Some(e),
            None => (0..order).find(|&e| s.is_identity_element(e)),
        };
        Ok(s)
    }

    /// First triple (in lexicographic order) violating associativity.
    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Re-runs the associativity check on the stored table.
    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    fn is_zero_element(&self, z: usize) -> bool {
        (0..self.order).all(|i| self.mul(z, i) == z && self.mul(i, z) == z)
    }

    fn is_identity_element(&self, e: usize) -> bool {
        (0..self.order).all(|i| self.mul(e, i) == i && self.mul(i, e) == i)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row `a` of the Cayley table.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn is_monoid_with_zero(&self) -> bool {
        self.zero.is_some() && self.identity.is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn require_zero(&self) -> Result<usize> {
        self.zero.ok_or(Error::NoZero)
    }

    pub fn require_identity(&self) -> Result<usize> {
        self.identity.ok_or(Error::NoIdentity)
    }

    /// Non-zero elements in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&x| Some(x) != self.zero)
    }

    /// Copy with new labels; the table is untouched.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        Self::from_flat(self.order, self.table.clone(), labels, self.zero, self.identity)
    }

    /// Isomorphic copy in which old element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::Shape("permutation has wrong length".into()));
        }
        let mut inverse = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            if new >= n || inverse[new] != usize::MAX {
                return Err(Error::Shape("not a permutation".into()));
            }
            inverse[new] = old;
        }
        let labels = inverse.iter().map(|&old| self.labels[old].clone()).collect();
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = perm[self.mul(inverse[a], inverse[b])];
            }
        }
        Self::from_flat(
            n,
            flat,
            labels,
            self.zero.map(|z| perm[z]),
            self.identity.map(|e| perm[e]),
        )
    }

    /// Closure of `gens` under multiplication, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.order];
        let mut members = Vec::new();
        self.extend_closure(&mut mask, &mut members, gens);
        mask
    }

    fn extend_closure(&self, mask: &mut [bool], members: &mut Vec<usize>, new: &[usize]) {
        let mut queue: Vec<usize> = Vec::new();
        for &g in new {
            if !mask[g] {
                mask[g] = true;
                queue.push(g);
            }
        }
        while let Some(x) = queue.pop() {
            members.push(x);
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !mask[p] {
                        mask[p] = true;
                        queue.push(p);
                    }
                }
                i += 1;
            }
        }
    }

    /// Greedy generating set: repeatedly adds the element whose adjunction
    /// enlarges the generated subsemigroup the most (smallest index on ties).
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut mask = vec![false; self.order];
        let mut members = Vec::new();
        while members.len() < self.order {
            let mut best: Option<(usize, usize)> = None;
            for x in 0..self.order {
                if mask[x] {
                    continue;
                }
                let mut trial_mask = mask.clone();
                let mut trial_members = members.clone();
                self.extend_closure(&mut trial_mask, &mut trial_members, &[x]);
                let gain = trial_members.len();
                if best.is_none_or(|(_, g)| gain > g) {
                    best = Some((x, gain));
                }
            }
            let (x, _) = best.expect("closure incomplete but no candidate left");
            gens.push(x);
            self.extend_closure(&mut mask, &mut members, &[x]);
        }
        gens
    }

    /// Builds the subsemigroup on a multiplicatively closed subset.
    ///
    /// Returns the subsemigroup together with the sorted list of ambient
    /// indices; sub-index `k` corresponds to ambient element `elements[k]`.
    pub fn subsemigroup(&self, subset: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let mut elements: Vec<usize> = subset.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let mut position = vec![usize::MAX; self.order];
        for (k, &x) in elements.iter().enumerate() {
            position[x] = k;
        }
        let m = elements.len();
        let mut flat = Vec::with_capacity(m * m);
        for &a in &elements {
            for &b in &elements {
                let p = self.mul(a, b);
                if position[p] == usize::MAX {
                    return Err(Error::Shape(format!(
                        "subset not closed: {a}*{b} = {p} lies outside"
                    )));
                }
                flat.push(position[p]);
            }
        }
        let labels = elements.iter().map(|&x| self.labels[x].clone()).collect();
        let sub = Self::from_flat(m, flat, labels, None, None)?;
        Ok((sub, elements))
    }

    /// Whether `subset` is a left ideal (`S·A ⊆ A`) and a right ideal (`A·S ⊆ A`).
    pub fn ideal_sides(&self, subset: &[usize]) -> (bool, bool) {
        let mut mask = vec![false; self.order];
        for &x in subset {
            mask[x] = true;
        }
        let left = subset
            .iter()
            .all(|&a| (0..self.order).all(|s| mask[self.mul(s, a)]));
        let right = subset
            .iter()
            .all(|&a| (0..self.order).all(|s| mask[self.mul(a, s)]));
        (left, right)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Default labels `e0 .. e{n-1}`.
pub fn default_labels(order: usize) -> Vec<String> {
    (0..order).map(|i| format!("e{i}")).collect()
}
