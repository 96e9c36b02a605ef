//! Structural classification by exhaustive definition checking.

use crate::congruence;
use crate::embed;
use crate::error::{Error, Result};
use crate::order::IdempotentOrder;
use crate::semigroup::FiniteSemigroup;

/// Boolean structure flags of a finite semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub order: usize,
    pub is_monoid_with_zero: bool,
    pub is_regular: bool,
    pub is_inverse: bool,
    pub is_clifford: bool,
    pub idempotents_central: bool,
    pub is_primitive_inverse: bool,
    /// `None` when the order exceeds the congruence bound.
    pub is_congruence_free: Option<bool>,
    pub has_b_star: bool,
    /// One entry per queried λ; `None` when the semigroup has no zero.
    pub has_b_star_lambda: Vec<(usize, Option<bool>)>,
    pub in_class_b: bool,
    /// Primitivity was computed without a zero (minimal over all of `E(S)`).
    pub primitives_without_zero: bool,
}

pub fn is_regular(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    (0..n).all(|x| (0..n).any(|y| s.mul(s.mul(x, y), x) == x))
}

/// The unique inverse of every element, when `s` is an inverse semigroup.
pub fn inverses(s: &FiniteSemigroup) -> Option<Vec<usize>> {
    let n = s.order();
    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = None;
        for y in 0..n {
            if s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y {
                if found.is_some() {
                    return None;
                }
                found = Some(y);
            }
        }
        inv.push(found?);
    }
    Some(inv)
}

pub fn idempotents_central(s: &FiniteSemigroup) -> bool {
    s.idempotents()
        .into_iter()
        .all(|e| (0..s.order()).all(|x| s.mul(e, x) == s.mul(x, e)))
}

/// Inverse semigroup with zero whose non-zero idempotents are all primitive.
pub fn is_primitive_inverse(s: &FiniteSemigroup) -> bool {
    if s.zero().is_none() || inverses(s).is_none() {
        return false;
    }
    let order = IdempotentOrder::of(s);
    s.idempotents()
        .into_iter()
        .filter(|&e| Some(e) != s.zero())
        .all(|e| order.is_primitive(e))
}

/// Computes every flag; `lambdas` selects the `𝓑*_λ` variants reported.
pub fn classify(s: &FiniteSemigroup, lambdas: &[usize]) -> PropertyReport {
    let inv = inverses(s);
    let is_clifford = inv
        .as_ref()
        .is_some_and(|inv| (0..s.order()).all(|x| s.mul(x, inv[x]) == s.mul(inv[x], x)));
    let central = idempotents_central(s);
    let has_b_star = embed::has_b_star(s);
    let has_b_star_lambda = lambdas
        .iter()
        .map(|&l| (l, embed::b_star_flags(s, l).ok().map(|f| f.has_b_star_lambda)))
        .collect();
    let is_congruence_free = match congruence::is_congruence_free(s) {
        Ok(b) => Some(b),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => unreachable!("congruence check failed: {e}"),
    };
    PropertyReport {
        order: s.order(),
        is_monoid_with_zero: s.is_monoid_with_zero(),
        is_regular: is_regular(s),
        is_inverse: inv.is_some(),
        is_clifford,
        idempotents_central: central,
        is_primitive_inverse: is_primitive_inverse(s),
        is_congruence_free,
        has_b_star,
        has_b_star_lambda,
        in_class_b: has_b_star && central && s.is_monoid_with_zero(),
        primitives_without_zero: s.zero().is_none(),
    }
}

/// Membership in the class of monoids with zero having the `𝓑*`-property
/// and central idempotents.
pub fn in_class_b(s: &FiniteSemigroup) -> bool {
    s.is_monoid_with_zero() && idempotents_central(s) && embed::has_b_star(s)
}

/// The maximal subgroup `H(e)` with identity `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    identity: usize,
    /// Sorted ambient indices.
    elements: Vec<usize>,
    /// `inverse[k]` is the ambient inverse of `elements[k]`.
    inverse: Vec<usize>,
}

impl Subgroup {
    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Inverse of `x` inside the group; `None` when `x` is not a member.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        self.elements
            .binary_search(&x)
            .ok()
            .map(|k| self.inverse[k])
    }

    /// The group's own multiplication table, indexed by position in `elements`.
    pub fn table(&self, s: &FiniteSemigroup) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| {
                        self.elements
                            .binary_search(&s.mul(a, b))
                            .expect("subgroup not closed")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Group of units of the local monoid `eSe`.
pub fn maximal_subgroup(s: &FiniteSemigroup, e: usize) -> Result<Subgroup> {
    if e >= s.order() || !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let mut local: Vec<usize> = (0..s.order()).map(|x| s.mul(s.mul(e, x), e)).collect();
    local.sort_unstable();
    local.dedup();
    let mut elements = Vec::new();
    let mut inverse = Vec::new();
    for &g in &local {
        if let Some(&h) = local
            .iter()
            .find(|&&h| s.mul(g, h) == e && s.mul(h, g) == e)
        {
            elements.push(g);
            inverse.push(h);
        }
    }
    Ok(Subgroup {
        identity: e,
        elements,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::{brandt_extension, matrix_units};
    use crate::catalog;

    #[test]
    fn semilattice_e_is_in_class_b() {
        let r = classify(&catalog::example_e(), &[2]);
        assert!(r.is_inverse && r.is_clifford && r.idempotents_central && r.in_class_b);
        assert_eq!(r.has_b_star_lambda, vec![(2, Some(true))]);
    }

    #[test]
    fn matrix_units_inverse_not_clifford() {
        let b2 = matrix_units(2);
        let r = classify(&b2, &[]);
        assert!(r.is_inverse && !r.is_clifford && r.is_regular);
        let x = b2.index_of("(1,2)").unwrap();
        let y = b2.index_of("(2,1)").unwrap();
        assert_eq!(b2.label(b2.mul(x, y)), "(1,1)");
        assert_eq!(b2.label(b2.mul(y, x)), "(2,2)");
    }

    #[test]
    fn rectangular_band_monoid_regular_not_inverse() {
        let t = catalog::rectangular_band_with_unity_and_zero();
        assert_eq!(t.order(), 6);
        let r = classify(&t, &[]);
        assert!(r.is_regular && !r.is_inverse && !r.idempotents_central);
        assert!(!r.in_class_b);
    }

    #[test]
    fn implication_chain_holds_on_catalog() {
        for (_, s) in catalog::corpus()
            .into_iter()
            .chain(catalog::non_b_samples())
        {
            let r = classify(&s, &[2]);
            assert!(!r.is_clifford || r.is_inverse);
            assert!(!r.is_inverse || r.is_regular);
            assert_eq!(r.in_class_b, r.has_b_star && r.idempotents_central && r.is_monoid_with_zero);
        }
    }

    #[test]
    fn units_of_monoid() {
        let g = catalog::cyclic_group_with_zero(3);
        let h = maximal_subgroup(&g, g.identity().unwrap()).unwrap();
        assert_eq!(h.len(), 3);
        let z = g.zero().unwrap();
        assert_eq!(maximal_subgroup(&g, z).unwrap().elements(), &[z]);
    }

    #[test]
    fn matrix_unit_idempotent_has_trivial_group() {
        let b2 = matrix_units(2);
        let d = b2.index_of("(1,1)").unwrap();
        assert_eq!(maximal_subgroup(&b2, d).unwrap().elements(), &[d]);
        let off = b2.index_of("(1,2)").unwrap();
        assert_eq!(maximal_subgroup(&b2, off).unwrap_err(), Error::NotIdempotent(off));
    }

    #[test]
    fn brandt_over_z2_diagonal_group() {
        let g = catalog::cyclic_group_with_zero(2);
        let ext = brandt_extension(&g, 2).unwrap();
        let one = g.identity().unwrap();
        let e = ext.encode(1, one, 1).unwrap();
        let h = maximal_subgroup(ext.carrier(), e).unwrap();
        let mut expected: Vec<usize> = g.nonzero().map(|s| ext.encode(1, s, 1).unwrap()).collect();
        expected.sort();
        assert_eq!(h.elements(), expected.as_slice());
        for &x in h.elements() {
            let y = h.inverse(x).unwrap();
            assert_eq!(ext.carrier().mul(x, y), e);
        }
    }
}
