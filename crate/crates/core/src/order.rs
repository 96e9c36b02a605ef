//! Natural partial order on idempotents.

use crate::semigroup::FiniteSemigroup;

/// `E(S)` with the order `e ⩽ f ⇔ ef = fe = e` and its primitive elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentOrder {
    idempotents: Vec<usize>,
    /// `leq[i * k + j]` for positions `i, j` in `idempotents`, `k = idempotents.len()`.
    leq: Vec<bool>,
    primitives: Vec<usize>,
    /// True when `S` has no zero and minimality was taken over all of `E(S)`.
    zero_free_minimality: bool,
}

impl IdempotentOrder {
    pub fn of(s: &FiniteSemigroup) -> Self {
        let idempotents = s.idempotents();
        let k = idempotents.len();
        let mut leq = vec![false; k * k];
        for (i, &e) in idempotents.iter().enumerate() {
            for (j, &f) in idempotents.iter().enumerate() {
                leq[i * k + j] = s.mul(e, f) == e && s.mul(f, e) == e;
            }
        }
        let candidates: Vec<usize> = (0..k)
            .filter(|&i| Some(idempotents[i]) != s.zero())
            .collect();
        let primitives = candidates
            .iter()
            .filter(|&&i| {
                candidates
                    .iter()
                    .all(|&j| j == i || !leq[j * k + i])
            })
            .map(|&i| idempotents[i])
            .collect();
        IdempotentOrder {
            idempotents,
            leq,
            primitives,
            zero_free_minimality: s.zero().is_none(),
        }
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn primitives(&self) -> &[usize] {
        &self.primitives
    }

    pub fn zero_free_minimality(&self) -> bool {
        self.zero_free_minimality
    }

    fn position(&self, e: usize) -> Option<usize> {
        self.idempotents.binary_search(&e).ok()
    }

    /// `e ⩽ f`; false when either argument is not idempotent.
    pub fn leq(&self, e: usize, f: usize) -> bool {
        match (self.position(e), self.position(f)) {
            (Some(i), Some(j)) => self.leq[i * self.idempotents.len() + j],
            _ => false,
        }
    }

    pub fn is_primitive(&self, e: usize) -> bool {
        self.primitives.contains(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::matrix_units;
    use crate::catalog;

    #[test]
    fn chain_has_middle_as_only_primitive() {
        let e = catalog::example_e();
        let o = IdempotentOrder::of(&e);
        let (a, b, c) = (e.index_of("a").unwrap(), e.index_of("b").unwrap(), e.index_of("c").unwrap());
        let mut all = vec![a, b, c];
        all.sort();
        assert_eq!(o.idempotents(), all.as_slice());
        assert_eq!(o.primitives(), &[b]);
        assert!(o.leq(c, b) && o.leq(b, a) && o.leq(c, a));
        assert!(!o.leq(a, b));
    }

    #[test]
    fn matrix_units_diagonal_is_primitive_antichain() {
        let b2 = matrix_units(2);
        let o = IdempotentOrder::of(&b2);
        let d11 = b2.index_of("(1,1)").unwrap();
        let d22 = b2.index_of("(2,2)").unwrap();
        let mut expected = vec![d11, d22, b2.zero().unwrap()];
        expected.sort();
        assert_eq!(o.idempotents(), expected.as_slice());
        assert_eq!(o.primitives(), &[d11, d22]);
        assert!(!o.leq(d11, d22) && !o.leq(d22, d11));
    }

    #[test]
    fn group_with_zero_has_identity_as_primitive() {
        let g = catalog::cyclic_group_with_zero(2);
        let o = IdempotentOrder::of(&g);
        assert_eq!(o.idempotents().len(), 2);
        assert_eq!(o.primitives(), &[g.identity().unwrap()]);
    }

    #[test]
    fn leq_is_a_partial_order_on_catalog() {
        for (_, s) in catalog::corpus() {
            let o = IdempotentOrder::of(&s);
            let es = o.idempotents();
            for &e in es {
                assert!(o.leq(e, e));
                for &f in es {
                    if o.leq(e, f) && o.leq(f, e) {
                        assert_eq!(e, f);
                    }
                    for &g in es {
                        if o.leq(e, f) && o.leq(f, g) {
                            assert!(o.leq(e, g));
                        }
                    }
                }
            }
        }
    }
}
