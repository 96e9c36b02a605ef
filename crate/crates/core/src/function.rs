//! Semigroups given by a computable multiplication rather than a table.
//!
//! Used for codomains that are infinite, such as the bicyclic monoid with an
//! adjoined zero. Only checking of maps *into* such a semigroup is supported.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Anything with an associative multiplication on some element type.
pub trait Magma {
    type Elem: Clone + Eq + Debug;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn zero_elem(&self) -> Option<Self::Elem>;
}

impl Magma for FiniteSemigroup {
    type Elem = usize;

    fn multiply(&self, a: &usize, b: &usize) -> usize {
        self.mul(*a, *b)
    }

    fn zero_elem(&self) -> Option<usize> {
        self.zero()
    }
}

/// A semigroup on tokens of type `T` with a product function and a zero.
#[derive(Clone)]
pub struct FunctionSemigroup<T> {
    name: &'static str,
    product: fn(&T, &T) -> T,
    zero: T,
    identity: Option<T>,
}

impl<T: Clone + Eq + Debug> FunctionSemigroup<T> {
    pub fn new(name: &'static str, product: fn(&T, &T) -> T, zero: T, identity: Option<T>) -> Self {
        FunctionSemigroup {
            name,
            product,
            zero,
            identity,
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn zero(&self) -> &T {
        &self.zero
    }

    pub fn identity(&self) -> Option<&T> {
        self.identity.as_ref()
    }

    /// Spot-checks associativity on every triple drawn from `tokens`.
    pub fn check_associative_on(&self, tokens: &[T]) -> Result<()> {
        for (i, a) in tokens.iter().enumerate() {
            for (j, b) in tokens.iter().enumerate() {
                let ab = self.multiply(a, b);
                for (k, c) in tokens.iter().enumerate() {
                    if self.multiply(&ab, c) != self.multiply(a, &self.multiply(b, c)) {
                        return Err(Error::NonAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Clone + Eq + Debug> Magma for FunctionSemigroup<T> {
    type Elem = T;

    fn multiply(&self, a: &T, b: &T) -> T {
        (self.product)(a, b)
    }

    fn zero_elem(&self) -> Option<T> {
        Some(self.zero.clone())
    }
}

/// Element of the bicyclic monoid with zero: `Word { q: i, p: j }` stands
/// for the word `q^i p^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bicyclic {
    Zero,
    Word { q: u64, p: u64 },
}

impl Bicyclic {
    pub const ONE: Bicyclic = Bicyclic::Word { q: 0, p: 0 };
    pub const P: Bicyclic = Bicyclic::Word { q: 0, p: 1 };
    pub const Q: Bicyclic = Bicyclic::Word { q: 1, p: 0 };

    pub fn word(q: u64, p: u64) -> Self {
        Bicyclic::Word { q, p }
    }
}

fn bicyclic_product(a: &Bicyclic, b: &Bicyclic) -> Bicyclic {
    match (*a, *b) {
        (Bicyclic::Word { q: i, p: j }, Bicyclic::Word { q: k, p: l }) => {
            // q^i p^j q^k p^l with pq = 1 cancels min(j, k) pairs
            let m = j.min(k);
            Bicyclic::Word {
                q: i + k - m,
                p: j + l - m,
            }
        }
        _ => Bicyclic::Zero,
    }
}

/// The bicyclic monoid `<p, q | pq = 1>` with an adjoined zero.
pub fn bicyclic_with_zero() -> FunctionSemigroup<Bicyclic> {
    FunctionSemigroup::new(
        "bicyclic-with-zero",
        bicyclic_product,
        Bicyclic::Zero,
        Some(Bicyclic::ONE),
    )
}

/// Element of a Brandt extension over a function-backed base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BrandtToken<E> {
    Zero,
    Cell(usize, E, usize),
}

/// `B⁰_λ(M)` for a base given only by its multiplication.
pub struct BrandtOver<'a, M: Magma> {
    base: &'a M,
    lambda: usize,
    base_zero: M::Elem,
}

impl<'a, M: Magma> BrandtOver<'a, M> {
    pub fn new(base: &'a M, lambda: usize) -> Result<Self> {
        let base_zero = base.zero_elem().ok_or(Error::NoZero)?;
        Ok(BrandtOver {
            base,
            lambda,
            base_zero,
        })
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Builds the cell `(alpha, s, beta)`; a zero middle collapses to the zero.
    pub fn cell(&self, alpha: usize, s: M::Elem, beta: usize) -> BrandtToken<M::Elem> {
        assert!(alpha < self.lambda && beta < self.lambda, "index out of range");
        if s == self.base_zero {
            BrandtToken::Zero
        } else {
            BrandtToken::Cell(alpha, s, beta)
        }
    }
}

impl<M: Magma> Magma for BrandtOver<'_, M> {
    type Elem = BrandtToken<M::Elem>;

    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        match (a, b) {
            (BrandtToken::Cell(al, x, be), BrandtToken::Cell(ga, y, de)) if be == ga => {
                let xy = self.base.multiply(x, y);
                if xy == self.base_zero {
                    BrandtToken::Zero
                } else {
                    BrandtToken::Cell(*al, xy, *de)
                }
            }
            _ => BrandtToken::Zero,
        }
    }

    fn zero_elem(&self) -> Option<Self::Elem> {
        Some(BrandtToken::Zero)
    }
}

/// Verifies `map` is a homomorphism from `source` into a function-backed
/// target, reporting the first offending pair.
pub fn check_map_into<M: Magma>(source: &FiniteSemigroup, target: &M, map: &[M::Elem]) -> Result<()> {
    if map.len() != source.order() {
        return Err(Error::Mismatch(format!(
            "map has {} entries for a source of order {}",
            map.len(),
            source.order()
        )));
    }
    for x in 0..source.order() {
        for y in 0..source.order() {
            if map[source.mul(x, y)] != target.multiply(&map[x], &map[y]) {
                return Err(Error::NotHomomorphism { x, y });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bicyclic_relation_pq_is_one() {
        let c = bicyclic_with_zero();
        assert_eq!(c.multiply(&Bicyclic::P, &Bicyclic::Q), Bicyclic::ONE);
        // qp is an idempotent different from 1
        let qp = c.multiply(&Bicyclic::Q, &Bicyclic::P);
        assert_eq!(qp, Bicyclic::word(1, 1));
        assert_eq!(c.multiply(&qp, &qp), qp);
        assert_eq!(c.multiply(&Bicyclic::Zero, &Bicyclic::word(3, 2)), Bicyclic::Zero);
        assert_eq!(c.multiply(&Bicyclic::word(3, 2), &Bicyclic::Zero), Bicyclic::Zero);
    }

    #[test]
    fn bicyclic_spot_associativity() {
        let c = bicyclic_with_zero();
        let mut tokens = vec![Bicyclic::Zero];
        for q in 0..4 {
            for p in 0..4 {
                tokens.push(Bicyclic::word(q, p));
            }
        }
        c.check_associative_on(&tokens).unwrap();
    }

    #[test]
    fn brandt_over_function_base() {
        let c = bicyclic_with_zero();
        let b = BrandtOver::new(&c, 2).unwrap();
        let x = b.cell(0, Bicyclic::P, 1);
        let y = b.cell(1, Bicyclic::Q, 0);
        assert_eq!(b.multiply(&x, &y), b.cell(0, Bicyclic::ONE, 0));
        assert_eq!(b.multiply(&x, &x), BrandtToken::Zero);
        assert_eq!(b.cell(0, Bicyclic::Zero, 1), BrandtToken::Zero);
    }
}
