//! Brandt λ⁰-extensions, matrix units and orthogonal sums.
//!
//! Carrier layout: index 0 is the zero, the non-zero cells `(α, s, β)`
//! follow in lexicographic order of `(α, β, s)` with `s` running over the
//! non-zero base elements in index order. Labels print indices 1-based.

use crate::error::{Error, Result};
use crate::hom::{check_homomorphism, Homomorphism};
use crate::props;
use crate::semigroup::FiniteSemigroup;

/// Coordinates `(α, s, β)` of a non-zero cell; `s` is a base index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub alpha: usize,
    pub s: usize,
    pub beta: usize,
}

/// `B⁰_λ(S)` together with its coordinate maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrandtExtension {
    base: FiniteSemigroup,
    lambda: usize,
    carrier: FiniteSemigroup,
    /// Position of each base element among the non-zero ones (`usize::MAX` for zero).
    rank: Vec<usize>,
    cells: Vec<Option<Cell>>,
}

impl BrandtExtension {
    pub fn base(&self) -> &FiniteSemigroup {
        &self.base
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn carrier(&self) -> &FiniteSemigroup {
        &self.carrier
    }

    pub fn zero(&self) -> usize {
        0
    }

    /// True when the base has no identity; the construction still succeeds.
    pub fn base_lacks_identity(&self) -> bool {
        self.base.identity().is_none()
    }

    /// Carrier index of `(α, s, β)`, or `None` when `s` is the base zero.
    pub fn encode(&self, alpha: usize, s: usize, beta: usize) -> Option<usize> {
        assert!(alpha < self.lambda && beta < self.lambda, "index out of range");
        let r = self.rank[s];
        if r == usize::MAX {
            return None;
        }
        let m = self.base.order() - 1;
        Some(1 + (alpha * self.lambda + beta) * m + r)
    }

    /// Like [`encode`](Self::encode) but sends a zero middle to the carrier zero.
    pub fn encode_or_zero(&self, alpha: usize, s: usize, beta: usize) -> usize {
        self.encode(alpha, s, beta).unwrap_or(0)
    }

    pub fn decode(&self, x: usize) -> Option<Cell> {
        self.cells[x]
    }

    /// Elements of `S_{α,α}` (including the carrier zero), in base order.
    pub fn diagonal_copy(&self, alpha: usize) -> Vec<usize> {
        (0..self.base.order())
            .map(|s| self.encode_or_zero(alpha, s, alpha))
            .collect()
    }

    /// The matrix-unit subsemigroup `B⁰_λ(1)`: zero then `(α, 1, β)` row-major.
    pub fn unit_copy(&self) -> Result<Vec<usize>> {
        let one = self.base.require_identity()?;
        let mut v = vec![0];
        for a in 0..self.lambda {
            for b in 0..self.lambda {
                v.push(self.encode_or_zero(a, one, b));
            }
        }
        Ok(v)
    }

    /// Image of a subset `A ⊆ S` (taken together with zero) inside the carrier.
    pub fn lift_subset(&self, subset: &[usize]) -> Vec<usize> {
        let mut out = vec![0];
        for a in 0..self.lambda {
            for b in 0..self.lambda {
                out.extend(subset.iter().filter_map(|&s| self.encode(a, s, b)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn index_label(i: usize) -> String {
    (i + 1).to_string()
}

/// Builds `B⁰_λ(S)`.
pub fn brandt_extension(base: &FiniteSemigroup, lambda: usize) -> Result<BrandtExtension> {
    let zero = base.require_zero()?;
    if lambda == 0 {
        return Err(Error::Shape("lambda must be positive".into()));
    }
    let n = base.order();
    let m = n - 1;
    let mut rank = vec![usize::MAX; n];
    let nonzero: Vec<usize> = base.nonzero().collect();
    for (r, &s) in nonzero.iter().enumerate() {
        rank[s] = r;
    }
    let order = lambda * lambda * m + 1;
    let mut cells = vec![None; order];
    let mut labels = vec!["0".to_string(); order];
    for alpha in 0..lambda {
        for beta in 0..lambda {
            for (r, &s) in nonzero.iter().enumerate() {
                let x = 1 + (alpha * lambda + beta) * m + r;
                cells[x] = Some(Cell { alpha, s, beta });
                labels[x] = format!(
                    "({},{},{})",
                    index_label(alpha),
                    base.label(s),
                    index_label(beta)
                );
            }
        }
    }
    let carrier = FiniteSemigroup::from_fn(order, labels, |x, y| match (cells[x], cells[y]) {
        (Some(a), Some(b)) if a.beta == b.alpha => {
            let p = base.mul(a.s, b.s);
            if p == zero {
                0
            } else {
                1 + (a.alpha * lambda + b.beta) * m + rank[p]
            }
        }
        _ => 0,
    })?;
    debug_assert_eq!(carrier.zero(), Some(0));
    Ok(BrandtExtension {
        base: base.clone(),
        lambda,
        carrier,
        rank,
        cells,
    })
}

/// The semigroup `B_λ` of `λ×λ` matrix units, labelled `(i,j)` and `0`.
///
/// Its table coincides with `brandt_extension(two_element(), λ)`.
pub fn matrix_units(lambda: usize) -> FiniteSemigroup {
    assert!(lambda >= 1, "lambda must be positive");
    let order = lambda * lambda + 1;
    let mut labels = vec!["0".to_string()];
    for i in 0..lambda {
        for j in 0..lambda {
            labels.push(format!("({},{})", index_label(i), index_label(j)));
        }
    }
    FiniteSemigroup::from_fn(order, labels, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        let (i, j) = ((x - 1) / lambda, (x - 1) % lambda);
        let (k, l) = ((y - 1) / lambda, (y - 1) % lambda);
        if j == k {
            1 + i * lambda + l
        } else {
            0
        }
    })
    .expect("matrix units table is valid")
}

/// Both sides of the double-extension isomorphism and the explicit map.
#[derive(Debug, Clone)]
pub struct DoubleExtension {
    /// `B⁰_{λ₁}(S)`.
    pub inner: BrandtExtension,
    /// `B⁰_{λ₂}(B⁰_{λ₁}(S))`.
    pub nested: BrandtExtension,
    /// `B⁰_{λ₁λ₂}(S)`.
    pub flat: BrandtExtension,
    /// `(α₂, (α₁, s, β₁), β₂) ↦ ((α₂, α₁), s, (β₂, β₁))`, pairs flattened as
    /// `outer·λ₁ + inner`; verified bijective homomorphism.
    pub witness: Homomorphism,
}

pub fn double_extension_witness(base: &FiniteSemigroup, lambda1: usize, lambda2: usize) -> Result<DoubleExtension> {
    let inner = brandt_extension(base, lambda1)?;
    let nested = brandt_extension(inner.carrier(), lambda2)?;
    let flat = brandt_extension(base, lambda1 * lambda2)?;
    let mut map = vec![0; nested.carrier().order()];
    for (x, slot) in map.iter_mut().enumerate() {
        if let Some(outer) = nested.decode(x) {
            let c = inner
                .decode(outer.s)
                .expect("non-zero nested cell has a non-zero middle");
            let left = outer.alpha * lambda1 + c.alpha;
            let right = outer.beta * lambda1 + c.beta;
            *slot = flat.encode(left, c.s, right).expect("middle is non-zero");
        }
    }
    let witness = check_homomorphism(&map, nested.carrier(), flat.carrier())?;
    if !witness.is_injective() || !witness.is_surjective() {
        return Err(Error::Mismatch("double-extension map is not a bijection".into()));
    }
    Ok(DoubleExtension {
        inner,
        nested,
        flat,
        witness,
    })
}

/// An orthogonal sum with the injections of its parts.
#[derive(Debug, Clone)]
pub struct OrthogonalSum {
    pub sum: FiniteSemigroup,
    /// `injections[k][x]` is the sum index of element `x` of part `k`.
    pub injections: Vec<Vec<usize>>,
}

/// Disjoint union of the parts with their zeros identified; products of
/// elements from different parts are zero.
///
/// Layout: the shared zero at 0, then the non-zero elements of each part in
/// order. Labels get a `_k` suffix naming the (1-based) part.
pub fn orthogonal_sum(parts: &[FiniteSemigroup]) -> Result<OrthogonalSum> {
    if parts.is_empty() {
        return Err(Error::Shape("orthogonal sum of no parts".into()));
    }
    let zeros: Vec<usize> = parts.iter().map(|p| p.require_zero()).collect::<Result<_>>()?;
    let mut injections = Vec::with_capacity(parts.len());
    let mut owner = vec![(usize::MAX, usize::MAX)];
    let mut labels = vec!["0".to_string()];
    for (k, p) in parts.iter().enumerate() {
        let mut inj = vec![0; p.order()];
        for x in p.nonzero() {
            inj[x] = owner.len();
            owner.push((k, x));
            labels.push(format!("{}_{}", p.label(x), k + 1));
        }
        injections.push(inj);
    }
    let sum = FiniteSemigroup::from_fn(owner.len(), labels, |a, b| {
        let ((ka, xa), (kb, xb)) = (owner[a], owner[b]);
        if a == 0 || b == 0 || ka != kb {
            return 0;
        }
        let p = parts[ka].mul(xa, xb);
        if p == zeros[ka] {
            0
        } else {
            injections[ka][p]
        }
    })?;
    Ok(OrthogonalSum { sum, injections })
}

/// Primitive-inverse status of `S` and of `B⁰_λ(S)`; the two must agree.
pub fn primitive_inverse_check_extension(s: &FiniteSemigroup, lambda: usize) -> Result<(bool, bool)> {
    let ext = brandt_extension(s, lambda)?;
    Ok((
        props::is_primitive_inverse(s),
        props::is_primitive_inverse(ext.carrier()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::congruence::is_congruence_free;
    use crate::iso::iso_search;

    #[test]
    fn order_formula() {
        let e = catalog::example_e();
        assert_eq!(brandt_extension(&e, 2).unwrap().carrier().order(), 9);
        for (_, s) in catalog::corpus() {
            for lambda in 1..=3 {
                let ext = brandt_extension(&s, lambda).unwrap();
                assert_eq!(ext.carrier().order(), lambda * lambda * (s.order() - 1) + 1);
                assert!(ext.carrier().is_associative());
            }
        }
    }

    #[test]
    fn lambda_one_is_the_base() {
        for (_, s) in catalog::corpus() {
            let ext = brandt_extension(&s, 1).unwrap();
            let map: Vec<usize> = (0..s.order()).map(|x| ext.encode_or_zero(0, x, 0)).collect();
            assert!(crate::iso::is_isomorphism(&s, ext.carrier(), &map));
        }
    }

    #[test]
    fn two_element_gives_matrix_units() {
        let ext = brandt_extension(&catalog::two_element(), 2).unwrap();
        let b2 = matrix_units(2);
        assert_eq!(ext.carrier().rows(), b2.rows());
        assert_eq!(b2.order(), 5);
        let x = b2.index_of("(1,2)").unwrap();
        let y = b2.index_of("(2,1)").unwrap();
        assert_eq!(b2.label(b2.mul(x, y)), "(1,1)");
        assert_eq!(b2.mul(x, x), 0);
    }

    #[test]
    fn small_matrix_units() {
        let b1 = matrix_units(1);
        assert!(iso_search(&b1, &catalog::two_element()).is_some());
        let b3 = matrix_units(3);
        assert_eq!(b3.order(), 10);
        assert!(is_congruence_free(&b3).unwrap());
    }

    #[test]
    fn no_zero_is_rejected() {
        let g = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 0]], crate::semigroup::default_labels(2), None, None).unwrap();
        assert_eq!(brandt_extension(&g, 2).unwrap_err(), Error::NoZero);
        assert_eq!(orthogonal_sum(std::slice::from_ref(&g)).unwrap_err(), Error::NoZero);
        assert_eq!(double_extension_witness(&g, 1, 1).unwrap_err(), Error::NoZero);
    }

    #[test]
    fn double_extension_small_cases() {
        let two = catalog::two_element();
        let d = double_extension_witness(&two, 1, 1).unwrap();
        assert_eq!(d.witness.map(), &[0, 1]);
        let d = double_extension_witness(&two, 2, 2).unwrap();
        assert_eq!(d.nested.carrier().order(), 17);
        assert_eq!(d.flat.carrier().rows(), matrix_units(4).rows());
        let e = catalog::example_e();
        let d = double_extension_witness(&e, 2, 1).unwrap();
        assert_eq!(d.nested.carrier().order(), 9);
        assert_eq!(d.flat.carrier().order(), 9);
    }

    #[test]
    fn orthogonal_sum_of_b2() {
        let b2 = matrix_units(2);
        let one = orthogonal_sum(std::slice::from_ref(&b2)).unwrap();
        assert!(iso_search(&one.sum, &b2).is_some());
        let two = orthogonal_sum(&[b2.clone(), b2.clone()]).unwrap();
        assert_eq!(two.sum.order(), 9);
        for inj in &two.injections {
            assert!(check_homomorphism(inj, &b2, &two.sum).is_ok());
        }
        for x in b2.nonzero() {
            for y in b2.nonzero() {
                assert_eq!(two.sum.mul(two.injections[0][x], two.injections[1][y]), 0);
            }
        }
    }

    #[test]
    fn primitive_inverse_pairs() {
        let z2 = catalog::cyclic_group_with_zero(2);
        assert_eq!(primitive_inverse_check_extension(&z2, 2).unwrap(), (true, true));
        let chain = catalog::example_e();
        assert_eq!(primitive_inverse_check_extension(&chain, 2).unwrap(), (false, false));
        let two = catalog::two_element();
        assert_eq!(primitive_inverse_check_extension(&two, 3).unwrap(), (true, true));
    }

    #[test]
    fn coordinates_and_diagonal_copies() {
        for (_, s) in catalog::corpus() {
            let ext = brandt_extension(&s, 2).unwrap();
            for x in 1..ext.carrier().order() {
                let c = ext.decode(x).unwrap();
                assert_eq!(ext.encode(c.alpha, c.s, c.beta), Some(x));
            }
            for a in 0..2 {
                let diag = ext.diagonal_copy(a);
                let (sub, _) = ext.carrier().subsemigroup(&diag).unwrap();
                assert!(iso_search(&sub, &s).is_some());
            }
        }
    }

    #[test]
    fn ideals_lift_to_ideals() {
        // {b, c} is an ideal of the chain a > b > c
        let e = catalog::example_e();
        let ideal = [e.index_of("b").unwrap(), e.index_of("c").unwrap()];
        assert_eq!(e.ideal_sides(&ideal), (true, true));
        for lambda in 1..=3 {
            let ext = brandt_extension(&e, lambda).unwrap();
            let lifted = ext.lift_subset(&ideal);
            assert_eq!(ext.carrier().ideal_sides(&lifted), (true, true));
        }
    }
}
