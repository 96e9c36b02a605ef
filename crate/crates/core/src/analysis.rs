//! Structural checks on homomorphisms between Brandt extensions: the
//! composition-triviality predicate, the Brandt decomposition of images,
//! and zero/block behaviour under the `𝓑*` hypotheses.

use crate::brandt::{brandt_extension, BrandtExtension};
use crate::embed::b_star_flags;
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::iso::{iso_search, is_isomorphism};
use crate::semigroup::FiniteSemigroup;

/// Result of composing two non-trivial homomorphisms.
#[derive(Debug, Clone)]
pub struct ComposeCheck {
    pub composite: Homomorphism,
    pub nontrivial: bool,
    /// Some `(α, 1_S, β)` image under the first map lies outside the set of
    /// elements the second map sends to zero.
    pub predicate: bool,
}

impl ComposeCheck {
    pub fn agrees(&self) -> bool {
        self.nontrivial == self.predicate
    }
}

/// Composes `s1: B⁰(S) → B⁰(T)` with `s2: B⁰(T) → B⁰(R)` and evaluates the
/// kernel predicate.
pub fn compose_check(
    s1: &Homomorphism,
    s2: &Homomorphism,
    first: &BrandtExtension,
    last: &BrandtExtension,
) -> Result<ComposeCheck> {
    if s1.source_order() != first.carrier().order() || s2.target_order() != last.carrier().order() {
        return Err(Error::Mismatch("homomorphisms do not match the extensions".into()));
    }
    if s1.is_trivial() || s2.is_trivial() {
        return Err(Error::TrivialInput);
    }
    let composite = s1.then(s2)?;
    let one = first.base().require_identity()?;
    let z3 = last.zero();
    let lambda = first.lambda();
    let predicate = (0..lambda).any(|a| {
        (0..lambda).any(|b| {
            let x = first.encode_or_zero(a, one, b);
            s2.apply(s1.apply(x)) != z3
        })
    });
    Ok(ComposeCheck {
        nontrivial: !composite.is_trivial(),
        composite,
        predicate,
    })
}

/// The image of `σ` as a Brandt extension of the image of one diagonal copy.
#[derive(Debug, Clone)]
pub struct ImageDecomposition {
    /// Sorted image elements (indices of the target).
    pub image: Vec<usize>,
    /// The image as a semigroup; index `k` is `image[k]`.
    pub image_semigroup: FiniteSemigroup,
    /// Image of the first diagonal copy `S_{1,1}`.
    pub t0: FiniteSemigroup,
    pub extension: BrandtExtension,
    /// Isomorphism from `extension.carrier()` onto `image_semigroup`.
    pub witness: Vec<usize>,
}

/// Decomposes the image of a non-trivial `σ` defined on `src`.
///
/// `target` is the codomain of `σ`. The witness is first built from the
/// coordinates, `(α, t, β) ↦ σ(α,1,1)·t·σ(1,1,β)`, and only if that fails
/// is a general isomorphism search run.
///
/// # Panics
///
/// If no isomorphism exists at all.
pub fn image_brandt_decomposition(
    sigma: &Homomorphism,
    src: &BrandtExtension,
    target: &FiniteSemigroup,
) -> Result<ImageDecomposition> {
    if sigma.source_order() != src.carrier().order() || sigma.target_order() != target.order() {
        return Err(Error::Mismatch("homomorphism does not match its domain or codomain".into()));
    }
    if sigma.is_trivial() {
        return Err(Error::TrivialInput);
    }
    let one = src.base().require_identity()?;
    let image = sigma.image();
    let (image_semigroup, _) = target.subsemigroup(&image)?;
    let local = |y: usize| image.binary_search(&y).expect("element of the image");

    let diag: Vec<usize> = src.diagonal_copy(0).iter().map(|&x| sigma.apply(x)).collect();
    let (t0, t0_elems) = target.subsemigroup(&diag)?;
    let extension = brandt_extension(&t0, src.lambda())?;

    let lambda = src.lambda();
    let row: Vec<usize> = (0..lambda).map(|a| sigma.apply(src.encode_or_zero(a, one, 0))).collect();
    let col: Vec<usize> = (0..lambda).map(|b| sigma.apply(src.encode_or_zero(0, one, b))).collect();
    let mut seeded = vec![local(sigma.apply(0)); extension.carrier().order()];
    for (x, slot) in seeded.iter_mut().enumerate() {
        if let Some(c) = extension.decode(x) {
            let t = t0_elems[c.s];
            *slot = local(target.mul(target.mul(row[c.alpha], t), col[c.beta]));
        }
    }
    let witness = if is_isomorphism(extension.carrier(), &image_semigroup, &seeded) {
        seeded
    } else {
        iso_search(extension.carrier(), &image_semigroup)
            .expect("the image of a non-trivial homomorphism is a Brandt extension of T0")
    };
    Ok(ImageDecomposition {
        image,
        image_semigroup,
        t0,
        extension,
        witness,
    })
}

/// Zero and block behaviour of a non-trivial `σ: B⁰_{λ₁}(S) → B⁰_{λ₂}(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroBlockReport {
    pub zero_to_zero: bool,
    /// Distinct `(α, 1_S, β)` land in distinct non-zero blocks `T*_{μ,ν}`.
    pub block_disjoint: bool,
    /// Non-zero images of `(α, s, β)` stay in the block of `(α, 1_S, β)`.
    /// Only evaluated when `T` has no copy of `B₂` at all.
    pub block_confinement: Option<bool>,
    /// A non-zero `(α, s, β)` image forces non-zero `(α₁, s, β₁)` images.
    /// Only evaluated when `T` has no copy of `B₂` at all.
    pub nonzero_propagation: Option<bool>,
}

impl ZeroBlockReport {
    pub fn all_hold(&self) -> bool {
        self.zero_to_zero
            && self.block_disjoint
            && self.block_confinement.unwrap_or(true)
            && self.nonzero_propagation.unwrap_or(true)
    }
}

/// Checks that zero goes to zero and that the blocks of the `(α, 1_S, β)`
/// images are pairwise distinct.
///
/// Requires the target base to contain no copy of `B_{λ₁}` and no copy of
/// `B₂` sharing its zero; otherwise returns `HypothesisUnmet`.
pub fn verify_zero_and_blocks(
    sigma: &Homomorphism,
    src: &BrandtExtension,
    dst: &BrandtExtension,
) -> Result<ZeroBlockReport> {
    if sigma.source_order() != src.carrier().order() || sigma.target_order() != dst.carrier().order() {
        return Err(Error::Mismatch("homomorphism does not match the extensions".into()));
    }
    if sigma.is_trivial() {
        return Err(Error::TrivialInput);
    }
    let (s, t) = (src.base(), dst.base());
    let lambda = src.lambda();
    let flags = b_star_flags(t, lambda)?;
    if !flags.has_b_star_lambda {
        return Err(Error::HypothesisUnmet(format!(
            "target base contains B_{lambda} or a copy of B_2 sharing its zero"
        )));
    }
    let one = s.require_identity()?;
    let zero_to_zero = sigma.apply(0) == dst.zero();

    let mut blocks = Vec::with_capacity(lambda * lambda);
    for a in 0..lambda {
        for b in 0..lambda {
            blocks.push(dst.decode(sigma.apply(src.encode_or_zero(a, one, b))).map(|c| (c.alpha, c.beta)));
        }
    }
    let block_disjoint = blocks.iter().all(Option::is_some) && {
        let mut sorted = blocks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == blocks.len()
    };

    let (mut confinement, mut propagation) = (None, None);
    if flags.has_b_star {
        let image_of = |a: usize, x: usize, b: usize| sigma.apply(src.encode_or_zero(a, x, b));
        let mut conf = true;
        let mut prop = true;
        for x in s.nonzero() {
            let nonzero_somewhere = (0..lambda).any(|a| (0..lambda).any(|b| image_of(a, x, b) != dst.zero()));
            for a in 0..lambda {
                for b in 0..lambda {
                    let y = image_of(a, x, b);
                    if y == dst.zero() {
                        prop &= !nonzero_somewhere;
                        continue;
                    }
                    let c = dst.decode(y).expect("non-zero element");
                    conf &= blocks[a * lambda + b] == Some((c.alpha, c.beta));
                }
            }
        }
        confinement = Some(conf);
        propagation = Some(prop);
    }
    Ok(ZeroBlockReport {
        zero_to_zero,
        block_disjoint,
        block_confinement: confinement,
        nonzero_propagation: propagation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hom::{check_homomorphism, enumerate_homs};

    #[test]
    fn b2_endomorphisms_compose_nontrivially() {
        let ext = brandt_extension(&catalog::two_element(), 2).unwrap();
        let homs = enumerate_homs(ext.carrier(), ext.carrier(), true).unwrap();
        for f in &homs {
            for g in &homs {
                let c = compose_check(f, g, &ext, &ext).unwrap();
                assert!(c.nontrivial && c.predicate);
            }
            let r = verify_zero_and_blocks(f, &ext, &ext).unwrap();
            assert!(r.all_hold());
            assert_eq!(r.block_confinement, Some(true));
        }
    }

    #[test]
    fn constant_second_map_is_rejected() {
        let ext = brandt_extension(&catalog::two_element(), 2).unwrap();
        let id = Homomorphism::identity(ext.carrier());
        let z = Homomorphism::constant(ext.carrier(), ext.carrier(), 0).unwrap();
        assert_eq!(compose_check(&id, &z, &ext, &ext).unwrap_err(), Error::TrivialInput);
    }

    #[test]
    fn identity_image_is_b2() {
        let ext = brandt_extension(&catalog::two_element(), 2).unwrap();
        let id = Homomorphism::identity(ext.carrier());
        let d = image_brandt_decomposition(&id, &ext, ext.carrier()).unwrap();
        assert_eq!(d.t0.order(), 2);
        assert_eq!(d.image.len(), 5);
        assert!(is_isomorphism(d.extension.carrier(), &d.image_semigroup, &d.witness));
    }

    #[test]
    fn semilattice_image_has_five_elements() {
        let e = catalog::example_e();
        let ext = brandt_extension(&e, 2).unwrap();
        let (a, b) = (e.index_of("a").unwrap(), e.index_of("b").unwrap());
        let mut map = vec![0; ext.carrier().order()];
        for al in 0..2 {
            for be in 0..2 {
                map[ext.encode(al, a, be).unwrap()] = ext.encode(al, b, be).unwrap();
            }
        }
        let sigma = check_homomorphism(&map, ext.carrier(), ext.carrier()).unwrap();
        let d = image_brandt_decomposition(&sigma, &ext, ext.carrier()).unwrap();
        assert_eq!(d.t0.order(), 2);
        assert_eq!(d.image.len(), 2 * 2 * (d.t0.order() - 1) + 1);
        let c = compose_check(&sigma, &sigma, &ext, &ext).unwrap();
        assert!(!c.nontrivial && !c.predicate);
    }

    #[test]
    fn hypothesis_gate() {
        let b2id = catalog::b2_with_identity();
        let src = brandt_extension(&catalog::two_element(), 2).unwrap();
        let dst = brandt_extension(&b2id, 2).unwrap();
        let id = enumerate_homs(src.carrier(), dst.carrier(), true).unwrap();
        let err = verify_zero_and_blocks(&id[0], &src, &dst).unwrap_err();
        assert!(matches!(err, Error::HypothesisUnmet(_)));
    }
}
