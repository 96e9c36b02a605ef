//! Morphism triples `(h, u, φ)` and the homomorphisms they induce between
//! Brandt extensions.
//!
//! For `h ∈ Hom₀(S, T)` with `e = (1_S)h`, a map `u: I₁ → H(e)` and an
//! injection `φ: I₁ → I₂`, the induced map sends `(α, s, β)` to
//! `(φα, u(α)·h(s)·u(β)⁻¹, φβ)` when `h(s) ≠ 0_T` and to zero otherwise.

use crate::brandt::BrandtExtension;
use crate::error::{Error, Result};
use crate::hom::{check_homomorphism, enumerate_homs, Homomorphism};
use crate::props::{maximal_subgroup, Subgroup};
use crate::semigroup::FiniteSemigroup;

/// A morphism `(S, I₁) → (T, I₂)` of the category of Brandt extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorphismTriple {
    pub h: Homomorphism,
    /// `(1_S)h`; the zero of `T` exactly when `h` is trivial.
    pub e: usize,
    /// `u[α] ∈ H(e)`.
    pub u: Vec<usize>,
    /// Injective, `phi[α] < lambda2`.
    pub phi: Vec<usize>,
    pub lambda2: usize,
}

impl MorphismTriple {
    /// Builds and validates a triple; `e` is read off `h`.
    pub fn new(
        h: Homomorphism,
        u: Vec<usize>,
        phi: Vec<usize>,
        lambda2: usize,
        s: &FiniteSemigroup,
        t: &FiniteSemigroup,
    ) -> Result<Self> {
        let one = s.require_identity()?;
        let triple = MorphismTriple {
            e: h.apply(one),
            h,
            u,
            phi,
            lambda2,
        };
        triple.validate(s, t)?;
        Ok(triple)
    }

    pub fn lambda1(&self) -> usize {
        self.phi.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.h.is_trivial()
    }

    /// Checks every well-formedness condition against `S` and `T`.
    pub fn validate(&self, s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<()> {
        let bad = |m: String| Err(Error::IllFormedTriple(m));
        let one = s.require_identity()?;
        s.require_zero()?;
        t.require_zero()?;
        t.require_identity()?;
        if self.h.source_order() != s.order() || self.h.target_order() != t.order() {
            return bad("base map has the wrong shape".into());
        }
        check_homomorphism(self.h.map(), s, t).map_err(|e| Error::IllFormedTriple(e.to_string()))?;
        if !self.h.preserves_zero() {
            return bad("base homomorphism does not preserve zero".into());
        }
        if self.e != self.h.apply(one) {
            return bad("e differs from the image of the identity".into());
        }
        if self.u.len() != self.phi.len() || self.phi.is_empty() {
            return bad("u and phi must have the same non-empty domain".into());
        }
        if self.lambda1() > self.lambda2 {
            return bad(format!("lambda1 = {} exceeds lambda2 = {}", self.lambda1(), self.lambda2));
        }
        let mut seen = vec![false; self.lambda2];
        for (a, &p) in self.phi.iter().enumerate() {
            if p >= self.lambda2 {
                return bad(format!("phi({a}) = {p} is out of range"));
            }
            if std::mem::replace(&mut seen[p], true) {
                return bad("phi is not injective".into());
            }
        }
        let group = maximal_subgroup(t, self.e)?;
        if let Some(a) = self.u.iter().position(|&x| !group.contains(x)) {
            return bad(format!("u({a}) = {} is not in H({})", t.label(self.u[a]), t.label(self.e)));
        }
        Ok(())
    }
}

fn check_extensions(
    t: &MorphismTriple,
    src: &BrandtExtension,
    dst: &BrandtExtension,
) -> Result<()> {
    if t.lambda1() != src.lambda() || t.lambda2 != dst.lambda() {
        return Err(Error::Mismatch("index sets differ from the extensions".into()));
    }
    t.validate(src.base(), dst.base())
}

/// The homomorphism `B⁰_{λ₁}(S) → B⁰_{λ₂}(T)` induced by a triple with a
/// non-trivial base map.
pub fn sigma_from_triple(t: &MorphismTriple, src: &BrandtExtension, dst: &BrandtExtension) -> Result<Homomorphism> {
    check_extensions(t, src, dst)?;
    if t.is_trivial() {
        return Err(Error::IllFormedTriple("base homomorphism is trivial".into()));
    }
    let tb = dst.base();
    let zero_t = tb.zero().expect("validated");
    let group = maximal_subgroup(tb, t.e)?;
    let inv: Vec<usize> = t.u.iter().map(|&x| group.inverse(x).expect("u lies in H(e)")).collect();
    let map: Vec<usize> = (0..src.carrier().order())
        .map(|x| match src.decode(x) {
            None => 0,
            Some(c) => {
                let hs = t.h.apply(c.s);
                if hs == zero_t {
                    0
                } else {
                    let m = tb.mul(tb.mul(t.u[c.alpha], hs), inv[c.beta]);
                    dst.encode_or_zero(t.phi[c.alpha], m, t.phi[c.beta])
                }
            }
        })
        .collect();
    let sigma = check_homomorphism(&map, src.carrier(), dst.carrier())
        .unwrap_or_else(|e| panic!("well-formed triple induced a non-homomorphism: {e}"));
    Ok(sigma)
}

/// The image of a triple under the functor: the induced map, or the constant
/// map onto zero when the base map is trivial.
pub fn functor_b(t: &MorphismTriple, src: &BrandtExtension, dst: &BrandtExtension) -> Result<Homomorphism> {
    check_extensions(t, src, dst)?;
    if t.is_trivial() || src.base().is_trivial() {
        return Homomorphism::constant(src.carrier(), dst.carrier(), dst.zero());
    }
    sigma_from_triple(t, src, dst)
}

/// `ε = (Id_S, u₀ ≡ 1_S, Id_I)`.
pub fn identity_triple(s: &FiniteSemigroup, lambda: usize) -> Result<MorphismTriple> {
    let one = s.require_identity()?;
    MorphismTriple::new(Homomorphism::identity(s), vec![one; lambda], (0..lambda).collect(), lambda, s, s)
}

/// Composite of `t1: (S, I) → (S′, I′)` and `t2: (S′, I′) → (S″, I″)`:
/// `(hh′, α ↦ u′(φα)·h′(u(α)), φφ′)`.
pub fn compose_triples(t1: &MorphismTriple, t2: &MorphismTriple, last: &FiniteSemigroup) -> Result<MorphismTriple> {
    if t1.h.target_order() != t2.h.source_order() {
        return Err(Error::Mismatch("middle semigroups differ".into()));
    }
    if t1.lambda2 != t2.lambda1() {
        return Err(Error::Mismatch("middle index sets differ".into()));
    }
    if t2.h.target_order() != last.order() {
        return Err(Error::Mismatch("final semigroup does not match".into()));
    }
    let h = t1.h.then(&t2.h)?;
    let u = t1
        .u
        .iter()
        .zip(&t1.phi)
        .map(|(&ua, &pa)| last.mul(t2.u[pa], t2.h.apply(ua)))
        .collect();
    let phi = t1.phi.iter().map(|&p| t2.phi[p]).collect();
    Ok(MorphismTriple {
        e: t2.h.apply(t1.e),
        h,
        u,
        phi,
        lambda2: t2.lambda2,
    })
}

/// Outcome of [`classify_hom`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Triple(MorphismTriple),
    NotClassifiable(String),
}

impl Classification {
    pub fn triple(&self) -> Option<&MorphismTriple> {
        match self {
            Classification::Triple(t) => Some(t),
            Classification::NotClassifiable(_) => None,
        }
    }
}

/// Recovers a triple from a non-trivial `σ`, anchored at the first index.
///
/// The recovered triple must reproduce `σ` exactly; otherwise the first
/// obstruction found is reported.
pub fn classify_hom(sigma: &Homomorphism, src: &BrandtExtension, dst: &BrandtExtension) -> Result<Classification> {
    if sigma.source_order() != src.carrier().order() || sigma.target_order() != dst.carrier().order() {
        return Err(Error::Mismatch("homomorphism does not match the extensions".into()));
    }
    if sigma.is_trivial() {
        return Err(Error::TrivialInput);
    }
    let fail = |m: String| Ok(Classification::NotClassifiable(m));
    let (s, t) = (src.base(), dst.base());
    let one = s.require_identity()?;
    let zero_t = t.require_zero()?;
    t.require_identity()?;
    let (l1, l2) = (src.lambda(), dst.lambda());
    if l1 > l2 {
        return fail(format!("lambda1 = {l1} exceeds lambda2 = {l2}"));
    }
    if sigma.apply(0) != dst.zero() {
        return fail("zero is not mapped to zero".into());
    }
    let anchor = match dst.decode(sigma.apply(src.encode_or_zero(0, one, 0))) {
        Some(c) if c.alpha == c.beta && t.is_idempotent(c.s) => c,
        _ => return fail("(1,1,1) does not map to a non-zero diagonal idempotent".into()),
    };
    let (a0, e) = (anchor.alpha, anchor.s);

    let mut h = vec![zero_t; s.order()];
    for x in s.nonzero() {
        match dst.decode(sigma.apply(src.encode_or_zero(0, x, 0))) {
            None => {}
            Some(c) if c.alpha == a0 && c.beta == a0 => h[x] = c.s,
            Some(_) => return fail(format!("(1,{},1) leaves the anchor block", s.label(x))),
        }
    }
    let h = match check_homomorphism(&h, s, t) {
        Ok(h) => h,
        Err(err) => return fail(format!("recovered base map fails: {err}")),
    };

    let mut u = Vec::with_capacity(l1);
    let mut phi = Vec::with_capacity(l1);
    for b in 0..l1 {
        match dst.decode(sigma.apply(src.encode_or_zero(b, one, 0))) {
            Some(c) if c.beta == a0 => {
                phi.push(c.alpha);
                u.push(c.s);
            }
            _ => return fail(format!("({},1,1) does not end in the anchor column", b + 1)),
        }
    }
    let group = maximal_subgroup(t, e)?;
    if let Some(b) = u.iter().position(|&x| !group.contains(x)) {
        return fail(format!(
            "u({}) = {} is not in H({}) = {}",
            b + 1,
            t.label(u[b]),
            t.label(e),
            subgroup_labels(t, &group)
        ));
    }
    let mut seen = vec![false; l2];
    if let Some(b) = phi.iter().position(|&p| std::mem::replace(&mut seen[p], true)) {
        return fail(format!("phi is not injective at index {}", b + 1));
    }
    let triple = MorphismTriple {
        h,
        e,
        u,
        phi,
        lambda2: l2,
    };
    let rebuilt = sigma_from_triple(&triple, src, dst)?;
    if let Some(x) = (0..sigma.source_order()).find(|&x| rebuilt.apply(x) != sigma.apply(x)) {
        return fail(format!("reconstruction differs at {}", src.carrier().label(x)));
    }
    Ok(Classification::Triple(triple))
}

fn subgroup_labels(t: &FiniteSemigroup, g: &Subgroup) -> String {
    let names: Vec<&str> = g.elements().iter().map(|&x| t.label(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// All injections `0..k → 0..n`, in lexicographic order.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in 0..n {
            if !cur.contains(&p) {
                cur.push(p);
                go(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(k, n, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Every well-formed triple `(S, λ₁) → (T, λ₂)` with a non-trivial base map.
pub fn enumerate_triples(s: &FiniteSemigroup, t: &FiniteSemigroup, lambda1: usize, lambda2: usize) -> Result<Vec<MorphismTriple>> {
    let one = s.require_identity()?;
    let phis = injections(lambda1, lambda2);
    let mut out = Vec::new();
    for h in hom_zero(s, t)? {
        if h.is_trivial() {
            continue;
        }
        let e = h.apply(one);
        let group = maximal_subgroup(t, e)?;
        let members = group.elements();
        let mut digits = vec![0usize; lambda1];
        loop {
            let u: Vec<usize> = digits.iter().map(|&d| members[d]).collect();
            for phi in &phis {
                out.push(MorphismTriple {
                    h: h.clone(),
                    e,
                    u: u.clone(),
                    phi: phi.clone(),
                    lambda2,
                });
            }
            // odometer over H(e)^λ₁
            let mut i = 0;
            while i < lambda1 {
                digits[i] += 1;
                if digits[i] < members.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == lambda1 {
                break;
            }
        }
    }
    Ok(out)
}

fn hom_zero(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<Vec<Homomorphism>> {
    s.require_zero()?;
    t.require_zero()?;
    let mut homs = enumerate_homs(s, t, false)?;
    homs.retain(|h| h.preserves_zero());
    Ok(homs)
}

/// `Hom₀(S, T)`, `E₁(S, T)` and `ℋ₁(S, T)`.
#[derive(Debug, Clone)]
pub struct HomInvariants {
    pub hom0: Vec<Homomorphism>,
    /// Sorted; includes the zero of `T` (the constant map always occurs).
    pub e1: Vec<usize>,
    /// `h1[k] = H(e1[k])`.
    pub h1: Vec<Subgroup>,
}

pub fn hom_invariants(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Result<HomInvariants> {
    let one = s.require_identity()?;
    let hom0 = hom_zero(s, t)?;
    let mut e1: Vec<usize> = hom0.iter().map(|h| h.apply(one)).collect();
    e1.sort_unstable();
    e1.dedup();
    let h1 = e1.iter().map(|&e| maximal_subgroup(t, e)).collect::<Result<_>>()?;
    Ok(HomInvariants { hom0, e1, h1 })
}
