//! Self-contained verification fixtures.
//!
//! Each fixture builds its own inputs (worked examples are embedded as data
//! tables), runs the relevant checks and returns a [`FixtureReport`].

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::analysis::{compose_check, image_brandt_decomposition, verify_zero_and_blocks};
use crate::brandt::{brandt_extension, double_extension_witness, matrix_units, orthogonal_sum, BrandtExtension};
use crate::catalog;
use crate::congruence::is_congruence_free;
use crate::embed::matrix_units_embedding;
use crate::error::{Error, Result};
use crate::function::{bicyclic_with_zero, check_map_into, Bicyclic, BrandtOver, BrandtToken, Magma};
use crate::hom::{check_homomorphism, enumerate_homs_with, Homomorphism, SearchConfig};
use crate::iso::{iso_search, is_isomorphism};
use crate::props::{self, idempotents_central};
use crate::semigroup::FiniteSemigroup;
use crate::triple::{
    classify_hom, compose_triples, enumerate_triples, functor_b, identity_triple, sigma_from_triple,
    Classification, MorphismTriple,
};

/// Outcome of one fixture: a verdict plus one line per check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub passed: bool,
    pub diagnostics: Vec<String>,
}

impl FixtureReport {
    fn new(name: &str) -> Self {
        FixtureReport {
            name: name.to_string(),
            passed: true,
            diagnostics: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) -> bool {
        let tag = if ok { "ok  " } else { "FAIL" };
        self.diagnostics.push(format!("{tag} {}", what.into()));
        self.passed &= ok;
        ok
    }

    fn note(&mut self, what: impl Into<String>) {
        self.diagnostics.push(format!("     {}", what.into()));
    }

    /// `PASS name` or `FAIL name`, then the diagnostics indented.
    pub fn render(&self) -> String {
        let mut out = format!("{} {}\n", if self.passed { "PASS" } else { "FAIL" }, self.name);
        for d in &self.diagnostics {
            out.push_str("  ");
            out.push_str(d);
            out.push('\n');
        }
        out
    }
}

/// Names accepted by [`run_fixture`].
pub const FIXTURES: [&str; 12] = [
    "prop1-3", "prop1-9", "cor1-10", "ex2-5", "ex2-6", "ex2-12", "ex2-13", "ex2-14", "thm2-10", "prop2-16",
    "prop3-3", "functor",
];

/// Runs a named fixture; `None` for an unknown name.
pub fn run_fixture(name: &str, config: &SearchConfig) -> Option<Result<FixtureReport>> {
    Some(match name {
        "prop1-3" => double_extension_check(),
        "prop1-9" => orthogonal_sum_check(),
        "cor1-10" => structure_sweep(),
        "ex2-5" => anchored_units_example(),
        "ex2-6" => unanchored_units_example(),
        "ex2-12" => bicyclic_example(),
        "ex2-13" => rectangular_band_example(),
        "ex2-14" => semilattice_collapse_example(config),
        "thm2-10" => completeness_sweep(config),
        "prop2-16" => composition_predicate_sweep(config),
        "prop3-3" => semilattice_faithfulness(),
        "functor" => functoriality_sweep(),
        _ => return None,
    })
}

fn tuple(map: &[usize]) -> String {
    let parts: Vec<String> = map.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn at(s: &FiniteSemigroup, label: &str) -> usize {
    s.index_of(label).unwrap_or_else(|| panic!("no element labelled {label}"))
}

/// A corpus monoid together with one of its extensions.
struct Object {
    name: &'static str,
    ext: BrandtExtension,
}

impl Object {
    fn base(&self) -> &FiniteSemigroup {
        self.ext.base()
    }

    fn tag(&self) -> String {
        format!("{}^{}", self.name, self.ext.lambda())
    }
}

fn objects(corpus: &[(&'static str, FiniteSemigroup)], lambdas: &[usize]) -> Result<Vec<Object>> {
    let mut out = Vec::new();
    for &lambda in lambdas {
        for (name, s) in corpus {
            out.push(Object {
                name,
                ext: brandt_extension(s, lambda)?,
            });
        }
    }
    Ok(out)
}

const LAMBDA_PAIRS: [(usize, usize); 3] = [(1, 1), (1, 2), (2, 2)];

/// Double extensions over the corpus for `λ₁, λ₂ ∈ {1, 2}`, and the nested
/// extension of `{1, 0}` against `B_4`.
pub fn double_extension_check() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("prop1-3");
    let mut count = 0;
    for (name, s) in catalog::corpus() {
        for l1 in 1..=2 {
            for l2 in 1..=2 {
                let d = double_extension_witness(&s, l1, l2)?;
                let ok = d.witness.is_injective()
                    && d.witness.is_surjective()
                    && check_homomorphism(d.witness.map(), d.nested.carrier(), d.flat.carrier()).is_ok();
                count += 1;
                if !ok {
                    r.check(false, format!("{name} with lambda1={l1}, lambda2={l2}"));
                }
            }
        }
    }
    r.check(r.passed, format!("{count} explicit witnesses are bijective homomorphisms"));
    let two = catalog::two_element();
    let nested = brandt_extension(brandt_extension(&two, 2)?.carrier(), 2)?;
    let b4 = matrix_units(4);
    r.check(
        nested.carrier().order() == 17 && b4.order() == 17,
        "nested extension of {1,0} and B_4 both have 17 elements",
    );
    let w = iso_search(nested.carrier(), &b4);
    r.check(
        w.as_ref().is_some_and(|w| is_isomorphism(nested.carrier(), &b4, w)),
        "isomorphism search finds a verified witness onto B_4",
    );
    Ok(r)
}

/// `B⁰₂(B₂ ⊕ B₂)` against `B⁰₂(B₂) ⊕ B⁰₂(B₂)`.
pub fn orthogonal_sum_check() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("prop1-9");
    let b2 = matrix_units(2);
    let sum = orthogonal_sum(&[b2.clone(), b2.clone()])?;
    let left = brandt_extension(&sum.sum, 2)?;
    let part = brandt_extension(&b2, 2)?;
    let right = orthogonal_sum(&[part.carrier().clone(), part.carrier().clone()])?;
    r.check(
        left.carrier().order() == 33 && right.sum.order() == 33,
        format!("orders {} and {}", left.carrier().order(), right.sum.order()),
    );
    match iso_search(left.carrier(), &right.sum) {
        Some(w) => {
            r.check(is_isomorphism(left.carrier(), &right.sum, &w), "witness found and verified");
        }
        None => {
            r.check(false, "no isomorphism found");
        }
    }
    Ok(r)
}

/// Regularity, inverseness, primitive inverseness and congruence-freeness
/// agree between every corpus monoid and its extensions for `λ ≤ 3`.
pub fn structure_sweep() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("cor1-10");
    let mut checked = 0;
    for (name, s) in catalog::corpus() {
        let base_cf = is_congruence_free(&s)?;
        for lambda in 1..=3 {
            let ext = brandt_extension(&s, lambda)?;
            let c = ext.carrier();
            let pairs = [
                ("regular", props::is_regular(&s), props::is_regular(c)),
                ("inverse", props::inverses(&s).is_some(), props::inverses(c).is_some()),
                ("primitive inverse", props::is_primitive_inverse(&s), props::is_primitive_inverse(c)),
                ("congruence-free", base_cf, is_congruence_free(c)?),
            ];
            for (what, a, b) in pairs {
                checked += 1;
                if a != b {
                    r.check(false, format!("{name}, lambda={lambda}: {what} is {a} for S but {b} for the extension"));
                }
            }
        }
    }
    r.check(r.passed, format!("{checked} property comparisons agree"));
    Ok(r)
}

/// `B₂`, `B₃` are congruence-free; the extension of the 3-chain is not.
pub fn congruence_free_check() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("congruence-free");
    r.check(is_congruence_free(&matrix_units(2))?, "B_2 is congruence-free");
    r.check(is_congruence_free(&matrix_units(3))?, "B_3 is congruence-free");
    let ext = brandt_extension(&catalog::chain(3), 2)?;
    r.check(!is_congruence_free(ext.carrier())?, "extension of the 3-chain with lambda=2 is not");
    Ok(r)
}

/// Images `(i, j) ↦ (α, s, β)` of the 16 matrix units of `B_4` into the
/// extension of `B_2` with an adjoined identity (indices 1-based).
type UnitImage = ((usize, usize), (usize, &'static str, usize));

const ANCHORED_UNITS: [UnitImage; 16] = [
    ((1, 1), (1, "(1,1)", 1)),
    ((2, 2), (1, "(2,2)", 1)),
    ((3, 3), (2, "(1,1)", 2)),
    ((4, 4), (2, "(2,2)", 2)),
    ((1, 2), (1, "(1,2)", 1)),
    ((2, 1), (1, "(2,1)", 1)),
    ((1, 3), (1, "(1,1)", 2)),
    ((3, 1), (2, "(1,1)", 1)),
    ((1, 4), (1, "(1,2)", 2)),
    ((4, 1), (2, "(2,1)", 1)),
    ((2, 3), (1, "(2,1)", 2)),
    ((3, 2), (2, "(1,2)", 1)),
    ((2, 4), (1, "(2,2)", 2)),
    ((4, 2), (2, "(2,2)", 1)),
    ((3, 4), (2, "(1,2)", 2)),
    ((4, 3), (2, "(2,1)", 2)),
];

/// `B_4` into `B⁰_4(S)` where `S` contains `B_2` sharing its zero.
pub fn anchored_units_example() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("ex2-5");
    let two = catalog::two_element();
    let s = catalog::b2_with_identity();
    let src = brandt_extension(&two, 4)?;
    let dst = brandt_extension(&s, 4)?;
    let mut map = vec![0; src.carrier().order()];
    for ((i, j), (a, label, b)) in ANCHORED_UNITS {
        let x = src.encode(i - 1, 1, j - 1).expect("unit");
        map[x] = dst.encode(a - 1, at(&s, label), b - 1).expect("non-zero middle");
    }
    r.check(
        src.carrier().rows() == matrix_units(4).rows(),
        "source is B_4 (17 elements)",
    );
    let sigma = match check_homomorphism(&map, src.carrier(), dst.carrier()) {
        Ok(h) => {
            r.check(true, format!("the 17-entry map into an extension of order {} is a homomorphism", dst.carrier().order()));
            h
        }
        Err(e) => {
            r.check(false, format!("map rejected: {e}"));
            return Ok(r);
        }
    };
    let mut survivors = Vec::new();
    let mut tried = 0;
    for x in 0..map.len() {
        for y in 0..dst.carrier().order() {
            if y == map[x] {
                continue;
            }
            let mut m = map.clone();
            m[x] = y;
            tried += 1;
            match check_homomorphism(&m, src.carrier(), dst.carrier()) {
                Err(Error::NotHomomorphism { .. }) => {}
                _ => survivors.push((x, y)),
            }
        }
    }
    r.check(
        survivors.is_empty(),
        format!("{tried} single-entry perturbations all fail ({} survive)", survivors.len()),
    );
    r.check(sigma.apply(0) == dst.zero(), "zero maps to zero");
    match classify_hom(&sigma, &src, &dst)? {
        Classification::NotClassifiable(why) => {
            r.check(true, format!("not classifiable: {why}"));
        }
        Classification::Triple(_) => {
            r.check(false, "unexpectedly classified");
        }
    }
    let gate = verify_zero_and_blocks(&sigma, &src, &dst);
    r.check(
        matches!(gate, Err(Error::HypothesisUnmet(_))),
        "zero/block check is skipped: S contains B_2 sharing its zero",
    );
    Ok(r)
}

/// `B⁰_2(S) → B⁰_2(T)` where `T` is `B_2` with an identity and a new zero.
pub fn unanchored_units_example() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("ex2-6");
    let lambda1 = 2;
    let lambda2 = 2;
    let t = catalog::units_with_identity_and_new_zero(lambda1);
    let zero1 = at(&t, "0");
    r.check(t.zero() != Some(zero1), "the zero of B_2 is not the zero of T");
    r.check(
        matrix_units_embedding(&t, lambda1, false).is_some() && matrix_units_embedding(&t, 2, true).is_none(),
        "T contains B_2, but not with the zero of T",
    );
    // S must have no zero divisors and at least three elements
    for (name, s) in [("z2-zero", catalog::cyclic_group_with_zero(2)), ("chain3", catalog::chain(3))] {
        let src = brandt_extension(&s, lambda1)?;
        let dst = brandt_extension(&t, lambda2)?;
        let alpha = 0;
        let map: Vec<usize> = (0..src.carrier().order())
            .map(|x| {
                let middle = match src.decode(x) {
                    Some(c) => crate::embed::unit_index(lambda1, c.alpha, c.beta),
                    None => zero1,
                };
                dst.encode(alpha, middle, alpha).expect("middle is not the zero of T")
            })
            .collect();
        let sigma = match check_homomorphism(&map, src.carrier(), dst.carrier()) {
            Ok(h) => h,
            Err(e) => {
                r.check(false, format!("S = {name}: map rejected: {e}"));
                continue;
            }
        };
        r.check(true, format!("S = {name}: map is a homomorphism"));
        r.check(
            sigma.apply(0) != dst.zero(),
            format!("S = {name}: zero maps to {}, not to zero", dst.carrier().label(sigma.apply(0))),
        );
        r.check(
            matches!(verify_zero_and_blocks(&sigma, &src, &dst), Err(Error::HypothesisUnmet(_))),
            format!("S = {name}: zero/block check reports the unmet hypothesis"),
        );
    }
    Ok(r)
}

/// `B₂ → B⁰₂(C⁰)` for the bicyclic monoid `C` with an adjoined zero.
pub fn bicyclic_example() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("ex2-12");
    let c = bicyclic_with_zero();
    let qp = Bicyclic::word(1, 1);
    r.check(c.multiply(&Bicyclic::P, &Bicyclic::Q) == Bicyclic::ONE, "pq = 1");
    r.check(c.multiply(&qp, &qp) == qp, "qp is idempotent");
    let sample = [
        Bicyclic::Zero,
        Bicyclic::ONE,
        Bicyclic::P,
        Bicyclic::Q,
        qp,
        Bicyclic::word(2, 1),
        Bicyclic::word(0, 3),
    ];
    r.check(c.check_associative_on(&sample).is_ok(), "associative on a sample of words");
    let target = BrandtOver::new(&c, 2)?;
    let src = brandt_extension(&catalog::two_element(), 2)?;
    let table = [
        ((0, 0), Bicyclic::ONE, (0, 0)),
        ((0, 1), Bicyclic::P, (0, 1)),
        ((1, 1), qp, (1, 1)),
        ((1, 0), Bicyclic::Q, (1, 0)),
    ];
    let mut map = vec![BrandtToken::Zero; src.carrier().order()];
    for ((a, b), w, (ta, tb)) in table {
        map[src.encode(a, 1, b).expect("unit")] = target.cell(ta, w, tb);
    }
    r.check(
        check_map_into(src.carrier(), &target, &map).is_ok(),
        "the 5-entry map is a homomorphism into the function-backed extension",
    );
    let mut bad = map.clone();
    bad[src.encode(1, 1, 1).expect("unit")] = target.cell(1, Bicyclic::ONE, 1);
    r.check(
        check_map_into(src.carrier(), &target, &bad).is_err(),
        "replacing (2,qp,2) by (2,1,2) breaks it, since qp != 1",
    );
    Ok(r)
}

/// `B₂ → B⁰₂(T)` for the 2×2 rectangular band `T` with unity and zero.
pub fn rectangular_band_example() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("ex2-13");
    let t = catalog::rectangular_band_with_unity_and_zero();
    r.check(!idempotents_central(&t), "idempotents of T are not central");
    let src = brandt_extension(&catalog::two_element(), 2)?;
    let dst = brandt_extension(&t, 2)?;
    let table = [
        ("(1,1,1)", "(1,(1,1),1)"),
        ("(1,1,2)", "(1,(1,2),2)"),
        ("(2,1,2)", "(2,(2,2),2)"),
        ("(2,1,1)", "(2,(2,1),1)"),
    ];
    let mut map = vec![0; src.carrier().order()];
    for (x, y) in table {
        map[at(src.carrier(), x)] = at(dst.carrier(), y);
    }
    let sigma = match check_homomorphism(&map, src.carrier(), dst.carrier()) {
        Ok(h) => {
            r.check(true, "map is a homomorphism");
            h
        }
        Err(e) => {
            r.check(false, format!("map rejected: {e}"));
            return Ok(r);
        }
    };
    match classify_hom(&sigma, &src, &dst)? {
        Classification::NotClassifiable(why) => {
            r.check(why.contains("u(2)"), format!("not classifiable: {why}"));
        }
        Classification::Triple(_) => {
            r.check(false, "unexpectedly classified");
        }
    }
    Ok(r)
}

/// The semilattice `E = {a, b, c}` with `h: a ↦ b, b ↦ c, c ↦ c`: the induced
/// endomorphism is non-trivial but its square is trivial.
pub fn semilattice_collapse_example(config: &SearchConfig) -> Result<FixtureReport> {
    let mut r = FixtureReport::new("ex2-14");
    let e = catalog::example_e();
    let (a, b, c) = (at(&e, "a"), at(&e, "b"), at(&e, "c"));
    let mut h = vec![0; 3];
    h[a] = b;
    h[b] = c;
    h[c] = c;
    let h = check_homomorphism(&h, &e, &e)?;
    r.check(props::in_class_b(&e), "E is a semilattice with unity a and zero c, in the class");
    for lambda in 1..=3 {
        let ext = brandt_extension(&e, lambda)?;
        let t = MorphismTriple::new(h.clone(), vec![b; lambda], (0..lambda).collect(), lambda, &e, &e)?;
        let sigma = functor_b(&t, &ext, &ext)?;
        let formula_ok = (0..lambda).all(|al| {
            (0..lambda).all(|be| {
                sigma.apply(ext.encode_or_zero(al, a, be)) == ext.encode_or_zero(al, b, be)
                    && sigma.apply(ext.encode_or_zero(al, b, be)) == 0
            })
        }) && sigma.apply(0) == 0;
        r.check(formula_ok, format!("lambda={lambda}: (α,a,β) ↦ (α,b,β), (α,b,β) ↦ 0, 0 ↦ 0"));
        r.check(!sigma.is_trivial(), format!("lambda={lambda}: B(t) is non-trivial"));
        let square = sigma.then(&sigma)?;
        r.check(square.is_trivial(), format!("lambda={lambda}: B(t)∘B(t) is trivial"));
        let tt = compose_triples(&t, &t, &e)?;
        r.check(tt.h.map().iter().all(|&y| y == c), format!("lambda={lambda}: hh sends everything to c"));
        r.check(functor_b(&tt, &ext, &ext)? == square, format!("lambda={lambda}: B(t∘t) = B(t)∘B(t)"));
        if lambda == 2 {
            let all = enumerate_homs_with(ext.carrier(), ext.carrier(), true, config)?;
            r.check(all.contains(&sigma), "the map occurs among the enumerated endomorphisms");
            let cc = compose_check(&sigma, &sigma, &ext, &ext)?;
            r.check(!cc.predicate && !cc.nontrivial, "composition predicate is false, as is non-triviality");
        }
    }
    Ok(r)
}

fn moves_zero(h: &[usize]) -> bool {
    h[0] != 0
}

/// Non-trivial homomorphisms against triple-induced ones over the corpus,
/// `λ₁ ≤ λ₂ ≤ 2`; triple-induced maps must also classify back exactly.
pub fn completeness_sweep(config: &SearchConfig) -> Result<FixtureReport> {
    let mut r = FixtureReport::new("thm2-10");
    let corpus = catalog::corpus();
    let mut per_pair: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut round_trip_failures = 0;
    let mut generated_total = 0;
    let mut missing_total = 0;
    let mut missing_moving_zero = 0;
    for &(l1, l2) in &LAMBDA_PAIRS {
        for (sn, s) in &corpus {
            for (tn, t) in &corpus {
                let src = brandt_extension(s, l1)?;
                let dst = brandt_extension(t, l2)?;
                let brute: BTreeSet<Vec<usize>> = enumerate_homs_with(src.carrier(), dst.carrier(), true, config)?
                    .into_iter()
                    .map(|h| h.map().to_vec())
                    .collect();
                let mut generated = BTreeSet::new();
                for tr in enumerate_triples(s, t, l1, l2)? {
                    let sigma = sigma_from_triple(&tr, &src, &dst)?;
                    let back = classify_hom(&sigma, &src, &dst)?;
                    let exact = back
                        .triple()
                        .map(|b| sigma_from_triple(b, &src, &dst))
                        .transpose()?
                        .is_some_and(|h| h == sigma);
                    if !exact {
                        round_trip_failures += 1;
                    }
                    generated.insert(sigma.map().to_vec());
                }
                generated_total += generated.len();
                let missing: Vec<&Vec<usize>> = brute.difference(&generated).collect();
                let extra: Vec<&Vec<usize>> = generated.difference(&brute).collect();
                let entry = per_pair.entry((l1, l2)).or_default();
                entry.1 += 1;
                if missing.is_empty() && extra.is_empty() {
                    entry.0 += 1;
                    continue;
                }
                missing_total += missing.len();
                missing_moving_zero += missing.iter().filter(|m| moves_zero(m)).count();
                r.check(
                    false,
                    format!(
                        "{sn} -> {tn}, lambda=({l1},{l2}): {} homomorphisms not induced by a triple, {} induced maps not found; e.g. {}",
                        missing.len(),
                        extra.len(),
                        missing.first().or(extra.first()).map(|m| tuple(m)).unwrap_or_default()
                    ),
                );
            }
        }
    }
    for ((l1, l2), (ok, total)) in &per_pair {
        r.note(format!("lambda=({l1},{l2}): {ok}/{total} source/target pairs agree"));
    }
    if missing_total > 0 {
        r.note(format!(
            "{missing_moving_zero} of {missing_total} unmatched homomorphisms send the zero to a non-zero element"
        ));
    }
    r.check(
        round_trip_failures == 0,
        format!("{generated_total} induced maps classify back exactly ({round_trip_failures} failures)"),
    );
    Ok(r)
}

/// Non-trivial homomorphisms between corpus extensions, keyed by object pair.
fn corpus_homs(
    objs: &[Object],
    config: &SearchConfig,
) -> Result<BTreeMap<(usize, usize), Vec<Homomorphism>>> {
    let mut homs = BTreeMap::new();
    for (i, a) in objs.iter().enumerate() {
        for (j, b) in objs.iter().enumerate() {
            if a.ext.lambda() <= b.ext.lambda() {
                homs.insert((i, j), enumerate_homs_with(a.ext.carrier(), b.ext.carrier(), true, config)?);
            }
        }
    }
    Ok(homs)
}

/// The composition predicate against actual non-triviality for every
/// composable pair of non-trivial homomorphisms between corpus extensions
/// with `λ ∈ {1, 2}`.
pub fn composition_predicate_sweep(config: &SearchConfig) -> Result<FixtureReport> {
    let mut r = FixtureReport::new("prop2-16");
    let corpus = catalog::corpus();
    let objs = objects(&corpus, &[1, 2])?;
    let homs = corpus_homs(&objs, config)?;
    let mut tally: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    let mut first_bad: Option<String> = None;
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            let Some(h1) = homs.get(&(i, j)) else { continue };
            for k in 0..objs.len() {
                let Some(h2) = homs.get(&(j, k)) else { continue };
                for s1 in h1 {
                    for s2 in h2 {
                        let cc = compose_check(s1, s2, &objs[i].ext, &objs[k].ext)?;
                        let t = tally.entry(objs[i].ext.lambda()).or_default();
                        t.0 += 1;
                        if !cc.nontrivial {
                            t.2 += 1;
                        }
                        if !cc.agrees() {
                            t.1 += 1;
                            first_bad.get_or_insert_with(|| {
                                format!(
                                    "{} -> {} -> {}: {} then {} (composite {}, predicate {})",
                                    objs[i].tag(),
                                    objs[j].tag(),
                                    objs[k].tag(),
                                    s1.tuple(),
                                    s2.tuple(),
                                    if cc.nontrivial { "non-trivial" } else { "trivial" },
                                    cc.predicate
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    let total: usize = tally.values().map(|t| t.0).sum();
    r.check(total >= 10, format!("{total} composable pairs exercised"));
    for (l1, (n, bad, trivial)) in &tally {
        r.check(
            *bad == 0,
            format!("lambda1={l1}: {n} pairs ({trivial} with trivial composite), {bad} disagreements"),
        );
    }
    if let Some(b) = first_bad {
        r.note(format!("first disagreement: {b}"));
    }
    // the semilattice pair whose composite collapses
    let e = catalog::example_e();
    let ext = brandt_extension(&e, 2)?;
    let (a, b) = (at(&e, "a"), at(&e, "b"));
    let mut m = vec![0; ext.carrier().order()];
    for al in 0..2 {
        for be in 0..2 {
            m[ext.encode(al, a, be).expect("a is non-zero")] = ext.encode(al, b, be).expect("b is non-zero");
        }
    }
    let sigma = check_homomorphism(&m, ext.carrier(), ext.carrier())?;
    let cc = compose_check(&sigma, &sigma, &ext, &ext)?;
    r.check(
        cc.agrees() && !cc.nontrivial,
        "semilattice pair: composite trivial and predicate false",
    );
    Ok(r)
}

/// Distinct triples between semilattices induce distinct maps.
pub fn semilattice_faithfulness() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("prop3-3");
    let lattices = catalog::semilattice_corpus();
    let mut total = 0;
    for &(l1, l2) in &LAMBDA_PAIRS {
        for (sn, s) in &lattices {
            for (tn, t) in &lattices {
                let src = brandt_extension(s, l1)?;
                let dst = brandt_extension(t, l2)?;
                let triples = enumerate_triples(s, t, l1, l2)?;
                let maps: HashSet<Vec<usize>> = triples
                    .iter()
                    .map(|tr| sigma_from_triple(tr, &src, &dst).map(|h| h.map().to_vec()))
                    .collect::<Result<_>>()?;
                total += triples.len();
                if maps.len() != triples.len() {
                    r.check(
                        false,
                        format!("{sn} -> {tn}, lambda=({l1},{l2}): {} triples give {} maps", triples.len(), maps.len()),
                    );
                }
            }
        }
    }
    r.check(r.passed, format!("{total} triples over {} semilattices induce distinct maps", lattices.len()));
    Ok(r)
}

/// `B(t₁∘t₂) = B(t₁)∘B(t₂)` on composable corpus triples, `B(ε) = id`, and
/// associativity of triple composition.
pub fn functoriality_sweep() -> Result<FixtureReport> {
    let mut r = FixtureReport::new("functor");
    let corpus = catalog::corpus();
    let objs = objects(&corpus, &[1, 2])?;
    let mut identity_ok = true;
    for o in &objs {
        let eps = identity_triple(o.base(), o.ext.lambda())?;
        identity_ok &= functor_b(&eps, &o.ext, &o.ext)? == Homomorphism::identity(o.ext.carrier());
    }
    r.check(identity_ok, format!("B(ε) is the identity on all {} objects", objs.len()));

    let mut triples = BTreeMap::new();
    for (i, a) in objs.iter().enumerate() {
        for (j, b) in objs.iter().enumerate() {
            if a.ext.lambda() <= b.ext.lambda() {
                let ts = enumerate_triples(a.base(), b.base(), a.ext.lambda(), b.ext.lambda())?;
                let images = ts
                    .iter()
                    .map(|t| functor_b(t, &a.ext, &b.ext))
                    .collect::<Result<Vec<_>>>()?;
                triples.insert((i, j), (ts, images));
            }
        }
    }
    let (mut pairs, mut collapsed, mut bad, mut two_idempotent_bad) = (0, 0, 0, 0);
    for ((i, j), (t1s, b1s)) in &triples {
        let middle_two = objs[*j].base().idempotents().len() == 2;
        for k in 0..objs.len() {
            let Some((t2s, b2s)) = triples.get(&(*j, k)) else { continue };
            for (t1, b1) in t1s.iter().zip(b1s) {
                for (t2, b2) in t2s.iter().zip(b2s) {
                    let t12 = compose_triples(t1, t2, objs[k].base())?;
                    let direct = functor_b(&t12, &objs[*i].ext, &objs[k].ext)?;
                    let composed = b1.then(b2)?;
                    pairs += 1;
                    if direct.is_trivial() {
                        collapsed += 1;
                    }
                    if direct != composed {
                        bad += 1;
                    }
                    if middle_two && composed.is_trivial() {
                        two_idempotent_bad += 1;
                    }
                }
            }
        }
    }
    r.check(
        bad == 0,
        format!("{pairs} composable triple pairs ({collapsed} collapse to trivial), {bad} violations"),
    );
    r.check(
        two_idempotent_bad == 0,
        "composites through a middle monoid with idempotents {1, 0} are non-trivial",
    );

    // associativity on chains of three triples through z3-zero
    let z3 = catalog::cyclic_group_with_zero(3);
    let ts = enumerate_triples(&z3, &z3, 2, 2)?;
    let mut assoc_bad = 0;
    let mut assoc_n = 0;
    for a in ts.iter().step_by(3) {
        for b in ts.iter().step_by(5) {
            for c in ts.iter().step_by(7) {
                let left = compose_triples(&compose_triples(a, b, &z3)?, c, &z3)?;
                let right = compose_triples(a, &compose_triples(b, c, &z3)?, &z3)?;
                assoc_n += 1;
                if left != right {
                    assoc_bad += 1;
                }
            }
        }
    }
    r.check(assoc_bad == 0, format!("{assoc_n} triple chains compose associatively"));
    Ok(r)
}

/// Every non-trivial homomorphism between corpus extensions (`λ₁ ≤ λ₂ ≤ 2`)
/// has a Brandt-decomposable image; for group-with-zero bases `T₀` is a
/// group with zero.
pub fn image_decomposition_sweep(config: &SearchConfig) -> Result<FixtureReport> {
    let mut r = FixtureReport::new("image-decomposition");
    let corpus = catalog::corpus();
    let (mut n, mut bad, mut group_bad) = (0, 0, 0);
    for &(l1, l2) in &LAMBDA_PAIRS {
        for (sn, s) in &corpus {
            let is_group = s.nonzero().all(|x| s.nonzero().any(|y| Some(s.mul(x, y)) == s.identity()));
            let src = brandt_extension(s, l1)?;
            for (_, t) in &corpus {
                let dst = brandt_extension(t, l2)?;
                for sigma in enumerate_homs_with(src.carrier(), dst.carrier(), true, config)? {
                    let d = image_brandt_decomposition(&sigma, &src, dst.carrier())?;
                    n += 1;
                    let formula = l1 * l1 * (d.t0.order() - 1) + 1;
                    if d.image.len() != formula || !is_isomorphism(d.extension.carrier(), &d.image_semigroup, &d.witness) {
                        bad += 1;
                    }
                    if is_group {
                        let t0 = &d.t0;
                        let ok = t0.is_monoid_with_zero()
                            && t0.nonzero().all(|x| t0.nonzero().any(|y| Some(t0.mul(x, y)) == t0.identity()));
                        if !ok {
                            group_bad += 1;
                            r.note(format!("{sn}: image base is not a group with zero"));
                        }
                    }
                }
            }
        }
    }
    r.check(bad == 0, format!("{n} images decompose with matching order ({bad} failures)"));
    r.check(group_bad == 0, "images of Brandt semigroups have a group-with-zero base");
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_fixture() {
        assert!(run_fixture("nope", &SearchConfig::default()).is_none());
    }

    #[test]
    fn small_fixtures_pass() {
        for f in [anchored_units_example, unanchored_units_example, bicyclic_example, rectangular_band_example] {
            let r = f().unwrap();
            assert!(r.passed, "{}", r.render());
        }
    }

    #[test]
    fn render_format() {
        let mut r = FixtureReport::new("x");
        r.check(true, "fine");
        r.check(false, "broken");
        assert_eq!(r.render(), "FAIL x\n  ok   fine\n  FAIL broken\n");
    }
}
