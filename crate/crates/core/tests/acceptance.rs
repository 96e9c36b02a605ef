//! The fourteen acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria 6 and 12 do not hold when `λ₁ = 1` and are implemented as
//! stated; they print FAIL. The harness checks that their failures are
//! confined to `λ₁ = 1` cells and that everything else passes.

use brandt::brandt::brandt_extension;
use brandt::catalog;
use brandt::fixtures::{self, FixtureReport};
use brandt::format::{parse_sgp, write_sgp};
use brandt::{Error, SearchConfig};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_UNATTAINABLE: [usize; 2] = [6, 12];

fn fixture(name: &str) -> FixtureReport {
    fixtures::run_fixture(name, &SearchConfig::default())
        .expect("known fixture")
        .expect("fixture ran")
}

fn format_criterion() -> FixtureReport {
    let mut r = FixtureReport {
        name: "format".into(),
        passed: true,
        diagnostics: Vec::new(),
    };
    let corpus = catalog::corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let (_, base) = corpus.choose(&mut rng).unwrap();
        let lambda = rng.gen_range(1..=3);
        let ext = brandt_extension(base, lambda).unwrap();
        let mut perm: Vec<usize> = (0..ext.carrier().order()).collect();
        perm.shuffle(&mut rng);
        let s = ext.carrier().permuted(&perm).unwrap();
        if parse_sgp(&write_sgp(&s)).as_ref() != Ok(&s) {
            mismatches += 1;
        }
    }
    r.passed &= mismatches == 0;
    r.diagnostics.push(format!("1000 random round trips, {mismatches} mismatches"));

    let parse_containing = |needle: &'static str| {
        move |e: &Error| matches!(e, Error::Parse { message, .. } if message.contains(needle))
    };
    type Expect = Box<dyn Fn(&Error) -> bool>;
    let cases: [(&str, &str, Expect); 5] = [
        ("missing row", "sgp 1\nn 2\nrow 0 0\n", Box::new(parse_containing("expected 2 rows"))),
        ("out-of-range index", "sgp 1\nn 2\nrow 0 0\nrow 0 7\n", Box::new(parse_containing("out of range"))),
        (
            "duplicate labels",
            "sgp 1\nn 2\nlabels x x\nrow 0 0\nrow 0 1\n",
            Box::new(parse_containing("duplicate label")),
        ),
        (
            "non-associative table",
            "sgp 1\nn 2\nrow 1 0\nrow 0 0\n",
            Box::new(|e: &Error| matches!(e, Error::NonAssociative { .. })),
        ),
        ("short row", "sgp 1\nn 2\nrow 0\nrow 0 1\n", Box::new(parse_containing("entries in row"))),
    ];
    for (what, text, expect) in cases {
        let ok = parse_sgp(text).as_ref().err().is_some_and(expect);
        r.passed &= ok;
        r.diagnostics.push(format!("{} {what}", if ok { "ok  " } else { "FAIL" }));
    }
    r
}

#[test]
fn acceptance_criteria() {
    let config = SearchConfig::default();
    let results: Vec<(usize, &str, FixtureReport)> = vec![
        (1, "anchored matrix units map and its perturbations", fixture("ex2-5")),
        (2, "rectangular band map is not classifiable", fixture("ex2-13")),
        (3, "bicyclic map into a function-backed extension", fixture("ex2-12")),
        (4, "semilattice endomorphism squares to trivial", fixture("ex2-14")),
        (5, "unanchored map sends zero to a non-zero element", fixture("ex2-6")),
        (6, "brute-force homs equal triple-induced homs", fixture("thm2-10")),
        (7, "double extension witnesses", fixture("prop1-3")),
        (8, "extension of an orthogonal sum", fixture("prop1-9")),
        (9, "structure preserved by extension", fixture("cor1-10")),
        (10, "congruence-freeness", fixtures::congruence_free_check().unwrap()),
        (11, "triples over semilattices induce distinct maps", fixture("prop3-3")),
        (12, "composition predicate matches non-triviality", fixture("prop2-16")),
        (13, "images decompose as Brandt extensions", fixtures::image_decomposition_sweep(&config).unwrap()),
        (14, "format round trip and corrupted files", format_criterion()),
    ];

    let mut unexpected = Vec::new();
    for (k, what, r) in &results {
        println!("{} criterion {k:>2}: {what}", if r.passed { "PASS" } else { "FAIL" });
        if !r.passed {
            // per-λ summaries only; cell-level lines are in the fixture report
            for d in r.diagnostics.iter().filter(|d| d.starts_with("     ") || d.contains("lambda1=")) {
                println!("    {}", d.trim_start());
            }
        }
        let known = KNOWN_UNATTAINABLE.contains(k);
        if !r.passed && !known {
            unexpected.push(r.render());
        }
        if known && !r.passed {
            // every failing line must come from a λ₁ = 1 cell
            let stray: Vec<&String> = r
                .diagnostics
                .iter()
                .filter(|d| d.starts_with("FAIL") && !d.contains("lambda=(1,") && !d.contains("lambda1=1"))
                .collect();
            if !stray.is_empty() {
                unexpected.push(format!("criterion {k} fails outside lambda1 = 1: {stray:?}"));
            }
        }
    }
    assert!(unexpected.is_empty(), "{}", unexpected.join("\n"));
}
