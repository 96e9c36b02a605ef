//! Named small semigroups used throughout the tests, fixtures and CLI.

use crate::brandt::matrix_units;
use crate::semigroup::FiniteSemigroup;

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// The two-element monoid with zero `{0, 1}` (zero at index 0).
pub fn two_element() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2, strings(&["0", "1"]), |a, b| a.min(b)).unwrap()
}

/// The trivial semigroup.
pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(1, strings(&["0"]), |_, _| 0).unwrap()
}

/// The chain semilattice `0 < 1 < … < n-1` under `min`.
pub fn chain(n: usize) -> FiniteSemigroup {
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteSemigroup::from_fn(n, labels, |a, b| a.min(b)).unwrap()
}

/// The semilattice `{a, b, c}` with unity `a` and zero `c`: `ab = ba = b`,
/// and every product involving `c` is `c`.
pub fn example_e() -> FiniteSemigroup {
    // a = 0, b = 1, c = 2; the product is the larger index
    FiniteSemigroup::from_fn(3, strings(&["a", "b", "c"]), |x, y| x.max(y)).unwrap()
}

/// The cyclic group of order `n` with an adjoined zero; `1` is at index 1.
pub fn cyclic_group_with_zero(n: usize) -> FiniteSemigroup {
    let mut labels = vec!["0".to_string(), "1".to_string()];
    labels.extend((1..n).map(|k| if k == 1 { "g".to_string() } else { format!("g^{k}") }));
    FiniteSemigroup::from_fn(n + 1, labels, |x, y| {
        if x == 0 || y == 0 {
            0
        } else {
            1 + ((x - 1) + (y - 1)) % n
        }
    })
    .unwrap()
}

/// `{0, 1, a}` with `a·a = 0`.
pub fn nilpotent_monoid() -> FiniteSemigroup {
    FiniteSemigroup::new(
        vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 0]],
        strings(&["0", "1", "a"]),
        None,
        None,
    )
    .unwrap()
}

/// The semilattice `{0, e, f, 1}` with `ef = 0`.
pub fn diamond() -> FiniteSemigroup {
    FiniteSemigroup::new(
        vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ],
        strings(&["0", "e", "f", "1"]),
        None,
        None,
    )
    .unwrap()
}

/// `{0, 1, e, f}` where `{e, f}` is a left-zero band (`ef = e`, `fe = f`).
/// Its idempotents are not central.
pub fn left_zero_monoid() -> FiniteSemigroup {
    FiniteSemigroup::new(
        vec![
            vec![0, 0, 0, 0],
            vec![0, 1, 2, 3],
            vec![0, 2, 2, 2],
            vec![0, 3, 3, 3],
        ],
        strings(&["0", "1", "e", "f"]),
        None,
        None,
    )
    .unwrap()
}

/// Adjoins a new identity labelled `label`, placed at index `order`.
pub fn adjoin_identity(s: &FiniteSemigroup, label: &str) -> FiniteSemigroup {
    let n = s.order();
    let mut labels = s.labels().to_vec();
    labels.push(label.to_string());
    FiniteSemigroup::from_fn(n + 1, labels, |x, y| match (x == n, y == n) {
        (true, _) => y,
        (_, true) => x,
        _ => s.mul(x, y),
    })
    .unwrap()
}

/// Adjoins a new zero labelled `label`, placed at index `order`.
pub fn adjoin_zero(s: &FiniteSemigroup, label: &str) -> FiniteSemigroup {
    let n = s.order();
    let mut labels = s.labels().to_vec();
    labels.push(label.to_string());
    FiniteSemigroup::from_fn(n + 1, labels, |x, y| {
        if x == n || y == n {
            n
        } else {
            s.mul(x, y)
        }
    })
    .unwrap()
}

/// The 2×2 rectangular band with adjoined unity `1` and zero `0`.
pub fn rectangular_band_with_unity_and_zero() -> FiniteSemigroup {
    let labels = strings(&["0", "1", "(1,1)", "(1,2)", "(2,1)", "(2,2)"]);
    FiniteSemigroup::from_fn(6, labels, |x, y| match (x, y) {
        (0, _) | (_, 0) => 0,
        (1, y) => y,
        (x, 1) => x,
        (x, y) => {
            // (i,j)(k,l) = (i,l)
            let i = (x - 2) / 2;
            let l = (y - 2) % 2;
            2 + i * 2 + l
        }
    })
    .unwrap()
}

/// `B_2` with an adjoined identity `1`; the zero of `B_2` is the zero.
pub fn b2_with_identity() -> FiniteSemigroup {
    adjoin_identity(&matrix_units(2), "1")
}

/// `B_λ` with an adjoined identity `1` and then an adjoined zero `z`, so the
/// zero `0` of `B_λ` is no longer the zero of the whole semigroup.
pub fn units_with_identity_and_new_zero(lambda: usize) -> FiniteSemigroup {
    adjoin_zero(&adjoin_identity(&matrix_units(lambda), "1"), "z")
}

/// Monoids with zero of order at most 4 lying in the class `𝔅`.
pub fn corpus() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("two-element", two_element()),
        ("chain3", chain(3)),
        ("example-e", example_e()),
        ("z2-zero", cyclic_group_with_zero(2)),
        ("z3-zero", cyclic_group_with_zero(3)),
        ("nilpotent", nilpotent_monoid()),
        ("diamond", diamond()),
        ("chain4", chain(4)),
    ]
}

/// Small monoids with zero outside `𝔅`.
pub fn non_b_samples() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("left-zero-monoid", left_zero_monoid()),
        ("rect-band-1-0", rectangular_band_with_unity_and_zero()),
        ("b2-with-identity", b2_with_identity()),
    ]
}

/// Semilattices with unity and zero among the corpus.
pub fn semilattice_corpus() -> Vec<(&'static str, FiniteSemigroup)> {
    corpus()
        .into_iter()
        .filter(|(_, s)| s.idempotents().len() == s.order() && s.is_commutative())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::in_class_b;

    #[test]
    fn corpus_members_are_in_class_b() {
        for (name, s) in corpus() {
            assert!(s.order() <= 4, "{name}");
            assert!(s.is_monoid_with_zero(), "{name}");
            assert!(in_class_b(&s), "{name}");
        }
        for (name, s) in non_b_samples() {
            assert!(s.is_monoid_with_zero(), "{name}");
            assert!(!in_class_b(&s), "{name}");
        }
    }

    #[test]
    fn example_e_table() {
        let e = example_e();
        let (a, b, c) = (0, 1, 2);
        assert_eq!(e.mul(a, a), a);
        assert_eq!(e.mul(a, b), b);
        assert_eq!(e.mul(b, a), b);
        for (x, y) in [(a, c), (c, a), (b, c), (c, b), (c, c)] {
            assert_eq!(e.mul(x, y), c);
        }
        assert_eq!(e.identity(), Some(a));
        assert_eq!(e.zero(), Some(c));
    }

    #[test]
    fn semilattices() {
        let names: Vec<_> = semilattice_corpus().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["two-element", "chain3", "example-e", "diamond", "chain4"]);
    }

    #[test]
    fn units_with_identity_and_new_zero_zero() {
        let t = units_with_identity_and_new_zero(2);
        assert_eq!(t.label(t.zero().unwrap()), "z");
        assert_eq!(t.label(t.identity().unwrap()), "1");
    }
}
