//! Embeddings of matrix-unit semigroups and the `𝓑*` properties.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// Index of the unit `(i, j)` (0-based) in `matrix_units(lambda)`; the zero is 0.
#[inline]
pub fn unit_index(lambda: usize, i: usize, j: usize) -> usize {
    1 + i * lambda + j
}

/// Searches for an injective homomorphism `B_λ → T`.
///
/// The returned vector maps `matrix_units(lambda)` indices to `t` indices.
/// With `anchor_zero`, the zero of `B_λ` must go to the zero of `t`; if `t`
/// has no zero no anchored copy exists. The first witness found in the
/// fixed search order is returned, so results are deterministic.
pub fn matrix_units_embedding(t: &FiniteSemigroup, lambda: usize, anchor_zero: bool) -> Option<Vec<usize>> {
    assert!(lambda >= 1, "lambda must be positive");
    let zero_candidates: Vec<usize> = if anchor_zero {
        t.zero().into_iter().collect()
    } else {
        t.idempotents()
    };
    let idempotents = t.idempotents();
    for z in zero_candidates {
        let diag: Vec<usize> = idempotents
            .iter()
            .copied()
            .filter(|&f| f != z && t.mul(f, z) == z && t.mul(z, f) == z)
            .collect();
        let mut chosen = Vec::with_capacity(lambda);
        if let Some(w) = choose_diagonal(t, lambda, z, &diag, &mut chosen) {
            return Some(w);
        }
    }
    None
}

fn choose_diagonal(
    t: &FiniteSemigroup,
    lambda: usize,
    z: usize,
    diag: &[usize],
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == lambda {
        let mut row = vec![usize::MAX; lambda];
        let mut col = vec![usize::MAX; lambda];
        row[0] = chosen[0];
        col[0] = chosen[0];
        return choose_off_diagonal(t, lambda, z, chosen, &mut row, &mut col, 1);
    }
    for &f in diag {
        if chosen.contains(&f) {
            continue;
        }
        if chosen.iter().all(|&g| t.mul(f, g) == z && t.mul(g, f) == z) {
            chosen.push(f);
            if let Some(w) = choose_diagonal(t, lambda, z, diag, chosen) {
                return Some(w);
            }
            chosen.pop();
        }
    }
    None
}

/// Picks `e_{0j}` (stored in `row[j]`) and `e_{j0}` (`col[j]`) for `j ≥ 1`.
fn choose_off_diagonal(
    t: &FiniteSemigroup,
    lambda: usize,
    z: usize,
    diag: &[usize],
    row: &mut [usize],
    col: &mut [usize],
    j: usize,
) -> Option<Vec<usize>> {
    if j == lambda {
        return assemble(t, lambda, z, row, col);
    }
    let (f0, fj) = (diag[0], diag[j]);
    for x in 0..t.order() {
        if x == z || t.mul(f0, x) != x || t.mul(x, fj) != x || t.mul(x, x) != z {
            continue;
        }
        for y in 0..t.order() {
            if t.mul(x, y) != f0 || t.mul(y, x) != fj || t.mul(fj, y) != y || t.mul(y, f0) != y {
                continue;
            }
            row[j] = x;
            col[j] = y;
            if let Some(w) = choose_off_diagonal(t, lambda, z, diag, row, col, j + 1) {
                return Some(w);
            }
        }
    }
    None
}

fn assemble(t: &FiniteSemigroup, lambda: usize, z: usize, row: &[usize], col: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; lambda * lambda + 1];
    map[0] = z;
    for i in 0..lambda {
        for j in 0..lambda {
            let v = match (i, j) {
                (0, _) => row[j],
                (_, 0) => col[i],
                _ => t.mul(col[i], row[j]),
            };
            map[unit_index(lambda, i, j)] = v;
        }
    }
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() {
        return None;
    }
    verify_matrix_units(t, lambda, &map).then_some(map)
}

/// Checks `e_{ij}·e_{kl} = e_{il}` if `j = k` and the zero image otherwise,
/// plus absorption by the zero image.
pub fn verify_matrix_units(t: &FiniteSemigroup, lambda: usize, map: &[usize]) -> bool {
    let z = map[0];
    if t.mul(z, z) != z {
        return false;
    }
    for i in 0..lambda {
        for j in 0..lambda {
            let a = map[unit_index(lambda, i, j)];
            if t.mul(a, z) != z || t.mul(z, a) != z {
                return false;
            }
            for k in 0..lambda {
                for l in 0..lambda {
                    let b = map[unit_index(lambda, k, l)];
                    let want = if j == k { map[unit_index(lambda, i, l)] } else { z };
                    if t.mul(a, b) != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `𝓑*`: no subsemigroup isomorphic to `B_2`.
pub fn has_b_star(t: &FiniteSemigroup) -> bool {
    matrix_units_embedding(t, 2, false).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BStarFlags {
    pub has_b_star: bool,
    pub has_b_star_lambda: bool,
}

/// `has_b_star_lambda` holds when `t` contains no copy of `B_λ` at all and
/// no copy of `B_2` whose zero is the zero of `t`.
pub fn b_star_flags(t: &FiniteSemigroup, lambda: usize) -> Result<BStarFlags> {
    if t.zero().is_none() {
        return Err(Error::NoZero);
    }
    if lambda == 0 {
        return Err(Error::Shape("lambda must be positive".into()));
    }
    let has_b_star = has_b_star(t);
    let has_b_star_lambda = matrix_units_embedding(t, lambda, false).is_none()
        && matrix_units_embedding(t, 2, true).is_none();
    Ok(BStarFlags {
        has_b_star,
        has_b_star_lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brandt::matrix_units;
    use crate::catalog;

    #[test]
    fn matrix_units_embed_in_themselves() {
        for lambda in 1..=3 {
            let b = matrix_units(lambda);
            let w = matrix_units_embedding(&b, lambda, true).unwrap();
            assert!(verify_matrix_units(&b, lambda, &w));
            // the search order finds the identity first
            assert_eq!(w, (0..b.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn commutative_semigroup_has_no_b2() {
        let e = catalog::example_e();
        assert!(matrix_units_embedding(&e, 2, false).is_none());
        assert!(matrix_units_embedding(&e, 2, true).is_none());
        let f = b_star_flags(&e, 2).unwrap();
        assert!(f.has_b_star && f.has_b_star_lambda);
        assert!(b_star_flags(&e, 3).unwrap().has_b_star_lambda);
    }

    #[test]
    fn units_with_identity_and_new_zero_contains_unanchored_b2_only() {
        let t = catalog::units_with_identity_and_new_zero(2);
        assert_eq!(t.order(), 7);
        let w = matrix_units_embedding(&t, 2, false).unwrap();
        assert!(verify_matrix_units(&t, 2, &w));
        assert_ne!(Some(w[0]), t.zero());
        assert_eq!(t.label(w[0]), "0");
        assert!(matrix_units_embedding(&t, 2, true).is_none());
        let f = b_star_flags(&t, 2).unwrap();
        assert!(!f.has_b_star && !f.has_b_star_lambda);
    }

    #[test]
    fn b2_fails_b_star() {
        let f = b_star_flags(&matrix_units(2), 2).unwrap();
        assert!(!f.has_b_star && !f.has_b_star_lambda);
    }

    #[test]
    fn b_star_lambda_needs_zero() {
        let band = crate::semigroup::FiniteSemigroup::new(
            vec![vec![0, 0], vec![1, 1]],
            crate::semigroup::default_labels(2),
            None,
            None,
        )
        .unwrap();
        assert_eq!(b_star_flags(&band, 2).unwrap_err(), Error::NoZero);
    }

    #[test]
    fn b2_with_identity_contains_anchored_b2() {
        let s = catalog::b2_with_identity();
        let w = matrix_units_embedding(&s, 2, true).unwrap();
        assert_eq!(Some(w[0]), s.zero());
    }
}
