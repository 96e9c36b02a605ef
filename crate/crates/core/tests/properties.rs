use brandt::brandt::{brandt_extension, matrix_units};
use brandt::catalog;
use brandt::embed::unit_index;
use brandt::hom::check_homomorphism;
use brandt::triple::{classify_hom, enumerate_triples, sigma_from_triple, Classification};
use proptest::prelude::*;

fn corpus_member() -> impl Strategy<Value = (String, brandt::FiniteSemigroup)> {
    let corpus = catalog::corpus();
    (0..corpus.len()).prop_map(move |k| (corpus[k].0.to_string(), corpus[k].1.clone()))
}

proptest! {
    #[test]
    fn product_follows_the_brandt_rule((_, s) in corpus_member(), lambda in 1usize..=3, a in 0usize..3, b in 0usize..3, c in 0usize..3, d in 0usize..3) {
        let ext = brandt_extension(&s, lambda).unwrap();
        let (a, b, c, d) = (a % lambda, b % lambda, c % lambda, d % lambda);
        for x in s.nonzero() {
            for y in s.nonzero() {
                let lhs = ext.carrier().mul(ext.encode_or_zero(a, x, b), ext.encode_or_zero(c, y, d));
                let rhs = if b == c { ext.encode_or_zero(a, s.mul(x, y), d) } else { ext.zero() };
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn encode_decode_are_inverse((_, s) in corpus_member(), lambda in 1usize..=3) {
        let ext = brandt_extension(&s, lambda).unwrap();
        prop_assert_eq!(ext.carrier().order(), lambda * lambda * (s.order() - 1) + 1);
        prop_assert!(ext.decode(ext.zero()).is_none());
        for x in 1..ext.carrier().order() {
            let cell = ext.decode(x).unwrap();
            prop_assert_eq!(ext.encode(cell.alpha, cell.s, cell.beta), Some(x));
        }
    }

    #[test]
    fn triples_round_trip_through_classification((_, s) in corpus_member(), (_, t) in corpus_member(), l1 in 1usize..=2, extra in 0usize..=1) {
        let l2 = l1 + extra;
        let src = brandt_extension(&s, l1).unwrap();
        let dst = brandt_extension(&t, l2).unwrap();
        for tr in enumerate_triples(&s, &t, l1, l2).unwrap() {
            let sigma = sigma_from_triple(&tr, &src, &dst).unwrap();
            prop_assert!(check_homomorphism(sigma.map(), src.carrier(), dst.carrier()).is_ok());
            prop_assert!(sigma.preserves_zero());
            match classify_hom(&sigma, &src, &dst).unwrap() {
                Classification::Triple(back) => {
                    prop_assert_eq!(sigma_from_triple(&back, &src, &dst).unwrap(), sigma);
                }
                Classification::NotClassifiable(why) => prop_assert!(false, "{}", why),
            }
        }
    }
}

#[test]
fn extension_of_two_element_is_matrix_units() {
    for lambda in 1..=4 {
        let ext = brandt_extension(&catalog::two_element(), lambda).unwrap();
        let b = matrix_units(lambda);
        assert_eq!(ext.carrier().rows(), b.rows());
        for i in 0..lambda {
            for j in 0..lambda {
                assert_eq!(ext.encode(i, 1, j), Some(unit_index(lambda, i, j)));
            }
        }
    }
}
