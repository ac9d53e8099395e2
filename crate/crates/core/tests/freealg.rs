use std::time::Instant;

use ncvir::charring::sym_power;
use ncvir::freealg::*;
use ncvir::Rational;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn gen_sets(max_total: usize) -> Vec<GradedGenSet> {
    let mut out = Vec::new();
    for even in 0..=max_total {
        for odd in 0..=max_total - even {
            if even + odd > 0 {
                out.push(GradedGenSet::standard(even, odd));
            }
        }
    }
    out
}

#[test]
fn filtration_equals_envelope_by_content() {
    let start = Instant::now();
    for gens in gen_sets(3) {
        for n in 1..=5 {
            let lhs = nc_filtration_by_content(&gens, n, DEFAULT_WORD_BUDGET).unwrap();
            let rhs = poisson_envelope_by_content(&gens, n);
            let lhs: Vec<_> = lhs.into_iter().filter(|(_, v)| v.iter().any(|&x| x > 0)).collect();
            let rhs: Vec<_> = rhs.into_iter().collect();
            assert_eq!(lhs, rhs, "{:?} at n = {n}", gens.degrees());
        }
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn degree_zero_piece_is_symmetric_power() {
    for gens in gen_sets(3) {
        let g = gens.content_character();
        for n in 1..=4 {
            let r = nc_filtration_dims(&gens, n, 0, DEFAULT_WORD_BUDGET).unwrap();
            assert_eq!(BigInt::from(r.dims[0].1), sym_power(n, &g).dim());
        }
    }
}

#[test]
fn pieces_add_up_to_tensor_power() {
    for gens in gen_sets(3) {
        for n in 1..=4 {
            let r = nc_filtration_dims(&gens, n, n, DEFAULT_WORD_BUDGET).unwrap();
            assert_eq!(r.total(), gens.len().pow(n as u32));
        }
    }
}

#[test]
fn filtration_is_multiplicative() {
    let gens = GradedGenSet::standard(1, 1);
    let degrees = gens.degrees();
    let spans: Vec<FiltrationSpan> = (0..=4).map(|n| FiltrationSpan::compute(&gens, n, DEFAULT_WORD_BUDGET).unwrap()).collect();
    for n1 in 1..=2 {
        for n2 in 1..=2 {
            for a in 0..n1 {
                for b in 0..n2 {
                    let xs = filtration_generators(&gens, n1, a, DEFAULT_WORD_BUDGET).unwrap();
                    let ys = filtration_generators(&gens, n2, b, DEFAULT_WORD_BUDGET).unwrap();
                    for x in &xs {
                        for y in &ys {
                            assert!(spans[n1 + n2].contains(&x.mul(y), a + b));
                            if let Ok(c) = super_commutator(x, y, &degrees) {
                                assert!(spans[n1 + n2].contains(&c, a + b + 1));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn filtration_is_decreasing() {
    for gens in gen_sets(2) {
        for n in 1..=4 {
            let span = FiltrationSpan::compute(&gens, n, DEFAULT_WORD_BUDGET).unwrap();
            for d in 0..n {
                assert!(span.dim_f(d) >= span.dim_f(d + 1));
            }
            assert_eq!(span.dim_f(n), 0);
        }
    }
}

fn arb_element() -> impl Strategy<Value = FreeAlgebraElement> {
    prop::collection::vec((prop::collection::vec(0usize..3, 0..4), -5i64..=5, 1i64..=4), 0..6).prop_map(|terms| {
        FreeAlgebraElement::from_terms(terms.into_iter().map(|(w, p, q)| (w, Rational::new(p.into(), q.into()))))
    })
}

proptest! {
    #[test]
    fn element_json_round_trip(x in arb_element()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: FreeAlgebraElement = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn multiplication_is_associative(x in arb_element(), y in arb_element(), z in arb_element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&FreeAlgebraElement::one()), x.clone());
        prop_assert!(x.sub(&x).is_zero());
        prop_assert_eq!(x.scale(&Rational::one()), x);
    }
}
