use ncvir::quiver::*;
use ncvir::random::{random_module_rep, random_presentation, random_rep, rng};
use ncvir::Rational;
use proptest::prelude::*;

fn relations_hold_iff_mc(rep: &Rep, a: &GradedAlgebraPresentation, quiver: &Quiver) -> bool {
    let by_relations = satisfies_relations(rep, quiver).unwrap();
    let by_mc = mc_residual(&rep.to_l_element(quiver), a, &rep.gamma).unwrap().is_zero();
    assert_eq!(by_relations, by_mc);
    by_relations
}

#[test]
fn relations_match_maurer_cartan_on_random_reps() {
    let mut r = rng(41);
    let mut holding = 0;
    for _ in 0..50 {
        let a = random_presentation(&mut r);
        let quiver = build_quiver(&a).unwrap();
        let rep = random_rep(&mut r, &quiver);
        holding += usize::from(relations_hold_iff_mc(&rep, &a, &quiver));
    }
    // both outcomes are exercised
    assert!(holding > 0 && holding < 50, "{holding}");
}

#[test]
fn module_reps_satisfy_relations() {
    let mut r = rng(42);
    for _ in 0..20 {
        let a = random_presentation(&mut r);
        let quiver = build_quiver(&a).unwrap();
        let rep = random_module_rep(&mut r, &a, &quiver, false);
        assert!(relations_hold_iff_mc(&rep, &a, &quiver));
        let bent = random_module_rep(&mut r, &a, &quiver, true);
        relations_hold_iff_mc(&bent, &a, &quiver);
    }
}

#[test]
fn arrow_and_relation_counts() {
    let mut r = rng(43);
    for _ in 0..20 {
        let a = random_presentation(&mut r);
        let quiver = build_quiver(&a).unwrap();
        let (p, q) = a.range();
        let mut composable = 0;
        for i in p..=q {
            for j in i + 1..=q {
                assert_eq!(quiver.arrow_count(i, j), a.dim(j - i));
                for k in j + 1..=q {
                    composable += a.dim(j - i) * a.dim(k - j);
                }
            }
        }
        assert_eq!(quiver.relations().len(), composable);
    }
}

#[test]
fn p2_quiver() {
    let a = GradedAlgebraPresentation::p2();
    let quiver = build_quiver(&a).unwrap();
    assert_eq!((quiver.arrow_count(0, 1), quiver.arrow_count(0, 2), quiver.arrow_count(1, 2)), (3, 6, 3));
    assert_eq!(quiver.relations().len(), 9);
    let point = p2_point_rep(&quiver);
    assert!(satisfies_relations(&point, &quiver).unwrap());
    assert!(mc_residual(&point.to_l_element(&quiver), &a, &point.gamma).unwrap().is_zero());
    assert_eq!(thin_stability(&point, &quiver).unwrap(), Stability::Stable);
    let generic = p2_thin_rep(&quiver, [1, 2, 3], [4, 5, 6], [1, 1, 1, 1, 1, 1]);
    assert_eq!(thin_stability(&generic, &quiver).unwrap(), Stability::Stable);
    let no_x = p2_thin_rep(&quiver, [0; 3], [1; 3], [1; 6]);
    assert_eq!(thin_stability(&no_x, &quiver).unwrap(), Stability::SemistableOnly);
    let only_y = p2_thin_rep(&quiver, [0; 3], [1; 3], [0; 6]);
    assert_eq!(thin_stability(&only_y, &quiver).unwrap(), Stability::Unstable);
}

#[test]
fn stability_rejects_non_thin() {
    let a = GradedAlgebraPresentation::p2();
    let quiver = build_quiver(&a).unwrap();
    let rep = Rep::zero(&quiver, vec![1, 2, 1]).unwrap();
    assert!(thin_stability(&rep, &quiver).is_err());
}

#[test]
fn perturbed_point_has_one_residual_entry() {
    let a = GradedAlgebraPresentation::p2();
    let quiver = build_quiver(&a).unwrap();
    let mut rep = p2_point_rep(&quiver);
    let z11 = quiver.arrow_index(0, (2, 0)).unwrap();
    let v = rep.matrices[z11].get(0, 0) + Rational::from_integer(1.into());
    rep.matrices[z11].set(0, 0, v);
    assert!(!satisfies_relations(&rep, &quiver).unwrap());
    let res = mc_residual(&rep.to_l_element(&quiver), &a, &rep.gamma).unwrap();
    let entries: Vec<_> = res.nonzero().collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0].0, &(vec![(1, 0), (1, 0)], 0));
}

#[test]
fn non_associative_presentation_is_rejected() {
    let json = r#"{"p":0,"q":3,"dims":[1,1,1],"theta":[[1,0,1,0,[[0,"1"]]],[1,0,2,0,[[0,"1"]]],[2,0,1,0,[[0,"2"]]]]}"#;
    let a: GradedAlgebraPresentation = serde_json::from_str(json).unwrap();
    assert!(build_quiver(&a).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_presentation(&mut r);
        let back: GradedAlgebraPresentation = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(&back, &a);
        let quiver = build_quiver(&a).unwrap();
        let back: Quiver = serde_json::from_str(&serde_json::to_string(&quiver).unwrap()).unwrap();
        prop_assert_eq!(&back, &quiver);
        let rep = random_rep(&mut r, &quiver);
        let back: Rep = serde_json::from_str(&serde_json::to_string(&rep).unwrap()).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn relations_iff_mc(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_presentation(&mut r);
        let quiver = build_quiver(&a).unwrap();
        let rep = random_rep(&mut r, &quiver);
        relations_hold_iff_mc(&rep, &a, &quiver);
    }
}
