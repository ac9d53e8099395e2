use std::collections::BTreeMap;

use ncvir::charring::{sym_power, Character, SuperChar};
use ncvir::freealg::{nc_filtration_by_content, FreeAlgebraElement, DEFAULT_WORD_BUDGET};
use ncvir::linalg::Echelon;
use ncvir::ncdgq::*;
use ncvir::random::{random_ncdg, random_ncdg_mutant, rng};
use ncvir::Rational;
use num_traits::{One, Zero};
use rand::Rng;

#[test]
fn p2_q_squared_and_relations() {
    let data = p2_data();
    assert!(check_q_squared(&data).unwrap().ok);
    let rels = h0_ideal_generators(&data);
    assert_eq!(rels.len(), 9);
    let q = build_q(&data).unwrap();
    let names: Vec<String> = rels.iter().map(|r| q.display(r)).collect();
    for want in ["-y1*x1 + z11", "-y1*x2 + z12", "-y2*x1 + z12", "-y1 + z13", "-x1 + z13", "-y2*x2 + z22", "-y2 + z23", "-x2 + z23", "-1 + z33"] {
        assert!(names.iter().any(|n| n == want), "missing {want} in {names:?}");
    }
}

#[test]
fn xn_instance() {
    for n in [1, 2, 3, 5] {
        let data = xn_data(n);
        assert_eq!(h0_ideal_generators(&data), vec![FreeAlgebraElement::word(vec![0; n])]);
        assert!(check_q_squared(&data).unwrap().ok);
        assert_eq!(euler_char_xn(n, 10 * n).unwrap(), n as i64);
    }
}

#[test]
fn algebra_map_has_no_q0() {
    // scalar ê with ê(z_kl) = c_k c_l is multiplicative on the P² algebra
    let data = p2_data();
    let c = [2i64, -1, 3];
    let json = serde_json::to_value(&data).unwrap();
    let mut v = json.clone();
    let e_hat = v["e_hat"].as_array_mut().unwrap();
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    for (a, m) in e_hat.iter_mut().enumerate() {
        let entries = m.as_array_mut().unwrap();
        for e in entries.iter_mut() {
            let value = if a < 3 { c[a] } else { c[pairs[a - 3].0] * c[pairs[a - 3].1] };
            e[2] = serde_json::json!([[[], value.to_string()]]);
        }
    }
    let scalar: NcdgData = serde_json::from_value(v).unwrap();
    let q = build_q(&scalar).unwrap();
    for g in q.generators() {
        assert!(q.image(g).unwrap().is_zero(), "Q0 nonzero on {g}");
    }
    assert!(h0_ideal_generators(&scalar).is_empty());

    let mut zero = json;
    for m in zero["e_hat"].as_array_mut().unwrap() {
        *m = serde_json::json!([]);
    }
    let zero: NcdgData = serde_json::from_value(zero).unwrap();
    assert!(h0_ideal_generators(&zero).is_empty());
}

#[test]
fn random_associative_instances_square_to_zero() {
    let mut r = rng(2024);
    for _ in 0..10 {
        let data = random_ncdg(&mut r);
        let verdict = check_q_squared(&data).unwrap();
        assert!(verdict.ok, "{:?}", verdict.witness.map(|w| (w.label, w.residue_text)));
    }
}

#[test]
fn mutants_give_witnesses() {
    let mut r = rng(99);
    for _ in 0..3 {
        let data = random_ncdg_mutant(&mut r);
        let verdict = check_q_squared(&data).unwrap();
        assert!(!verdict.ok);
        let w = verdict.witness.unwrap();
        assert_eq!(w.generator.word, vec![0, 0, 0]);
        assert!(!w.residue.is_zero());
    }
}

#[test]
fn leibniz_rule_on_random_words() {
    let mut r = rng(5);
    for _ in 0..5 {
        let data = random_ncdg(&mut r);
        let q = build_q(&data).unwrap();
        let letters = q.letter_degrees().len();
        let degrees = q.letter_degrees().to_vec();
        for _ in 0..20 {
            let mut word = |len: usize| -> Vec<usize> { (0..len).map(|_| r.gen_range(0..letters)).collect() };
            let a = word(2);
            let b = word(2);
            let da: i64 = a.iter().map(|&l| degrees[l]).sum();
            let x = FreeAlgebraElement::word(a.clone());
            let y = FreeAlgebraElement::word(b.clone());
            let mut ab = a.clone();
            ab.extend(&b);
            let lhs = q.apply(&FreeAlgebraElement::word(ab));
            let sign = if da.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
            let mut rhs = q.apply(&x).mul(&y);
            rhs.add_scaled(&x.mul(&q.apply(&y)), &sign);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn abelianization_matches_super_symmetric_algebra() {
    // gr⁰ of the free algebra on the letters of 𝔄 against S(R ⊕ 𝔓), counted
    // by |.|-degree through one torus variable
    for data in [xn_data(2), random_ncdg(&mut rng(3))] {
        let q = build_q(&data).unwrap();
        let alphabet = q.alphabet();
        let degrees = alphabet.degrees();
        let mut g = SuperChar::zero(1);
        for &d in &degrees {
            let m = Character::monomial(1, vec![d as i32], 1);
            if d.rem_euclid(2) == 1 {
                g.odd += &m;
            } else {
                g.even += &m;
            }
        }
        if degrees.len() > 12 {
            continue;
        }
        for n in 1..=3 {
            let by_content = nc_filtration_by_content(&alphabet, n, DEFAULT_WORD_BUDGET).unwrap();
            let mut by_degree: BTreeMap<i64, i64> = BTreeMap::new();
            for (content, dims) in by_content {
                let deg: i64 = content.iter().zip(&degrees).map(|(c, d)| *c as i64 * d).sum();
                *by_degree.entry(deg).or_default() += dims[0] as i64;
            }
            by_degree.retain(|_, v| *v != 0);
            let s = sym_power(n, &g).total();
            let want: BTreeMap<i64, i64> = s.terms().map(|(m, c)| (m.0[0] as i64, i64::try_from(c).unwrap())).collect();
            assert_eq!(by_degree, want, "word length {n}");
        }
    }
}

/// Commutative polynomials in `k` variables as exponent vectors.
type CPoly = BTreeMap<Vec<u32>, Rational>;

fn abelianize(x: &FreeAlgebraElement, k: usize, subst: &dyn Fn(usize) -> CPoly) -> CPoly {
    let mut out = CPoly::new();
    for (w, c) in x.terms() {
        let mut acc = CPoly::from([(vec![0; k], c.clone())]);
        for &l in w {
            let f = subst(l);
            let mut next = CPoly::new();
            for (e1, c1) in &acc {
                for (e2, c2) in &f {
                    let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                    *next.entry(e).or_insert_with(Rational::zero) += c1 * c2;
                }
            }
            acc = next;
        }
        for (e, c) in acc {
            *out.entry(e).or_insert_with(Rational::zero) += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[test]
fn p2_h0_low_degree_slice() {
    // Eliminating z through z_kl = y_k x_l leaves an ideal of C[x1,x2,y1,y2];
    // its quotient in degree ≤ 2 has the size of C[x1,x2]_{≤2}.
    let data = p2_data();
    let rels = h0_ideal_generators(&data);
    let q = build_q(&data).unwrap();
    let var = |i: usize| {
        let mut e = vec![0; 4];
        e[i] = 1;
        CPoly::from([(e, Rational::one())])
    };
    let one = CPoly::from([(vec![0; 4], Rational::one())]);
    // each z letter is replaced using the first relation that contains it
    let mut z_value: BTreeMap<usize, CPoly> = BTreeMap::new();
    let mut leftovers = Vec::new();
    for rel in &rels {
        let z = rel.terms().find_map(|(w, _)| (w.len() == 1 && w[0] >= 4).then(|| w[0])).expect("every relation has a z");
        let rest = rel.sub(&FreeAlgebraElement::letter(z));
        let value = abelianize(&rest.scale(&-Rational::one()), 4, &|l| if l < 4 { var(l) } else { one.clone() });
        match z_value.get(&z) {
            None => {
                z_value.insert(z, value);
            }
            Some(prev) => {
                let mut d = prev.clone();
                for (e, c) in value {
                    *d.entry(e).or_insert_with(Rational::zero) -= c;
                }
                d.retain(|_, c| !c.is_zero());
                leftovers.push(d);
            }
        }
    }
    assert_eq!(z_value.len(), 6, "{}", q.display(&rels[0]));
    assert_eq!(leftovers.len(), 3);
    // monomials of degree ≤ 2 in four variables
    let mut monos: Vec<Vec<u32>> = Vec::new();
    for a in 0..=2u32 {
        for b in 0..=2 - a {
            for c in 0..=2 - a - b {
                for d in 0..=2 - a - b - c {
                    monos.push(vec![a, b, c, d]);
                }
            }
        }
    }
    let index: BTreeMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut e = Echelon::new(monos.len());
    for f in &leftovers {
        let fdeg = f.keys().map(|m| m.iter().sum::<u32>()).max().unwrap();
        for m in &monos {
            if m.iter().sum::<u32>() + fdeg > 2 {
                continue;
            }
            let mut v = vec![Rational::zero(); monos.len()];
            for (fm, c) in f {
                let prod: Vec<u32> = fm.iter().zip(m).map(|(a, b)| a + b).collect();
                v[index[&prod]] += c;
            }
            e.insert(v);
        }
    }
    assert_eq!(monos.len() - e.rank(), 6);
}
