//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion with
//! its runtime, then fails if any criterion failed or ran over its bound.

use std::time::{Duration, Instant};

use ncvir::charring::*;
use ncvir::freealg::{nc_filtration_dims, poisson_envelope_dims, GradedGenSet, DEFAULT_WORD_BUDGET};
use ncvir::freelie::{lie_bracket_span_oracle, lie_table};
use ncvir::ncdgq::{check_q_squared, euler_char_xn, p2_data};
use ncvir::ncvirt::*;
use ncvir::partition::partitions_of;
use ncvir::quiver::*;
use ncvir::random::{random_ncdg, random_ncdg_mutant, random_superchar, random_superchar_in, rng};
use ncvir::{Partition, SuperChar};
use ncvir_cli::c3_target;
use ncvir_oracle::{schur_functor_character, witt_dimension, BasisVector};
use num_bigint::BigInt;

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn hooks(e: &SuperChar, shapes: &[&[u32]]) -> Character {
    let mut out = Character::one(e.nvars());
    for lam in shapes {
        out += &schur_super(&part(lam), e).k_class();
    }
    out
}

fn twenty_classes() -> Vec<SuperChar> {
    let mut r = rng(2025);
    (0..20).map(|_| random_superchar(&mut r)).collect()
}

fn c1() -> Check {
    for e in twenty_classes() {
        ensure(s_l_plus_truncated(&e, 1) == hooks(&e, &[&[1, 1]]), || format!("d = 1 fails for {e}"))?;
    }
    Ok(())
}

fn c2() -> Check {
    for e in twenty_classes() {
        let want = hooks(&e, &[&[1, 1], &[2, 1], &[2, 2], &[1, 1, 1, 1]]);
        ensure(s_l_plus_truncated(&e, 2) == want, || format!("d = 2 fails for {e}"))?;
    }
    Ok(())
}

fn c3() -> Check {
    let target = c3_target().map_err(|e| e.to_string())?;
    let tangent = c3_obstruction_theory(C3Odd::Tangent);
    ensure(ncvir_class(&tangent, 1) == target, || "tangent odd part does not reproduce the display".into())?;
    let wedge = c3_obstruction_theory(C3Odd::WedgeCotangent);
    let alt = ncvir_class(&wedge, 1) == target;
    println!("    alternative odd part sum t_i^-1 t_j^-1 matches display: {alt}");
    ensure(!alt, || "alternative odd part unexpectedly matches".into())
}

fn c4() -> Check {
    for n in [1i64, 2, 3, 5] {
        for r in 0..=3 {
            let e = SuperChar::new(Character::constant(0, r), Character::constant(0, r)).unwrap();
            let ot = ObstructionTheory::new(e, RationalCharacter::from_character(Character::constant(0, n))).unwrap();
            for d in 0..=3 {
                ensure(ncvir_class(&ot, d) == RationalCharacter::from_character(Character::constant(0, n)), || format!("n = {n}, rank {r}, d = {d}"))?;
            }
        }
        let chi = euler_char_xn(n as usize, 10 * n as usize).map_err(|e| e.to_string())?;
        ensure(chi == n, || format!("euler characteristic {chi} for n = {n}"))?;
    }
    Ok(())
}

fn c5() -> Check {
    let two_even = lie_table(&SuperChar::even(Character::constant(0, 2)), 5);
    let one_odd = lie_table(&SuperChar::odd(Character::constant(0, 1)), 5);
    for n in 1..=5 {
        let dim = two_even.get(n).dim();
        let want = BigInt::from([2, 1, 2, 3, 6][n - 1]);
        ensure(dim == want, || format!("two even, n = {n}: {dim}"))?;
        ensure(dim == BigInt::from(witt_dimension(n as u64, 2)), || format!("Witt differs at n = {n}"))?;
        let span = lie_bracket_span_oracle(n, 2, 0, DEFAULT_WORD_BUDGET).map_err(|e| e.to_string())?;
        ensure(dim == BigInt::from(span), || format!("bracket span {span} at n = {n}"))?;
        let odd = one_odd.get(n).dim();
        ensure(odd == BigInt::from([1, 1, 0, 0, 0][n - 1]), || format!("one odd, n = {n}: {odd}"))?;
        let span = lie_bracket_span_oracle(n, 0, 1, DEFAULT_WORD_BUDGET).map_err(|e| e.to_string())?;
        ensure(odd == BigInt::from(span), || format!("odd bracket span {span} at n = {n}"))?;
    }
    Ok(())
}

fn c6() -> Check {
    for even in 0..=3 {
        for odd in 0..=3 - even {
            if even + odd == 0 {
                continue;
            }
            let gens = GradedGenSet::standard(even, odd);
            for n in 1..=5 {
                let lhs = nc_filtration_dims(&gens, n, n, DEFAULT_WORD_BUDGET).map_err(|e| e.to_string())?;
                let rhs = poisson_envelope_dims(&gens, n, n);
                ensure(lhs == rhs, || format!("({even} even, {odd} odd), n = {n}: {:?} vs {:?}", lhs.dims, rhs.dims))?;
            }
        }
    }
    Ok(())
}

fn c7() -> Check {
    let p2 = check_q_squared(&p2_data()).map_err(|e| e.to_string())?;
    ensure(p2.ok, || "P² instance fails".into())?;
    let mut r = rng(2024);
    for i in 0..10 {
        let v = check_q_squared(&random_ncdg(&mut r)).map_err(|e| e.to_string())?;
        ensure(v.ok, || format!("random instance {i} fails"))?;
    }
    let mut r = rng(99);
    for i in 0..3 {
        let v = check_q_squared(&random_ncdg_mutant(&mut r)).map_err(|e| e.to_string())?;
        ensure(!v.ok && v.witness.is_some(), || format!("mutant {i} has no witness"))?;
    }
    Ok(())
}

fn c8() -> Check {
    let a = GradedAlgebraPresentation::p2();
    let quiver = build_quiver(&a).map_err(|e| e.to_string())?;
    let counts = (quiver.arrow_count(0, 1), quiver.arrow_count(0, 2), quiver.arrow_count(1, 2));
    ensure(counts == (3, 6, 3), || format!("arrow counts {counts:?}"))?;
    ensure(quiver.relations().len() == 9, || format!("{} relations", quiver.relations().len()))?;
    let point = p2_point_rep(&quiver);
    ensure(satisfies_relations(&point, &quiver).unwrap(), || "point violates relations".into())?;
    ensure(mc_residual(&point.to_l_element(&quiver), &a, &point.gamma).unwrap().is_zero(), || "point has MC residual".into())?;
    let thin = p2_thin_rep(&quiver, [1, 2, 3], [4, 5, 6], [1, 2, 3, 4, 5, 6]);
    ensure(thin_stability(&thin, &quiver).unwrap() == Stability::Stable, || "all-nonzero thin rep not stable".into())
}

fn basis_of(g: &SuperChar) -> Vec<BasisVector> {
    let mut out = Vec::new();
    for (p, odd) in [(&g.even, false), (&g.odd, true)] {
        for (m, c) in p.terms() {
            for _ in 0..i64::try_from(c).unwrap() {
                out.push(BasisVector { odd, weight: m.0.clone() });
            }
        }
    }
    out
}

fn c9() -> Check {
    // (a) hook expansion against Jacobi–Trudi on super power sums
    let mut r = rng(9);
    for _ in 0..6 {
        let g = random_superchar_in(&mut r, 2, 3, 2);
        for n in 1..=5u32 {
            let ps: Vec<Character> = (1..=n).map(|d| power_sum(d, &g)).collect();
            let hs = complete_from_power_sums(g.nvars(), &ps);
            let ps_k: Vec<Character> = (1..=n).map(|d| &g.even.adams(d) - &g.odd.adams(d)).collect();
            let hs_k = complete_from_power_sums(g.nvars(), &ps_k);
            for lam in partitions_of(n) {
                let s = schur_super(&lam, &g);
                ensure(s.total() == schur_from_complete(&lam, &hs), || format!("(a) total, λ = {lam}, g = {g}"))?;
                ensure(s.k_class() == schur_from_complete(&lam, &hs_k), || format!("(a) K-class, λ = {lam}, g = {g}"))?;
            }
        }
    }
    // (b) symmetrizer projectors
    let mut tried = 0;
    while tried < 15 {
        let g = random_superchar_in(&mut r, 2, 2, 2);
        let basis = basis_of(&g);
        if basis.is_empty() || basis.len() > 4 {
            continue;
        }
        tried += 1;
        for k in 1..=3u32 {
            for lam in partitions_of(k) {
                let parts: Vec<usize> = lam.parts().iter().map(|&x| x as usize).collect();
                let (e, o) = schur_functor_character(&basis, &parts);
                let want = SuperChar::new(Character::from_terms(g.nvars(), e).unwrap(), Character::from_terms(g.nvars(), o).unwrap()).unwrap();
                ensure(schur_super(&lam, &g) == want, || format!("(b) λ = {lam}, g = {g}"))?;
            }
            let sym = schur_functor_character(&basis, &[k as usize]);
            ensure(sym_power(k as usize, &g).even == Character::from_terms(g.nvars(), sym.0).unwrap(), || format!("(b) S^{k}"))?;
            let ext = schur_functor_character(&basis, &vec![1; k as usize]);
            ensure(ext_power(k as usize, &g).even == Character::from_terms(g.nvars(), ext.0).unwrap(), || format!("(b) Λ^{k}"))?;
        }
    }
    // (c) adding an acyclic summand leaves K-classes unchanged
    for _ in 0..6 {
        let g = random_superchar_in(&mut r, 2, 2, 2);
        let h = random_superchar_in(&mut r, 2, 2, 2).even;
        let padded = &g + &SuperChar::new(h.clone(), h).unwrap();
        for n in 1..=5 {
            for lam in partitions_of(n) {
                ensure(schur_super(&lam, &padded).k_class() == schur_super(&lam, &g).k_class(), || format!("(c) λ = {lam}"))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check, u64); 9] = [
        ("1 truncation d = 1 on 20 random classes", c1, 5),
        ("2 truncation d = 2 on 20 random classes", c2, 30),
        ("3 C^3 example against the stored display", c3, 1),
        ("4 rank-zero points and euler characteristic of x^n", c4, 10),
        ("5 free Lie dimensions", c5, 10),
        ("6 NC filtration against Poisson envelope", c6, 60),
        ("7 Q^2 = 0 verdicts", c7, 60),
        ("8 P^2 quiver", c8, 1),
        ("9 oracle equivalences", c9, 120),
    ];
    let mut failed = Vec::new();
    for (name, f, bound) in criteria {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(bound);
        let status = match (&result, over) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => format!("FAIL (over {bound} s)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        println!("criterion {name}: {status} [{:.3} s]", elapsed.as_secs_f64());
        if result.is_err() || over {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
