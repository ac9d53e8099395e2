//! Seeded property suite behind `ncvir selftest`.

use rand::Rng;
use serde_json::json;

use ncvir::charring::{schur_super, Character, SuperChar};
use ncvir::freealg::{nc_filtration_by_content, poisson_envelope_by_content, GradedGenSet, DEFAULT_WORD_BUDGET};
use ncvir::freelie::{lie_bracket_span_oracle, lie_table};
use ncvir::ncdgq::check_q_squared;
use ncvir::ncvirt::s_l_plus_truncated;
use ncvir::quiver::{build_quiver, mc_residual, satisfies_relations};
use ncvir::random::{random_ncdg, random_ncdg_mutant, random_presentation, random_rep, random_superchar, rng, SeededRng};
use ncvir::Partition;
use ncvir_oracle::witt_dimension;

use crate::{Outcome, EXIT_MISMATCH, EXIT_OK};

struct Check {
    name: &'static str,
    cases: usize,
    failures: usize,
}

fn hooks(e: &SuperChar, shapes: &[&[u32]]) -> Character {
    let mut out = Character::one(e.nvars());
    for lam in shapes {
        out += &schur_super(&Partition::new(lam.to_vec()).expect("valid shape"), e).k_class();
    }
    out
}

fn count(name: &'static str, cases: usize, mut ok: impl FnMut(usize) -> bool) -> Check {
    let failures = (0..cases).filter(|&i| !ok(i)).count();
    Check { name, cases, failures }
}

pub(crate) fn run(seed: u64) -> Outcome {
    let mut r: SeededRng = rng(seed);
    let mut checks = Vec::new();

    let classes: Vec<SuperChar> = (0..20).map(|_| random_superchar(&mut r)).collect();
    checks.push(count("truncation_d1", classes.len(), |i| s_l_plus_truncated(&classes[i], 1) == hooks(&classes[i], &[&[1, 1]])));
    checks.push(count("truncation_d2", classes.len(), |i| {
        s_l_plus_truncated(&classes[i], 2) == hooks(&classes[i], &[&[1, 1], &[2, 1], &[2, 2], &[1, 1, 1, 1]])
    }));
    checks.push(count("acyclic_invariance", classes.len(), |i| {
        let h = &classes[(i + 1) % classes.len()].even;
        let e = &classes[i];
        if h.nvars() != e.nvars() {
            return true;
        }
        let padded = e + &SuperChar::new(h.clone(), h.clone()).expect("same torus");
        let lam = Partition::new(vec![2, 1]).expect("valid shape");
        schur_super(&lam, &padded).k_class() == schur_super(&lam, e).k_class()
    }));

    let shapes: Vec<(usize, usize)> = (0..4).map(|_| {
        let even = r.gen_range(0..=3);
        let odd = r.gen_range(0..=3 - even);
        if even + odd == 0 { (1, 0) } else { (even, odd) }
    }).collect();
    checks.push(count("lie_dimensions", shapes.len(), |i| {
        let (even, odd) = shapes[i];
        let g = SuperChar::new(Character::constant(0, even as i64), Character::constant(0, odd as i64)).expect("no variables");
        let table = lie_table(&g, 4);
        (1..=4).all(|n| {
            let span = lie_bracket_span_oracle(n, even, odd, DEFAULT_WORD_BUDGET).expect("small");
            let witt_ok = odd > 0 || table.get(n).dim() == witt_dimension(n as u64, even as i64).into();
            witt_ok && table.get(n).dim() == span.into()
        })
    }));
    checks.push(count("filtration_vs_envelope", shapes.len(), |i| {
        let (even, odd) = shapes[i];
        let gens = GradedGenSet::standard(even, odd);
        (1..=4).all(|n| {
            let mut lhs = nc_filtration_by_content(&gens, n, DEFAULT_WORD_BUDGET).expect("small");
            lhs.retain(|_, v| v.iter().any(|&x| x > 0));
            lhs == poisson_envelope_by_content(&gens, n)
        })
    }));

    let data: Vec<_> = (0..10).map(|_| random_ncdg(&mut r)).collect();
    checks.push(count("q_squared_zero", data.len(), |i| check_q_squared(&data[i]).map(|v| v.ok).unwrap_or(false)));
    let mutants: Vec<_> = (0..3).map(|_| random_ncdg_mutant(&mut r)).collect();
    checks.push(count("q_squared_witness", mutants.len(), |i| check_q_squared(&mutants[i]).map(|v| !v.ok).unwrap_or(false)));

    let reps: Vec<_> = (0..50)
        .map(|_| {
            let a = random_presentation(&mut r);
            let quiver = build_quiver(&a).expect("associative");
            let rep = random_rep(&mut r, &quiver);
            (a, quiver, rep)
        })
        .collect();
    checks.push(count("relations_iff_mc", reps.len(), |i| {
        let (a, quiver, rep) = &reps[i];
        let rel = satisfies_relations(rep, quiver).expect("shapes");
        let mc = mc_residual(&rep.to_l_element(quiver), a, &rep.gamma).expect("shapes").is_zero();
        rel == mc
    }));

    let ok = checks.iter().all(|c| c.failures == 0);
    let mut table = format!("seed = {seed}\n");
    for c in &checks {
        table.push_str(&format!("{:<24} {:>3} cases  {}\n", c.name, c.cases, if c.failures == 0 { "ok".to_string() } else { format!("{} FAILED", c.failures) }));
    }
    let value = json!({
        "seed": seed,
        "checks": checks.iter().map(|c| json!({ "name": c.name, "cases": c.cases, "failures": c.failures })).collect::<Vec<_>>(),
        "ok": ok,
    });
    Outcome { value, table, exit: if ok { EXIT_OK } else { EXIT_MISMATCH } }
}
