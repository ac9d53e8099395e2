//! Seeded generators for property suites. Everything draws from a
//! ChaCha8 stream so a seed reproduces a run exactly.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::charring::{Character, SuperChar};
use crate::freealg::{FreeAlgebraElement, GradedGenSet};
use crate::ncdgq::{NcdgData, RMatrix};
use crate::quiver::{module_rep, BasisElt, GradedAlgebraPresentation, Matrix, Quiver, Rep};
use crate::Rational;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Character of an honest representation: `rank` monomials with exponents
/// in [−max_exp, max_exp], each with coefficient one.
pub fn random_rep_character(rng: &mut SeededRng, nvars: usize, rank: usize, max_exp: i32) -> Character {
    let mut out = Character::zero(nvars);
    for _ in 0..rank {
        let e: Vec<i32> = (0..nvars).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
        out += &Character::monomial(nvars, e, 1);
    }
    out
}

/// Random super character with nvars ≤ 3, each part of rank ≤ 4 and
/// exponents in [−3, 3].
pub fn random_superchar(rng: &mut SeededRng) -> SuperChar {
    let nvars = rng.gen_range(0..=3);
    random_superchar_in(rng, nvars, 4, 3)
}

pub fn random_superchar_in(rng: &mut SeededRng, nvars: usize, max_rank: usize, max_exp: i32) -> SuperChar {
    let a = rng.gen_range(0..=max_rank);
    let b = rng.gen_range(0..=max_rank);
    SuperChar::new(random_rep_character(rng, nvars, a, max_exp), random_rep_character(rng, nvars, b, max_exp)).expect("same nvars")
}

/// Random virtual character: up to `terms` monomials with coefficients in
/// [−3, 3].
pub fn random_character(rng: &mut SeededRng, nvars: usize, terms: usize, max_exp: i32) -> Character {
    let mut out = Character::zero(nvars);
    for _ in 0..rng.gen_range(0..=terms) {
        let e: Vec<i32> = (0..nvars).map(|_| rng.gen_range(-max_exp..=max_exp)).collect();
        out += &Character::monomial(nvars, e, rng.gen_range(-3i64..=3));
    }
    out
}

/// Random element of the free algebra on `letters` letters: up to two words
/// of length ≤ 2 with small coefficients, never zero.
pub fn random_r_element(rng: &mut SeededRng, letters: usize) -> FreeAlgebraElement {
    loop {
        let mut out = FreeAlgebraElement::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let len = rng.gen_range(0..=2);
            let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..letters)).collect();
            let c = *[-2i64, -1, 1, 2].choose(rng).expect("nonempty");
            out.add_term(w, q(c));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

fn nonzero(rng: &mut SeededRng) -> Rational {
    q(*[-2i64, -1, 1, 2, 3].choose(rng).expect("nonempty"))
}

/// P degrees: 0, a top degree in 3..=4 and one more anywhere in between.
fn random_p_basis(rng: &mut SeededRng) -> Vec<(String, i64)> {
    let top = rng.gen_range(3..=4);
    let mid = rng.gen_range(0..=top);
    vec![("u0".into(), 0), ("u1".into(), mid), ("u2".into(), top)]
}

fn random_e_hat(rng: &mut SeededRng, m_basis: &[(String, usize)], p_basis: &[(String, i64)], letters: usize) -> Vec<RMatrix> {
    m_basis
        .iter()
        .map(|(_, w)| {
            let mut m = RMatrix::new();
            for (i, (_, di)) in p_basis.iter().enumerate() {
                for (j, (_, dj)) in p_basis.iter().enumerate() {
                    if *di == dj + *w as i64 && rng.gen_bool(0.8) {
                        m.insert((i, j), random_r_element(rng, letters));
                    }
                }
            }
            m
        })
        .collect()
}

/// Random NCDG data with associative ϑ, at most three m-basis elements and
/// three P-basis elements. R is free on two letters.
pub fn random_ncdg(rng: &mut SeededRng) -> NcdgData {
    let r_gens = GradedGenSet::new(vec![("r1".into(), 0), ("r2".into(), 0)]).expect("distinct");
    let (m_basis, theta) = match rng.gen_range(0..3) {
        0 => {
            // a, b, c of weights 1, 2, 3: a·a = αb, a·b = βc, b·a = γc
            let alpha = if rng.gen_bool(0.8) { nonzero(rng) } else { q(0) };
            let beta = nonzero(rng);
            let gamma = if alpha == q(0) { nonzero(rng) } else { beta.clone() };
            let m = vec![("a".to_string(), 1), ("b".to_string(), 2), ("c".to_string(), 3)];
            let t = BTreeMap::from([((0, 0), vec![(1, alpha)]), ((0, 1), vec![(2, beta)]), ((1, 0), vec![(2, gamma)])]);
            (m, t)
        }
        1 => {
            // a1, a2 of weight 1 multiplying into b of weight 2
            let m = vec![("a1".to_string(), 1), ("a2".to_string(), 1), ("b".to_string(), 2)];
            let mut t = BTreeMap::new();
            for i in 0..2 {
                for j in 0..2 {
                    t.insert((i, j), vec![(2, q(rng.gen_range(-2..=2)))]);
                }
            }
            (m, t)
        }
        _ => {
            // a of weight 1 squaring into span(b1, b2)
            let m = vec![("a".to_string(), 1), ("b1".to_string(), 2), ("b2".to_string(), 2)];
            let t = BTreeMap::from([((0, 0), vec![(1, q(rng.gen_range(-2..=2))), (2, q(rng.gen_range(-2..=2)))])]);
            (m, t)
        }
    };
    let p_basis = random_p_basis(rng);
    let e_hat = random_e_hat(rng, &m_basis, &p_basis, 2);
    NcdgData::new(r_gens, m_basis, theta, p_basis, e_hat, 4).expect("generated data is valid")
}

/// NCDG data whose ϑ fails associativity on (a, a, a): a·a = αb, a·b = βc,
/// b·a = γc with α ≠ 0 and β ≠ γ, and ê(c) nonzero across a gap of three.
pub fn random_ncdg_mutant(rng: &mut SeededRng) -> NcdgData {
    let r_gens = GradedGenSet::new(vec![("r1".into(), 0), ("r2".into(), 0)]).expect("distinct");
    let alpha = nonzero(rng);
    let beta = nonzero(rng);
    let mut gamma = nonzero(rng);
    while gamma == beta {
        gamma = nonzero(rng);
    }
    let m_basis = vec![("a".to_string(), 1), ("b".to_string(), 2), ("c".to_string(), 3)];
    let theta = BTreeMap::from([((0, 0), vec![(1, alpha)]), ((0, 1), vec![(2, beta)]), ((1, 0), vec![(2, gamma)])]);
    let mid = rng.gen_range(0..=3);
    let p_basis = vec![("u0".to_string(), 0), ("u1".to_string(), mid), ("u2".to_string(), 3)];
    let mut e_hat = random_e_hat(rng, &m_basis, &p_basis, 2);
    e_hat[2].insert((2, 0), random_r_element(rng, 2));
    NcdgData::new(r_gens, m_basis, theta, p_basis, e_hat, 4).expect("generated data is valid")
}

/// Random associative presentation with q − p ≤ 3 and every dim m_k ≤ 3.
pub fn random_presentation(rng: &mut SeededRng) -> GradedAlgebraPresentation {
    let p = rng.gen_range(0..=2);
    let top = rng.gen_range(1..=3);
    let mut theta: BTreeMap<(BasisElt, BasisElt), Vec<(usize, Rational)>> = BTreeMap::new();
    let dims = match top {
        1 => vec![rng.gen_range(1..=3)],
        2 => {
            let d1 = rng.gen_range(1..=3);
            let d2 = rng.gen_range(1..=3);
            for i in 0..d1 {
                for j in 0..d1 {
                    let comb: Vec<(usize, Rational)> = (0..d2).map(|c| (c, q(rng.gen_range(-2..=2)))).collect();
                    theta.insert(((1, i), (1, j)), comb);
                }
            }
            vec![d1, d2]
        }
        _ => {
            // m₁ ⊗ m₁ → m₂ by u_i u_j, m₁ ⊗ m₂ and m₂ ⊗ m₁ → m₃ by λ u_i
            let d1 = rng.gen_range(1..=3);
            let u: Vec<i64> = (0..d1).map(|_| rng.gen_range(-2..=2)).collect();
            let lambda = rng.gen_range(-2..=2);
            for i in 0..d1 {
                for j in 0..d1 {
                    theta.insert(((1, i), (1, j)), vec![(0, q(u[i] * u[j]))]);
                }
                theta.insert(((1, i), (2, 0)), vec![(0, q(lambda * u[i]))]);
                theta.insert(((2, 0), (1, i)), vec![(0, q(lambda * u[i]))]);
            }
            vec![d1, 1, 1]
        }
    };
    GradedAlgebraPresentation::new(p, p + top, dims, None, theta).expect("generated presentation is valid")
}

/// Random representation with dimensions ≤ 2 and entries in [−1, 1].
pub fn random_rep(rng: &mut SeededRng, quiver: &Quiver) -> Rep {
    let gamma: Vec<usize> = (0..quiver.num_vertices()).map(|_| rng.gen_range(0..=2)).collect();
    random_rep_with(rng, quiver, gamma)
}

pub fn random_rep_with(rng: &mut SeededRng, quiver: &Quiver, gamma: Vec<usize>) -> Rep {
    let p = *quiver.vertices().start();
    let matrices = quiver
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (gamma[a.head - p], gamma[a.tail - p]);
            let mut m = Matrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m.set(i, j, q(rng.gen_range(-1..=1)));
                }
            }
            m
        })
        .collect();
    Rep::new(quiver, gamma, matrices).expect("shapes follow gamma")
}

/// A module representation (see [`module_rep`]) with a random shift, with
/// one matrix entry perturbed when `perturb` is set and some entry exists.
pub fn random_module_rep(rng: &mut SeededRng, a: &GradedAlgebraPresentation, quiver: &Quiver, perturb: bool) -> Rep {
    let shift = rng.gen_range(0..=1);
    let mut rep = module_rep(a, quiver, shift);
    if perturb {
        let slots: Vec<(usize, usize, usize)> = rep
            .matrices
            .iter()
            .enumerate()
            .flat_map(|(k, m)| {
                let (r, c) = m.shape();
                (0..r).flat_map(move |i| (0..c).map(move |j| (k, i, j)))
            })
            .collect();
        if let Some(&(k, i, j)) = slots.choose(rng) {
            let v = rep.matrices[k].get(i, j) + q(1);
            rep.matrices[k].set(i, j, v);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_quiver;

    #[test]
    fn seeds_reproduce() {
        let a: Vec<SuperChar> = (0..5).map({
            let mut r = rng(7);
            move |_| random_superchar(&mut r)
        }).collect();
        let b: Vec<SuperChar> = (0..5).map({
            let mut r = rng(7);
            move |_| random_superchar(&mut r)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn generated_structures_are_well_formed() {
        let mut r = rng(1);
        for _ in 0..20 {
            assert!(random_ncdg(&mut r).is_associative());
            assert!(!random_ncdg_mutant(&mut r).is_associative());
            let a = random_presentation(&mut r);
            assert!(a.associativity_defect().is_none());
            build_quiver(&a).unwrap();
        }
    }
}
