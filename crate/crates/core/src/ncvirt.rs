//! The d-th NC virtual structure sheaf class O^vir ⊗ [S L⁺(E)^{≤d}].
//!
//! L⁺(E) = ⊕_{j≥1} Lie_{j+1}(E) with Lie_{j+1} placed in |^•-degree j. Its
//! super symmetric algebra is expanded in an auxiliary variable u that
//! records that degree, then truncated at u^d and folded to K-theory.

use serde::{Deserialize, Serialize};

use crate::charring::{Character, GradedClass, RationalCharacter, SuperChar};
use crate::error::{Error, Result};
use crate::freelie::{lie_table, multiply_sigma};

/// Character data of a perfect obstruction theory: the class of E (even part
/// in degree 0, odd part in degree −1) and the input class O^vir.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ObstructionRepr", into = "ObstructionRepr")]
pub struct ObstructionTheory {
    pub e: SuperChar,
    pub ovir: RationalCharacter,
}

#[derive(Serialize, Deserialize)]
struct ObstructionRepr {
    e: SuperChar,
    ovir: RationalCharacter,
}

impl TryFrom<ObstructionRepr> for ObstructionTheory {
    type Error = Error;
    fn try_from(r: ObstructionRepr) -> Result<Self> {
        ObstructionTheory::new(r.e, r.ovir)
    }
}

impl From<ObstructionTheory> for ObstructionRepr {
    fn from(o: ObstructionTheory) -> Self {
        ObstructionRepr { e: o.e, ovir: o.ovir }
    }
}

impl ObstructionTheory {
    pub fn new(e: SuperChar, ovir: RationalCharacter) -> Result<Self> {
        if e.nvars() != ovir.nvars() {
            return Err(Error::NvarsMismatch { left: e.nvars(), right: ovir.nvars() });
        }
        Ok(ObstructionTheory { e, ovir })
    }

    /// rank(even) − rank(odd).
    pub fn virtual_rank(&self) -> num_bigint::BigInt {
        let (a, b) = self.e.ranks();
        a - b
    }
}

/// u-coefficients 0..=d of Π_{j≥1} σ_{u^j}(Lie_{j+1}(e)), as super characters.
pub fn s_l_plus_series(e: &SuperChar, d: usize) -> Vec<SuperChar> {
    let k = e.nvars();
    let mut prod = vec![SuperChar::zero(k); d + 1];
    prod[0] = SuperChar::one(k);
    if d == 0 {
        return prod;
    }
    let lie = lie_table(e, d + 1);
    for j in 1..=d {
        multiply_sigma(&mut prod, lie.get(j + 1), j);
    }
    prod
}

/// [S L⁺(E)^{≤d}] in K-theory.
pub fn s_l_plus_truncated(e: &SuperChar, d: usize) -> Character {
    let mut out = Character::zero(e.nvars());
    for piece in s_l_plus_series(e, d) {
        out += &piece.k_class();
    }
    out
}

/// Same as [`s_l_plus_truncated`] for a class given with its degrees.
pub fn s_l_plus_truncated_graded(e: &GradedClass, d: usize) -> Character {
    s_l_plus_truncated(&e.fold_to_super(), d)
}

/// (O^ncvir)^{≤d} = O^vir · [S L⁺(E)^{≤d}].
pub fn ncvir_class(ot: &ObstructionTheory, d: usize) -> RationalCharacter {
    ot.ovir.mul_character(&s_l_plus_truncated(&ot.e, d))
}

/// "O^vir * (bracket)" with the two factors printed separately.
pub fn factored_form(ot: &ObstructionTheory, d: usize) -> String {
    format!("[{}] * [{}]", ot.ovir, s_l_plus_truncated(&ot.e, d))
}

/// Which character the C³ example uses for the odd part of E.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C3Odd {
    /// t₁ + t₂ + t₃, the tangent weights.
    Tangent,
    /// Σ_{i<j} t_i⁻¹ t_j⁻¹, the weights of Λ²Ω.
    WedgeCotangent,
}

/// The equivariant obstruction theory at the origin of C³ with torus weights
/// t₁, t₂, t₃: even part Σ t_i⁻¹, odd part chosen by `odd`, and
/// O^vir = Π_{i<j}(1 − t_i⁻¹t_j⁻¹) / Π_i(1 − t_i⁻¹).
pub fn c3_obstruction_theory(odd: C3Odd) -> ObstructionTheory {
    let one = Character::one(3);
    let inv = |i: usize| {
        let mut e = vec![0; 3];
        e[i] = -1;
        Character::monomial(3, e, 1)
    };
    let inv_pair = |i: usize, j: usize| &inv(i) * &inv(j);
    let even = &(&inv(0) + &inv(1)) + &inv(2);
    let odd_char = match odd {
        C3Odd::Tangent => &(&Character::var(3, 0) + &Character::var(3, 1)) + &Character::var(3, 2),
        C3Odd::WedgeCotangent => &(&inv_pair(0, 1) + &inv_pair(0, 2)) + &inv_pair(1, 2),
    };
    let mut num = one.clone();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        num = &num * &(&one - &inv_pair(i, j));
    }
    let mut den = one.clone();
    for i in 0..3 {
        den = &den * &(&one - &inv(i));
    }
    let e = SuperChar::new(even, odd_char).expect("same torus");
    ObstructionTheory::new(e, RationalCharacter::new(num, den).expect("nonzero denominator")).expect("same torus")
}
