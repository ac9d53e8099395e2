//! Characters of the free Lie superalgebra on a super vector space.
//!
//! Lie_n is extracted from the PBW factorization
//! Σ g^n t^n = Π_m σ_{t^m}(Lie_m): at order n every factor except Lie_n
//! is already known, and Lie_n enters the product linearly.

use std::collections::BTreeMap;

use crate::charring::{sym_series, SuperChar};
use crate::error::Result;
use crate::freealg::{block_vector, check_word_budget, content_blocks, left_normed_bracket};
use crate::linalg::Echelon;

/// Super characters of Lie_1 .. Lie_max_n for a fixed generator character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCharTable {
    g: SuperChar,
    table: Vec<SuperChar>,
}

impl LieCharTable {
    pub fn generator(&self) -> &SuperChar {
        &self.g
    }

    pub fn max_n(&self) -> usize {
        self.table.len()
    }

    /// Character of Lie_n, 1 ≤ n ≤ max_n.
    pub fn get(&self, n: usize) -> &SuperChar {
        assert!(n >= 1 && n <= self.table.len(), "Lie_{n} outside table 1..={}", self.table.len());
        &self.table[n - 1]
    }

    /// Coefficients of Π_m σ_{t^m}(Lie_m) through t^{max_n}.
    pub fn pbw_series(&self) -> Vec<SuperChar> {
        let k = self.g.nvars();
        let max = self.table.len();
        let mut prod = vec![SuperChar::zero(k); max + 1];
        prod[0] = SuperChar::one(k);
        for m in 1..=max {
            multiply_sigma(&mut prod, &self.table[m - 1], m);
        }
        prod
    }
}

/// prod ← prod · σ_{t^m}(piece), truncated at the length of `prod`.
pub(crate) fn multiply_sigma(prod: &mut [SuperChar], piece: &SuperChar, m: usize) {
    if piece.is_zero() {
        return;
    }
    let max = prod.len() - 1;
    let sigma = sym_series(piece, max / m);
    for n in (0..=max).rev() {
        let mut acc = prod[n].clone();
        for (j, s) in sigma.iter().enumerate().skip(1) {
            if j * m > n {
                break;
            }
            if !s.is_zero() && !prod[n - j * m].is_zero() {
                acc += &(&prod[n - j * m] * s);
            }
        }
        prod[n] = acc;
    }
}

/// Lie_1 .. Lie_max_n by PBW recursion.
pub fn lie_table(g: &SuperChar, max_n: usize) -> LieCharTable {
    let k = g.nvars();
    let mut prod = vec![SuperChar::zero(k); max_n + 1];
    prod[0] = SuperChar::one(k);
    let mut power = SuperChar::one(k);
    let mut table = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        power = &power * g;
        // The order-n coefficient of Π_{m<n} σ(Lie_m) is final at this point;
        // the factor σ_{t^n}(Lie_n) adds exactly Lie_n there.
        let lie = &power - &prod[n];
        multiply_sigma(&mut prod, &lie, n);
        table.push(lie);
    }
    LieCharTable { g: g.clone(), table }
}

/// Super character of Lie_n(W) for W with character `g`.
pub fn lie_char(n: usize, g: &SuperChar) -> SuperChar {
    assert!(n >= 1, "Lie_n needs n ≥ 1");
    lie_table(g, n).get(n).clone()
}

/// Dimension of the span of left-normed super brackets of n basis
/// generators, by exact rank. Even generators come first and have degree 0,
/// odd ones degree −1.
pub fn lie_bracket_span_oracle(n: usize, even_dim: usize, odd_dim: usize, budget: u128) -> Result<usize> {
    assert!(n >= 1, "bracket length must be positive");
    let k = even_dim + odd_dim;
    check_word_budget(k, n, budget)?;
    let degrees: Vec<i64> = (0..k).map(|i| if i < even_dim { 0 } else { -1 }).collect();
    let mut total = 0;
    for words in content_blocks(k, n).into_values() {
        let index: BTreeMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let mut e = Echelon::new(words.len());
        for w in &words {
            let parts: Vec<&[usize]> = w.chunks(1).collect();
            let x = left_normed_bracket(&parts, &degrees);
            if !x.is_zero() {
                e.insert(block_vector(&x, &index, words.len()));
            }
        }
        total += e.rank();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::{ext_power, Character};
    use crate::freealg::DEFAULT_WORD_BUDGET;
    use num_bigint::BigInt;

    fn dims(g: &SuperChar, n: usize) -> Vec<BigInt> {
        let t = lie_table(g, n);
        (1..=n).map(|i| t.get(i).dim()).collect()
    }

    #[test]
    fn two_even_generators() {
        let g = SuperChar::even(Character::constant(0, 2));
        let want: Vec<BigInt> = [2, 1, 2, 3, 6].iter().map(|&x| x.into()).collect();
        assert_eq!(dims(&g, 5), want);
    }

    #[test]
    fn one_even_generator_is_abelian() {
        let g = SuperChar::even(Character::one(0));
        let d = dims(&g, 6);
        assert_eq!(d[0], 1.into());
        assert!(d[1..].iter().all(|x| *x == 0.into()));
    }

    #[test]
    fn one_odd_generator() {
        let x = Character::var(1, 0);
        let g = SuperChar::odd(x.clone());
        let t = lie_table(&g, 5);
        assert_eq!(t.get(2), &SuperChar::even(x.pow(2)));
        for n in 3..=5 {
            assert!(t.get(n).is_zero());
        }
    }

    #[test]
    fn lie_two_is_exterior_square() {
        let g = SuperChar::new(
            &Character::var(2, 0) + &Character::var(2, 1),
            Character::monomial(2, vec![1, -1], 1),
        )
        .unwrap();
        assert_eq!(lie_char(2, &g), ext_power(2, &g));
    }

    #[test]
    fn pbw_series_rebuilds_tensor_powers() {
        let g = SuperChar::new(Character::var(2, 0), Character::var(2, 1)).unwrap();
        let t = lie_table(&g, 5);
        let series = t.pbw_series();
        for (n, s) in series.iter().enumerate() {
            assert_eq!(s, &g.pow(n as u32));
        }
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(lie_bracket_span_oracle(1, 2, 1, DEFAULT_WORD_BUDGET).unwrap(), 3);
        assert_eq!(lie_bracket_span_oracle(2, 2, 0, DEFAULT_WORD_BUDGET).unwrap(), 1);
        assert_eq!(lie_bracket_span_oracle(3, 2, 0, DEFAULT_WORD_BUDGET).unwrap(), 2);
        assert_eq!(lie_bracket_span_oracle(2, 0, 1, DEFAULT_WORD_BUDGET).unwrap(), 1);
        assert_eq!(lie_bracket_span_oracle(3, 0, 1, DEFAULT_WORD_BUDGET).unwrap(), 0);
        assert!(lie_bracket_span_oracle(20, 2, 0, DEFAULT_WORD_BUDGET).unwrap_err().is_budget());
    }
}
