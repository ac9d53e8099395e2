//! Torus characters and their λ-ring structure.
//!
//! A [`Character`] is a Laurent polynomial in t_1..t_k with integer
//! coefficients (the class of a T-equivariant vector space or complex on a
//! point). A [`SuperChar`] is a pair of characters for the even and odd parts
//! of a Z/2-graded object; symmetric powers, exterior powers and Schur
//! functors follow the Koszul sign rule.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{lr_splittings, Partition};

/// Default bound on |exponent| accepted at API boundaries.
pub const DEFAULT_EXPONENT_BUDGET: i64 = 64;

/// Exponent vector of a Laurent monomial. Ordered graded-lexicographically:
/// first by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial with integer coefficients in `nvars` torus variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Character {
    pub fn zero(nvars: usize) -> Self {
        Character { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Character::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Character::monomial(nvars, vec![0; nvars], c)
    }

    /// c · t^exps. Panics if `exps` has the wrong length.
    pub fn monomial(nvars: usize, exps: Vec<i32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let mut out = Character::zero(nvars);
        out.add_term(Monomial(exps), c.into());
        out
    }

    /// The variable t_i (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Character::monomial(nvars, e, 1)
    }

    /// Builds a character from (exponents, coefficient) pairs, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut out = Character::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Invalid(format!(
                    "exponent vector {e:?} has length {} but nvars = {nvars}",
                    e.len()
                )));
            }
            out.add_term(Monomial(e), c.into());
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default()
    }

    /// Value at t_i = 1 for all i (the virtual rank).
    pub fn rank(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|&e| (e as i64).abs()))
            .max()
            .unwrap_or(0)
    }

    /// Rejects characters carrying an exponent outside [-budget, budget].
    pub fn check_budget(&self, budget: i64) -> Result<()> {
        for m in self.terms.keys() {
            for (var, &e) in m.0.iter().enumerate() {
                if (e as i64).abs() > budget {
                    return Err(Error::ExponentBudget { var: var + 1, exponent: e as i64, budget });
                }
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigInt) -> Character {
        if c.is_zero() {
            return Character::zero(self.nvars);
        }
        Character {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Divides every coefficient by `d`, or `None` if some coefficient is not
    /// divisible.
    pub fn div_exact(&self, d: &BigInt) -> Option<Character> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(m.clone(), q);
        }
        Some(Character { nvars: self.nvars, terms })
    }

    /// Adams operation ψ^d: t_i ↦ t_i^d.
    pub fn adams(&self, d: u32) -> Character {
        assert!(d >= 1, "Adams operations are indexed by d >= 1");
        let d = d as i32;
        Character {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0.iter().map(|e| e * d).collect()), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Character {
        let mut out = Character::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes t_i ↦ t_i^{-1}.
    pub fn dual(&self) -> Character {
        Character {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (Monomial(m.0.iter().map(|e| -e).collect()), c.clone())).collect(),
        }
    }

    fn same_nvars(&self, other: &Character) {
        assert_eq!(self.nvars, other.nvars, "characters in different numbers of variables");
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| if e == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, e) })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&Character> for Character {
    fn add_assign(&mut self, rhs: &Character) {
        self.same_nvars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Character> for Character {
    fn sub_assign(&mut self, rhs: &Character) {
        self.same_nvars(rhs);
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        self.same_nvars(rhs);
        let mut out = Character::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Character {
            type Output = Character;
            fn $f(self, rhs: Character) -> Character {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Character> for Character {
            type Output = Character;
            fn $f(self, rhs: &Character) -> Character {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        -&self
    }
}

// ---------------------------------------------------------------------------
// λ-ring operations on ordinary characters

/// h_0..h_max of a (possibly virtual) character, from its Adams power sums by
/// Newton's identity k·h_k = Σ_{i=1}^k p_i h_{k-i}.
pub fn complete_series(a: &Character, max: usize) -> Vec<Character> {
    let ps: Vec<Character> = (1..=max).map(|d| a.adams(d as u32)).collect();
    complete_from_power_sums(a.nvars(), &ps)
}

/// h_0..h_n from power sums p_1..p_n.
pub fn complete_from_power_sums(nvars: usize, ps: &[Character]) -> Vec<Character> {
    let mut hs = vec![Character::one(nvars)];
    for k in 1..=ps.len() {
        let mut acc = Character::zero(nvars);
        for i in 1..=k {
            acc += &(&ps[i - 1] * &hs[k - i]);
        }
        let hk = acc
            .div_exact(&BigInt::from(k))
            .expect("Newton recursion over a λ-ring of characters stays integral");
        hs.push(hk);
    }
    hs
}

/// e_0..e_max by k·e_k = Σ_{i=1}^k (-1)^{i-1} p_i e_{k-i}.
pub fn elementary_series(a: &Character, max: usize) -> Vec<Character> {
    let nvars = a.nvars();
    let ps: Vec<Character> = (1..=max).map(|d| a.adams(d as u32)).collect();
    let mut es = vec![Character::one(nvars)];
    for k in 1..=max {
        let mut acc = Character::zero(nvars);
        for i in 1..=k {
            let term = &ps[i - 1] * &es[k - i];
            if i % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        es.push(acc.div_exact(&BigInt::from(k)).expect("Newton recursion stays integral"));
    }
    es
}

/// Jacobi–Trudi determinant det(h_{λ_i - i + j}) given h_0..h_N with N ≥ λ_1 + ℓ(λ).
pub fn schur_from_complete(lambda: &Partition, hs: &[Character]) -> Character {
    let nvars = hs[0].nvars();
    let l = lambda.len();
    if l == 0 {
        return Character::one(nvars);
    }
    let entry = |i: usize, j: usize| -> Option<&Character> {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            None
        } else {
            Some(&hs[k as usize])
        }
    };
    let mut memo: HashMap<u64, Character> = HashMap::new();
    fn minor<'a>(
        row: usize,
        used: u64,
        l: usize,
        nvars: usize,
        entry: &dyn Fn(usize, usize) -> Option<&'a Character>,
        memo: &mut HashMap<u64, Character>,
    ) -> Character {
        if row == l {
            return Character::one(nvars);
        }
        if let Some(c) = memo.get(&used) {
            return c.clone();
        }
        let mut acc = Character::zero(nvars);
        let mut sign_pos = true;
        for col in 0..l {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(e) = entry(row, col) {
                if !e.is_zero() {
                    let sub = minor(row + 1, used | (1 << col), l, nvars, entry, memo);
                    let term = e * &sub;
                    if sign_pos {
                        acc += &term;
                    } else {
                        acc -= &term;
                    }
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(used, acc.clone());
        acc
    }
    minor(0, 0, l, nvars, &entry, &mut memo)
}

/// s_λ evaluated on a (possibly virtual) character.
pub fn schur_char(lambda: &Partition, a: &Character) -> Character {
    let n = lambda.weight() as usize;
    schur_from_complete(lambda, &complete_series(a, n))
}

// ---------------------------------------------------------------------------
// Super characters

/// Character of a Z/2-graded object: (even part, odd part).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SuperCharRepr", into = "SuperCharRepr")]
pub struct SuperChar {
    pub even: Character,
    pub odd: Character,
}

impl SuperChar {
    pub fn new(even: Character, odd: Character) -> Result<Self> {
        if even.nvars() != odd.nvars() {
            return Err(Error::NvarsMismatch { left: even.nvars(), right: odd.nvars() });
        }
        Ok(SuperChar { even, odd })
    }

    pub fn zero(nvars: usize) -> Self {
        SuperChar { even: Character::zero(nvars), odd: Character::zero(nvars) }
    }

    pub fn one(nvars: usize) -> Self {
        SuperChar { even: Character::one(nvars), odd: Character::zero(nvars) }
    }

    pub fn even(a: Character) -> Self {
        let n = a.nvars();
        SuperChar { even: a, odd: Character::zero(n) }
    }

    pub fn odd(b: Character) -> Self {
        let n = b.nvars();
        SuperChar { even: Character::zero(n), odd: b }
    }

    pub fn nvars(&self) -> usize {
        self.even.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Parity shift: swaps the even and odd parts.
    pub fn shift(&self) -> SuperChar {
        SuperChar { even: self.odd.clone(), odd: self.even.clone() }
    }

    /// Euler-characteristic fold even − odd.
    pub fn k_class(&self) -> Character {
        &self.even - &self.odd
    }

    /// even + odd, the character forgetting parity.
    pub fn total(&self) -> Character {
        &self.even + &self.odd
    }

    /// (rank of even part, rank of odd part).
    pub fn ranks(&self) -> (BigInt, BigInt) {
        (self.even.rank(), self.odd.rank())
    }

    /// Total dimension (even rank + odd rank).
    pub fn dim(&self) -> BigInt {
        self.even.rank() + self.odd.rank()
    }

    pub fn check_budget(&self, budget: i64) -> Result<()> {
        self.even.check_budget(budget)?;
        self.odd.check_budget(budget)
    }

    pub fn pow(&self, k: u32) -> SuperChar {
        let mut out = SuperChar::one(self.nvars());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> SuperChar {
        SuperChar { even: self.even.scale(c), odd: self.odd.scale(c) }
    }

    /// Adds `c` with parity `odd`.
    fn add_with_parity(&mut self, c: &Character, odd: bool) {
        if odd {
            self.odd += c;
        } else {
            self.even += c;
        }
    }
}

impl Add for &SuperChar {
    type Output = SuperChar;
    fn add(self, rhs: &SuperChar) -> SuperChar {
        SuperChar { even: &self.even + &rhs.even, odd: &self.odd + &rhs.odd }
    }
}

impl Sub for &SuperChar {
    type Output = SuperChar;
    fn sub(self, rhs: &SuperChar) -> SuperChar {
        SuperChar { even: &self.even - &rhs.even, odd: &self.odd - &rhs.odd }
    }
}

impl Mul for &SuperChar {
    type Output = SuperChar;
    fn mul(self, rhs: &SuperChar) -> SuperChar {
        SuperChar {
            even: &(&self.even * &rhs.even) + &(&self.odd * &rhs.odd),
            odd: &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even),
        }
    }
}

impl AddAssign<&SuperChar> for SuperChar {
    fn add_assign(&mut self, rhs: &SuperChar) {
        self.even += &rhs.even;
        self.odd += &rhs.odd;
    }
}

impl fmt::Display for SuperChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(even: {}, odd: {})", self.even, self.odd)
    }
}

/// Super power sum ψ^d(even) − (−1)^d ψ^d(odd). Its exponential generating
/// series reproduces the parity-forgetting character of the super symmetric
/// algebra: exp(Σ p_d u^d / d) = Σ total(S^k V) u^k.
pub fn power_sum(d: u32, g: &SuperChar) -> Character {
    let odd = g.odd.adams(d);
    if d % 2 == 0 {
        &g.even.adams(d) - &odd
    } else {
        &g.even.adams(d) + &odd
    }
}

/// Super symmetric powers S^0..S^max of `g`:
/// S^k(V) = ⊕_{i+j=k} S^i(V_even) ⊗ Λ^j(V_odd), the summand of parity j.
pub fn sym_series(g: &SuperChar, max: usize) -> Vec<SuperChar> {
    let hs = complete_series(&g.even, max);
    let es = elementary_series(&g.odd, max);
    (0..=max)
        .map(|k| {
            let mut out = SuperChar::zero(g.nvars());
            for j in 0..=k {
                out.add_with_parity(&(&hs[k - j] * &es[j]), j % 2 == 1);
            }
            out
        })
        .collect()
}

/// Super exterior powers Λ^0..Λ^max: Λ^k(V) = ⊕_{i+j=k} Λ^i(V_even) ⊗ S^j(V_odd),
/// the summand of parity j.
pub fn ext_series(g: &SuperChar, max: usize) -> Vec<SuperChar> {
    let es = elementary_series(&g.even, max);
    let hs = complete_series(&g.odd, max);
    (0..=max)
        .map(|k| {
            let mut out = SuperChar::zero(g.nvars());
            for j in 0..=k {
                out.add_with_parity(&(&es[k - j] * &hs[j]), j % 2 == 1);
            }
            out
        })
        .collect()
}

pub fn sym_power(k: usize, g: &SuperChar) -> SuperChar {
    sym_series(g, k).pop().expect("series has k+1 entries")
}

pub fn ext_power(k: usize, g: &SuperChar) -> SuperChar {
    ext_series(g, k).pop().expect("series has k+1 entries")
}

/// Super character of the Schur functor S_λ applied to a Z/2-graded object:
/// Σ N^λ_{μν} s_μ(even) · s_{ν'}(odd), the (μ, ν) summand having parity |ν|.
pub fn schur_super(lambda: &Partition, g: &SuperChar) -> SuperChar {
    let n = lambda.weight() as usize;
    let h_even = complete_series(&g.even, n);
    let h_odd = complete_series(&g.odd, n);
    let mut out = SuperChar::zero(g.nvars());
    let mut cache_even: HashMap<Partition, Character> = HashMap::new();
    let mut cache_odd: HashMap<Partition, Character> = HashMap::new();
    for (mu, nu, c) in lr_splittings(lambda) {
        let s_mu = cache_even.entry(mu.clone()).or_insert_with(|| schur_from_complete(&mu, &h_even)).clone();
        if s_mu.is_zero() {
            continue;
        }
        let nu_t = nu.conjugate();
        let s_nu = cache_odd.entry(nu_t.clone()).or_insert_with(|| schur_from_complete(&nu_t, &h_odd)).clone();
        if s_nu.is_zero() {
            continue;
        }
        let term = (&s_mu * &s_nu).scale(&BigInt::from(c));
        out.add_with_parity(&term, nu.weight() % 2 == 1);
    }
    out
}

/// Euler-characteristic fold of a super character.
pub fn k_class(g: &SuperChar) -> Character {
    g.k_class()
}

// ---------------------------------------------------------------------------
// Graded classes and rational characters

/// A class recorded by cohomological degree; folds to a [`SuperChar`] by parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    nvars: usize,
    components: BTreeMap<i64, Character>,
}

impl GradedClass {
    pub fn new(nvars: usize) -> Self {
        GradedClass { nvars, components: BTreeMap::new() }
    }

    pub fn with_component(mut self, degree: i64, c: Character) -> Result<Self> {
        if c.nvars() != self.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: c.nvars() });
        }
        let slot = self.components.entry(degree).or_insert_with(|| Character::zero(c.nvars()));
        *slot += &c;
        Ok(self)
    }

    pub fn components(&self) -> impl Iterator<Item = (i64, &Character)> {
        self.components.iter().map(|(d, c)| (*d, c))
    }

    pub fn fold_to_super(&self) -> SuperChar {
        let mut out = SuperChar::zero(self.nvars);
        for (d, c) in &self.components {
            out.add_with_parity(c, d.rem_euclid(2) == 1);
        }
        out
    }
}

/// numerator / denominator, compared by cross-multiplication.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RationalRepr", into = "RationalRepr")]
pub struct RationalCharacter {
    num: Character,
    den: Character,
}

impl RationalCharacter {
    pub fn new(num: Character, den: Character) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::NvarsMismatch { left: num.nvars(), right: den.nvars() });
        }
        Ok(RationalCharacter { num, den })
    }

    pub fn from_character(c: Character) -> Self {
        let n = c.nvars();
        RationalCharacter { num: c, den: Character::one(n) }
    }

    pub fn numerator(&self) -> &Character {
        &self.num
    }

    pub fn denominator(&self) -> &Character {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    /// (num · c) / den.
    pub fn mul_character(&self, c: &Character) -> RationalCharacter {
        RationalCharacter { num: &self.num * c, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RationalCharacter) -> RationalCharacter {
        RationalCharacter { num: &self.num * &other.num, den: &self.den * &other.den }
    }

    /// The value as a Laurent polynomial when the denominator is ±1 times a
    /// monomial and divides exactly.
    pub fn as_character(&self) -> Option<Character> {
        if self.den.num_terms() != 1 {
            return None;
        }
        let (m, c) = self.den.terms().next()?;
        let inv_m = Character::monomial(self.nvars(), m.0.iter().map(|e| -e).collect(), 1);
        (&self.num * &inv_m).div_exact(c)
    }
}

/// Multiplies a rational character by a character.
pub fn rational_mul(r: &RationalCharacter, c: &Character) -> RationalCharacter {
    r.mul_character(c)
}

impl PartialEq for RationalCharacter {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalCharacter {}

impl fmt::Display for RationalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Character::one(self.den.nvars()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// JSON representations

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    nvars: usize,
    terms: Vec<(Vec<i32>, CoeffRepr)>,
}

impl Serialize for Character {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let coeff = match c.to_i64() {
                    Some(v) => CoeffRepr::Small(v),
                    None => CoeffRepr::Big(c.to_string()),
                };
                (m.0.clone(), coeff)
            })
            .collect();
        CharacterRepr { nvars: self.nvars, terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CharacterRepr::deserialize(d)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (e, c) in repr.terms {
            let c = match c {
                CoeffRepr::Small(v) => BigInt::from(v),
                CoeffRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom)?,
            };
            terms.push((e, c));
        }
        let ch = Character::from_terms(repr.nvars, terms).map_err(serde::de::Error::custom)?;
        ch.check_budget(DEFAULT_EXPONENT_BUDGET).map_err(serde::de::Error::custom)?;
        Ok(ch)
    }
}

#[derive(Serialize, Deserialize)]
struct SuperCharRepr {
    even: Character,
    odd: Character,
}

impl TryFrom<SuperCharRepr> for SuperChar {
    type Error = Error;
    fn try_from(r: SuperCharRepr) -> Result<Self> {
        SuperChar::new(r.even, r.odd)
    }
}

impl From<SuperChar> for SuperCharRepr {
    fn from(g: SuperChar) -> Self {
        SuperCharRepr { even: g.even, odd: g.odd }
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: Character,
    den: Character,
}

impl TryFrom<RationalRepr> for RationalCharacter {
    type Error = Error;
    fn try_from(r: RationalRepr) -> Result<Self> {
        RationalCharacter::new(r.num, r.den)
    }
}

impl From<RationalCharacter> for RationalRepr {
    fn from(r: RationalCharacter) -> Self {
        RationalRepr { num: r.num, den: r.den }
    }
}
