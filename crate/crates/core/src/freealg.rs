//! Truncated free algebras on graded generators.
//!
//! Words are sequences of generator indices; coefficients are exact
//! rationals. The NC filtration F^d of T(W) is computed slice by slice: the
//! tensor-degree-n piece splits into content blocks (fixed multiset of
//! letters), every product of iterated commutators preserves content, and
//! each block is small enough for dense row reduction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::charring::{sym_series, Character, SuperChar};
use crate::error::{Error, Result};
use crate::freelie::lie_table;
use crate::linalg::Echelon;
use crate::Rational;

/// Default cap on the number of basis words in a tensor-degree slice.
pub const DEFAULT_WORD_BUDGET: u128 = 100_000;

/// Generators with their |.|-degrees. Parity is the degree mod 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GenSetRepr", into = "GenSetRepr")]
pub struct GradedGenSet {
    generators: Vec<(String, i64)>,
}

#[derive(Serialize, Deserialize)]
struct GenSetRepr {
    generators: Vec<(String, i64)>,
}

impl TryFrom<GenSetRepr> for GradedGenSet {
    type Error = Error;
    fn try_from(r: GenSetRepr) -> Result<Self> {
        GradedGenSet::new(r.generators)
    }
}

impl From<GradedGenSet> for GenSetRepr {
    fn from(g: GradedGenSet) -> Self {
        GenSetRepr { generators: g.generators }
    }
}

impl GradedGenSet {
    pub fn new(generators: Vec<(String, i64)>) -> Result<Self> {
        for (i, (a, _)) in generators.iter().enumerate() {
            if generators[..i].iter().any(|(b, _)| a == b) {
                return Err(Error::Invalid(format!("duplicate generator name {a:?}")));
            }
        }
        Ok(GradedGenSet { generators })
    }

    /// `even` generators of degree 0 followed by `odd` generators of degree -1.
    pub fn standard(even: usize, odd: usize) -> Self {
        let mut generators: Vec<(String, i64)> = (0..even).map(|i| (format!("x{}", i + 1), 0)).collect();
        generators.extend((0..odd).map(|i| (format!("y{}", i + 1), -1)));
        GradedGenSet { generators }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|(_, d)| *d).collect()
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// Super character with one torus variable per generator, so that
    /// exponent vectors record letter content.
    pub fn content_character(&self) -> SuperChar {
        let k = self.len();
        let mut g = SuperChar::zero(k);
        for (i, (_, d)) in self.generators.iter().enumerate() {
            let v = Character::var(k, i);
            if d.rem_euclid(2) == 1 {
                g.odd += &v;
            } else {
                g.even += &v;
            }
        }
        g
    }
}

/// A rational linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeAlgebraElement {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl FreeAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Vec<usize>) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn letter(i: usize) -> Self {
        Self::word(vec![i])
    }

    pub fn term(w: Vec<usize>, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, Rational)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[usize]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeAlgebraElement { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// The |.|-degree if every word has the same degree. The zero element is
    /// homogeneous of every degree and reports `Some(0)`.
    pub fn degree(&self, degrees: &[i64]) -> Option<i64> {
        let mut it = self.terms.keys().map(|w| word_degree(w, degrees));
        let Some(first) = it.next() else { return Some(0) };
        it.all(|d| d == first).then_some(first)
    }

    /// Applies a letter-wise substitution, extended multiplicatively.
    pub fn substitute(&self, f: &dyn Fn(usize) -> FreeAlgebraElement) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::one();
            for &l in w {
                acc = acc.mul(&f(l));
                if acc.is_zero() {
                    break;
                }
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Maximum word length.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Human-readable form with letters named by `names`.
    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let word: Vec<String> = w.iter().map(|&l| names(l)).collect();
            if w.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&format!("{abs}*"));
                }
                s.push_str(&word.join("*"));
            }
        }
        s
    }
}

impl fmt::Debug for FreeAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|l| format!("g{l}")))
    }
}

impl Serialize for FreeAlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Vec<usize>, String)> = self.terms.iter().map(|(w, c)| (w, c.to_string())).collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeAlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms: Vec<(Vec<usize>, String)> = Vec::deserialize(d)?;
        let mut out = FreeAlgebraElement::zero();
        for (w, c) in terms {
            let c = crate::parse_rational(&c).map_err(serde::de::Error::custom)?;
            out.add_term(w, c);
        }
        Ok(out)
    }
}

pub fn word_degree(w: &[usize], degrees: &[i64]) -> i64 {
    w.iter().map(|&l| degrees[l]).sum()
}

/// xy − (−1)^{|x||y|} yx for homogeneous x, y.
pub fn super_commutator(x: &FreeAlgebraElement, y: &FreeAlgebraElement, degrees: &[i64]) -> Result<FreeAlgebraElement> {
    let dx = x.degree(degrees).ok_or(Error::Inhomogeneous)?;
    let dy = y.degree(degrees).ok_or(Error::Inhomogeneous)?;
    Ok(commutator_with_sign(x, y, (dx * dy).rem_euclid(2) == 1))
}

fn commutator_with_sign(x: &FreeAlgebraElement, y: &FreeAlgebraElement, odd_pair: bool) -> FreeAlgebraElement {
    let xy = x.mul(y);
    let yx = y.mul(x);
    if odd_pair {
        xy.add(&yx)
    } else {
        xy.sub(&yx)
    }
}

/// Left-normed bracket [w_1, [w_2, ..., [w_{k-1}, w_k]...]] of words.
pub fn left_normed_bracket(words: &[&[usize]], degrees: &[i64]) -> FreeAlgebraElement {
    let (last, rest) = words.split_last().expect("bracket of at least one word");
    let mut acc = FreeAlgebraElement::word(last.to_vec());
    let mut acc_deg = word_degree(last, degrees);
    for w in rest.iter().rev() {
        let d = word_degree(w, degrees);
        acc = commutator_with_sign(&FreeAlgebraElement::word(w.to_vec()), &acc, (d * acc_deg).rem_euclid(2) == 1);
        acc_deg += d;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Content blocks

/// All words of length n with letters below `k`, grouped by content
/// (letter multiplicities).
pub(crate) fn content_blocks(k: usize, n: usize) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let mut blocks: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    if k == 0 {
        if n == 0 {
            blocks.insert(Vec::new(), vec![Vec::new()]);
        }
        return blocks;
    }
    let total = k.pow(n as u32);
    for idx in 0..total {
        let mut w = Vec::with_capacity(n);
        let mut r = idx;
        for _ in 0..n {
            w.push(r % k);
            r /= k;
        }
        w.reverse();
        let mut content = vec![0; k];
        for &l in &w {
            content[l] += 1;
        }
        blocks.entry(content).or_default().push(w);
    }
    blocks
}

pub(crate) fn check_word_budget(k: usize, n: usize, budget: u128) -> Result<()> {
    let required = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::WordBudget { required, budget });
    }
    Ok(())
}

/// Coordinates of an element in a content block.
pub(crate) fn block_vector(x: &FreeAlgebraElement, index: &BTreeMap<&[usize], usize>, dim: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    for (w, c) in x.terms() {
        let i = index[w.as_slice()];
        v[i] += c;
    }
    v
}

// ---------------------------------------------------------------------------
// NC filtration

/// How a word of length n is cut into plain letters and left-normed bracket
/// factors. `Bracket(lens)` consumes consecutive sub-words of those lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Letter,
    Bracket(Vec<usize>),
}

fn excess(tokens: &[Token]) -> usize {
    tokens
        .iter()
        .map(|t| match t {
            Token::Letter => 0,
            Token::Bracket(l) => l.len() - 1,
        })
        .sum()
}

/// All segmentations of a length-n word into letters and brackets with at
/// least two entries.
fn segmentations(n: usize) -> Vec<Vec<Token>> {
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    fn go(rest: usize, cur: &mut Vec<Token>, out: &mut Vec<Vec<Token>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        cur.push(Token::Letter);
        go(rest - 1, cur, out);
        cur.pop();
        for len in 2..=rest {
            for comp in compositions(len) {
                if comp.len() < 2 {
                    continue;
                }
                cur.push(Token::Bracket(comp));
                go(rest - len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn realize(word: &[usize], tokens: &[Token], degrees: &[i64]) -> FreeAlgebraElement {
    let mut acc = FreeAlgebraElement::one();
    let mut pos = 0;
    for t in tokens {
        let factor = match t {
            Token::Letter => {
                pos += 1;
                FreeAlgebraElement::letter(word[pos - 1])
            }
            Token::Bracket(lens) => {
                let mut parts: Vec<&[usize]> = Vec::with_capacity(lens.len());
                for &l in lens {
                    parts.push(&word[pos..pos + l]);
                    pos += l;
                }
                left_normed_bracket(&parts, degrees)
            }
        };
        acc = acc.mul(&factor);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// The spans F^d ∩ T^n(W) for all d, one echelon per content block.
pub struct FiltrationSpan {
    n: usize,
    degrees: Vec<i64>,
    /// content → (words, echelon of F^d for d = 0..n)
    blocks: BTreeMap<Vec<usize>, (Vec<Vec<usize>>, Vec<Echelon>)>,
}

impl FiltrationSpan {
    pub fn compute(gens: &GradedGenSet, n: usize, budget: u128) -> Result<Self> {
        check_word_budget(gens.len(), n, budget)?;
        let degrees = gens.degrees();
        let segs = segmentations(n);
        let mut by_excess: Vec<Vec<&Vec<Token>>> = vec![Vec::new(); n.max(1)];
        for s in &segs {
            let e = excess(s);
            if e < by_excess.len() {
                by_excess[e].push(s);
            }
        }
        let mut blocks = BTreeMap::new();
        for (content, words) in content_blocks(gens.len(), n) {
            let dim = words.len();
            let index: BTreeMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
            let mut echelons = Vec::with_capacity(n + 1);
            for d in 0..=n {
                let mut e = Echelon::new(dim);
                if d < by_excess.len() {
                    'fill: for segs in &by_excess[d] {
                        for w in &words {
                            let x = realize(w, segs, &degrees);
                            if !x.is_zero() {
                                e.insert(block_vector(&x, &index, dim));
                                if e.is_full() {
                                    break 'fill;
                                }
                            }
                        }
                    }
                }
                echelons.push(e);
            }
            blocks.insert(content, (words, echelons));
        }
        Ok(FiltrationSpan { n, degrees, blocks })
    }

    pub fn tensor_degree(&self) -> usize {
        self.n
    }

    /// dim F^d ∩ T^n.
    pub fn dim_f(&self, d: usize) -> usize {
        self.blocks.values().map(|(_, e)| e.get(d).map_or(0, Echelon::rank)).sum()
    }

    /// gr^d dimensions per content block.
    pub fn graded_by_content(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        self.blocks
            .iter()
            .map(|(c, (_, es))| {
                let dims = (0..=self.n).map(|d| es[d].rank() - es.get(d + 1).map_or(0, Echelon::rank)).collect();
                (c.clone(), dims)
            })
            .collect()
    }

    /// Whether a homogeneous element of tensor degree n lies in F^d.
    pub fn contains(&self, x: &FreeAlgebraElement, d: usize) -> bool {
        let mut parts: BTreeMap<Vec<usize>, FreeAlgebraElement> = BTreeMap::new();
        for (w, c) in x.terms() {
            if w.len() != self.n {
                return false;
            }
            let mut content = vec![0; self.degrees.len()];
            for &l in w {
                content[l] += 1;
            }
            parts.entry(content).or_default().add_term(w.clone(), c.clone());
        }
        parts.iter().all(|(content, part)| {
            let (words, es) = &self.blocks[content];
            let Some(e) = es.get(d) else { return part.is_zero() };
            let index: BTreeMap<&[usize], usize> = words.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
            e.contains(&block_vector(part, &index, words.len()))
        })
    }
}

/// The generating products of F^d at tensor degree n with bracket excess
/// exactly d: every word cut into letters and left-normed bracket factors.
/// Nonzero elements only; duplicates are not removed.
pub fn filtration_generators(gens: &GradedGenSet, n: usize, d: usize, budget: u128) -> Result<Vec<FreeAlgebraElement>> {
    check_word_budget(gens.len(), n, budget)?;
    let degrees = gens.degrees();
    let segs: Vec<Vec<Token>> = segmentations(n).into_iter().filter(|s| excess(s) == d).collect();
    let mut out = Vec::new();
    for words in content_blocks(gens.len(), n).into_values() {
        for w in &words {
            for s in &segs {
                let x = realize(w, s, &degrees);
                if !x.is_zero() {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

/// Dimensions of the graded pieces gr_F^d at one tensor degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationReport {
    #[serde(rename = "n")]
    pub tensor_degree: usize,
    /// (d, dim gr^d)
    pub dims: Vec<(usize, usize)>,
}

impl FiltrationReport {
    pub fn total(&self) -> usize {
        self.dims.iter().map(|(_, x)| x).sum()
    }
}

/// dim gr_F^d T(W) at tensor degree n for 0 ≤ d ≤ max_d, by exact spans.
pub fn nc_filtration_dims(gens: &GradedGenSet, n: usize, max_d: usize, budget: u128) -> Result<FiltrationReport> {
    let span = FiltrationSpan::compute(gens, n, budget)?;
    let dims = (0..=max_d).map(|d| (d, span.dim_f(d) - span.dim_f(d + 1))).collect();
    Ok(FiltrationReport { tensor_degree: n, dims })
}

/// gr_F^d dimensions split by letter content.
pub fn nc_filtration_by_content(gens: &GradedGenSet, n: usize, budget: u128) -> Result<BTreeMap<Vec<usize>, Vec<usize>>> {
    Ok(FiltrationSpan::compute(gens, n, budget)?.graded_by_content())
}

/// Bigraded character of S(L(W)): entry [n][d] is the super character of the
/// part of tensor degree n and bracket excess d, in the content variables of
/// `gens`.
pub fn poisson_envelope_characters(gens: &GradedGenSet, n: usize) -> Vec<Vec<SuperChar>> {
    let g = gens.content_character();
    let k = g.nvars();
    let mut table = vec![vec![SuperChar::zero(k); n + 1]; n + 1];
    table[0][0] = SuperChar::one(k);
    if n == 0 {
        return table;
    }
    let lie = lie_table(&g, n);
    for len in 1..=n {
        let piece = lie.get(len);
        if piece.is_zero() {
            continue;
        }
        let sigma = sym_series(piece, n / len);
        let mut next = vec![vec![SuperChar::zero(k); n + 1]; n + 1];
        for a in 0..=n {
            for b in 0..=n {
                if table[a][b].is_zero() {
                    continue;
                }
                for (j, s) in sigma.iter().enumerate() {
                    let ta = a + len * j;
                    let tb = b + (len - 1) * j;
                    if ta > n || tb > n {
                        break;
                    }
                    if s.is_zero() {
                        continue;
                    }
                    let add = &table[a][b] * s;
                    next[ta][tb] += &add;
                }
            }
        }
        table = next;
    }
    table
}

/// Dimensions of the excess-d part of S(L(W)) at tensor degree n.
pub fn poisson_envelope_dims(gens: &GradedGenSet, n: usize, max_d: usize) -> FiltrationReport {
    let table = poisson_envelope_characters(gens, n);
    let dims = (0..=max_d)
        .map(|d| {
            let dim = table[n].get(d).map_or(BigInt::zero(), SuperChar::dim);
            (d, usize::try_from(dim).expect("dimension is a small nonnegative integer"))
        })
        .collect();
    FiltrationReport { tensor_degree: n, dims }
}

/// Envelope dimensions split by letter content, comparable with
/// [`nc_filtration_by_content`].
pub fn poisson_envelope_by_content(gens: &GradedGenSet, n: usize) -> BTreeMap<Vec<usize>, Vec<usize>> {
    let table = poisson_envelope_characters(gens, n);
    let mut out: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (d, sc) in table[n].iter().enumerate() {
        for (m, c) in sc.total().terms() {
            let content: Vec<usize> = m.0.iter().map(|&e| e as usize).collect();
            let slot = out.entry(content).or_insert_with(|| vec![0; n + 1]);
            slot[d] = usize::try_from(c.clone()).expect("envelope multiplicities are nonnegative");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn super_commutator_signs() {
        let degrees = [0, 0, -1];
        let x = FreeAlgebraElement::letter(0);
        assert!(super_commutator(&x, &x, &degrees).unwrap().is_zero());
        let y = FreeAlgebraElement::letter(2);
        assert_eq!(super_commutator(&y, &y, &degrees).unwrap(), FreeAlgebraElement::term(vec![2, 2], q(2)));
        let z = FreeAlgebraElement::letter(1);
        let xz = super_commutator(&x, &z, &degrees).unwrap();
        let xxz = super_commutator(&x, &xz, &degrees).unwrap();
        let expect = FreeAlgebraElement::from_terms([(vec![0, 0, 1], q(1)), (vec![0, 1, 0], q(-2)), (vec![1, 0, 0], q(1))]);
        assert_eq!(xxz, expect);
        let inhom = x.add(&y);
        assert_eq!(super_commutator(&inhom, &x, &degrees).unwrap_err(), Error::Inhomogeneous);
    }

    #[test]
    fn one_even_generator_is_commutative() {
        let gens = GradedGenSet::standard(1, 0);
        for n in 1..=4 {
            let r = nc_filtration_dims(&gens, n, 3, DEFAULT_WORD_BUDGET).unwrap();
            assert_eq!(r.dims, vec![(0, 1), (1, 0), (2, 0), (3, 0)]);
        }
    }

    #[test]
    fn two_even_generators() {
        let gens = GradedGenSet::standard(2, 0);
        assert_eq!(nc_filtration_dims(&gens, 2, 1, DEFAULT_WORD_BUDGET).unwrap().dims, vec![(0, 3), (1, 1)]);
        assert_eq!(nc_filtration_dims(&gens, 3, 2, DEFAULT_WORD_BUDGET).unwrap().dims, vec![(0, 4), (1, 2), (2, 2)]);
        assert_eq!(poisson_envelope_dims(&gens, 3, 2).dims, vec![(0, 4), (1, 2), (2, 2)]);
    }

    #[test]
    fn one_odd_generator_degree_two() {
        let gens = GradedGenSet::standard(0, 1);
        assert_eq!(nc_filtration_dims(&gens, 2, 1, DEFAULT_WORD_BUDGET).unwrap().dims, vec![(0, 0), (1, 1)]);
        assert_eq!(poisson_envelope_dims(&gens, 2, 1).dims, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn degree_one_is_just_w() {
        let gens = GradedGenSet::standard(2, 1);
        assert_eq!(poisson_envelope_dims(&gens, 1, 2).dims, vec![(0, 3), (1, 0), (2, 0)]);
        assert_eq!(nc_filtration_dims(&gens, 1, 2, DEFAULT_WORD_BUDGET).unwrap().dims, vec![(0, 3), (1, 0), (2, 0)]);
    }

    #[test]
    fn budget_is_enforced() {
        let gens = GradedGenSet::standard(3, 0);
        let err = nc_filtration_dims(&gens, 5, 1, 100).unwrap_err();
        assert_eq!(err, Error::WordBudget { required: 243, budget: 100 });
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(GradedGenSet::new(vec![("x".into(), 0), ("x".into(), -1)]).is_err());
        let g: GradedGenSet = serde_json::from_str(r#"{"generators":[["x",0],["y",-1]]}"#).unwrap();
        assert_eq!(g.degrees(), vec![0, -1]);
    }
}
