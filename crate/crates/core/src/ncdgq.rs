//! The NCDG algebra 𝔄 = T_R(𝔓) attached to (R, P, ê, m) and its
//! differential Q = Q₀ + Q₁ + Q₂.
//!
//! P is the free right R-module on a homogeneous basis u_0..u_{r−1}; ê(a)
//! is stored as a matrix over the free algebra R whose (i, j) entry is the
//! u_i-coordinate of ê(a)(u_j). The 𝔓-generators are
//! ⟨i | a₁ ⋯ a_n | j⟩ = u_i^∨ ⊗ a₁ ⊗ ⋯ ⊗ a_n ⊗ u_j for n ≥ 2 with
//! deg u_i = deg u_j + Σ wt(a_k); such a generator has degree 1 − n.
//! 𝔄 is modelled as a free algebra whose first letters are the R generators
//! and whose remaining letters are the 𝔓-generators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebraElement, GradedGenSet};
use crate::linalg::Echelon;
use crate::Rational;

/// Default bound on the number of m-tensor factors in a generator.
pub const DEFAULT_N_MAX: usize = 4;

/// Default cap on the number of 𝔓-generators.
pub const DEFAULT_GENERATOR_BUDGET: usize = 100_000;

/// Elements of 𝔄 are words over R letters followed by 𝔓 letters.
pub type DgElement = FreeAlgebraElement;

/// A sparse matrix over the free algebra R.
pub type RMatrix = BTreeMap<(usize, usize), FreeAlgebraElement>;

/// Input data for the NCDG construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NcdgRepr", into = "NcdgRepr")]
pub struct NcdgData {
    r_gens: GradedGenSet,
    m_basis: Vec<(String, usize)>,
    theta: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    p_basis: Vec<(String, i64)>,
    e_hat: Vec<RMatrix>,
    n_max: usize,
}

type ThetaEntry = (usize, usize, Vec<(usize, String)>);
type MatrixEntry = (usize, usize, FreeAlgebraElement);

#[derive(Serialize, Deserialize)]
struct NcdgRepr {
    r_gens: GradedGenSet,
    m_basis: Vec<(String, usize)>,
    theta: Vec<ThetaEntry>,
    p_basis: Vec<(String, i64)>,
    e_hat: Vec<Vec<MatrixEntry>>,
    #[serde(default = "default_n_max")]
    n_max: usize,
}

fn default_n_max() -> usize {
    DEFAULT_N_MAX
}

impl TryFrom<NcdgRepr> for NcdgData {
    type Error = Error;
    fn try_from(r: NcdgRepr) -> Result<Self> {
        let mut theta = BTreeMap::new();
        for (a, b, comb) in r.theta {
            let mut out = Vec::new();
            for (c, x) in comb {
                let x = crate::parse_rational(&x)?;
                out.push((c, x));
            }
            theta.insert((a, b), out);
        }
        let e_hat = r.e_hat.into_iter().map(|m| m.into_iter().map(|(i, j, x)| ((i, j), x)).collect()).collect();
        NcdgData::new(r.r_gens, r.m_basis, theta, r.p_basis, e_hat, r.n_max)
    }
}

impl From<NcdgData> for NcdgRepr {
    fn from(d: NcdgData) -> Self {
        NcdgRepr {
            r_gens: d.r_gens,
            m_basis: d.m_basis,
            theta: d
                .theta
                .into_iter()
                .map(|((a, b), comb)| (a, b, comb.into_iter().map(|(c, x)| (c, x.to_string())).collect()))
                .collect(),
            p_basis: d.p_basis,
            e_hat: d.e_hat.into_iter().map(|m| m.into_iter().map(|((i, j), x)| (i, j, x)).collect()).collect(),
            n_max: d.n_max,
        }
    }
}

impl NcdgData {
    /// Validates and builds the data. `theta` maps a pair of m-basis indices
    /// to a combination of m-basis elements; missing pairs multiply to zero.
    pub fn new(
        r_gens: GradedGenSet,
        m_basis: Vec<(String, usize)>,
        theta: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
        p_basis: Vec<(String, i64)>,
        e_hat: Vec<RMatrix>,
        n_max: usize,
    ) -> Result<Self> {
        if r_gens.degrees().iter().any(|&d| d != 0) {
            return Err(Error::Invalid("R generators must have degree 0".into()));
        }
        if m_basis.iter().any(|(_, w)| *w == 0) {
            return Err(Error::Invalid("m-basis weights must be positive".into()));
        }
        if e_hat.len() != m_basis.len() {
            return Err(Error::ShapeMismatch(format!("{} matrices for {} m-basis elements", e_hat.len(), m_basis.len())));
        }
        if n_max < 2 {
            return Err(Error::Invalid("n_max must be at least 2".into()));
        }
        let nm = m_basis.len();
        let mut clean = BTreeMap::new();
        for (&(a, b), comb) in &theta {
            if a >= nm || b >= nm {
                return Err(Error::Invalid(format!("product ({a}, {b}) refers to an unknown m-basis element")));
            }
            let mut out: Vec<(usize, Rational)> = Vec::new();
            for (c, x) in comb {
                if *c >= nm {
                    return Err(Error::Invalid(format!("product ({a}, {b}) has unknown term {c}")));
                }
                if m_basis[*c].1 != m_basis[a].1 + m_basis[b].1 {
                    return Err(Error::GradeViolation(format!(
                        "{} * {} has weight {} but contains {} of weight {}",
                        m_basis[a].0,
                        m_basis[b].0,
                        m_basis[a].1 + m_basis[b].1,
                        m_basis[*c].0,
                        m_basis[*c].1
                    )));
                }
                match out.iter_mut().find(|(d, _)| d == c) {
                    Some((_, y)) => *y += x,
                    None => out.push((*c, x.clone())),
                }
            }
            out.retain(|(_, x)| !x.is_zero());
            out.sort_by_key(|(c, _)| *c);
            if !out.is_empty() {
                clean.insert((a, b), out);
            }
        }
        let r = r_gens.len();
        let np = p_basis.len();
        let mut e_clean = Vec::with_capacity(nm);
        for (a, m) in e_hat.into_iter().enumerate() {
            let mut mm = RMatrix::new();
            for ((i, j), x) in m {
                if i >= np || j >= np {
                    return Err(Error::ShapeMismatch(format!("entry ({i}, {j}) of ê({}) outside P", m_basis[a].0)));
                }
                if x.terms().any(|(w, _)| w.iter().any(|&l| l >= r)) {
                    return Err(Error::Invalid(format!("entry ({i}, {j}) of ê({}) uses an unknown R letter", m_basis[a].0)));
                }
                if x.is_zero() {
                    continue;
                }
                if p_basis[i].1 != p_basis[j].1 + m_basis[a].1 as i64 {
                    return Err(Error::GradeViolation(format!(
                        "ê({}) sends {} (degree {}) to {} (degree {}) but has weight {}",
                        m_basis[a].0, p_basis[j].0, p_basis[j].1, p_basis[i].0, p_basis[i].1, m_basis[a].1
                    )));
                }
                mm.insert((i, j), x);
            }
            e_clean.push(mm);
        }
        Ok(NcdgData { r_gens, m_basis, theta: clean, p_basis, e_hat: e_clean, n_max })
    }

    pub fn r_gens(&self) -> &GradedGenSet {
        &self.r_gens
    }

    pub fn m_basis(&self) -> &[(String, usize)] {
        &self.m_basis
    }

    pub fn p_basis(&self) -> &[(String, i64)] {
        &self.p_basis
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn with_n_max(mut self, n_max: usize) -> Result<Self> {
        if n_max < 2 {
            return Err(Error::Invalid("n_max must be at least 2".into()));
        }
        self.n_max = n_max;
        Ok(self)
    }

    /// ϑ(a ⊗ b) as a combination of m-basis elements.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        self.theta.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    pub fn e_hat(&self, a: usize) -> &RMatrix {
        &self.e_hat[a]
    }

    /// Whether (ab)c = a(bc) for all basis triples.
    pub fn is_associative(&self) -> bool {
        self.associativity_defect().is_none()
    }

    /// A basis triple on which ϑ fails to be associative.
    pub fn associativity_defect(&self) -> Option<(usize, usize, usize)> {
        let n = self.m_basis.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut diff: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (ab, x) in self.product(a, b) {
                        for (d, y) in self.product(*ab, c) {
                            *diff.entry(*d).or_insert_with(Rational::zero) += x * y;
                        }
                    }
                    for (bc, x) in self.product(b, c) {
                        for (d, y) in self.product(a, *bc) {
                            *diff.entry(*d).or_insert_with(Rational::zero) -= x * y;
                        }
                    }
                    if diff.values().any(|v| !v.is_zero()) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// ê applied to a combination of m-basis elements.
    fn e_of(&self, comb: &[(usize, Rational)]) -> RMatrix {
        let mut out = RMatrix::new();
        for (c, x) in comb {
            for (&ij, entry) in &self.e_hat[*c] {
                out.entry(ij).or_default().add_scaled(entry, x);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// μ̂(a₁, a₂) = ê(ϑ(a₁a₂)) − ê(a₁)ê(a₂).
    pub fn mu_hat(&self, a1: usize, a2: usize) -> RMatrix {
        let mut out = self.e_of(self.product(a1, a2));
        for (&(i, k), x) in &self.e_hat[a1] {
            for (&(k2, j), y) in &self.e_hat[a2] {
                if k == k2 {
                    out.entry((i, j)).or_default().add_scaled(&x.mul(y), &-Rational::one());
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// ⟨left | word | right⟩.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub left: usize,
    pub word: Vec<usize>,
    pub right: usize,
}

impl Generator {
    /// |_•-degree 1 − n.
    pub fn degree(&self) -> i64 {
        1 - self.word.len() as i64
    }
}

/// The differential Q on the generators of 𝔄, extended by the Leibniz rule
/// Q(ab) = Q(a)b + (−1)^{deg a} a Q(b) and Q = 0 on R.
#[derive(Clone, Debug)]
pub struct Differential {
    data: NcdgData,
    gens: Vec<Generator>,
    index: HashMap<Generator, usize>,
    images: Vec<DgElement>,
    degrees: Vec<i64>,
}

/// Builds Q on every generator with at most `data.n_max()` m-factors.
pub fn build_q(data: &NcdgData) -> Result<Differential> {
    build_q_with_budget(data, DEFAULT_GENERATOR_BUDGET)
}

pub fn build_q_with_budget(data: &NcdgData, budget: usize) -> Result<Differential> {
    let gens = enumerate_generators(data, budget)?;
    let index: HashMap<Generator, usize> = gens.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
    let r = data.r_gens.len();
    let mut degrees = data.r_gens.degrees();
    degrees.extend(gens.iter().map(Generator::degree));
    let mut q = Differential { data: data.clone(), gens, index, images: Vec::new(), degrees };
    let images: Vec<DgElement> = q.gens.iter().map(|g| q.image_of(g, r)).collect();
    q.images = images;
    Ok(q)
}

fn enumerate_generators(data: &NcdgData, budget: usize) -> Result<Vec<Generator>> {
    let nm = data.m_basis.len();
    let np = data.p_basis.len();
    let max_gap = {
        let ds: Vec<i64> = data.p_basis.iter().map(|(_, d)| *d).collect();
        match (ds.iter().max(), ds.iter().min()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    };
    let mut out = Vec::new();
    let mut words: Vec<(Vec<usize>, i64)> = vec![(Vec::new(), 0)];
    for n in 1..=data.n_max {
        let mut next = Vec::new();
        for (w, wt) in &words {
            for a in 0..nm {
                let total = wt + data.m_basis[a].1 as i64;
                if total > max_gap {
                    continue;
                }
                let mut w2 = w.clone();
                w2.push(a);
                next.push((w2, total));
            }
        }
        words = next;
        if n < 2 {
            continue;
        }
        for (w, wt) in &words {
            for i in 0..np {
                for j in 0..np {
                    if data.p_basis[i].1 == data.p_basis[j].1 + wt {
                        out.push(Generator { left: i, word: w.clone(), right: j });
                        if out.len() > budget {
                            return Err(Error::WordBudget { required: out.len() as u128, budget: budget as u128 });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

impl Differential {
    pub fn data(&self) -> &NcdgData {
        &self.data
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Letter of 𝔄 standing for a generator.
    pub fn letter(&self, g: &Generator) -> Option<usize> {
        self.index.get(g).map(|i| i + self.data.r_gens.len())
    }

    /// Q of a generator as an element of 𝔄.
    pub fn image(&self, g: &Generator) -> Option<&DgElement> {
        self.index.get(g).map(|&i| &self.images[i])
    }

    /// Degrees of all letters of 𝔄.
    pub fn letter_degrees(&self) -> &[i64] {
        &self.degrees
    }

    /// The alphabet of 𝔄 as a graded generator set.
    pub fn alphabet(&self) -> GradedGenSet {
        let gens = (0..self.degrees.len()).map(|l| (self.letter_name(l), self.degrees[l])).collect();
        GradedGenSet::new(gens).expect("letter names are distinct")
    }

    pub fn letter_name(&self, l: usize) -> String {
        let r = self.data.r_gens.len();
        if l < r {
            return self.data.r_gens.names()[l].to_string();
        }
        let g = &self.gens[l - r];
        let word: Vec<&str> = g.word.iter().map(|&a| self.data.m_basis[a].0.as_str()).collect();
        format!("<{}|{}|{}>", self.data.p_basis[g.left].0, word.join(" "), self.data.p_basis[g.right].0)
    }

    pub fn display(&self, x: &DgElement) -> String {
        x.display_with(&|l| self.letter_name(l))
    }

    /// The element ⟨i|word|j⟩ if it is a generator, zero otherwise.
    fn gen_elem(&self, left: usize, word: Vec<usize>, right: usize, r: usize) -> DgElement {
        let g = Generator { left, word, right };
        match self.index.get(&g) {
            Some(&i) => DgElement::letter(i + r),
            None => DgElement::zero(),
        }
    }

    fn r_elem(x: &FreeAlgebraElement) -> DgElement {
        x.clone()
    }

    fn image_of(&self, g: &Generator, r: usize) -> DgElement {
        let data = &self.data;
        let n = g.word.len();
        let (i, j) = (g.left, g.right);
        let a = &g.word;
        let mut out = DgElement::zero();
        if n == 2 {
            if let Some(x) = data.mu_hat(a[0], a[1]).get(&(i, j)) {
                out.add_assign(&Self::r_elem(x));
            }
            return out;
        }
        let np = data.p_basis.len();
        let sign = |e: i64| if e.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
        // (−1)^{n+1} ê(a₁)·⟨a₂⋯a_n⟩
        for k in 0..np {
            if let Some(x) = data.e_hat[a[0]].get(&(i, k)) {
                let tail = self.gen_elem(k, a[1..].to_vec(), j, r);
                out.add_scaled(&Self::r_elem(x).mul(&tail), &sign(n as i64 + 1));
            }
        }
        // Σ_p (−1)^{n+1−p} ⟨a₁⋯ϑ(a_p a_{p+1})⋯a_n⟩, p counted from 1
        for p in 0..n - 1 {
            let s = sign(n as i64 + 1 - (p as i64 + 1));
            for (c, x) in data.product(a[p], a[p + 1]) {
                let mut w = a[..p].to_vec();
                w.push(*c);
                w.extend_from_slice(&a[p + 2..]);
                out.add_scaled(&self.gen_elem(i, w, j, r), &(&s * x));
            }
        }
        // −⟨a₁⋯a_{n−1}⟩·ê(a_n)
        for k in 0..np {
            if let Some(x) = data.e_hat[a[n - 1]].get(&(k, j)) {
                let head = self.gen_elem(i, a[..n - 1].to_vec(), k, r);
                out.add_scaled(&head.mul(&Self::r_elem(x)), &-Rational::one());
            }
        }
        // Σ_{k=2}^{n−2} (−1)^{n(k−2)+1} Σ_l ⟨a₁⋯a_k|u_l⟩⟨u_l|a_{k+1}⋯a_n⟩
        for k in 2..=n.saturating_sub(2) {
            let s = sign((n * (k - 2) + 1) as i64);
            for l in 0..np {
                let left = self.gen_elem(i, a[..k].to_vec(), l, r);
                if left.is_zero() {
                    continue;
                }
                let right = self.gen_elem(l, a[k..].to_vec(), j, r);
                out.add_scaled(&left.mul(&right), &s);
            }
        }
        out
    }

    /// Q extended to 𝔄 by the Leibniz rule.
    pub fn apply(&self, x: &DgElement) -> DgElement {
        let r = self.data.r_gens.len();
        let mut out = DgElement::zero();
        for (w, c) in x.terms() {
            let mut prefix_deg = 0i64;
            for (p, &l) in w.iter().enumerate() {
                if l >= r {
                    let q = &self.images[l - r];
                    if !q.is_zero() {
                        let pre = DgElement::word(w[..p].to_vec());
                        let post = DgElement::word(w[p + 1..].to_vec());
                        let term = pre.mul(q).mul(&post);
                        let s = if prefix_deg.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
                        out.add_scaled(&term, &s);
                    }
                }
                prefix_deg += self.degrees[l];
            }
        }
        out
    }
}

/// Outcome of the Q² check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QsqVerdict {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<QsqWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QsqWitness {
    pub generator: Generator,
    /// Printable names of the generator and residue.
    pub label: String,
    pub residue: DgElement,
    pub residue_text: String,
}

/// Applies Q twice to every generator and reports the first nonzero result.
pub fn check_q_squared(data: &NcdgData) -> Result<QsqVerdict> {
    let q = build_q(data)?;
    Ok(check_q_squared_with(&q))
}

pub fn check_q_squared_with(q: &Differential) -> QsqVerdict {
    let r = q.data.r_gens.len();
    for (idx, g) in q.gens.iter().enumerate() {
        let qq = q.apply(&q.images[idx]);
        if !qq.is_zero() {
            return QsqVerdict {
                ok: false,
                witness: Some(QsqWitness {
                    generator: g.clone(),
                    label: q.letter_name(idx + r),
                    residue_text: q.display(&qq),
                    residue: qq,
                }),
            };
        }
    }
    QsqVerdict { ok: true, witness: None }
}

/// Generators of the ideal J ⊂ R with H₀(𝔄, Q) = R/J: the nonzero
/// entries μ̂(a₁, a₂)_{ij} over all length-two generators.
pub fn h0_ideal_generators(data: &NcdgData) -> Vec<FreeAlgebraElement> {
    let mut out = Vec::new();
    let nm = data.m_basis.len();
    let np = data.p_basis.len();
    for a1 in 0..nm {
        for a2 in 0..nm {
            let wt = (data.m_basis[a1].1 + data.m_basis[a2].1) as i64;
            let mu = data.mu_hat(a1, a2);
            for i in 0..np {
                for j in 0..np {
                    if data.p_basis[i].1 != data.p_basis[j].1 + wt {
                        continue;
                    }
                    if let Some(x) = mu.get(&(i, j)) {
                        out.push(x.clone());
                    }
                }
            }
        }
    }
    out
}

/// Euler characteristic of C[x]·y → C[x], y ↦ x^n, summed weight by weight
/// with wt x = 1 and wt y = n. Contributions must vanish on the last n
/// weights before the cutoff.
pub fn euler_char_xn(n: usize, weight_cutoff: usize) -> Result<i64> {
    assert!(n >= 1, "n must be positive");
    let mut contributions = Vec::with_capacity(weight_cutoff + 1);
    for w in 0..=weight_cutoff {
        // weight-w pieces: C[x]_w = ⟨x^w⟩, (C[x]y)_w = ⟨x^{w−n} y⟩
        let target_dim = 1;
        let source_dim = usize::from(w >= n);
        let mut e = Echelon::new(target_dim);
        for _ in 0..source_dim {
            // x^{w−n} y ↦ x^{w−n} x^n = x^w
            e.insert(vec![Rational::one()]);
        }
        let rank = e.rank();
        let h0 = target_dim - rank;
        let h1 = source_dim - rank;
        contributions.push(h0 as i64 - h1 as i64);
    }
    if weight_cutoff + 1 < 2 * n || contributions[weight_cutoff + 1 - n..].iter().any(|&c| c != 0) {
        return Err(Error::CutoffTooSmall { cutoff: weight_cutoff });
    }
    Ok(contributions.iter().sum())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.word.iter().map(usize::to_string).collect();
        write!(f, "<{}|{}|{}>", self.left, w.join(" "), self.right)
    }
}

// ---------------------------------------------------------------------------
// Presets

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The P² instance: R free on x₁, x₂, y₁, y₂ and z_{kl} (k ≤ l), m₁ = ⟨x₁,x₂,x₃⟩,
/// m₂ = ⟨z_{kl}⟩ with ϑ(x_k ⊗ x_l) = z_{min,max}, P with basis in degrees 0, 1, 2,
/// ê(x_a) = x_a on u₀ → u₁ and y_a on u₁ → u₂ (x₃ = y₃ = 1), ê(z_{kl}) = z_{kl}
/// on u₀ → u₂.
pub fn p2_data() -> NcdgData {
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut r_names: Vec<String> = vec!["x1".into(), "x2".into(), "y1".into(), "y2".into()];
    r_names.extend(pairs.iter().map(|(k, l)| format!("z{}{}", k + 1, l + 1)));
    let r_gens = GradedGenSet::new(r_names.into_iter().map(|n| (n, 0)).collect()).expect("distinct");
    let mut m_basis: Vec<(String, usize)> = (1..=3).map(|a| (format!("x{a}"), 1)).collect();
    m_basis.extend(pairs.iter().map(|(k, l)| (format!("z{}{}", k + 1, l + 1), 2)));
    let z_index = |k: usize, l: usize| {
        let key = (k.min(l), k.max(l));
        pairs.iter().position(|&p| p == key).expect("pair listed")
    };
    let mut theta = BTreeMap::new();
    for k in 0..3 {
        for l in 0..3 {
            theta.insert((k, l), vec![(3 + z_index(k, l), q(1))]);
        }
    }
    let p_basis = vec![("u0".to_string(), 0), ("u1".to_string(), 1), ("u2".to_string(), 2)];
    let coord = |letter: Option<usize>| match letter {
        Some(l) => FreeAlgebraElement::letter(l),
        None => FreeAlgebraElement::one(),
    };
    let mut e_hat = Vec::new();
    for a in 0..3 {
        let mut m = RMatrix::new();
        m.insert((1, 0), coord((a < 2).then_some(a)));
        m.insert((2, 1), coord((a < 2).then_some(2 + a)));
        e_hat.push(m);
    }
    for z in 0..pairs.len() {
        let mut m = RMatrix::new();
        m.insert((2, 0), FreeAlgebraElement::letter(4 + z));
        e_hat.push(m);
    }
    NcdgData::new(r_gens, m_basis, theta, p_basis, e_hat, DEFAULT_N_MAX).expect("P² data is valid")
}

/// The x^n instance: R = C⟨x⟩, m₁ = ⟨a⟩, m₂ = ⟨b⟩ with a·a = b, P in degrees
/// 0 and 2, ê(b) = x^n. The only generator y = ⟨u₁|a a|u₀⟩ has Q(y) = x^n.
pub fn xn_data(n: usize) -> NcdgData {
    let r_gens = GradedGenSet::new(vec![("x".into(), 0)]).expect("one generator");
    let m_basis = vec![("a".to_string(), 1), ("b".to_string(), 2)];
    let theta = BTreeMap::from([((0, 0), vec![(1, q(1))])]);
    let p_basis = vec![("u0".to_string(), 0), ("u1".to_string(), 2)];
    let e_hat = vec![RMatrix::new(), RMatrix::from([((1, 0), FreeAlgebraElement::word(vec![0; n]))])];
    NcdgData::new(r_gens, m_basis, theta, p_basis, e_hat, DEFAULT_N_MAX).expect("x^n data is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xn_differential() {
        for n in 1..=4 {
            let data = xn_data(n);
            let q = build_q(&data).unwrap();
            assert_eq!(q.generators().len(), 1);
            let g = &q.generators()[0];
            assert_eq!(g.degree(), -1);
            assert_eq!(q.image(g).unwrap(), &FreeAlgebraElement::word(vec![0; n]));
            assert_eq!(h0_ideal_generators(&data), vec![FreeAlgebraElement::word(vec![0; n])]);
        }
    }

    #[test]
    fn p2_differential() {
        let data = p2_data();
        let q = build_q(&data).unwrap();
        assert_eq!(q.generators().len(), 9);
        let names: Vec<String> = q.generators().iter().map(|g| q.display(q.image(g).unwrap())).collect();
        assert!(names.contains(&"-y1*x2 + z12".to_string()), "{names:?}");
        assert!(names.contains(&"-1 + z33".to_string()), "{names:?}");
        assert!(names.contains(&"-y2 + z23".to_string()), "{names:?}");
        assert!(names.contains(&"-x1 + z13".to_string()), "{names:?}");
        assert!(check_q_squared(&data).unwrap().ok);
    }

    #[test]
    fn grade_violation_rejected() {
        let data = xn_data(2);
        let mut repr = NcdgRepr::from(data);
        repr.e_hat[0].push((1, 0, FreeAlgebraElement::letter(0)));
        assert!(matches!(NcdgData::try_from(repr), Err(Error::GradeViolation(_))));
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(euler_char_xn(1, 10).unwrap(), 1);
        assert_eq!(euler_char_xn(3, 30).unwrap(), 3);
        assert_eq!(euler_char_xn(5, 50).unwrap(), 5);
        assert_eq!(euler_char_xn(5, 6).unwrap_err(), Error::CutoffTooSmall { cutoff: 6 });
    }

    #[test]
    fn json_round_trip() {
        let data = p2_data();
        let s = serde_json::to_string(&data).unwrap();
        let back: NcdgData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, data);
    }
}
