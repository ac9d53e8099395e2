//! The quiver Q_{[p,q]} with relations attached to a truncated graded
//! algebra A = C ⊕ m₁ ⊕ m₂ ⊕ ⋯, its representations, Maurer–Cartan
//! residuals and stability of thin representations.
//!
//! An arrow labelled by a basis element α of m_k runs from vertex i to
//! i + k and acts as x(α) on W_i. For composable arrows b: i → j and
//! a: j → k the relation is ϑ(label a ⊗ label b) − a∘b, so that a
//! representation satisfies the relations exactly when
//! x(α₁α₂) = x(α₁)∘x(α₂).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{parse_rational, Rational};

/// Basis element α ∈ m_k written as (k, index).
pub type BasisElt = (usize, usize);

/// A truncated graded algebra on vertices p..q with ϑ given on bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct GradedAlgebraPresentation {
    p: usize,
    q: usize,
    dims: Vec<usize>,
    names: Vec<Vec<String>>,
    theta: BTreeMap<(BasisElt, BasisElt), Vec<(usize, Rational)>>,
}

type ThetaRow = (usize, usize, usize, usize, Vec<(usize, String)>);

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    p: usize,
    q: usize,
    dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<Vec<String>>>,
    theta: Vec<ThetaRow>,
}

impl TryFrom<PresentationRepr> for GradedAlgebraPresentation {
    type Error = Error;
    fn try_from(r: PresentationRepr) -> Result<Self> {
        let mut theta = BTreeMap::new();
        for (k1, a, k2, b, comb) in r.theta {
            let comb = comb.into_iter().map(|(c, x)| Ok((c, parse_rational(&x)?))).collect::<Result<Vec<_>>>()?;
            theta.insert(((k1, a), (k2, b)), comb);
        }
        GradedAlgebraPresentation::new(r.p, r.q, r.dims, r.names, theta)
    }
}

impl From<GradedAlgebraPresentation> for PresentationRepr {
    fn from(g: GradedAlgebraPresentation) -> Self {
        PresentationRepr {
            p: g.p,
            q: g.q,
            dims: g.dims,
            names: Some(g.names),
            theta: g
                .theta
                .into_iter()
                .map(|(((k1, a), (k2, b)), comb)| (k1, a, k2, b, comb.into_iter().map(|(c, x)| (c, x.to_string())).collect()))
                .collect(),
        }
    }
}

impl GradedAlgebraPresentation {
    /// `dims[k-1]` = dim m_k for 1 ≤ k ≤ q − p. `theta` maps a pair of basis
    /// elements of m_i, m_j to a combination of the basis of m_{i+j}; pairs
    /// that are absent, or whose weight exceeds q − p, multiply to zero.
    pub fn new(
        p: usize,
        q: usize,
        dims: Vec<usize>,
        names: Option<Vec<Vec<String>>>,
        theta: BTreeMap<(BasisElt, BasisElt), Vec<(usize, Rational)>>,
    ) -> Result<Self> {
        if q < p {
            return Err(Error::Invalid(format!("empty range [{p}, {q}]")));
        }
        let top = q - p;
        if dims.len() != top {
            return Err(Error::ShapeMismatch(format!("{} dimensions given for weights 1..={top}", dims.len())));
        }
        let names = match names {
            Some(n) => {
                if n.len() != top || n.iter().zip(&dims).any(|(v, d)| v.len() != *d) {
                    return Err(Error::ShapeMismatch("basis names do not match dims".into()));
                }
                n
            }
            None => (1..=top).map(|k| (0..dims[k - 1]).map(|a| format!("m{k}_{a}")).collect()).collect(),
        };
        let valid = |(k, a): BasisElt| k >= 1 && k <= top && a < dims[k - 1];
        let mut clean = BTreeMap::new();
        for ((x, y), comb) in theta {
            if !valid(x) || !valid(y) {
                return Err(Error::Invalid(format!("product of unknown basis elements {x:?}, {y:?}")));
            }
            let k = x.0 + y.0;
            if k > top {
                continue;
            }
            let mut row = vec![Rational::zero(); dims[k - 1]];
            for (c, v) in comb {
                if c >= dims[k - 1] {
                    return Err(Error::Invalid(format!("product {x:?} {y:?} has unknown term {c} of m_{k}")));
                }
                row[c] += v;
            }
            let sparse: Vec<(usize, Rational)> = row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
            if !sparse.is_empty() {
                clean.insert((x, y), sparse);
            }
        }
        Ok(GradedAlgebraPresentation { p, q, dims, names, theta: clean })
    }

    pub fn range(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// dim m_k (zero outside 1..=q−p).
    pub fn dim(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.dims.get(k - 1).copied().unwrap_or(0)
    }

    pub fn name(&self, (k, a): BasisElt) -> &str {
        &self.names[k - 1][a]
    }

    /// All basis elements in weight order.
    pub fn basis(&self) -> Vec<BasisElt> {
        (1..=self.dims.len()).flat_map(|k| (0..self.dim(k)).map(move |a| (k, a))).collect()
    }

    /// ϑ(x ⊗ y) on basis elements.
    pub fn product(&self, x: BasisElt, y: BasisElt) -> &[(usize, Rational)] {
        self.theta.get(&(x, y)).map_or(&[], Vec::as_slice)
    }

    /// A basis triple with (xy)z ≠ x(yz), if any.
    pub fn associativity_defect(&self) -> Option<(BasisElt, BasisElt, BasisElt)> {
        let basis = self.basis();
        let top = self.dims.len();
        for &x in &basis {
            for &y in &basis {
                for &z in &basis {
                    let k = x.0 + y.0 + z.0;
                    if k > top {
                        continue;
                    }
                    let mut diff = vec![Rational::zero(); self.dim(k)];
                    for (c, v) in self.product(x, y) {
                        for (d, w) in self.product((x.0 + y.0, *c), z) {
                            diff[*d] += v * w;
                        }
                    }
                    for (c, v) in self.product(y, z) {
                        for (d, w) in self.product(x, (y.0 + z.0, *c)) {
                            diff[*d] -= v * w;
                        }
                    }
                    if diff.iter().any(|v| !v.is_zero()) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// The P² algebra on [0, 2]: m₁ = ⟨x₁,x₂,x₃⟩, m₂ = ⟨z_{kl} : k ≤ l⟩,
    /// ϑ(x_k ⊗ x_l) = z_{min,max}.
    pub fn p2() -> Self {
        let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
        let names = vec![
            (1..=3).map(|a| format!("x{a}")).collect(),
            pairs.iter().map(|(k, l)| format!("z{}{}", k + 1, l + 1)).collect(),
        ];
        let mut theta = BTreeMap::new();
        for k in 0..3usize {
            for l in 0..3usize {
                let z = pairs.iter().position(|&pr| pr == (k.min(l), k.max(l))).expect("listed");
                theta.insert(((1, k), (1, l)), vec![(z, Rational::one())]);
            }
        }
        GradedAlgebraPresentation::new(0, 2, vec![3, 6], Some(names), theta).expect("P² presentation is valid")
    }
}

// ---------------------------------------------------------------------------
// Matrices

/// Dense rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged matrix".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// 1 × 1 matrix.
    pub fn scalar(x: Rational) -> Self {
        Matrix { rows: 1, cols: 1, data: vec![x] }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero_entries(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!("{:?} * {:?}", self.shape(), other.shape())));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add_scaled(&mut self, other: &Matrix, c: &Rational) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!("{:?} + {:?}", self.shape(), other.shape())));
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x += y * c;
        }
        Ok(())
    }

    fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        MatrixRepr { rows: self.rows, cols: self.cols, entries: rows }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(serde::de::Error::custom(format!("matrix entries do not match shape {}x{}", r.rows, r.cols)));
        }
        let mut data = Vec::with_capacity(r.rows * r.cols);
        for x in r.entries.iter().flatten() {
            data.push(parse_rational(x).map_err(serde::de::Error::custom)?);
        }
        Ok(Matrix { rows: r.rows, cols: r.cols, data })
    }
}

/// Shape is explicit so that empty matrices round-trip.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

// ---------------------------------------------------------------------------
// Quiver

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
    /// Index into the basis of m_{head − tail}.
    pub basis: usize,
}

/// A path-algebra element: coefficient times a path, the path listed in
/// traversal order (first arrow first).
pub type PathElement = Vec<(Rational, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    p: usize,
    q: usize,
    arrows: Vec<Arrow>,
    relations: Vec<PathElement>,
}

impl Quiver {
    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        self.p..=self.q
    }

    pub fn num_vertices(&self) -> usize {
        self.q - self.p + 1
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn relations(&self) -> &[PathElement] {
        &self.relations
    }

    /// Number of arrows i → j.
    pub fn arrow_count(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.tail == i && a.head == j).count()
    }

    /// Index of the arrow from `tail` labelled by basis element `(k, a)`.
    pub fn arrow_index(&self, tail: usize, (k, a): BasisElt) -> Option<usize> {
        self.arrows.iter().position(|x| x.tail == tail && x.head == tail + k && x.basis == a)
    }
}

/// Builds Q_{[p,q]} and its relations. Non-associative ϑ is rejected.
pub fn build_quiver(a: &GradedAlgebraPresentation) -> Result<Quiver> {
    if let Some((x, y, z)) = a.associativity_defect() {
        return Err(Error::NonAssociative(format!(
            "({} {}) {} != {} ({} {})",
            a.name(x),
            a.name(y),
            a.name(z),
            a.name(x),
            a.name(y),
            a.name(z)
        )));
    }
    let mut arrows = Vec::new();
    for i in a.p..=a.q {
        for j in i + 1..=a.q {
            for b in 0..a.dim(j - i) {
                arrows.push(Arrow { tail: i, head: j, basis: b });
            }
        }
    }
    let mut quiver = Quiver { p: a.p, q: a.q, arrows, relations: Vec::new() };
    let mut relations = Vec::new();
    for (bi, b) in quiver.arrows.iter().enumerate() {
        for (ai, x) in quiver.arrows.iter().enumerate() {
            if x.tail != b.head {
                continue;
            }
            let la = (x.head - x.tail, x.basis);
            let lb = (b.head - b.tail, b.basis);
            let mut rel: PathElement = Vec::new();
            for (c, v) in a.product(la, lb) {
                let direct = quiver.arrow_index(b.tail, (la.0 + lb.0, *c)).expect("arrow exists for every basis element");
                rel.push((v.clone(), vec![direct]));
            }
            rel.push((-Rational::one(), vec![bi, ai]));
            relations.push(rel);
        }
    }
    quiver.relations = relations;
    Ok(quiver)
}

// ---------------------------------------------------------------------------
// Representations

/// A representation: dimension vector indexed by vertex − p and one matrix
/// W_tail → W_head (γ_head × γ_tail) per arrow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rep {
    pub gamma: Vec<usize>,
    pub matrices: Vec<Matrix>,
}

impl Rep {
    pub fn new(quiver: &Quiver, gamma: Vec<usize>, matrices: Vec<Matrix>) -> Result<Self> {
        let rep = Rep { gamma, matrices };
        rep.check_shapes(quiver)?;
        Ok(rep)
    }

    pub fn zero(quiver: &Quiver, gamma: Vec<usize>) -> Result<Self> {
        let matrices = quiver
            .arrows
            .iter()
            .map(|a| Matrix::zeros(gamma.get(a.head - quiver.p).copied().unwrap_or(0), gamma.get(a.tail - quiver.p).copied().unwrap_or(0)))
            .collect();
        Rep::new(quiver, gamma, matrices)
    }

    pub fn check_shapes(&self, quiver: &Quiver) -> Result<()> {
        if self.gamma.len() != quiver.num_vertices() {
            return Err(Error::ShapeMismatch(format!("{} dimensions for {} vertices", self.gamma.len(), quiver.num_vertices())));
        }
        if self.matrices.len() != quiver.arrows.len() {
            return Err(Error::ShapeMismatch(format!("{} matrices for {} arrows", self.matrices.len(), quiver.arrows.len())));
        }
        for (a, m) in quiver.arrows.iter().zip(&self.matrices) {
            let want = (self.gamma[a.head - quiver.p], self.gamma[a.tail - quiver.p]);
            if m.shape() != want {
                return Err(Error::ShapeMismatch(format!("arrow {}->{} #{} has shape {:?}, expected {want:?}", a.tail, a.head, a.basis, m.shape())));
            }
        }
        Ok(())
    }

    /// The degree-one element x with x(α)|_{W_i} = matrix of the arrow (i, α).
    pub fn to_l_element(&self, quiver: &Quiver) -> LElement {
        let mut value = BTreeMap::new();
        for (a, m) in quiver.arrows.iter().zip(&self.matrices) {
            value.insert((vec![(a.head - a.tail, a.basis)], a.tail), m.clone());
        }
        LElement { n: 1, value }
    }
}

/// A grade-preserving multilinear map m^{⊗n} → End(W_•): for each tuple of
/// basis elements and source vertex i, a matrix W_i → W_{i+Σk}. Missing
/// entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LElement {
    pub n: usize,
    pub value: BTreeMap<(Vec<BasisElt>, usize), Matrix>,
}

impl LElement {
    pub fn is_zero(&self) -> bool {
        self.value.values().all(Matrix::is_zero)
    }

    /// Entries that are not identically zero.
    pub fn nonzero(&self) -> impl Iterator<Item = (&(Vec<BasisElt>, usize), &Matrix)> {
        self.value.iter().filter(|(_, m)| !m.is_zero())
    }
}

/// (a₁ ⊗ a₂) ↦ x(a₁a₂) − x(a₁)∘x(a₂), evaluated on every vertex.
pub fn mc_residual(x: &LElement, a: &GradedAlgebraPresentation, gamma: &[usize]) -> Result<LElement> {
    if x.n != 1 {
        return Err(Error::ShapeMismatch(format!("Maurer–Cartan residual needs a degree-one element, got n = {}", x.n)));
    }
    if gamma.len() != a.q - a.p + 1 {
        return Err(Error::ShapeMismatch(format!("{} dimensions for range [{}, {}]", gamma.len(), a.p, a.q)));
    }
    let dim = |v: usize| gamma[v - a.p];
    for ((tuple, i), m) in &x.value {
        let k: usize = tuple.iter().map(|b| b.0).sum();
        if *i < a.p || i + k > a.q || m.shape() != (dim(i + k), dim(*i)) {
            return Err(Error::ShapeMismatch(format!("x({tuple:?}) at vertex {i} has shape {:?}", m.shape())));
        }
    }
    let eval = |b: BasisElt, i: usize| -> Matrix {
        x.value.get(&(vec![b], i)).cloned().unwrap_or_else(|| Matrix::zeros(dim(i + b.0), dim(i)))
    };
    let basis = a.basis();
    let mut value = BTreeMap::new();
    for &a1 in &basis {
        for &a2 in &basis {
            let k = a1.0 + a2.0;
            for i in a.p..=a.q {
                if i + k > a.q {
                    continue;
                }
                let mut r = Matrix::zeros(dim(i + k), dim(i));
                for (c, v) in a.product(a1, a2) {
                    r.add_scaled(&eval((k, *c), i), v)?;
                }
                let comp = eval(a1, i + a2.0).mul(&eval(a2, i))?;
                r.add_scaled(&comp, &-Rational::one())?;
                value.insert((vec![a1, a2], i), r);
            }
        }
    }
    Ok(LElement { n: 2, value })
}

/// Evaluates a path-algebra element on a representation.
pub fn evaluate(rel: &PathElement, rep: &Rep, quiver: &Quiver) -> Result<Matrix> {
    let mut acc: Option<Matrix> = None;
    for (c, path) in rel {
        let first = &quiver.arrows[path[0]];
        let mut m = rep.matrices[path[0]].clone();
        let mut at = first.head;
        for &ai in &path[1..] {
            let arrow = &quiver.arrows[ai];
            if arrow.tail != at {
                return Err(Error::Invalid("path is not composable".into()));
            }
            m = rep.matrices[ai].mul(&m)?;
            at = arrow.head;
        }
        match acc.as_mut() {
            None => {
                let mut z = Matrix::zeros(m.rows, m.cols);
                z.add_scaled(&m, c)?;
                acc = Some(z);
            }
            Some(x) => x.add_scaled(&m, c)?,
        }
    }
    Ok(acc.unwrap_or_else(|| Matrix::zeros(0, 0)))
}

/// Whether every relation evaluates to zero.
pub fn satisfies_relations(rep: &Rep, quiver: &Quiver) -> Result<bool> {
    rep.check_shapes(quiver)?;
    for rel in &quiver.relations {
        if !evaluate(rel, rep, quiver)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    SemistableOnly,
    Unstable,
}

/// Stability of a thin representation: a nonzero proper arrow-closed vertex
/// set S destabilizes unless q ∈ S and p ∉ S (strictly), with equality of
/// the two memberships only semistable.
pub fn thin_stability(rep: &Rep, quiver: &Quiver) -> Result<Stability> {
    rep.check_shapes(quiver)?;
    if rep.gamma.iter().any(|&g| g != 1) {
        return Err(Error::NotThin(rep.gamma.clone()));
    }
    let nv = quiver.num_vertices();
    if nv > 24 {
        return Err(Error::Invalid(format!("{nv} vertices is too many for subset enumeration")));
    }
    let edges: Vec<(usize, usize)> = quiver
        .arrows
        .iter()
        .zip(&rep.matrices)
        .filter(|(_, m)| !m.is_zero())
        .map(|(a, _)| (a.tail - quiver.p, a.head - quiver.p))
        .collect();
    let full = (1u32 << nv) - 1;
    let mut result = Stability::Stable;
    for s in 1..full {
        if edges.iter().any(|&(t, h)| s & (1 << t) != 0 && s & (1 << h) == 0) {
            continue;
        }
        let in_p = i32::from(s & 1 != 0);
        let in_q = i32::from(s & (1 << (nv - 1)) != 0);
        // dim W_p · dim W'_q − dim W_q · dim W'_p
        let slope = in_q - in_p;
        if slope < 0 {
            return Ok(Stability::Unstable);
        }
        if slope == 0 {
            result = Stability::SemistableOnly;
        }
    }
    Ok(result)
}

/// Thin P² representation with arrow values x_a on 0 → 1, y_a on 1 → 2 and
/// z_{kl} on 0 → 2 (z indexed as in [`GradedAlgebraPresentation::p2`]).
pub fn p2_thin_rep(quiver: &Quiver, x: [i64; 3], y: [i64; 3], z: [i64; 6]) -> Rep {
    let mut matrices = Vec::new();
    for a in quiver.arrows() {
        let v = match (a.tail, a.head) {
            (0, 1) => x[a.basis],
            (1, 2) => y[a.basis],
            (0, 2) => z[a.basis],
            _ => unreachable!("P² quiver has vertices 0..=2"),
        };
        matrices.push(Matrix::scalar(Rational::from_integer(v.into())));
    }
    Rep::new(quiver, vec![1, 1, 1], matrices).expect("thin shapes")
}

/// The point x = y = (2, 3, 1), z_{kl} = x_k x_l.
pub fn p2_point_rep(quiver: &Quiver) -> Rep {
    let x = [2, 3, 1];
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let z = pairs.map(|(k, l)| x[k] * x[l]);
    p2_thin_rep(quiver, x, x, z)
}

/// A graded left A-module restricted to the quiver: W_v = A_{v−p−shift}
/// (A_0 = C, zero below) with arrows acting by left multiplication.
pub fn module_rep(a: &GradedAlgebraPresentation, quiver: &Quiver, shift: usize) -> Rep {
    let dim_a = |k: isize| -> usize {
        match k {
            0 => 1,
            k if k > 0 => a.dim(k as usize),
            _ => 0,
        }
    };
    let gamma: Vec<usize> = (a.p..=a.q).map(|v| dim_a(v as isize - a.p as isize - shift as isize)).collect();
    let mut matrices = Vec::new();
    for arrow in quiver.arrows() {
        let k = arrow.head - arrow.tail;
        let src = arrow.tail as isize - a.p as isize - shift as isize;
        let (rows, cols) = (gamma[arrow.head - a.p], gamma[arrow.tail - a.p]);
        let mut m = Matrix::zeros(rows, cols);
        if src == 0 {
            // α · 1 = α
            m.set(arrow.basis, 0, Rational::one());
        } else if src > 0 {
            for col in 0..cols {
                for (c, v) in a.product((k, arrow.basis), (src as usize, col)) {
                    m.set(*c, col, v.clone());
                }
            }
        }
        matrices.push(m);
    }
    Rep::new(quiver, gamma, matrices).expect("module shapes")
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
struct QuiverRepr {
    vertices: Vec<usize>,
    arrows: Vec<(usize, usize, usize)>,
    relations: Vec<Vec<(String, Vec<usize>)>>,
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuiverRepr {
            vertices: self.vertices().collect(),
            arrows: self.arrows.iter().map(|a| (a.tail, a.head, a.basis)).collect(),
            relations: self.relations.iter().map(|r| r.iter().map(|(c, p)| (c.to_string(), p.clone())).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = QuiverRepr::deserialize(d)?;
        let (Some(&p), Some(&q)) = (r.vertices.first(), r.vertices.last()) else {
            return Err(serde::de::Error::custom("quiver needs at least one vertex"));
        };
        if r.vertices != (p..=q).collect::<Vec<_>>() {
            return Err(serde::de::Error::custom("vertices must be a consecutive range"));
        }
        let arrows: Vec<Arrow> = r.arrows.into_iter().map(|(tail, head, basis)| Arrow { tail, head, basis }).collect();
        if arrows.iter().any(|a| a.tail < p || a.head > q || a.head <= a.tail) {
            return Err(serde::de::Error::custom("arrow outside the vertex range"));
        }
        let mut relations = Vec::new();
        for rel in r.relations {
            let mut out = Vec::new();
            for (c, path) in rel {
                if path.is_empty() || path.iter().any(|&i| i >= arrows.len()) {
                    return Err(serde::de::Error::custom("relation path refers to unknown arrows"));
                }
                out.push((parse_rational(&c).map_err(serde::de::Error::custom)?, path));
            }
            relations.push(out);
        }
        Ok(Quiver { p, q, arrows, relations })
    }
}
