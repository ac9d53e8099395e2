//! Integer partitions and Littlewood–Richardson coefficients.
//!
//! LR coefficients come from multiplying Schur polynomials in enough
//! variables and peeling off Schur functions by their lex-leading monomial.
//! Schur polynomials themselves are Jacobi–Trudi determinants in the complete
//! homogeneous polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, stripping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (zero beyond the length).
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Single column partition (1^k).
    pub fn column(k: u32) -> Partition {
        Partition(vec![1; k as usize])
    }

    /// Single row partition (k).
    pub fn row(k: u32) -> Partition {
        if k == 0 {
            Partition::empty()
        } else {
            Partition(vec![k])
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in lexicographically descending order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Sparse polynomial in a fixed number of commuting variables.
type Poly = BTreeMap<Vec<u32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let c = out.entry(e).or_insert(0);
            *c += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_axpy(acc: &mut Poly, scale: i64, x: &Poly) {
    for (e, c) in x {
        let v = acc.entry(e.clone()).or_insert(0);
        *v += scale * c;
    }
    acc.retain(|_, c| *c != 0);
}

/// Complete homogeneous symmetric polynomial h_k in `m` variables.
fn complete_h(k: u32, m: usize) -> Poly {
    fn go(k: u32, var: usize, m: usize, cur: &mut Vec<u32>, out: &mut Poly) {
        if var + 1 == m {
            cur[var] = k;
            out.insert(cur.clone(), 1);
            cur[var] = 0;
            return;
        }
        for take in 0..=k {
            cur[var] = take;
            go(k - take, var + 1, m, cur, out);
        }
        cur[var] = 0;
    }
    let mut out = Poly::new();
    if m == 0 {
        if k == 0 {
            out.insert(Vec::new(), 1);
        }
        return out;
    }
    go(k, 0, m, &mut vec![0; m], &mut out);
    out
}

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// the first row, memoised over the set of used columns.
fn poly_det(entries: &[Vec<Poly>], m: usize) -> Poly {
    let n = entries.len();
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    fn minor(row: usize, used: u64, entries: &[Vec<Poly>], m: usize, memo: &mut HashMap<u64, Poly>) -> Poly {
        let n = entries.len();
        if row == n {
            let mut one = Poly::new();
            one.insert(vec![0; m], 1);
            return one;
        }
        if let Some(p) = memo.get(&used) {
            return p.clone();
        }
        let mut acc = Poly::new();
        let mut sign = 1;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = &entries[row][col];
            if !e.is_empty() {
                let sub = minor(row + 1, used | (1 << col), entries, m, memo);
                poly_axpy(&mut acc, sign, &poly_mul(e, &sub));
            }
            sign = -sign;
        }
        memo.insert(used, acc.clone());
        acc
    }
    if n == 0 {
        return Poly::new();
    }
    minor(0, 0, entries, m, &mut memo)
}

/// Schur polynomial s_λ in `m` variables via Jacobi–Trudi.
fn schur_poly(lambda: &Partition, m: usize) -> Poly {
    let l = lambda.len();
    if l == 0 {
        let mut one = Poly::new();
        one.insert(vec![0; m], 1);
        return one;
    }
    if l > m {
        return Poly::new();
    }
    let entries: Vec<Vec<Poly>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = lambda.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        Poly::new()
                    } else {
                        complete_h(k as u32, m)
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries, m)
}

/// Expands the product s_λ · s_μ in the Schur basis. Every coefficient is a
/// Littlewood–Richardson number.
pub fn lr_expand(lambda: &Partition, mu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    type Cache = Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, u64>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    if let Some(hit) = cache.lock().expect("lr cache poisoned").get(&key) {
        return hit.clone();
    }
    let m = lambda.len() + mu.len();
    let mut rest = poly_mul(&schur_poly(lambda, m), &schur_poly(mu, m));
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = rest.iter().next_back() {
        let nu = Partition::new(lead.clone()).expect("leading monomial of a symmetric polynomial is a partition");
        assert!(c > 0, "negative Schur coefficient {c} for {nu}");
        let s = schur_poly(&nu, m);
        poly_axpy(&mut rest, -c, &s);
        out.insert(nu, c as u64);
    }
    let out = Arc::new(out);
    cache.lock().expect("lr cache poisoned").insert(key, out.clone());
    out
}

/// The Littlewood–Richardson coefficient N^ν_{λμ}.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != nu.weight() {
        return 0;
    }
    lr_expand(lambda, mu).get(nu).copied().unwrap_or(0)
}

/// All pairs (μ, ν) with N^λ_{μν} > 0, with their coefficients.
pub fn lr_splittings(lambda: &Partition) -> Vec<(Partition, Partition, u64)> {
    let n = lambda.weight();
    let mut out = Vec::new();
    for k in 0..=n {
        for mu in partitions_of(k) {
            for nu in partitions_of(n - k) {
                let c = lr_coeff(&mu, &nu, lambda);
                if c > 0 {
                    out.push((mu.clone(), nu, c));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn normalization_and_rejection() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn small_lr_values() {
        for lam in partitions_of(4) {
            assert_eq!(lr_coeff(&lam, &Partition::empty(), &lam), 1);
        }
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1, 1]), &p(&[2])), 0);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coeff(&p(&[1]), &p(&[2]), &p(&[2, 1])), 1);
        // s_21 * s_21 contains s_321 twice
        assert_eq!(lr_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
