//! Slow, independent reference computations.
//!
//! Nothing here shares code with the engine: partitions are plain slices,
//! characters are maps from exponent vectors to integers, and every answer
//! comes from direct enumeration or an explicit matrix rank.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;

/// Integer Laurent polynomial: exponent vector → coefficient.
pub type Poly = BTreeMap<Vec<i32>, i64>;

/// Number of Littlewood–Richardson tableaux of shape ν/λ and content μ, i.e.
/// semistandard fillings whose right-to-left, top-to-bottom reading word is
/// a lattice word.
pub fn lr_tableaux(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let total = |p: &[u32]| p.iter().sum::<u32>();
    if total(lambda) + total(mu) != total(nu) || lambda.len() > nu.len() {
        return 0;
    }
    let inner = |r: usize| lambda.get(r).copied().unwrap_or(0) as usize;
    if (0..nu.len()).any(|r| inner(r) > nu[r] as usize) {
        return 0;
    }
    // boxes in reading order: rows top to bottom, each right to left
    let mut boxes = Vec::new();
    for (r, &len) in nu.iter().enumerate() {
        for c in (inner(r)..len as usize).rev() {
            boxes.push((r, c));
        }
    }
    let mut grid: Vec<Vec<u32>> = nu.iter().map(|&l| vec![0; l as usize]).collect();
    let mut count = vec![0u32; mu.len()];
    fn go(
        idx: usize,
        boxes: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        count: &mut Vec<u32>,
        mu: &[u32],
        inner: &dyn Fn(usize) -> usize,
    ) -> u64 {
        if idx == boxes.len() {
            return u64::from(count.iter().zip(mu).all(|(a, b)| a == b));
        }
        let (r, c) = boxes[idx];
        let mut total = 0;
        for v in 1..=mu.len() as u32 {
            let k = (v - 1) as usize;
            if count[k] >= mu[k] {
                continue;
            }
            // lattice: never more v's than (v−1)'s so far
            if v > 1 && count[k] + 1 > count[k - 1] {
                continue;
            }
            // row weakly increasing: the box to the right is already filled
            if c + 1 < grid[r].len() && grid[r][c + 1] < v {
                continue;
            }
            // column strictly increasing
            if r > 0 && c >= inner(r - 1) && c < grid[r - 1].len() && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            count[k] += 1;
            total += go(idx + 1, boxes, grid, count, mu, inner);
            count[k] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    go(0, &boxes, &mut grid, &mut count, mu, &inner)
}

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Witt's formula for the dimension of the degree-n part of the free Lie
/// algebra on m even generators.
pub fn witt_dimension(n: u64, m: i64) -> i64 {
    let mut total = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += mobius(d) * m.pow((n / d) as u32);
        }
    }
    total / n as i64
}

/// A homogeneous basis vector of a super vector space with a torus weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub odd: bool,
    pub weight: Vec<i32>,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// σ · (v_0 ⊗ ⋯ ⊗ v_{k−1}) puts v_i in position σ(i), with the Koszul sign
/// of every pair of odd vectors whose order is reversed.
fn act(perm: &[usize], tuple: &[usize], basis: &[BasisVector]) -> (Vec<usize>, i64) {
    let mut out = vec![0; tuple.len()];
    for (i, &t) in tuple.iter().enumerate() {
        out[perm[i]] = t;
    }
    let mut s = 1;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if perm[i] > perm[j] && basis[tuple[i]].odd && basis[tuple[j]].odd {
                s = -s;
            }
        }
    }
    (out, s)
}

fn rank(mut rows: Vec<Vec<Ratio<i64>>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let p = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= p;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = rows[r][j] * f;
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Super character (even, odd) of the image of the Young symmetrizer
/// c_λ = (Σ_{row} p)(Σ_{col} sgn(q) q) on V^{⊗k}, weight space by weight
/// space, where k = |λ|.
pub fn schur_functor_character(basis: &[BasisVector], lambda: &[usize]) -> (Poly, Poly) {
    let k: usize = lambda.iter().sum();
    let nvars = basis.first().map_or(0, |b| b.weight.len());
    // boxes numbered row by row
    let mut row_of = Vec::new();
    let mut col_of = Vec::new();
    for (r, &len) in lambda.iter().enumerate() {
        for c in 0..len {
            row_of.push(r);
            col_of.push(c);
        }
    }
    let perms = permutations(k);
    let rows: Vec<&Vec<usize>> = perms.iter().filter(|p| (0..k).all(|i| row_of[p[i]] == row_of[i])).collect();
    let cols: Vec<&Vec<usize>> = perms.iter().filter(|p| (0..k).all(|i| col_of[p[i]] == col_of[i])).collect();

    // group tuples by their multiset of basis indices
    let n = basis.len();
    let mut blocks: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    let total = n.pow(k as u32);
    for idx in 0..total {
        let mut t = Vec::with_capacity(k);
        let mut x = idx;
        for _ in 0..k {
            t.push(x % n);
            x /= n;
        }
        let mut key = t.clone();
        key.sort();
        blocks.entry(key).or_default().push(t);
    }

    let mut even = Poly::new();
    let mut odd = Poly::new();
    for (key, tuples) in blocks {
        let pos: BTreeMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut images = Vec::new();
        for t in &tuples {
            let mut v = vec![Ratio::<i64>::zero(); tuples.len()];
            for q in &cols {
                let (tq, sq) = act(q, t, basis);
                let sq = sq * sign(q);
                for p in &rows {
                    let (tp, sp) = act(p, &tq, basis);
                    v[pos[&tp]] += Ratio::from_integer(sq * sp);
                }
            }
            images.push(v);
        }
        let rk = rank(images) as i64;
        if rk == 0 {
            continue;
        }
        let mut weight = vec![0; nvars];
        let mut parity = false;
        for &b in &key {
            for (w, e) in weight.iter_mut().zip(&basis[b].weight) {
                *w += e;
            }
            parity ^= basis[b].odd;
        }
        let target = if parity { &mut odd } else { &mut even };
        *target.entry(weight).or_insert(0) += rk;
    }
    (even, odd)
}

/// Exact rank of an integer matrix.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    rank(rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lr_small() {
        assert_eq!(lr_tableaux(&[1], &[1, 1], &[2, 1]), 1);
        assert_eq!(lr_tableaux(&[1], &[2], &[2, 1]), 1);
        assert_eq!(lr_tableaux(&[1], &[1, 1], &[2]), 0);
        assert_eq!(lr_tableaux(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_tableaux(&[], &[2, 1], &[2, 1]), 1);
    }

    #[test]
    fn witt_values() {
        let v: Vec<i64> = (1..=6).map(|n| witt_dimension(n, 2)).collect();
        assert_eq!(v, vec![2, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn symmetrizers() {
        let even = |w: i32| BasisVector { odd: false, weight: vec![w] };
        let odd = |w: i32| BasisVector { odd: true, weight: vec![w] };
        // S² of a 2-dim even space: t^2, t^1, t^0 for weights 1, 0
        let (e, o) = schur_functor_character(&[even(1), even(0)], &[2]);
        assert_eq!(e, Poly::from([(vec![0], 1), (vec![1], 1), (vec![2], 1)]));
        assert!(o.is_empty());
        // S² of one odd vector vanishes, Λ³ of it does not
        let (e, o) = schur_functor_character(&[odd(1)], &[2]);
        assert!(e.is_empty() && o.is_empty());
        let (e, o) = schur_functor_character(&[odd(1)], &[1, 1, 1]);
        assert!(e.is_empty());
        assert_eq!(o, Poly::from([(vec![3], 1)]));
    }
}
