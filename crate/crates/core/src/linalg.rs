//! Exact row reduction over the rationals.
//!
//! Spans are grown one vector at a time in an [`Echelon`]: each stored row
//! has a leading one in its pivot column and zeros to the left of it, so a
//! single left-to-right sweep reduces a candidate vector.

use num_traits::{One, Zero};

use crate::Rational;

#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Option<Vec<Rational>>>,
    rank: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: vec![None; dim], rank: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.dim
    }

    /// Reduces `v` against the stored rows in place. Afterwards `v` is zero
    /// iff it lay in the span.
    pub fn reduce(&self, v: &mut [Rational]) {
        assert_eq!(v.len(), self.dim, "vector length does not match echelon dimension");
        for c in 0..self.dim {
            if v[c].is_zero() {
                continue;
            }
            if let Some(row) = &self.rows[c] {
                let factor = v[c].clone();
                for (k, r) in row.iter().enumerate().skip(c) {
                    if !r.is_zero() {
                        v[k] -= &factor * r;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &v[pivot];
        for x in v.iter_mut().skip(pivot) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows[pivot] = Some(v);
        self.rank += 1;
        true
    }
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else { return 0 };
    let mut e = Echelon::new(first.len());
    for r in rows {
        e.insert(r.clone());
        if e.is_full() {
            break;
        }
    }
    e.rank()
}
