//! Exact sparse linear algebra over the rationals.
//!
//! Everything downstream (cyclic closures, quotients, Hom spaces) reduces to
//! three primitives here: sparse vectors, an incrementally maintained reduced
//! row-echelon basis, and null spaces of sparse systems.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// A sparse vector with exact rational entries; zero entries are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec(BTreeMap<usize, Q>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        let mut v = SparseVec::new();
        v.0.insert(i, Q::one());
        v
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in pairs {
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_dense(entries: &[Q]) -> Self {
        SparseVec::from_pairs(entries.iter().cloned().enumerate())
    }

    pub fn get(&self, i: usize) -> Q {
        self.0.get(&i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeff(&self, i: usize) -> Option<&Q> {
        self.0.get(&i)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    /// Smallest index carrying a nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Q)> {
        self.0.iter().next().map(|(i, c)| (*i, c))
    }

    pub fn add_at(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&i) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.0.remove(&i);
                }
            }
            None => {
                self.0.insert(i, c.clone());
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_at(i, &(x * c));
        }
    }

    pub fn scaled(&self, c: &Q) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        out
    }

    pub fn to_dense(&self, len: usize) -> Vec<Q> {
        let mut out = vec![Q::zero(); len];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    /// Rescales so that the leading entry is one.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scaled(&inv)
            }
            None => SparseVec::new(),
        }
    }

    /// True when `self` and `other` span the same line (or are both zero).
    pub fn is_proportional(&self, other: &SparseVec) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.0.iter().map(|(i, c)| (i, c.to_string())))
            .finish()
    }
}

/// Reduced row-echelon basis of a subspace, maintained incrementally.
///
/// Each row has a pivot equal to its smallest index, the pivot entry is one,
/// and every other row is zero in that column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Self {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Subtracts the projection onto the span; the result is zero at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut x = v.clone();
        let hits: Vec<(usize, Q)> = x
            .iter()
            .filter(|(i, _)| self.pivot_row.contains_key(i))
            .map(|(i, c)| (i, c.clone()))
            .collect();
        for (p, c) in hits {
            let r = self.pivot_row[&p];
            x.add_scaled(&self.rows[r], &-c);
        }
        x
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span. Returns false when `v` was already in it.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let rem = self.reduce(&v);
        let Some((p, _)) = rem.leading() else {
            return false;
        };
        let rem = rem.normalized();
        for row in self.rows.iter_mut() {
            if let Some(c) = row.coeff(p).cloned() {
                row.add_scaled(&rem, &-c);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(rem);
        true
    }

    /// Coordinates of `v` in the row basis (rows in pivot order), or `None`
    /// when `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Q>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.canonical_rows().map(|(p, _)| v.get(p)).collect())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    /// Rows sorted by pivot column, paired with their pivot.
    pub fn canonical_rows(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.pivot_row.iter().map(|(p, r)| (*p, &self.rows[*r]))
    }

    pub fn into_canonical_rows(self) -> Vec<SparseVec> {
        let mut rows: Vec<Option<SparseVec>> = self.rows.into_iter().map(Some).collect();
        self.pivot_row
            .values()
            .map(|r| rows[*r].take().expect("each row is indexed once"))
            .collect()
    }
}

/// Basis of `{x : eq . x = 0 for all eq}` in reduced echelon form.
pub fn nullspace(equations: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let ech = Echelon::from_vectors(equations);
    let pivots: Vec<usize> = ech.pivots().collect();
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivot_row.contains_key(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = SparseVec::unit(f);
        for &p in &pivots {
            let row = &ech.rows[ech.pivot_row[&p]];
            let c = row.get(f);
            if !c.is_zero() {
                x.add_at(p, &-c);
            }
        }
        basis.push(x);
    }
    Echelon::from_vectors(&basis).into_canonical_rows()
}

/// Column-major sparse matrix: `cols[c]` is the image of the `c`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, x) in v.iter() {
            out.add_scaled(&self.cols[c], x);
        }
        out
    }

    /// `self * other`
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut s = a.clone();
                s.add_scaled(b, &Q::one());
                s
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            cols,
        }
    }

    pub fn scaled(&self, c: &Q) -> SparseMatrix {
        SparseMatrix {
            nrows: self.nrows,
            cols: self.cols.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![SparseVec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                cols[r].add_at(c, x);
            }
        }
        SparseMatrix {
            nrows: self.ncols(),
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn entry(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(r)
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                out.push((r, c, x.clone()));
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Echelon::from_vectors(&self.cols).rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(entries.iter().map(|(i, c)| (*i, q(*c))))
    }

    #[test]
    fn echelon_is_reduced() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 2), (1, 4), (2, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 3)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 4)])));
        let rows = e.into_canonical_rows();
        assert_eq!(rows[0], v(&[(0, 1), (2, -5)]));
        assert_eq!(rows[1], v(&[(1, 1), (2, 3)]));
    }

    #[test]
    fn coordinates_read_off_pivots() {
        let e = Echelon::from_vectors(&[v(&[(0, 1), (2, 1)]), v(&[(1, 1), (2, -1)])]);
        let target = v(&[(0, 3), (1, 2), (2, 1)]);
        assert_eq!(e.coordinates(&target), Some(vec![q(3), q(2)]));
        assert_eq!(e.coordinates(&v(&[(2, 1)])), None);
    }

    #[test]
    fn nullspace_of_single_equation() {
        let ns = nullspace(&[v(&[(0, 1), (1, 1), (2, 1)])], 3);
        assert_eq!(ns.len(), 2);
        for x in &ns {
            let dot: Q = x.iter().map(|(_, c)| c.clone()).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn nullspace_of_empty_system_is_everything() {
        assert_eq!(nullspace(&[], 3).len(), 3);
    }

    #[test]
    fn transpose_and_compose() {
        let m = SparseMatrix {
            nrows: 2,
            cols: vec![v(&[(0, 1)]), v(&[(0, 2), (1, 3)])],
        };
        let mt = m.transpose();
        assert_eq!(mt.entry(1, 0), q(2));
        assert_eq!(m.compose(&SparseMatrix::identity(2)), m);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(q_to_string(&q(1)), "1/1");
        assert_eq!(q_to_string(&q_frac(-2, 4)), "-1/2");
    }
}
