//! Exact sparse linear algebra over ℚ.
//!
//! Elimination runs on integer rows (each rational row is cleared of
//! denominators, then kept primitive), so intermediate growth stays bounded by
//! row contents. Pivots are taken at the leading column of each reduced row,
//! which makes every result (ranks, kernels, particular solutions) a function of
//! the input matrix alone.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graded::{format_scalar, Scalar, SparseMatrix, SparseVec};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinearAlgebraError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("inconsistent system: rank {rank} but augmented rank {augmented_rank}")]
    Inconsistent { rank: usize, augmented_rank: usize },
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// Row-sparse rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{}", self.nrows, self.ncols)?;
        for (i, r) in self.rows.iter().enumerate() {
            let entries: Vec<String> = r.iter().map(|(j, c)| format!("{j}:{}", format_scalar(c))).collect();
            writeln!(f, "  {i}: [{}]", entries.join(", "))?;
        }
        Ok(())
    }
}

impl RationalMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        RationalMatrix { nrows, ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        RationalMatrix { nrows: n, ncols: n, rows: (0..n).map(SparseVec::basis).collect() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.max_index().is_none_or(|m| m < ncols)));
        RationalMatrix { nrows: rows.len(), ncols, rows }
    }

    pub fn from_columns(nrows: usize, cols: &[SparseVec]) -> Self {
        let mut m = RationalMatrix::zero(nrows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.iter() {
                m.rows[i].add_at(j, c);
            }
        }
        m
    }

    pub fn from_sparse(m: &SparseMatrix) -> Self {
        RationalMatrix::from_columns(m.nrows(), m.columns())
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_entries(
            self.nrows,
            self.ncols,
            self.entries().map(|(i, j, c)| (i, j, c.clone())),
        )
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        RationalMatrix::from_rows(ncols, rows.iter().map(|r| SparseVec::from_dense(r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(j)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: &Scalar) {
        debug_assert!(j < self.ncols);
        self.rows[i].add_at(j, c);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, j, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(SparseVec::is_zero)
    }

    pub fn column(&self, j: usize) -> SparseVec {
        SparseVec::from_entries(
            self.rows
                .iter()
                .enumerate()
                .filter_map(|(i, r)| r.coeff(j).map(|c| (i, c.clone()))),
        )
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        SparseVec::from_entries(self.rows.iter().enumerate().map(|(i, r)| (i, r.dot(x))))
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.ncols, other.nrows, "product of incompatible matrices");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = SparseVec::new();
                for (k, c) in r.iter() {
                    out.add_scaled(&other.rows[k], c);
                }
                out
            })
            .collect();
        RationalMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.ncols, self.nrows);
        for (i, j, c) in self.entries() {
            out.rows[j].add_at(i, c);
        }
        out
    }

    /// Reorders rows and columns: new row `i` is old row `row_perm[i]`, likewise columns.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> RationalMatrix {
        let mut inv = vec![0; col_perm.len()];
        for (new, &old) in col_perm.iter().enumerate() {
            inv[old] = new;
        }
        let rows = row_perm
            .iter()
            .map(|&old| self.rows[old].remap(|j| Some(inv[j])))
            .collect();
        RationalMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn rank(&self) -> usize {
        Echelon::of_rows(self.ncols, &self.rows).rank()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in increasing order.
    pub fn kernel(&self) -> Vec<SparseVec> {
        Echelon::of_rows(self.ncols, &self.rows).kernel()
    }

    /// Basis of the column space: the columns of `M` at the pivot positions.
    pub fn image(&self) -> Vec<SparseVec> {
        Echelon::of_rows(self.ncols, &self.rows)
            .pivots()
            .into_iter()
            .map(|j| self.column(j))
            .collect()
    }

    /// Pivot column indices of the reduced row echelon form.
    pub fn pivot_columns(&self) -> Vec<usize> {
        Echelon::of_rows(self.ncols, &self.rows).pivots()
    }

    /// A solution of `M x = b` with all free variables zero.
    pub fn solve(&self, b: &SparseVec) -> Result<SparseVec, LinearAlgebraError> {
        if b.max_index().is_some_and(|m| m >= self.nrows) {
            return Err(LinearAlgebraError::Dimension(format!(
                "right-hand side longer than {} rows",
                self.nrows
            )));
        }
        let n = self.ncols;
        let augmented: Vec<SparseVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.add_at(n, &b.get(i));
                row
            })
            .collect();
        let ech = Echelon::of_rows(n + 1, &augmented);
        let rank = ech.rows.iter().filter(|r| r.pivot() < n).count();
        if rank < ech.rank() {
            return Err(LinearAlgebraError::Inconsistent { rank, augmented_rank: ech.rank() });
        }
        let mut x = SparseVec::new();
        for r in &ech.rows {
            let p = r.pivot();
            let rhs = r.get(n);
            if !rhs.is_zero() {
                x.add_at(p, &Scalar::new(rhs, r.entries[0].1.clone()));
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.ncols;
        let augmented: Vec<SparseVec> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.add_at(n + i, &Scalar::one());
                row
            })
            .collect();
        let ech = Echelon::of_rows(2 * n, &augmented);
        if ech.rows.iter().filter(|r| r.pivot() < n).count() < n {
            return None;
        }
        let mut out = RationalMatrix::zero(n, n);
        for r in &ech.rows {
            let p = r.pivot();
            let lead = r.entries[0].1.clone();
            for (j, c) in r.entries.iter().filter(|(j, _)| *j >= n) {
                out.rows[p].add_at(j - n, &Scalar::new(c.clone(), lead.clone()));
            }
        }
        Some(out)
    }
}

/// A primitive integer row: sorted nonzero entries with positive leading coefficient
/// and content 1.
#[derive(Clone, Debug)]
struct IntRow {
    entries: Vec<(usize, BigInt)>,
}

impl IntRow {
    fn from_rational(v: &SparseVec) -> IntRow {
        let mut l = BigInt::one();
        for (_, c) in v.iter() {
            l = l.lcm(c.denom());
        }
        let entries = v
            .iter()
            .map(|(j, c)| (j, c.numer() * (&l / c.denom())))
            .collect();
        let mut row = IntRow { entries };
        row.normalize();
        row
    }

    fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn pivot(&self) -> usize {
        self.entries[0].0
    }

    fn get(&self, j: usize) -> BigInt {
        match self.entries.binary_search_by_key(&j, |(k, _)| *k) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    fn normalize(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.entries {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.entries.is_empty() {
            return;
        }
        if self.entries[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.entries {
                *c = &*c / &g;
            }
        }
    }

    /// `a·self − b·other`, made primitive.
    fn combine(&self, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let take_self = j == other.entries.len()
                || (i < self.entries.len() && self.entries[i].0 < other.entries[j].0);
            let take_other = i == self.entries.len()
                || (j < other.entries.len() && other.entries[j].0 < self.entries[i].0);
            if take_self {
                out.push((self.entries[i].0, a * &self.entries[i].1));
                i += 1;
            } else if take_other {
                out.push((other.entries[j].0, -(b * &other.entries[j].1)));
                j += 1;
            } else {
                let c = a * &self.entries[i].1 - b * &other.entries[j].1;
                if !c.is_zero() {
                    out.push((self.entries[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        let mut row = IntRow { entries: out };
        row.normalize();
        row
    }
}

/// Fully reduced integer row echelon form, built one row at a time.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn of_rows<'a>(ncols: usize, rows: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    /// Adds a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let mut r = IntRow::from_rational(v);
        for b in &self.rows {
            if r.is_zero() {
                break;
            }
            let c = r.get(b.pivot());
            if !c.is_zero() {
                r = r.combine(&b.entries[0].1, b, &c);
            }
        }
        if r.is_zero() {
            return false;
        }
        let p = r.pivot();
        let lead = r.entries[0].1.clone();
        for b in &mut self.rows {
            let c = b.get(p);
            if !c.is_zero() {
                *b = b.combine(&lead, &r, &c);
            }
        }
        let pos = self.rows.partition_point(|b| b.pivot() < p);
        self.rows.insert(pos, r);
        true
    }

    /// Whether `v` lies in the row space.
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut r = IntRow::from_rational(v);
        for b in &self.rows {
            if r.is_zero() {
                return true;
            }
            let c = r.get(b.pivot());
            if !c.is_zero() {
                r = r.combine(&b.entries[0].1, b, &c);
            }
        }
        r.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(IntRow::pivot).collect()
    }

    /// Rows of the reduced row echelon form, pivots normalized to 1.
    pub fn reduced_rows(&self) -> Vec<SparseVec> {
        self.rows
            .iter()
            .map(|r| {
                let lead = &r.entries[0].1;
                SparseVec::from_entries(r.entries.iter().map(|(j, c)| (*j, Scalar::new(c.clone(), lead.clone()))))
            })
            .collect()
    }

    pub fn kernel(&self) -> Vec<SparseVec> {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = SparseVec::basis(f);
                for r in &self.rows {
                    let c = r.get(f);
                    if !c.is_zero() {
                        x.add_at(r.pivot(), &-Scalar::new(c, r.entries[0].1.clone()));
                    }
                }
                x
            })
            .collect()
    }
}

/// A subspace with a fixed basis and exact coordinate extraction.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    echelon: Echelon,
}

impl Subspace {
    pub fn new(ambient: usize, basis: Vec<SparseVec>) -> Result<Self, LinearAlgebraError> {
        let k = basis.len();
        let mut echelon = Echelon::new(ambient + k);
        for (i, b) in basis.iter().enumerate() {
            if b.max_index().is_some_and(|m| m >= ambient) {
                return Err(LinearAlgebraError::Dimension("basis vector outside ambient space".into()));
            }
            let mut row = b.clone();
            row.add_at(ambient + i, &Scalar::one());
            echelon.insert(&row);
        }
        if echelon.rows.iter().any(|r| r.pivot() >= ambient) {
            return Err(LinearAlgebraError::Dependent);
        }
        Ok(Subspace { ambient, basis, echelon })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut coords = SparseVec::new();
        let mut residual = v.clone();
        for r in &self.echelon.rows {
            let p = r.pivot();
            let a = v.get(p);
            if a.is_zero() {
                continue;
            }
            let lead = Scalar::from_integer(r.entries[0].1.clone());
            let factor = a / lead;
            for (j, c) in &r.entries {
                let term = Scalar::from_integer(c.clone()) * &factor;
                if *j < self.ambient {
                    residual.add_at(*j, &-term);
                } else {
                    coords.add_at(j - self.ambient, &term);
                }
            }
        }
        residual.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coordinates(v).is_some()
    }

    /// `Σ c_i b_i`.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in coords.iter() {
            out.add_scaled(&self.basis[i], c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{frac, int};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_and_zero() {
        let id = RationalMatrix::identity(3);
        assert!(id.kernel().is_empty());
        assert_eq!(id.image().len(), 3);
        let z = RationalMatrix::zero(2, 3);
        assert_eq!(z.kernel().len(), 3);
        assert!(z.image().is_empty());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).is_zero());
        }
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn solve_and_inconsistency() {
        let a = m(&[&[2, 0], &[0, 3], &[1, 1]]);
        let b = SparseVec::from_dense(&[int(1), int(1), frac(5, 6)]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        let bad = SparseVec::from_dense(&[int(1), int(1), int(1)]);
        assert_eq!(
            a.solve(&bad),
            Err(LinearAlgebraError::Inconsistent { rank: 2, augmented_rank: 3 })
        );
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RationalMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let s = Subspace::new(
            3,
            vec![
                SparseVec::from_dense(&[int(1), int(1), int(0)]),
                SparseVec::from_dense(&[int(0), int(1), int(1)]),
            ],
        )
        .unwrap();
        let v = SparseVec::from_dense(&[int(2), int(5), int(3)]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        assert!(s.coordinates(&SparseVec::basis(0)).is_none());
        assert!(Subspace::new(2, vec![SparseVec::basis(0), SparseVec::basis(0)]).is_err());
    }
}
