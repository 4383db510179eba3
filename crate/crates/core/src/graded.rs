//! Exact graded linear algebra over the rationals.
//!
//! Everything in this crate is expressed in terms of finite, named bases with
//! integer degrees. Vectors and matrices are sparse and basis-indexed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Errors raised by the graded layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GradedError {
    #[error("permutation of length {perm} does not match {degrees} degrees")]
    LengthMismatch { perm: usize, degrees: usize },
    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("entry ({row}, {col}) joins degree {from} to degree {to}, expected a map of degree {expected}")]
    DegreeMismatch { row: usize, col: usize, from: i32, to: i32, expected: i32 },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid rational literal `{0}`")]
    InvalidScalar(String),
}

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The fraction `n/d`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^e`.
pub fn sign_pow(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, GradedError> {
    let bad = || GradedError::InvalidScalar(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A finite graded vector space given by a named, ordered basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    names: Vec<String>,
    degrees: Vec<i32>,
}

impl fmt::Debug for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.names.iter().zip(&self.degrees))
            .finish()
    }
}

impl GradedSpace {
    pub fn new<S: Into<String>>(basis: impl IntoIterator<Item = (S, i32)>) -> Result<Self, GradedError> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        for (name, deg) in basis {
            let name = name.into();
            if names.contains(&name) {
                return Err(GradedError::DuplicateName(name));
            }
            names.push(name);
            degrees.push(deg);
        }
        Ok(GradedSpace { names, degrees })
    }

    pub fn zero() -> Self {
        GradedSpace { names: Vec::new(), degrees: Vec::new() }
    }

    /// Space with basis `prefix1, prefix2, …` all in one degree.
    pub fn uniform(prefix: &str, dim: usize, degree: i32) -> Self {
        GradedSpace {
            names: (1..=dim).map(|i| format!("{prefix}{i}")).collect(),
            degrees: vec![degree; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().min()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.iter().copied().max()
    }

    /// Basis indices sitting in degree `d`.
    pub fn indices_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    /// `V[k]`: an element of degree `n` in `V` has degree `n - k` in `V[k]`.
    pub fn shift(&self, k: i32) -> Self {
        GradedSpace {
            names: self.names.clone(),
            degrees: self.degrees.iter().map(|d| d - k).collect(),
        }
    }

    /// Direct sum; the second summand's basis follows the first.
    pub fn direct_sum(&self, other: &GradedSpace) -> Result<Self, GradedError> {
        GradedSpace::new(
            self.names
                .iter()
                .cloned()
                .zip(self.degrees.iter().copied())
                .chain(other.names.iter().cloned().zip(other.degrees.iter().copied())),
        )
    }

    /// Tensor product; basis `(a, b)` sits at index `a * other.dim() + b`.
    pub fn tensor(&self, other: &GradedSpace) -> Self {
        let mut names = Vec::with_capacity(self.dim() * other.dim());
        let mut degrees = Vec::with_capacity(self.dim() * other.dim());
        for a in 0..self.dim() {
            for b in 0..other.dim() {
                names.push(format!("{}*{}", self.names[a], other.names[b]));
                degrees.push(self.degrees[a] + other.degrees[b]);
            }
        }
        GradedSpace { names, degrees }
    }

    /// `k`-th tensor power, flattened lexicographically (first factor slowest).
    pub fn tensor_power(&self, k: usize) -> Self {
        if k == 0 {
            return GradedSpace { names: vec!["1".to_string()], degrees: vec![0] };
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.tensor(self);
        }
        out
    }

    /// `End(V)`; basis `E_{ij}: e_j ↦ e_i` at index `i * dim + j`, degree `|e_i| - |e_j|`.
    pub fn endomorphisms(&self) -> Self {
        let n = self.dim();
        let mut names = Vec::with_capacity(n * n);
        let mut degrees = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                names.push(format!("{}<-{}", self.names[i], self.names[j]));
                degrees.push(self.degrees[i] - self.degrees[j]);
            }
        }
        GradedSpace { names, degrees }
    }

    /// Renders `v` as `c·name + …`, or `0`.
    pub fn format_vector(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        v.iter()
            .map(|(i, c)| format!("{}·{}", format_scalar(c), self.name(i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Degree of a vector if it is homogeneous and nonzero.
    pub fn homogeneous_degree(&self, v: &SparseVec) -> Option<i32> {
        let mut it = v.iter().map(|(i, _)| self.degrees[i]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

/// Sparse vector: basis index → nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseVec(BTreeMap<usize, Scalar>);

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.0.iter().map(|(i, c)| (i, format_scalar(c))))
            .finish()
    }
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        let mut v = SparseVec::new();
        v.0.insert(i, Scalar::one());
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in entries {
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_dense(dense: &[Scalar]) -> Self {
        SparseVec::from_entries(dense.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in self.iter() {
            out[i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeff(&self, i: usize) -> Option<&Scalar> {
        self.0.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    /// `self[i] += c`, pruning zeros.
    pub fn add_at(&mut self, i: usize, c: &Scalar) {
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

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add_at(i, &(x * c));
        }
    }

    pub fn add_assign(&mut self, other: &SparseVec) {
        for (i, x) in other.iter() {
            self.add_at(i, x);
        }
    }

    pub fn sub_assign(&mut self, other: &SparseVec) {
        for (i, x) in other.iter() {
            self.add_at(i, &-x);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn negated(&self) -> SparseVec {
        SparseVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    pub fn sum(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn difference(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, x) in self.iter() {
            if let Some(y) = other.coeff(i) {
                acc += x * y;
            }
        }
        acc
    }

    /// Reindexes through `f`; entries mapped to `None` are dropped.
    pub fn remap(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, x) in self.iter() {
            if let Some(j) = f(i) {
                out.add_at(j, x);
            }
        }
        out
    }
}

/// Sparse matrix stored by columns: `cols[j]` is the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}) ", self.nrows, self.cols.len())?;
        f.debug_map()
            .entries(
                self.entries()
                    .map(|(i, j, c)| ((i, j), format_scalar(c))),
            )
            .finish()
    }
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { nrows: n, cols: (0..n).map(SparseVec::basis).collect() }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn from_entries(nrows: usize, ncols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut m = SparseMatrix::zero(nrows, ncols);
        for (i, j, c) in entries {
            m.add_entry(i, j, &c);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].get(i)
    }

    pub fn add_entry(&mut self, i: usize, j: usize, c: &Scalar) {
        debug_assert!(i < self.nrows);
        self.cols[j].add_at(i, c);
    }

    /// Nonzero entries as `(row, col, value)`, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (i, j, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.add_scaled(&self.cols[j], c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "composition of incompatible matrices");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &SparseMatrix, c: &Scalar) {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()));
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.add_scaled(b, c);
        }
    }

    pub fn sum(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn difference(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scaled(&self, c: &Scalar) -> SparseMatrix {
        SparseMatrix { nrows: self.nrows, cols: self.cols.iter().map(|v| v.scaled(c)).collect() }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.ncols(), self.nrows);
        for (i, j, c) in self.entries() {
            out.cols[i].add_at(j, c);
        }
        out
    }

    /// Flattens into `End` coordinates: entry `(i, j)` goes to index `i * nrows + j`.
    pub fn to_end_vector(&self) -> SparseVec {
        let n = self.nrows;
        SparseVec::from_entries(self.entries().map(|(i, j, c)| (i * n + j, c.clone())))
    }

    /// Inverse of [`SparseMatrix::to_end_vector`] for a square `n × n` matrix.
    pub fn from_end_vector(n: usize, v: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_entries(n, n, v.iter().map(|(k, c)| (k / n, k % n, c.clone())))
    }

    /// Kronecker product with the row/column flattening of [`GradedSpace::tensor`].
    pub fn kronecker(&self, other: &SparseMatrix) -> SparseMatrix {
        let (r2, c2) = (other.nrows, other.ncols());
        let mut out = SparseMatrix::zero(self.nrows * r2, self.ncols() * c2);
        for (i1, j1, a) in self.entries() {
            for (i2, j2, b) in other.entries() {
                out.add_entry(i1 * r2 + i2, j1 * c2 + j2, &(a * b));
            }
        }
        out
    }
}

/// A homogeneous linear map between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousMap {
    source: GradedSpace,
    target: GradedSpace,
    degree: i32,
    matrix: SparseMatrix,
}

impl HomogeneousMap {
    pub fn new(source: GradedSpace, target: GradedSpace, degree: i32, matrix: SparseMatrix) -> Result<Self, GradedError> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(GradedError::DimensionMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.nrows(),
                matrix.ncols(),
                source.dim(),
                target.dim()
            )));
        }
        for (i, j, _) in matrix.entries() {
            let (from, to) = (source.degree(j), target.degree(i));
            if to - from != degree {
                return Err(GradedError::DegreeMismatch { row: i, col: j, from, to, expected: degree });
            }
        }
        Ok(HomogeneousMap { source, target, degree, matrix })
    }

    pub fn zero(source: GradedSpace, target: GradedSpace, degree: i32) -> Self {
        let matrix = SparseMatrix::zero(target.dim(), source.dim());
        HomogeneousMap { source, target, degree, matrix }
    }

    pub fn identity(space: GradedSpace) -> Self {
        let matrix = SparseMatrix::identity(space.dim());
        HomogeneousMap { source: space.clone(), target: space, degree: 0, matrix }
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SparseMatrix {
        self.matrix
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    /// `self ∘ other`; degrees add.
    pub fn compose(&self, other: &HomogeneousMap) -> Result<HomogeneousMap, GradedError> {
        if other.target != self.source {
            return Err(GradedError::DimensionMismatch("composition through different spaces".into()));
        }
        Ok(HomogeneousMap {
            source: other.source.clone(),
            target: self.target.clone(),
            degree: self.degree + other.degree,
            matrix: self.matrix.compose(&other.matrix),
        })
    }

    pub fn scaled(&self, c: &Scalar) -> HomogeneousMap {
        HomogeneousMap { matrix: self.matrix.scaled(c), ..self.clone() }
    }

    pub fn sum(&self, other: &HomogeneousMap) -> Result<HomogeneousMap, GradedError> {
        if self.source != other.source || self.target != other.target || self.degree != other.degree {
            return Err(GradedError::DimensionMismatch("sum of maps with different shapes".into()));
        }
        Ok(HomogeneousMap { matrix: self.matrix.sum(&other.matrix), ..self.clone() })
    }
}

/// `(f ⊗ g)(v ⊗ v') = (-1)^{|g||v|} f(v) ⊗ g(v')`.
pub fn tensor_of_maps(f: &HomogeneousMap, g: &HomogeneousMap) -> HomogeneousMap {
    let source = f.source.tensor(&g.source);
    let target = f.target.tensor(&g.target);
    let matrix = signed_kronecker(&f.matrix, &f.source, &g.matrix, g.degree);
    HomogeneousMap { source, target, degree: f.degree + g.degree, matrix }
}

/// Matrix of `f ⊗ g` with the sign `(−1)^{|g||v|}` on `v ⊗ v'`, given the source space of `f`.
pub fn signed_kronecker(f: &SparseMatrix, f_source: &GradedSpace, g: &SparseMatrix, g_degree: i32) -> SparseMatrix {
    let (r2, c2) = (g.nrows(), g.ncols());
    let mut matrix = SparseMatrix::zero(f.nrows() * r2, f.ncols() * c2);
    for (i1, j1, a) in f.entries() {
        let s = sign_pow(i64::from(g_degree) * i64::from(f_source.degree(j1)));
        for (i2, j2, b) in g.entries() {
            let c = a * b * int(s.into());
            matrix.add_entry(i1 * r2 + i2, j1 * c2 + j2, &c);
        }
    }
    matrix
}

fn check_permutation(perm: &[usize], degrees: &[i32]) -> Result<(), GradedError> {
    if perm.len() != degrees.len() {
        return Err(GradedError::LengthMismatch { perm: perm.len(), degrees: degrees.len() });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(GradedError::NotPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Sign of a permutation given in one-line notation (0-based).
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut s = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                s = -s;
            }
        }
    }
    s
}

/// Koszul sign `ε(σ)` of `v_1 ⊗ … ⊗ v_n ↦ ε(σ) v_{σ(1)} ⊗ … ⊗ v_{σ(n)}`.
///
/// `perm[k] = σ(k)` (0-based); `degrees[i] = |v_i|`.
pub fn koszul_sign(perm: &[usize], degrees: &[i32]) -> Result<i32, GradedError> {
    check_permutation(perm, degrees)?;
    let mut s = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && degrees[perm[a]] % 2 != 0 && degrees[perm[b]] % 2 != 0 {
                s = -s;
            }
        }
    }
    Ok(s)
}

/// Sign of the skew action: `χ(σ) = sgn(σ) ε(σ)`.
pub fn skew_sign(perm: &[usize], degrees: &[i32]) -> Result<i32, GradedError> {
    Ok(permutation_sign(perm) * koszul_sign(perm, degrees)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(src: &[i32], tgt: &[i32], degree: i32, entries: &[(usize, usize, i64)]) -> HomogeneousMap {
        let s = GradedSpace::new(src.iter().enumerate().map(|(i, d)| (format!("s{i}"), *d))).unwrap();
        let t = GradedSpace::new(tgt.iter().enumerate().map(|(i, d)| (format!("t{i}"), *d))).unwrap();
        let m = SparseMatrix::from_entries(t.dim(), s.dim(), entries.iter().map(|&(i, j, c)| (i, j, int(c))));
        HomogeneousMap::new(s, t, degree, m).unwrap()
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[0, 1, 2], &[3, -1, 5]).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &[-1, -1]).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &[-2, -1]).unwrap(), 1);
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0, 1], &[1]).is_err());
    }

    #[test]
    fn skew_examples() {
        assert_eq!(skew_sign(&[0, 1], &[0, 0]).unwrap(), 1);
        assert_eq!(skew_sign(&[1, 0], &[0, 0]).unwrap(), -1);
        assert_eq!(skew_sign(&[1, 0], &[-1, -1]).unwrap(), 1);
    }

    #[test]
    fn shift_examples() {
        let v = GradedSpace::new([("a", -1), ("b", 0)]).unwrap();
        assert_eq!(v.shift(1).degrees(), &[-2, -1]);
        assert_eq!(v.shift(1).shift(-1), v);
    }

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "-3", "7/2", "-5/12"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert_eq!(format_scalar(&parse_scalar("4/6").unwrap()), "2/3");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn tensor_sign_of_odd_map_on_odd_vector() {
        let f = map(&[-1], &[-1], 0, &[(0, 0, 1)]);
        let g = map(&[0], &[1], 1, &[(0, 0, 1)]);
        let fg = tensor_of_maps(&f, &g);
        assert_eq!(fg.matrix().get(0, 0), int(-1));
    }

    #[test]
    fn tensor_of_even_maps_is_kronecker() {
        let f = map(&[0, 0], &[0, 0], 0, &[(0, 0, 2), (1, 0, 3), (0, 1, 5)]);
        let g = map(&[0], &[0, 0], 0, &[(0, 0, 7), (1, 0, 1)]);
        assert_eq!(tensor_of_maps(&f, &g).matrix(), &f.matrix().kronecker(g.matrix()));
    }

    #[test]
    fn degree_mismatch_rejected() {
        let s = GradedSpace::new([("a", 0)]).unwrap();
        let t = GradedSpace::new([("b", 0)]).unwrap();
        let m = SparseMatrix::from_entries(1, 1, [(0, 0, int(1))]);
        assert!(HomogeneousMap::new(s, t, 1, m).is_err());
    }
}
