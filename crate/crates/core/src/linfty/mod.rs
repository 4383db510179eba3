//! L∞-algebras in the shifted symmetric convention, their structure equations,
//! morphisms, and minimal models of strict 2-term algebras.
//!
//! An algebra lives on a graded space `g` concentrated in degrees `[−d, 0]`. The
//! structure maps `λ_k` are stored as a [`WordMap`] on canonical words over `g[1]`
//! (which shares basis indices and names with `g`). Skew brackets are accepted as
//! input and converted by décalage.
//!
//! Validation ranges are degree-forced. A degree-1 map from words of degree `δ`
//! into `g[1]` vanishes unless `δ ≥ −d−2`, so `λ_k = 0` for `k > d+2`, and every
//! term of the weight-`n` Jacobi identity involves `λ_j∘λ_i` with `i+j = n+1`.
//! Checking all weights `n ≤ 2d+3` therefore covers every nonzero term.

mod lie;
mod minimal;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cohomology::matrix::{LinearAlgebraError, RationalMatrix};
use crate::graded::{int, skew_sign, koszul_sign, sign_pow, GradedError, GradedSpace, Scalar, SparseMatrix, SparseVec};
use crate::report::Report;
use crate::symcoalg::{
    coalgebra_morphism_from, decalage, inverse_decalage, skew_bracket, unshuffles, BracketTable,
    CoalgebraMorphism, Coderivation, SymError, SymWord, WordMap, WordSpace, WordVec,
};

pub use lie::{CrossedModule, LieAlgebra};
pub use minimal::{minimal_model_2term, MinimalModel, Splitting, TwoTermData};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LInftyError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Words(#[from] SymError),
    #[error(transparent)]
    Linear(#[from] LinearAlgebraError),
    #[error("basis element `{name}` has positive degree {degree}")]
    PositiveDegree { name: String, degree: i32 },
    #[error("crossed module axioms fail:\n{0}")]
    CrossedModule(String),
    #[error("not a Lie algebra:\n{0}")]
    NotLie(String),
    #[error("expected a strict 2-term algebra: {0}")]
    NotStrictTwoTerm(String),
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("morphism data mismatch: {0}")]
    Mismatch(String),
}

/// A finite-dimensional L∞-algebra.
#[derive(Clone)]
pub struct LInftyAlgebra {
    space: GradedSpace,
    words: Arc<WordSpace>,
    lambda: WordMap,
}

impl fmt::Debug for LInftyAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LInftyAlgebra on {:?}", self.space)?;
        for (w, v) in &self.lambda {
            writeln!(f, "  λ({}) = {}", self.words.display(w), self.space.format_vector(v))?;
        }
        Ok(())
    }
}

impl PartialEq for LInftyAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.lambda == other.lambda
    }
}

impl Eq for LInftyAlgebra {}

impl LInftyAlgebra {
    /// Builds the structure from skew brackets `[x_1,…,x_k]^k` (keys are input tuples).
    pub fn from_brackets(space: GradedSpace, brackets: &BracketTable) -> Result<Self, LInftyError> {
        let words = Self::word_space(&space)?;
        let lambda = decalage(&space, &words, brackets)?;
        Ok(LInftyAlgebra { space, words: Arc::new(words), lambda })
    }

    /// Builds the structure from symmetric degree-1 maps on canonical words.
    pub fn from_symmetric(space: GradedSpace, lambda: WordMap) -> Result<Self, LInftyError> {
        let words = Self::word_space(&space)?;
        crate::symcoalg::coderivation_from(&words, &lambda)?;
        let lambda = lambda.into_iter().filter(|(w, v)| !w.is_unit() && !v.is_zero()).collect();
        Ok(LInftyAlgebra { space, words: Arc::new(words), lambda })
    }

    /// All brackets zero.
    pub fn abelian(space: GradedSpace) -> Result<Self, LInftyError> {
        Self::from_symmetric(space, WordMap::new())
    }

    fn word_space(space: &GradedSpace) -> Result<WordSpace, LInftyError> {
        for i in 0..space.dim() {
            if space.degree(i) > 0 {
                return Err(LInftyError::PositiveDegree { name: space.name(i).to_string(), degree: space.degree(i) });
            }
        }
        Ok(WordSpace::new(space.shift(1))?)
    }

    /// The underlying space `g`.
    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    /// The shifted space `g[1]`, with the same basis indices.
    pub fn shifted(&self) -> &GradedSpace {
        self.words.base()
    }

    pub fn words(&self) -> &Arc<WordSpace> {
        &self.words
    }

    pub fn lambda(&self) -> &WordMap {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `d` such that `g` is concentrated in `[−d, 0]`.
    pub fn depth(&self) -> i32 {
        self.space.min_degree().map_or(0, |m| (-m).max(0))
    }

    /// Largest `k` with `λ_k ≠ 0` (0 when all brackets vanish).
    pub fn max_arity(&self) -> usize {
        self.lambda.keys().map(SymWord::weight).max().unwrap_or(0)
    }

    /// Weight bound `2d+3` for validating the structure equations.
    pub fn validation_weight(&self) -> usize {
        2 * self.depth() as usize + 3
    }

    /// `λ(w)` on a canonical word.
    pub fn bracket(&self, w: &SymWord) -> SparseVec {
        self.lambda.get(w).cloned().unwrap_or_default()
    }

    /// `λ` on a combination of words.
    pub fn apply_lambda(&self, v: &WordVec) -> SparseVec {
        self.words.evaluate(&self.lambda, v)
    }

    /// `λ(x_1∨…∨x_k)` for vectors of `g[1]`.
    pub fn bracket_of_vectors(&self, xs: &[&SparseVec]) -> SparseVec {
        self.apply_lambda(&self.words.vector_product(xs))
    }

    /// The skew bracket `[x_{t_1},…,x_{t_k}]^k` on basis elements of `g`.
    pub fn skew_bracket(&self, tuple: &[usize]) -> SparseVec {
        skew_bracket(&self.space, &self.words, &self.lambda, tuple)
    }

    /// Multilinear extension of the skew bracket to vectors of `g`.
    pub fn skew_bracket_of_vectors(&self, xs: &[&SparseVec]) -> SparseVec {
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), int(1))];
        for x in xs {
            let mut next = Vec::with_capacity(partial.len() * x.len());
            for (tuple, c) in &partial {
                for (i, a) in x.iter() {
                    let mut t = tuple.clone();
                    t.push(i);
                    next.push((t, c * a));
                }
            }
            partial = next;
        }
        let mut out = SparseVec::new();
        for (tuple, c) in partial {
            out.add_scaled(&self.skew_bracket(&tuple), &c);
        }
        out
    }

    /// The skew bracket table on canonical tuples.
    pub fn brackets(&self) -> BracketTable {
        inverse_decalage(&self.space, &self.lambda)
    }

    /// `d_λ` on `S(g[1])`.
    pub fn coderivation(&self) -> Coderivation<'_> {
        Coderivation::new_unchecked(&self.words, &self.lambda)
    }

    /// The differential `∂ = [·]^1` as a matrix on `g`.
    pub fn differential(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.dim(), self.dim());
        for (w, v) in &self.lambda {
            if w.weight() == 1 {
                for (i, c) in v.iter() {
                    m.add_entry(i, w.letter(0), c);
                }
            }
        }
        m
    }

    /// Whether all brackets of arity ≥ 3 vanish and `g` sits in degrees `{−1, 0}`.
    pub fn is_strict_two_term(&self) -> bool {
        self.depth() <= 1 && self.max_arity() <= 2
    }

    /// Canonical words of weight at most `max_weight`.
    pub fn words_up_to_weight(&self, max_weight: usize) -> Vec<SymWord> {
        self.words.words_up_to_weight(max_weight)
    }
}

/// Generalized Jacobi identity: for every word of weight `n ≤ max_weight`, the sum over
/// `i + j = n + 1` and `(i, n−i)`-unshuffles of `ε(σ) λ_j(λ_i(…) ∨ …)` vanishes.
pub fn check_jacobi(g: &LInftyAlgebra) -> Report {
    check_jacobi_up_to(g, g.validation_weight())
}

pub fn check_jacobi_up_to(g: &LInftyAlgebra, max_weight: usize) -> Report {
    let mut report = Report::new("symmetric Jacobi identity");
    let words = g.words();
    for w in g.words_up_to_weight(max_weight) {
        if w.is_unit() {
            continue;
        }
        let value = symmetric_jacobiator(g, &w);
        report.record(value.is_zero(), || words.display(&w), || g.shifted().format_vector(&value));
    }
    report
}

/// `Σ_{i+j=n+1} Σ_σ ε(σ) λ_j(λ_i(w_σ(1..i)) ∨ w_σ(i+1..n))`, expanded through unshuffles.
pub fn symmetric_jacobiator(g: &LInftyAlgebra, w: &SymWord) -> SparseVec {
    let words = g.words();
    let letters = w.to_vec();
    let n = letters.len();
    let degrees: Vec<i32> = letters.iter().map(|&i| words.generator_degree(i)).collect();
    let mut total = SparseVec::new();
    for i in 1..=n {
        for perm in unshuffles(i, n - i) {
            let head: Vec<usize> = perm[..i].iter().map(|&k| letters[k]).collect();
            let Some((s1, head_word)) = words.canonicalize(&head).expect("letters in range") else { continue };
            let Some(inner) = g.lambda.get(&head_word) else { continue };
            let tail: Vec<usize> = perm[i..].iter().map(|&k| letters[k]).collect();
            let Some((s2, tail_word)) = words.canonicalize(&tail).expect("letters in range") else { continue };
            let sign = koszul_sign(&perm, &degrees).expect("valid permutation") * s1 * s2;
            let outer = g.apply_lambda(&words.vector_times_word(inner, &tail_word));
            total.add_scaled(&outer, &int(sign.into()));
        }
    }
    total
}

/// Independent oracle: `d_λ ∘ d_λ = 0` on every word of weight `≤ max_weight`.
pub fn check_square_zero(g: &LInftyAlgebra, max_weight: usize) -> Report {
    let mut report = Report::new("d_λ² = 0");
    let d = g.coderivation();
    let words = g.words();
    for w in g.words_up_to_weight(max_weight) {
        let dd = d.apply_vec(&d.apply(&w));
        report.record(
            dd.is_empty(),
            || words.display(&w),
            || {
                let terms: Vec<String> = dd.iter().map(|(u, c)| format!("{c}·{}", words.display(u))).collect();
                terms.join(" + ")
            },
        );
    }
    report
}

/// Graded Jacobiator in the skew convention, on basis tuples given by words.
pub fn check_jacobi_skew(g: &LInftyAlgebra, max_weight: usize) -> Report {
    let mut report = Report::new("skew graded Jacobiator");
    let words = g.words();
    for w in g.words_up_to_weight(max_weight) {
        if w.is_unit() {
            continue;
        }
        let value = skew_jacobiator(g, &w.to_vec());
        report.record(value.is_zero(), || words.display(&w), || g.space().format_vector(&value));
    }
    report
}

/// `Σ_{i+j=n+1} Σ_σ (−1)^{i(j−1)} χ(σ) [[v_σ(1..i)]^i, v_σ(i+1..n)]^j` for basis elements of `g`.
pub fn skew_jacobiator(g: &LInftyAlgebra, tuple: &[usize]) -> SparseVec {
    let n = tuple.len();
    let degrees: Vec<i32> = tuple.iter().map(|&i| g.space().degree(i)).collect();
    let mut total = SparseVec::new();
    for i in 1..=n {
        let j = n + 1 - i;
        for perm in unshuffles(i, n - i) {
            let head: Vec<usize> = perm[..i].iter().map(|&k| tuple[k]).collect();
            let inner = g.skew_bracket(&head);
            if inner.is_zero() {
                continue;
            }
            let rest: Vec<SparseVec> = perm[i..].iter().map(|&k| SparseVec::basis(tuple[k])).collect();
            let mut args: Vec<&SparseVec> = vec![&inner];
            args.extend(rest.iter());
            let outer = g.skew_bracket_of_vectors(&args);
            let sign = sign_pow((i * (j - 1)) as i64) * skew_sign(&perm, &degrees).expect("valid permutation");
            total.add_scaled(&outer, &int(sign.into()));
        }
    }
    total
}

/// An L∞-morphism, stored through its corestriction `F¹` on canonical source words.
#[derive(Clone)]
pub struct LInftyMorphism {
    source: Arc<LInftyAlgebra>,
    target: Arc<LInftyAlgebra>,
    components: WordMap,
}

impl fmt::Debug for LInftyMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LInftyMorphism")?;
        for (w, v) in &self.components {
            writeln!(f, "  F({}) = {}", self.source.words.display(w), self.target.space.format_vector(v))?;
        }
        Ok(())
    }
}

impl PartialEq for LInftyMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.components == other.components
    }
}

impl LInftyMorphism {
    pub fn new(
        source: Arc<LInftyAlgebra>,
        target: Arc<LInftyAlgebra>,
        components: WordMap,
    ) -> Result<Self, LInftyError> {
        coalgebra_morphism_from(&source.words, &target.words, &components)?;
        let components = components.into_iter().filter(|(w, v)| !w.is_unit() && !v.is_zero()).collect();
        Ok(LInftyMorphism { source, target, components })
    }

    /// The strict morphism with linear part `matrix` (`target.dim × source.dim`).
    pub fn strict(
        source: Arc<LInftyAlgebra>,
        target: Arc<LInftyAlgebra>,
        matrix: &SparseMatrix,
    ) -> Result<Self, LInftyError> {
        if matrix.nrows() != target.dim() || matrix.ncols() != source.dim() {
            return Err(LInftyError::Mismatch(format!(
                "linear part is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.dim(),
                source.dim()
            )));
        }
        let components = (0..source.dim())
            .map(|j| (SymWord::generator(j), matrix.column(j).clone()))
            .collect();
        Self::new(source, target, components)
    }

    pub fn identity(g: Arc<LInftyAlgebra>) -> Self {
        let id = SparseMatrix::identity(g.dim());
        Self::strict(Arc::clone(&g), g, &id).expect("identity has degree 0")
    }

    pub fn source(&self) -> &Arc<LInftyAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LInftyAlgebra> {
        &self.target
    }

    pub fn components(&self) -> &WordMap {
        &self.components
    }

    pub fn is_strict(&self) -> bool {
        self.components.keys().all(|w| w.weight() == 1)
    }

    /// `F¹_1` as a `target.dim × source.dim` matrix.
    pub fn linear_part(&self) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.target.dim(), self.source.dim());
        for (w, v) in &self.components {
            if w.weight() == 1 {
                for (i, c) in v.iter() {
                    m.add_entry(i, w.letter(0), c);
                }
            }
        }
        m
    }

    /// The coalgebra morphism `S(g[1]) → S(h[1])`.
    pub fn coalgebra_map(&self) -> CoalgebraMorphism<'_> {
        CoalgebraMorphism::new_unchecked(&self.source.words, &self.target.words, &self.components)
    }

    pub fn apply(&self, w: &SymWord) -> WordVec {
        self.coalgebra_map().apply(w)
    }

    pub fn apply_vec(&self, v: &WordVec) -> WordVec {
        self.coalgebra_map().apply_vec(v)
    }

    /// `F¹` on a combination of source words.
    pub fn corestriction(&self, v: &WordVec) -> SparseVec {
        self.source.words.evaluate(&self.components, v)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LInftyMorphism) -> Result<LInftyMorphism, LInftyError> {
        if *first.target != *self.source {
            return Err(LInftyError::Mismatch("composable morphisms need matching algebras".into()));
        }
        let lo = -(self.target.depth() + 1);
        let mut components = WordMap::new();
        for w in first.source.words.words_in_degree_range(lo, -1) {
            let v = self.corestriction(&first.apply(&w));
            if !v.is_zero() {
                components.insert(w, v);
            }
        }
        LInftyMorphism::new(Arc::clone(&first.source), Arc::clone(&self.target), components)
    }
}

/// Checks the corestriction of `F∘d_g − d_h∘F` on every source word of degree
/// `≥ −d_h − 2` (the only words where it can be nonzero).
pub fn check_morphism(f: &LInftyMorphism) -> Report {
    let mut report = Report::new("L∞-morphism equation");
    let lo = -(f.target.depth() + 2);
    let source = &f.source;
    let target = &f.target;
    let d = source.coderivation();
    for w in source.words.words_in_degree_range(lo, -1) {
        let left = f.corestriction(&d.apply(&w));
        let right = target.apply_lambda(&f.apply(&w));
        let diff = left.difference(&right);
        report.record(diff.is_zero(), || source.words.display(&w), || target.shifted().format_vector(&diff));
    }
    report
}

/// Cohomology of a complex `(V, ∂)` with degree-1 differential, per degree.
pub fn complex_cohomology(space: &GradedSpace, differential: &SparseMatrix) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    let (Some(lo), Some(hi)) = (space.min_degree(), space.max_degree()) else { return out };
    for k in lo..=hi {
        let here = space.indices_of_degree(k);
        let z = cycles(space, differential, k).len();
        let b = boundaries(space, differential, k).len();
        if !here.is_empty() {
            out.insert(k, z - b);
        }
    }
    out
}

fn restrict(differential: &SparseMatrix, rows: &[usize], cols: &[usize]) -> RationalMatrix {
    let mut pos = BTreeMap::new();
    for (r, &i) in rows.iter().enumerate() {
        pos.insert(i, r);
    }
    let mut m = RationalMatrix::zero(rows.len(), cols.len());
    for (c, &j) in cols.iter().enumerate() {
        for (i, x) in differential.column(j).iter() {
            if let Some(&r) = pos.get(&i) {
                m.add_entry(r, c, x);
            }
        }
    }
    m
}

fn embed(v: &SparseVec, indices: &[usize]) -> SparseVec {
    v.remap(|k| Some(indices[k]))
}

/// Basis of `ker ∂` in degree `k`, in global coordinates.
pub fn cycles(space: &GradedSpace, differential: &SparseMatrix, k: i32) -> Vec<SparseVec> {
    let here = space.indices_of_degree(k);
    let next = space.indices_of_degree(k + 1);
    restrict(differential, &next, &here).kernel().iter().map(|v| embed(v, &here)).collect()
}

/// Basis of `im ∂` in degree `k`, in global coordinates.
pub fn boundaries(space: &GradedSpace, differential: &SparseMatrix, k: i32) -> Vec<SparseVec> {
    let here = space.indices_of_degree(k);
    let prev = space.indices_of_degree(k - 1);
    restrict(differential, &here, &prev).image().iter().map(|v| embed(v, &here)).collect()
}

/// Dimensions of `H(g, ∂)` with `∂ = λ_1`.
pub fn underlying_cohomology(g: &LInftyAlgebra) -> BTreeMap<i32, usize> {
    complex_cohomology(g.space(), &g.differential())
}

/// Per-degree comparison of `H(F¹_1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiIsoReport {
    /// degree → (dim H source, dim H target, rank of the induced map)
    pub per_degree: BTreeMap<i32, (usize, usize, usize)>,
}

impl QuasiIsoReport {
    pub fn is_quasi_iso(&self) -> bool {
        self.per_degree.values().all(|&(s, t, r)| s == t && t == r)
    }
}

pub fn is_quasi_iso(f: &LInftyMorphism) -> QuasiIsoReport {
    let g = f.source();
    let h = f.target();
    let lin = f.linear_part();
    let dg = g.differential();
    let dh = h.differential();
    let lo = g.space().min_degree().unwrap_or(0).min(h.space().min_degree().unwrap_or(0));
    let mut per_degree = BTreeMap::new();
    for k in lo..=0 {
        let zg = cycles(g.space(), &dg, k);
        let bg = boundaries(g.space(), &dg, k);
        let zh = cycles(h.space(), &dh, k);
        let bh = boundaries(h.space(), &dh, k);
        let mut ech = crate::cohomology::matrix::Echelon::new(h.dim());
        for b in &bh {
            ech.insert(b);
        }
        let base = ech.rank();
        for z in &zg {
            ech.insert(&lin.apply(z));
        }
        per_degree.insert(k, (zg.len() - bg.len(), zh.len() - bh.len(), ech.rank() - base));
    }
    QuasiIsoReport { per_degree }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::frac;

    fn heisenberg_2term() -> LInftyAlgebra {
        CrossedModule::central_heisenberg().to_linfty().unwrap()
    }

    #[test]
    fn abelian_is_valid() {
        let g = LInftyAlgebra::abelian(GradedSpace::new([("u", -1), ("x", 0)]).unwrap()).unwrap();
        assert!(check_jacobi(&g).is_valid());
        assert!(check_square_zero(&g, 5).is_valid());
    }

    #[test]
    fn three_routes_agree_on_crossed_modules() {
        for cm in [
            CrossedModule::identity(&LieAlgebra::sl2()),
            CrossedModule::central_heisenberg(),
            CrossedModule::ideal_inclusion(&LieAlgebra::gl(2), &LieAlgebra::sl_in_gl_basis(2)).unwrap(),
        ] {
            let g = cm.to_linfty().unwrap();
            let n = g.validation_weight();
            assert!(check_jacobi(&g).is_valid(), "{}", check_jacobi(&g));
            assert!(check_square_zero(&g, n).is_valid());
            assert!(check_jacobi_skew(&g, n).is_valid(), "{}", check_jacobi_skew(&g, n));
        }
    }

    #[test]
    fn injected_ternary_bracket_is_reported() {
        let g = heisenberg_2term();
        let mut brackets = g.brackets();
        // a nonzero λ_3 on three degree-0 elements, valued in degree −1
        let x: Vec<usize> = (0..g.dim()).filter(|&i| g.space().degree(i) == 0).collect();
        let u = (0..g.dim()).find(|&i| g.space().degree(i) == -1).unwrap();
        brackets.insert(vec![x[0], x[1], x[2]], SparseVec::basis(u).scaled(&frac(1, 1)));
        let bad = LInftyAlgebra::from_brackets(g.space().clone(), &brackets).unwrap();
        let sym = check_jacobi(&bad);
        let sq = check_square_zero(&bad, bad.validation_weight());
        let skew = check_jacobi_skew(&bad, bad.validation_weight());
        assert!(!sym.is_valid());
        assert_eq!(sym.failing_slots(), skew.failing_slots());
        assert!(!sq.is_valid());
    }

    #[test]
    fn underlying_cohomology_examples() {
        let g = heisenberg_2term();
        let h = underlying_cohomology(&g);
        assert_eq!(h.get(&-1), Some(&0));
        assert_eq!(h.get(&0), Some(&2));
        let id = CrossedModule::identity(&LieAlgebra::sl2()).to_linfty().unwrap();
        assert!(underlying_cohomology(&id).values().all(|&d| d == 0));
    }

    #[test]
    fn identity_morphism_is_valid_quasi_iso() {
        let g = Arc::new(heisenberg_2term());
        let id = LInftyMorphism::identity(Arc::clone(&g));
        assert!(check_morphism(&id).is_valid());
        assert!(is_quasi_iso(&id).is_quasi_iso());
        let zero = LInftyMorphism::strict(Arc::clone(&g), g.clone(), &SparseMatrix::zero(g.dim(), g.dim())).unwrap();
        assert!(!is_quasi_iso(&zero).is_quasi_iso());
    }

    #[test]
    fn lie_map_condition_is_bracket_preservation() {
        let sl2 = Arc::new(LieAlgebra::sl2().to_linfty().unwrap());
        // h ↦ −h, e ↦ f, f ↦ e is an automorphism (the Chevalley involution up to sign)
        let auto = SparseMatrix::from_entries(3, 3, [(0, 0, int(-1)), (2, 1, int(1)), (1, 2, int(1))]);
        let f = LInftyMorphism::strict(Arc::clone(&sl2), Arc::clone(&sl2), &auto).unwrap();
        assert!(check_morphism(&f).is_valid());
        let not_hom = SparseMatrix::from_entries(3, 3, [(0, 0, int(1)), (2, 1, int(1)), (1, 2, int(1))]);
        let f = LInftyMorphism::strict(Arc::clone(&sl2), sl2, &not_hom).unwrap();
        assert!(!check_morphism(&f).is_valid());
    }
}
