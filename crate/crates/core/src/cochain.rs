//! The complex `C(g, V) = Hom(S(g[1]), V)`: bases, the differential of a ruth,
//! cochain products, and the dgla of cochains valued in a dgla.
//!
//! A cochain of degree `p` sends a word `w` to `V_{|w|+p}`, so it is supported on
//! words of degree in `[v_min − p, v_max − p]`. Since every generator of `g[1]` has
//! degree at most −1, this window is finite for finite-dimensional `g` and `V`; we
//! call it the cochain window of degree `p`. All cochains here are total objects of
//! a single degree.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::cohomology::matrix::RationalMatrix;
use crate::graded::{frac, int, sign_pow, GradedError, GradedSpace, HomogeneousMap, Scalar, SparseMatrix, SparseVec};
use crate::linfty::{LInftyAlgebra, LInftyMorphism};
use crate::report::Report;
use crate::ruth::{graded_commutator, Ruth, RuthMorphism};
use crate::symcoalg::{add_to_word_map, SymWord, WordMap, WordSpace};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CochainError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("value at {word} has the wrong degree for a cochain of degree {degree}")]
    Degree { word: String, degree: i32 },
    #[error("cochain of degree {found} where degree {expected} is required")]
    WrongDegree { expected: i32, found: i32 },
    #[error("cochain is not reduced: its value on the unit word is nonzero")]
    NotReduced,
    #[error("pairing must have degree 0, found {0}")]
    PairingDegree(i32),
    #[error("shape mismatch: {0}")]
    Mismatch(String),
}

/// A homogeneous cochain: word → coordinates in `V`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Cochain {
    pub degree: i32,
    pub values: WordMap,
}

impl Cochain {
    pub fn zero(degree: i32) -> Self {
        Cochain { degree, values: WordMap::new() }
    }

    pub fn new(degree: i32, values: WordMap) -> Self {
        let values = values.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Cochain { degree, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(SparseVec::is_zero)
    }

    pub fn is_reduced(&self) -> bool {
        self.values.get(&SymWord::unit()).is_none_or(SparseVec::is_zero)
    }

    pub fn value(&self, w: &SymWord) -> SparseVec {
        self.values.get(w).cloned().unwrap_or_default()
    }

    pub fn add_scaled(&mut self, other: &Cochain, c: &Scalar) {
        debug_assert_eq!(self.degree, other.degree);
        for (w, v) in &other.values {
            add_to_word_map(&mut self.values, w, v, c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Cochain {
        let mut out = Cochain::zero(self.degree);
        out.add_scaled(self, c);
        out
    }

    pub fn sum(&self, other: &Cochain) -> Cochain {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn difference(&self, other: &Cochain) -> Cochain {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    /// Composition with a linear map of the coefficients.
    pub fn map_values(&self, m: &SparseMatrix, degree_shift: i32) -> Cochain {
        let values = self.values.iter().map(|(w, v)| (w.clone(), m.apply(v))).collect();
        Cochain::new(self.degree + degree_shift, values)
    }

    /// Largest word weight in the support.
    pub fn max_weight(&self) -> usize {
        self.values.keys().map(SymWord::weight).max().unwrap_or(0)
    }

    /// Checks that every value has degree `|w| + p`.
    pub fn check(&self, words: &WordSpace, space: &GradedSpace) -> Result<(), CochainError> {
        for (w, v) in &self.values {
            let expected = words.degree(w) + self.degree;
            if v.iter().any(|(i, _)| i >= space.dim() || space.degree(i) != expected) {
                return Err(CochainError::Degree { word: words.display(w), degree: self.degree });
            }
        }
        Ok(())
    }

    /// Renders as `w ↦ value` lines.
    pub fn display(&self, words: &WordSpace, space: &GradedSpace) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.values
            .iter()
            .map(|(w, v)| format!("{} ↦ {}", words.display(w), space.format_vector(v)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Word degrees on which a degree-`p` cochain valued in `space` can be nonzero.
pub fn cochain_window(space: &GradedSpace, p: i32) -> Option<(i32, i32)> {
    let lo = space.min_degree()? - p;
    let hi = (space.max_degree()? - p).min(0);
    (lo <= hi).then_some((lo, hi))
}

/// An ordered basis of `C^p(g, V)`: one element per (word, basis vector) pair of matching degree.
#[derive(Debug)]
pub struct CochainBasis {
    pub degree: i32,
    elements: Vec<(SymWord, usize)>,
    index: HashMap<(SymWord, usize), usize>,
}

impl CochainBasis {
    /// Words in the order of [`WordSpace::words_in_degree_range`], then target index.
    pub fn new(words: &WordSpace, space: &GradedSpace, p: i32) -> Self {
        let mut elements = Vec::new();
        if let Some((lo, hi)) = cochain_window(space, p) {
            let mut by_degree: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
            for j in 0..space.dim() {
                by_degree.entry(space.degree(j)).or_default().push(j);
            }
            for w in words.words_in_degree_range(lo, hi) {
                if let Some(targets) = by_degree.get(&(words.degree(&w) + p)) {
                    elements.extend(targets.iter().map(|&j| (w.clone(), j)));
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
        CochainBasis { degree: p, elements, index }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[(SymWord, usize)] {
        &self.elements
    }

    pub fn index_of(&self, w: &SymWord, j: usize) -> Option<usize> {
        self.index.get(&(w.clone(), j)).copied()
    }

    pub fn element(&self, k: usize) -> Cochain {
        let (w, j) = &self.elements[k];
        Cochain::new(self.degree, [(w.clone(), SparseVec::basis(*j))].into())
    }

    /// Coordinates of `α`; `None` if `α` has the wrong degree or leaves the window.
    pub fn coordinates(&self, alpha: &Cochain) -> Option<SparseVec> {
        if alpha.degree != self.degree {
            return alpha.is_zero().then(SparseVec::new);
        }
        let mut out = SparseVec::new();
        for (w, v) in &alpha.values {
            for (j, c) in v.iter() {
                out.add_at(self.index_of(w, j)?, c);
            }
        }
        Some(out)
    }

    pub fn cochain(&self, coords: &SparseVec) -> Cochain {
        let mut values = WordMap::new();
        for (k, c) in coords.iter() {
            let (w, j) = &self.elements[k];
            add_to_word_map(&mut values, w, &SparseVec::basis(*j), c);
        }
        Cochain::new(self.degree, values)
    }
}

/// `D_ρ α = ρ∘(id⊗α)∘Δ − (−1)^p α∘d_λ`, evaluated word by word on the window of degree `p+1`.
///
/// The ruth is not required to be flat.
pub fn ce_differential(r: &Ruth, alpha: &Cochain) -> Cochain {
    let mut out = action_part(r, alpha);
    let tail = precompose_differential(r.algebra(), r.space(), alpha);
    out.add_scaled(&tail, &int(-i64::from(sign_pow(alpha.degree.into()))));
    out
}

/// The first term of the differential, `ρ∘(id⊗α)∘Δ`.
pub fn action_part(r: &Ruth, alpha: &Cochain) -> Cochain {
    let words = r.algebra().words();
    let p = alpha.degree;
    let mut values = WordMap::new();
    let Some((lo, hi)) = cochain_window(r.space(), p + 1) else { return Cochain::zero(p + 1) };
    for w in words.words_in_degree_range(lo, hi) {
        let mut out = SparseVec::new();
        for term in words.coproduct(&w).iter() {
            let Some(a) = alpha.values.get(&term.right) else { continue };
            let s = term.coeff * i64::from(sign_pow(i64::from(p) * i64::from(words.degree(&term.left))));
            out.add_scaled(&r.act(&term.left, a), &int(s));
        }
        if !out.is_zero() {
            values.insert(w, out);
        }
    }
    Cochain { degree: p + 1, values }
}

/// Matrix of `D_ρ: C^p → C^{p+1}` in the two cochain bases, assembled row block by row block.
pub fn ce_matrix(r: &Ruth, source: &CochainBasis, target: &CochainBasis) -> RationalMatrix {
    let g = r.algebra();
    let words = g.words();
    let p = source.degree;
    let d = g.coderivation();
    let mut m = RationalMatrix::zero(target.dim(), source.dim());
    let dim_v = r.space().dim();
    let mut seen = BTreeSet::new();
    let minus = int(-i64::from(sign_pow(p.into())));
    for (w, _) in target.elements() {
        if !seen.insert(w.clone()) {
            continue;
        }
        let row_of = |i: usize| target.index_of(w, i).expect("degree-matched output");
        for term in words.coproduct(w).iter() {
            let s = int(term.coeff * i64::from(sign_pow(i64::from(p) * i64::from(words.degree(&term.left)))));
            for j in 0..dim_v {
                let Some(col) = source.index_of(&term.right, j) else { continue };
                for (i, c) in r.act(&term.left, &SparseVec::basis(j)).iter() {
                    m.add_entry(row_of(i), col, &(c * &s));
                }
            }
        }
        for (u, c) in d.apply(w) {
            for j in 0..dim_v {
                if let Some(col) = source.index_of(&u, j) {
                    m.add_entry(row_of(j), col, &(&c * &minus));
                }
            }
        }
    }
    m
}

/// `α ∧_m β = m∘(α⊗β)∘Δ`, i.e. `Σ c (−1)^{|β||w_1|} m(α(w_1) ⊗ β(w_2))`.
///
/// `m` acts on `V_1 ⊗ second` flattened as in [`GradedSpace::tensor`].
pub fn cochain_product(
    words: &WordSpace,
    m: &HomogeneousMap,
    second: &GradedSpace,
    alpha: &Cochain,
    beta: &Cochain,
) -> Result<Cochain, CochainError> {
    if m.degree() != 0 {
        return Err(CochainError::PairingDegree(m.degree()));
    }
    if second.dim() == 0 || !m.source().dim().is_multiple_of(second.dim()) {
        return Err(CochainError::Mismatch("pairing source is not a tensor product with the second factor".into()));
    }
    Ok(product_with(words, m.matrix(), second.dim(), alpha, beta))
}

/// Same as [`cochain_product`] with the second factor dimension given explicitly.
pub fn product_with(words: &WordSpace, m: &SparseMatrix, dim2: usize, alpha: &Cochain, beta: &Cochain) -> Cochain {
    let degree = alpha.degree + beta.degree;
    let mut candidates = BTreeSet::new();
    for a in alpha.values.keys() {
        for b in beta.values.keys() {
            if let Some((_, w)) = words.product(a, b) {
                candidates.insert(w);
            }
        }
    }
    let mut values = WordMap::new();
    for w in candidates {
        let mut tensor = SparseVec::new();
        for term in words.coproduct(&w).iter() {
            let (Some(x), Some(y)) = (alpha.values.get(&term.left), beta.values.get(&term.right)) else { continue };
            let s = term.coeff * i64::from(sign_pow(i64::from(beta.degree) * i64::from(words.degree(&term.left))));
            let s = int(s);
            for (i, a) in x.iter() {
                for (j, b) in y.iter() {
                    tensor.add_at(i * dim2 + j, &(a * b * &s));
                }
            }
        }
        let out = m.apply(&tensor);
        if !out.is_zero() {
            values.insert(w, out);
        }
    }
    Cochain { degree, values }
}

/// `α ∘ d_λ` on the window of degree `|α| + 1` for coefficients in `space`.
pub fn precompose_differential(g: &LInftyAlgebra, space: &GradedSpace, alpha: &Cochain) -> Cochain {
    let words = g.words();
    let d = g.coderivation();
    let mut values = WordMap::new();
    let Some((lo, hi)) = cochain_window(space, alpha.degree + 1) else { return Cochain::zero(alpha.degree + 1) };
    for w in words.words_in_degree_range(lo, hi) {
        let mut out = SparseVec::new();
        for (u, c) in d.apply(&w) {
            if let Some(a) = alpha.values.get(&u) {
                out.add_scaled(a, &c);
            }
        }
        if !out.is_zero() {
            values.insert(w, out);
        }
    }
    Cochain { degree: alpha.degree + 1, values }
}

/// A finite-dimensional dgla `(L, [·,·], d)` used as a coefficient object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DglaCoefficients {
    pub space: GradedSpace,
    /// `L ⊗ L → L`, degree 0.
    pub bracket: HomogeneousMap,
    /// Degree-1 square matrix.
    pub differential: SparseMatrix,
}

impl DglaCoefficients {
    pub fn new(space: GradedSpace, bracket: HomogeneousMap, differential: SparseMatrix) -> Result<Self, CochainError> {
        if bracket.degree() != 0 || *bracket.source() != space.tensor(&space) || *bracket.target() != space {
            return Err(CochainError::Mismatch("bracket must be a degree-0 map L⊗L → L".into()));
        }
        HomogeneousMap::new(space.clone(), space.clone(), 1, differential.clone())?;
        Ok(DglaCoefficients { space, bracket, differential })
    }

    /// `𝔤𝔩(V)`: `End(V)` with the graded commutator and `d = [∂, ·]`.
    pub fn gl(v: &GradedSpace, partial: &SparseMatrix) -> Self {
        let end = v.endomorphisms();
        let n = v.dim();
        let e = end.dim();
        let mut bracket = SparseMatrix::zero(e, e * e);
        let unit = |k: usize| SparseMatrix::from_end_vector(n, &SparseVec::basis(k));
        for a in 0..e {
            for b in 0..e {
                let c = graded_commutator(&unit(a), end.degree(a), &unit(b), end.degree(b));
                let col = c.to_end_vector();
                for (i, x) in col.iter() {
                    bracket.add_entry(i, a * e + b, x);
                }
            }
        }
        let mut differential = SparseMatrix::zero(e, e);
        for a in 0..e {
            let c = graded_commutator(partial, 1, &unit(a), end.degree(a));
            for (i, x) in c.to_end_vector().iter() {
                differential.add_entry(i, a, x);
            }
        }
        let bracket = HomogeneousMap::new(end.tensor(&end), end.clone(), 0, bracket).expect("commutator has degree 0");
        DglaCoefficients { space: end, bracket, differential }
    }

    /// Abelian with zero differential.
    pub fn abelian(space: GradedSpace) -> Self {
        let n = space.dim();
        let bracket = HomogeneousMap::zero(space.tensor(&space), space.clone(), 0);
        DglaCoefficients { space, bracket, differential: SparseMatrix::zero(n, n) }
    }

    pub fn bracket_of(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.space.dim();
        let mut t = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                t.add_at(i * n + j, &(a * b));
            }
        }
        self.bracket.apply(&t)
    }

    /// Skew symmetry, graded Jacobi, derivation law and `d² = 0` on basis elements.
    pub fn check(&self) -> Report {
        let mut report = Report::new("dgla axioms");
        let n = self.space.dim();
        let deg = |i: usize| i64::from(self.space.degree(i));
        let name = |i: usize| self.space.name(i).to_string();
        let d = &self.differential;
        let dd = d.compose(d);
        report.record(dd.is_zero(), || "d²".into(), || format!("{dd:?}"));
        for x in 0..n {
            let ex = SparseVec::basis(x);
            for y in 0..n {
                let ey = SparseVec::basis(y);
                let xy = self.bracket_of(&ex, &ey);
                let mut skew = xy.clone();
                skew.add_scaled(&self.bracket_of(&ey, &ex), &int(sign_pow(deg(x) * deg(y)).into()));
                report.record(skew.is_zero(), || format!("skew {} {}", name(x), name(y)), || self.space.format_vector(&skew));
                let mut leibniz = d.apply(&xy);
                leibniz.sub_assign(&self.bracket_of(&d.apply(&ex), &ey));
                leibniz.add_scaled(&self.bracket_of(&ex, &d.apply(&ey)), &int(-i64::from(sign_pow(deg(x)))));
                report.record(leibniz.is_zero(), || format!("derivation {} {}", name(x), name(y)), || self.space.format_vector(&leibniz));
                for z in 0..n {
                    let ez = SparseVec::basis(z);
                    let mut jac = self.bracket_of(&ex, &self.bracket_of(&ey, &ez));
                    jac.sub_assign(&self.bracket_of(&xy, &ez));
                    jac.add_scaled(
                        &self.bracket_of(&ey, &self.bracket_of(&ex, &ez)),
                        &int(-i64::from(sign_pow(deg(x) * deg(y)))),
                    );
                    report.record(
                        jac.is_zero(),
                        || format!("Jacobi {} {} {}", name(x), name(y), name(z)),
                        || self.space.format_vector(&jac),
                    );
                }
            }
        }
        report
    }
}

/// `α ∧_{[,]} β` in `C(g, L)`.
pub fn dgla_bracket(g: &LInftyAlgebra, l: &DglaCoefficients, alpha: &Cochain, beta: &Cochain) -> Cochain {
    product_with(g.words(), l.bracket.matrix(), l.space.dim(), alpha, beta)
}

/// `𝐝α = d∘α − (−1)^{|α|} α∘d_λ`.
pub fn dgla_differential(g: &LInftyAlgebra, l: &DglaCoefficients, alpha: &Cochain) -> Cochain {
    let mut out = alpha.map_values(&l.differential, 1);
    let tail = precompose_differential(g, &l.space, alpha);
    out.add_scaled(&tail, &int(-i64::from(sign_pow(alpha.degree.into()))));
    out
}

/// `Ω_θ = 𝐝θ + ½ θ ∧_{[,]} θ` for `|θ| = 1`.
pub fn curvature_of_degree1(g: &LInftyAlgebra, l: &DglaCoefficients, theta: &Cochain) -> Result<Cochain, CochainError> {
    if theta.degree != 1 {
        return Err(CochainError::WrongDegree { expected: 1, found: theta.degree });
    }
    let mut out = dgla_differential(g, l, theta);
    out.add_scaled(&dgla_bracket(g, l, theta, theta), &frac(1, 2));
    Ok(out)
}

/// `ρ̄` as a reduced degree-1 cochain valued in `𝔤𝔩(V)`.
pub fn ruth_cochain(r: &Ruth) -> Cochain {
    let values = r.components().iter().map(|(w, m)| (w.clone(), m.to_end_vector())).collect();
    Cochain::new(1, values)
}

/// Rebuilds ruth-shaped data from `∂` and a reduced degree-1 `𝔤𝔩(V)`-valued cochain.
pub fn ruth_from_cochain(
    algebra: Arc<LInftyAlgebra>,
    space: GradedSpace,
    partial: SparseMatrix,
    theta: &Cochain,
) -> Result<Ruth, crate::ruth::RuthError> {
    let n = space.dim();
    let components = theta
        .values
        .iter()
        .filter(|(w, _)| !w.is_unit())
        .map(|(w, v)| (w.clone(), SparseMatrix::from_end_vector(n, v)))
        .collect();
    Ruth::new(algebra, space, partial, components)
}

/// The evaluation pairing `End(V) ⊗ V → V`.
pub fn evaluation_pairing(space: &GradedSpace) -> SparseMatrix {
    let n = space.dim();
    let mut m = SparseMatrix::zero(n, n * n * n);
    for i in 0..n {
        for j in 0..n {
            m.add_entry(i, (i * n + j) * n + j, &Scalar::one());
        }
    }
    m
}

/// `D̄α = ρ̄ ∧_ev α + ∂∘α − (−1)^{|α|} α∘d_λ` on reduced cochains.
pub fn reduced_differential(r: &Ruth, alpha: &Cochain) -> Result<Cochain, CochainError> {
    if !alpha.is_reduced() {
        return Err(CochainError::NotReduced);
    }
    let g = r.algebra();
    let ev = evaluation_pairing(r.space());
    let mut out = product_with(g.words(), &ev, r.space().dim(), &ruth_cochain(r), alpha);
    out.add_scaled(&alpha.map_values(r.partial(), 1), &Scalar::one());
    let tail = precompose_differential(g, r.space(), alpha);
    out.add_scaled(&tail, &int(-i64::from(sign_pow(alpha.degree.into()))));
    out.values.remove(&SymWord::unit());
    Ok(out)
}

/// `F*α = f∘α∘F` for a ruth morphism `(F, f)` and a cochain over its target.
pub fn pullback_cochain(m: &RuthMorphism, alpha: &Cochain) -> Cochain {
    pullback_along(&m.morphism, &m.map, m.source.space(), alpha)
}

/// `f∘α∘F` with `f` given as a matrix into `space`.
pub fn pullback_along(f: &LInftyMorphism, map: &SparseMatrix, space: &GradedSpace, alpha: &Cochain) -> Cochain {
    let words = f.source().words();
    let mut values = WordMap::new();
    let Some((lo, hi)) = cochain_window(space, alpha.degree) else { return Cochain::zero(alpha.degree) };
    for w in words.words_in_degree_range(lo, hi) {
        let mut out = SparseVec::new();
        for (u, c) in f.apply(&w) {
            if let Some(a) = alpha.values.get(&u) {
                out.add_scaled(a, &c);
            }
        }
        let out = map.apply(&out);
        if !out.is_zero() {
            values.insert(w, out);
        }
    }
    Cochain { degree: alpha.degree, values }
}

/// Random cochain with entries in `-bound..=bound`, supported on at most `terms` basis elements.
pub fn random_cochain<R: rand::Rng>(basis: &CochainBasis, rng: &mut R, terms: usize, bound: i64) -> Cochain {
    let mut coords = SparseVec::new();
    if basis.dim() == 0 {
        return Cochain::zero(basis.degree);
    }
    for _ in 0..terms {
        let k = rng.gen_range(0..basis.dim());
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            coords.add_at(k, &int(c));
        }
    }
    basis.cochain(&coords)
}

/// `(ρ̄ ∧_ev α)` where `ρ̄` is given as an arbitrary `𝔤𝔩(V)`-valued cochain.
pub fn act_by(words: &WordSpace, space: &GradedSpace, theta: &Cochain, alpha: &Cochain) -> Cochain {
    product_with(words, &evaluation_pairing(space), space.dim(), theta, alpha)
}
