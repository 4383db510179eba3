//! Extensions `0 → n → ĝ → g → 0` of L∞-algebras, linear sections and their curvature.
//!
//! A section `h: g[1] → ĝ[1]` of `π` extends to the coalgebra map `S(h)`. Its curvature
//! `K_h = λ̂∘S(h) − h∘λ` takes values in `n[1]`, and it is stored in `n`-coordinates as a
//! degree-1 cochain on canonical words of `g[1]`. The action `h*(ad|_n)` it induces on
//! `n[1]` is flat exactly when the section is.

use std::sync::Arc;

use rand::Rng;
use thiserror::Error;

use crate::cochain::{action_part, ce_differential, cochain_window, precompose_differential, Cochain};
use crate::cohomology::matrix::{LinearAlgebraError, RationalMatrix, Subspace};
use crate::graded::{int, GradedSpace, Scalar, SparseMatrix, SparseVec};
use crate::linfty::{check_morphism, LInftyAlgebra, LInftyError, LInftyMorphism};
use crate::report::Report;
use crate::ruth::{Ruth, RuthError};
use crate::symcoalg::{add_word, SymWord, WordMap, WordVec};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExtensionError {
    #[error(transparent)]
    LInfty(#[from] LInftyError),
    #[error(transparent)]
    Ruth(#[from] RuthError),
    #[error(transparent)]
    Linear(#[from] LinearAlgebraError),
    #[error("not a section: {0}")]
    NotSection(String),
    #[error("curvature at {word} leaves the kernel")]
    NotInKernel { word: String },
    #[error("pullbacks are only defined along strict morphisms")]
    NotStrict,
    #[error("mismatch: {0}")]
    Mismatch(String),
}

/// `0 → n --ι--> ĝ --π--> g → 0` with strict `ι` and `π`.
#[derive(Clone, Debug)]
pub struct LInftyExtension {
    kernel: Arc<LInftyAlgebra>,
    total: Arc<LInftyAlgebra>,
    base: Arc<LInftyAlgebra>,
    inclusion: LInftyMorphism,
    projection: LInftyMorphism,
    kernel_image: Subspace,
}

impl LInftyExtension {
    /// `iota` is `dim ĝ × dim n`, `pi` is `dim g × dim ĝ`; `iota` must be injective.
    pub fn new(
        kernel: Arc<LInftyAlgebra>,
        total: Arc<LInftyAlgebra>,
        base: Arc<LInftyAlgebra>,
        iota: &SparseMatrix,
        pi: &SparseMatrix,
    ) -> Result<Self, ExtensionError> {
        let inclusion = LInftyMorphism::strict(Arc::clone(&kernel), Arc::clone(&total), iota)?;
        let projection = LInftyMorphism::strict(Arc::clone(&total), Arc::clone(&base), pi)?;
        let kernel_image = Subspace::new(total.dim(), iota.columns().to_vec())?;
        Ok(LInftyExtension { kernel, total, base, inclusion, projection, kernel_image })
    }

    /// `ĝ = g ⊕ n` with componentwise brackets.
    pub fn split(base: Arc<LInftyAlgebra>, kernel: Arc<LInftyAlgebra>) -> Result<Self, ExtensionError> {
        let total = Arc::new(direct_sum(&base, &kernel)?);
        let (b, n) = (base.dim(), kernel.dim());
        let iota = SparseMatrix::from_entries(b + n, n, (0..n).map(|j| (b + j, j, int(1))));
        let pi = SparseMatrix::from_entries(b, b + n, (0..b).map(|j| (j, j, int(1))));
        Self::new(kernel, total, base, &iota, &pi)
    }

    pub fn kernel(&self) -> &Arc<LInftyAlgebra> {
        &self.kernel
    }

    pub fn total(&self) -> &Arc<LInftyAlgebra> {
        &self.total
    }

    pub fn base(&self) -> &Arc<LInftyAlgebra> {
        &self.base
    }

    pub fn inclusion(&self) -> &LInftyMorphism {
        &self.inclusion
    }

    pub fn projection(&self) -> &LInftyMorphism {
        &self.projection
    }

    pub fn inclusion_matrix(&self) -> SparseMatrix {
        self.inclusion.linear_part()
    }

    pub fn projection_matrix(&self) -> SparseMatrix {
        self.projection.linear_part()
    }

    /// `n`-coordinates of a vector of `ĝ` lying in `ι(n)`.
    pub fn kernel_coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        self.kernel_image.coordinates(v)
    }

    /// `ad|_n`: the adjoint ruth of `ĝ` restricted to `n[1]` (fails unless `ι(n)` is an ideal).
    pub fn kernel_adjoint(&self) -> Result<Ruth, ExtensionError> {
        let names = self.kernel.space().names().to_vec();
        Ok(Ruth::restricted_adjoint(Arc::clone(&self.total), self.kernel_image.basis(), names)?)
    }
}

/// `0 → 𝔤_{−1} → g → 𝔤_0 → 0` for a minimal algebra listing its degree-0 basis first: the
/// base keeps the binary brackets of degree-0 elements and the kernel is abelian.
pub fn skeletal_extension(m: Arc<LInftyAlgebra>) -> Result<LInftyExtension, ExtensionError> {
    let space = m.space();
    let upper = space.indices_of_degree(0);
    let lower = space.indices_of_degree(-1);
    if upper.iter().chain(&lower).copied().ne(0..space.dim()) || !m.differential().is_zero() {
        return Err(ExtensionError::Mismatch("expected a minimal algebra with its degree-0 basis first".into()));
    }
    let (c, k) = (upper.len(), lower.len());
    let named = |indices: &[usize], degree: i32| {
        GradedSpace::new(indices.iter().map(|&i| (space.name(i).to_string(), degree))).map_err(LInftyError::from)
    };
    let lambda: WordMap = m
        .lambda()
        .iter()
        .filter(|(w, _)| w.weight() == 2 && w.letters().all(|i| i < c))
        .map(|(w, v)| (w.clone(), v.clone()))
        .collect();
    let base = Arc::new(LInftyAlgebra::from_symmetric(named(&upper, 0)?, lambda)?);
    let kernel = Arc::new(LInftyAlgebra::abelian(named(&lower, -1)?)?);
    let iota = SparseMatrix::from_entries(c + k, k, (0..k).map(|j| (c + j, j, int(1))));
    let pi = SparseMatrix::from_entries(c, c + k, (0..c).map(|i| (i, i, int(1))));
    LInftyExtension::new(kernel, m, base, &iota, &pi)
}

/// Direct sum of two algebras with componentwise brackets (second summand's basis after the first).
pub fn direct_sum(a: &LInftyAlgebra, b: &LInftyAlgebra) -> Result<LInftyAlgebra, ExtensionError> {
    let space = a.space().direct_sum(b.space()).map_err(LInftyError::from)?;
    let offset = a.dim();
    let mut table = a.brackets();
    for (tuple, v) in b.brackets() {
        let shifted: Vec<usize> = tuple.iter().map(|i| i + offset).collect();
        table.insert(shifted, v.remap(|i| Some(i + offset)));
    }
    Ok(LInftyAlgebra::from_brackets(space, &table)?)
}

/// Strictness, exactness in every degree, and the ideal property of `ι(n)`.
pub fn check_extension(e: &LInftyExtension) -> Report {
    let mut report = Report::new("extension");
    report.absorb(check_morphism(&e.inclusion));
    report.absorb(check_morphism(&e.projection));
    let iota = e.inclusion_matrix();
    let pi = e.projection_matrix();
    let composite = pi.compose(&iota);
    report.record(composite.is_zero(), || "π∘ι".into(), || format!("{composite:?}"));
    let total = e.total.space();
    let mut degrees: Vec<i32> = total.degrees().to_vec();
    degrees.extend(e.base.space().degrees());
    degrees.extend(e.kernel.space().degrees());
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let cols: Vec<SparseVec> = total.indices_of_degree(d).iter().map(|&j| pi.column(j).clone()).collect();
        let rank_pi = RationalMatrix::from_columns(pi.nrows(), &cols).rank();
        let base_dim = e.base.space().indices_of_degree(d).len();
        report.record(rank_pi == base_dim, || format!("π surjective in degree {d}"), || {
            format!("rank {rank_pi}, target dimension {base_dim}")
        });
        let kernel_dim = e.kernel.space().indices_of_degree(d).len();
        let total_dim = total.indices_of_degree(d).len();
        report.record(
            kernel_dim + rank_pi == total_dim,
            || format!("exact in degree {d}"),
            || format!("dim n = {kernel_dim}, rank π = {rank_pi}, dim ĝ = {total_dim}"),
        );
    }
    if let Err(err) = e.kernel_adjoint() {
        report.fail("ideal", err.to_string());
    } else {
        report.record(true, String::new, String::new);
    }
    report
}

/// A degree-0 right inverse `h` of `π`, as a `dim ĝ × dim g` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    matrix: SparseMatrix,
}

impl Section {
    pub fn new(e: &LInftyExtension, matrix: SparseMatrix) -> Result<Self, ExtensionError> {
        let (total, base) = (e.total.space(), e.base.space());
        if matrix.nrows() != total.dim() || matrix.ncols() != base.dim() {
            return Err(ExtensionError::NotSection("wrong shape".into()));
        }
        if let Some((i, j, _)) = matrix.entries().find(|&(i, j, _)| total.degree(i) != base.degree(j)) {
            return Err(ExtensionError::NotSection(format!(
                "entry ({}, {}) is not of degree 0",
                total.name(i),
                base.name(j)
            )));
        }
        if e.projection_matrix().compose(&matrix) != SparseMatrix::identity(base.dim()) {
            return Err(ExtensionError::NotSection("π∘h ≠ id".into()));
        }
        Ok(Section { matrix })
    }

    /// Solves `π x = e_j` with free variables zero, column by column.
    pub fn default_for(e: &LInftyExtension) -> Result<Self, ExtensionError> {
        let pi = RationalMatrix::from_sparse(&e.projection_matrix());
        let mut cols = Vec::with_capacity(e.base.dim());
        for j in 0..e.base.dim() {
            cols.push(pi.solve(&SparseVec::basis(j))?);
        }
        Self::new(e, SparseMatrix::from_columns(e.total.dim(), cols))
    }

    /// `default + ι∘R` for a random degree-0 map `R: g → n` with entries in `-bound..=bound`.
    pub fn random<R: Rng>(e: &LInftyExtension, rng: &mut R, bound: i64) -> Result<Self, ExtensionError> {
        let mut m = Self::default_for(e)?.matrix;
        let iota = e.inclusion_matrix();
        let (base, kernel) = (e.base.space(), e.kernel.space());
        for j in 0..base.dim() {
            for k in kernel.indices_of_degree(base.degree(j)) {
                let c = rng.gen_range(-bound..=bound);
                if c != 0 {
                    let mut col = SparseVec::new();
                    col.add_scaled(iota.column(k), &int(c));
                    for (i, x) in col.iter() {
                        m.add_entry(i, j, x);
                    }
                }
            }
        }
        Self::new(e, m)
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    /// `S(h)` packaged as a strict map `g → ĝ` (not validated as a morphism).
    pub fn as_morphism(&self, e: &LInftyExtension) -> LInftyMorphism {
        LInftyMorphism::strict(Arc::clone(&e.base), Arc::clone(&e.total), &self.matrix).expect("section has degree 0")
    }

    /// Flat sections are exactly those whose `S(h)` is an L∞-morphism.
    pub fn is_morphism(&self, e: &LInftyExtension) -> bool {
        check_morphism(&self.as_morphism(e)).is_valid()
    }
}

/// `S(h_0 + tΔ)(w)` as a polynomial in `t`: entry `k` is the coefficient of `t^k`.
fn section_image(e: &LInftyExtension, h0: &SparseMatrix, delta: Option<&SparseMatrix>, w: &SymWord) -> Vec<WordVec> {
    let letters = w.to_vec();
    let m = letters.len();
    let words = e.total.words();
    let mut out = vec![WordVec::new(); if delta.is_some() { m + 1 } else { 1 }];
    let masks: u32 = if delta.is_some() { 1 << m } else { 1 };
    for mask in 0..masks {
        let vectors: Vec<&SparseVec> = letters
            .iter()
            .enumerate()
            .map(|(pos, &i)| match delta {
                Some(d) if mask & (1 << pos) != 0 => d.column(i),
                _ => h0.column(i),
            })
            .collect();
        if vectors.iter().any(|v| v.is_zero()) {
            continue;
        }
        let power = mask.count_ones() as usize;
        for (u, c) in words.vector_product(&vectors) {
            add_word(&mut out[power], u, &c);
        }
    }
    out
}

/// Polynomial curvature `K_{h_0 + tΔ}`; a single coefficient when `delta` is `None`.
fn curvature_polynomial(
    e: &LInftyExtension,
    h0: &SparseMatrix,
    delta: Option<&SparseMatrix>,
) -> Result<Vec<Cochain>, ExtensionError> {
    let words = e.base.words();
    let target = e.kernel.shifted();
    let len = delta.map_or(1, |_| e.total.max_arity().max(1) + 1);
    let mut coefficients = vec![Cochain::zero(1); len];
    let Some((lo, hi)) = cochain_window(target, 1) else { return Ok(coefficients) };
    for w in words.words_in_degree_range(lo, hi) {
        if w.is_unit() {
            continue;
        }
        let image = section_image(e, h0, delta, &w);
        let lower = e.base.bracket(&w);
        for (k, part) in image.iter().enumerate() {
            let mut v = e.total.apply_lambda(part);
            if k == 0 {
                v.sub_assign(&h0.apply(&lower));
            } else if k == 1 {
                v.sub_assign(&delta.expect("k ≥ 1 needs a direction").apply(&lower));
            }
            if v.is_zero() {
                continue;
            }
            let coords = e.kernel_coordinates(&v).ok_or_else(|| ExtensionError::NotInKernel { word: words.display(&w) })?;
            if k >= coefficients.len() {
                coefficients.resize(k + 1, Cochain::zero(1));
            }
            coefficients[k].values.insert(w.clone(), coords);
        }
    }
    Ok(coefficients)
}

/// `K_h ∈ C¹(g, n[1])`.
pub fn curvature(e: &LInftyExtension, h: &Section) -> Result<Cochain, ExtensionError> {
    Ok(curvature_polynomial(e, &h.matrix, None)?.swap_remove(0))
}

/// Polynomial action `h_t*(ad|_n)`: entry `k` is the coefficient of `t^k` (only entry 0 carries `∂`).
fn action_polynomial(e: &LInftyExtension, h0: &SparseMatrix, delta: Option<&SparseMatrix>) -> Result<Vec<Ruth>, ExtensionError> {
    let ad = e.kernel_adjoint()?;
    let space = ad.space().clone();
    let n = space.dim();
    let (lo, hi) = ad.component_window();
    let len = delta.map_or(1, |_| e.total.max_arity().max(1) + 1);
    let mut comps: Vec<std::collections::BTreeMap<SymWord, SparseMatrix>> = vec![Default::default(); len];
    for w in e.base.words().words_in_degree_range(lo, hi) {
        if w.is_unit() {
            continue;
        }
        for (k, part) in section_image(e, h0, delta, &w).iter().enumerate() {
            let mut m = SparseMatrix::zero(n, n);
            for (u, c) in part {
                if let Some(x) = ad.components().get(u) {
                    m.add_scaled(x, c);
                }
            }
            if !m.is_zero() {
                if k >= comps.len() {
                    comps.resize(k + 1, Default::default());
                }
                comps[k].insert(w.clone(), m);
            }
        }
    }
    comps
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let partial = if k == 0 { ad.partial().clone() } else { SparseMatrix::zero(n, n) };
            Ruth::new(Arc::clone(&e.base), space.clone(), partial, c).map_err(ExtensionError::from)
        })
        .collect()
}

/// `ρ = h*(ad|_n)` on `n[1]`, returned without a flatness check.
pub fn induced_action(e: &LInftyExtension, h: &Section) -> Result<Ruth, ExtensionError> {
    Ok(action_polynomial(e, &h.matrix, None)?.swap_remove(0))
}

/// `D_ρ K_h = 0` for the induced (possibly curved) action.
pub fn bianchi_check(e: &LInftyExtension, h: &Section) -> Result<Report, ExtensionError> {
    let k = curvature(e, h)?;
    let rho = induced_action(e, h)?;
    let dk = ce_differential(&rho, &k);
    let mut report = Report::new("Bianchi identity");
    let words = e.base.words();
    if dk.is_zero() {
        report.record(true, String::new, String::new);
    }
    for (w, v) in &dk.values {
        report.record(false, || words.display(w), || rho.space().format_vector(v));
    }
    Ok(report)
}

/// `K_{h_t}` for `h_t = h_0 + t(h_1 − h_0)`, as coefficients of powers of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureFamily {
    pub coefficients: Vec<Cochain>,
}

impl CurvatureFamily {
    pub fn evaluate(&self, t: &Scalar) -> Cochain {
        let mut out = Cochain::zero(1);
        let mut power = int(1);
        for c in &self.coefficients {
            out.add_scaled(c, &power);
            power *= t;
        }
        out
    }

    /// Coefficients of `dK/dt`.
    pub fn derivative(&self) -> Vec<Cochain> {
        self.coefficients.iter().enumerate().skip(1).map(|(k, c)| c.scaled(&int(k as i64))).collect()
    }

    /// Highest power of `t` with a nonzero coefficient.
    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

pub fn curvature_family(e: &LInftyExtension, h0: &Section, h1: &Section) -> Result<CurvatureFamily, ExtensionError> {
    let delta = h1.matrix.difference(&h0.matrix);
    Ok(CurvatureFamily { coefficients: curvature_polynomial(e, &h0.matrix, Some(&delta))? })
}

/// `(h_1 − h_0)∘pr` as a degree-0 cochain in `C⁰(g, n[1])`.
pub fn section_difference(e: &LInftyExtension, h0: &Section, h1: &Section) -> Result<Cochain, ExtensionError> {
    let delta = h1.matrix.difference(&h0.matrix);
    let mut values = WordMap::new();
    for j in 0..e.base.dim() {
        let v = delta.column(j);
        if v.is_zero() {
            continue;
        }
        let coords = e.kernel_coordinates(v).ok_or_else(|| ExtensionError::NotSection("difference leaves ι(n)".into()))?;
        values.insert(SymWord::generator(j), coords);
    }
    Ok(Cochain::new(0, values))
}

/// `dK_{h_t}/dt = D_{ρ_t}α` coefficient by coefficient in `t`.
pub fn variation_check(e: &LInftyExtension, h0: &Section, h1: &Section) -> Result<Report, ExtensionError> {
    let family = curvature_family(e, h0, h1)?;
    let delta = h1.matrix.difference(&h0.matrix);
    let actions = action_polynomial(e, &h0.matrix, Some(&delta))?;
    let alpha = section_difference(e, h0, h1)?;
    let derivative = family.derivative();
    let tail = precompose_differential(&e.base, e.kernel.shifted(), &alpha);
    let len = derivative.len().max(actions.len());
    let mut report = Report::new("curvature variation");
    for k in 0..len {
        let left = derivative.get(k).cloned().unwrap_or_else(|| Cochain::zero(1));
        let mut right = actions.get(k).map_or_else(|| Cochain::zero(1), |r| action_part(r, &alpha));
        if k == 0 {
            right.add_scaled(&tail, &int(-1));
        }
        let diff = left.difference(&right);
        report.record(diff.is_zero(), || format!("t^{k}"), || {
            diff.display(e.base.words(), e.kernel.shifted())
        });
    }
    Ok(report)
}

/// An extension pulled back along a strict `T: h → g`, with the transported section
/// and the strict map `ĥ → ĝ` covering `T`.
#[derive(Clone, Debug)]
pub struct PulledBackExtension {
    pub extension: LInftyExtension,
    pub section: Section,
    pub cover: SparseMatrix,
}

/// Fiber product `ĥ = h ×_g ĝ`, with basis `(x_i, s(T x_i))` followed by `(0, ι n_j)`.
pub fn pullback_extension(t: &LInftyMorphism, e: &LInftyExtension, s: &Section) -> Result<PulledBackExtension, ExtensionError> {
    if !t.is_strict() {
        return Err(ExtensionError::NotStrict);
    }
    if **t.target() != *e.base {
        return Err(ExtensionError::Mismatch("morphism does not land in the base".into()));
    }
    let h = Arc::clone(t.source());
    let (dh, dn) = (h.dim(), e.kernel.dim());
    let kernel_space = e.kernel.space();
    let clash = kernel_space.names().iter().any(|n| h.space().index_of(n).is_some());
    let entries = h
        .space()
        .names()
        .iter()
        .cloned()
        .zip(h.space().degrees().iter().copied())
        .chain(kernel_space.names().iter().zip(kernel_space.degrees()).map(|(n, &d)| {
            (if clash { format!("n.{n}") } else { n.clone() }, d)
        }));
    let space = GradedSpace::new(entries).map_err(LInftyError::from)?;
    let st = s.matrix.compose(&t.linear_part());
    let iota = e.inclusion_matrix();
    let cover_cols: Vec<SparseVec> =
        (0..dh).map(|i| st.column(i).clone()).chain((0..dn).map(|j| iota.column(j).clone())).collect();
    let cover = SparseMatrix::from_columns(e.total.dim(), cover_cols);
    let max_arity = h.max_arity().max(e.total.max_arity());
    let shifted = space.shift(1);
    let hat_words = crate::symcoalg::WordSpace::new(shifted.clone()).map_err(LInftyError::from)?;
    let lo = shifted.min_degree().unwrap_or(-1) - 1;
    let hi = shifted.max_degree().unwrap_or(-1) - 1;
    let mut lambda = WordMap::new();
    for w in hat_words.words_in_degree_range(lo, hi) {
        if w.is_unit() || w.weight() > max_arity {
            continue;
        }
        let letters = w.to_vec();
        let lower: Vec<SparseVec> =
            letters.iter().map(|&i| if i < dh { SparseVec::basis(i) } else { SparseVec::new() }).collect();
        let upper: Vec<&SparseVec> = letters.iter().map(|&i| cover.column(i)).collect();
        let a = if lower.iter().any(SparseVec::is_zero) {
            SparseVec::new()
        } else {
            h.apply_lambda(&h.words().vector_product(&lower.iter().collect::<Vec<_>>()))
        };
        let b = e.total.apply_lambda(&e.total.words().vector_product(&upper));
        let rest = b.difference(&st.apply(&a));
        let coords = e.kernel_coordinates(&rest).ok_or_else(|| {
            ExtensionError::Mismatch(format!("bracket at {} leaves the fiber product", hat_words.display(&w)))
        })?;
        let mut v = a.clone();
        for (j, c) in coords.iter() {
            v.add_at(dh + j, c);
        }
        if !v.is_zero() {
            lambda.insert(w, v);
        }
    }
    let total = Arc::new(LInftyAlgebra::from_symmetric(space, lambda)?);
    let new_iota = SparseMatrix::from_entries(dh + dn, dn, (0..dn).map(|j| (dh + j, j, int(1))));
    let new_pi = SparseMatrix::from_entries(dh, dh + dn, (0..dh).map(|i| (i, i, int(1))));
    let extension = LInftyExtension::new(Arc::clone(&e.kernel), total, h, &new_iota, &new_pi)?;
    let section = Section::new(&extension, SparseMatrix::from_entries(dh + dn, dh, (0..dh).map(|i| (i, i, int(1)))))?;
    Ok(PulledBackExtension { extension, section, cover })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfty::{check_jacobi, LieAlgebra};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn heisenberg() -> LInftyExtension {
        let total = Arc::new(LieAlgebra::heisenberg().to_linfty().unwrap());
        let base = Arc::new(LieAlgebra::abelian("e", 2).to_linfty().unwrap());
        let kernel = Arc::new(LieAlgebra::abelian("c", 1).to_linfty().unwrap());
        let iota = SparseMatrix::from_entries(3, 1, [(2, 0, int(1))]);
        let pi = SparseMatrix::from_entries(2, 3, [(0, 0, int(1)), (1, 1, int(1))]);
        LInftyExtension::new(kernel, total, base, &iota, &pi).unwrap()
    }

    #[test]
    fn heisenberg_curvature_is_the_bracket() {
        let e = heisenberg();
        assert!(check_extension(&e).is_valid(), "{}", check_extension(&e));
        let h = Section::default_for(&e).unwrap();
        let k = curvature(&e, &h).unwrap();
        assert_eq!(k.values.len(), 1);
        let (w, v) = k.values.iter().next().unwrap();
        assert_eq!(w.to_vec(), vec![0, 1]);
        assert_eq!(v.iter().count(), 1);
        assert!(!h.is_morphism(&e));
        assert!(induced_action(&e, &h).unwrap().components().is_empty());
        assert!(bianchi_check(&e, &h).unwrap().is_valid());
    }

    #[test]
    fn split_extension_is_flat() {
        let base = Arc::new(LieAlgebra::sl2().to_linfty().unwrap());
        let kernel = Arc::new(LieAlgebra::abelian("c", 1).to_linfty().unwrap());
        let e = LInftyExtension::split(base, kernel).unwrap();
        assert!(check_jacobi(e.total()).is_valid());
        assert!(check_extension(&e).is_valid());
        let h = Section::default_for(&e).unwrap();
        assert!(curvature(&e, &h).unwrap().is_zero());
        assert!(h.is_morphism(&e));
    }

    #[test]
    fn non_surjective_projection_is_reported() {
        let total = Arc::new(LieAlgebra::abelian("a", 2).to_linfty().unwrap());
        let base = Arc::new(LieAlgebra::abelian("e", 2).to_linfty().unwrap());
        let kernel = Arc::new(LieAlgebra::abelian("c", 1).to_linfty().unwrap());
        let iota = SparseMatrix::from_entries(2, 1, [(1, 0, int(1))]);
        let pi = SparseMatrix::from_entries(2, 2, [(0, 0, int(1))]);
        let e = LInftyExtension::new(kernel, total, base, &iota, &pi).unwrap();
        assert!(!check_extension(&e).is_valid());
    }

    #[test]
    fn variation_is_a_polynomial_identity() {
        let e = heisenberg();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let h0 = Section::random(&e, &mut rng, 3).unwrap();
        let h1 = Section::random(&e, &mut rng, 3).unwrap();
        let report = variation_check(&e, &h0, &h1).unwrap();
        assert!(report.is_valid(), "{report}");
        let fam = curvature_family(&e, &h0, &h1).unwrap();
        assert_eq!(fam.evaluate(&int(0)), curvature(&e, &h0).unwrap());
        assert_eq!(fam.evaluate(&int(1)), curvature(&e, &h1).unwrap());
    }

    #[test]
    fn pullback_along_identity_and_line() {
        let e = heisenberg();
        let h = Section::default_for(&e).unwrap();
        let id = LInftyMorphism::identity(Arc::clone(e.base()));
        let pb = pullback_extension(&id, &e, &h).unwrap();
        assert!(check_extension(&pb.extension).is_valid());
        assert_eq!(curvature(&pb.extension, &pb.section).unwrap(), curvature(&e, &h).unwrap());
        let line = Arc::new(LieAlgebra::abelian("l", 1).to_linfty().unwrap());
        let t = LInftyMorphism::strict(line, Arc::clone(e.base()), &SparseMatrix::from_entries(2, 1, [(0, 0, int(1)), (1, 0, int(2))]))
            .unwrap();
        let pb = pullback_extension(&t, &e, &h).unwrap();
        assert!(check_extension(&pb.extension).is_valid());
        assert!(curvature(&pb.extension, &pb.section).unwrap().is_zero());
    }
}
