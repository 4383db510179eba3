//! Chern-Weil-Lecomte classes of extensions.
//!
//! For an extension `0 → n → ĝ → g → 0`, a section `h` and a ruth `ρ` of `g` on `V`,
//! a skew equivariant map `f: n[1]^{⊗k} → V` of degree `q` yields the cocycle
//! `f∘K_h^{∧k} ∈ C^{k+q}(g, V)`. Its class does not depend on `h`.
//!
//! Equivariant maps are found as the kernel of one assembled rational matrix. With
//! `A(w)` the action on `n[1]^{⊗k}` and `B(w)` the action on `V`, a degree-`q` map
//! satisfies `f∘A(w) = (−1)^{q(|w|+1)} B(w)∘f` for every word `w` (including the unit,
//! which pairs the differentials). This is exactly the condition making
//! `α ↦ f∘α` intertwine the two CE differentials up to the sign `(−1)^q`. Skewness is
//! `f∘χ̂(σ) = f` for adjacent transpositions.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::cochain::{ce_differential, pullback_cochain, product_with, Cochain};
use crate::cohomology::matrix::RationalMatrix;
use crate::cohomology::{CeComplex, CohomologyClass, CohomologyError};
use crate::extension::{curvature, induced_action, pullback_extension, ExtensionError, LInftyExtension, Section};
use crate::graded::{int, sign_pow, GradedSpace, SparseMatrix, SparseVec};
use crate::linfty::LInftyMorphism;
use crate::report::Report;
use crate::ruth::{adjacent_transpositions, permutation_action, Ruth, RuthError, RuthMorphism};
use crate::symcoalg::SymWord;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CwlError {
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Ruth(#[from] RuthError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("cocycle check failed: {0}")]
    NotCocycle(String),
    #[error("no certificate found: {0}")]
    NoCertificate(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
}

/// Which action of the total algebra the map must intertwine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivariance {
    /// Against `ad|_n` of `ĝ` and the pulled-back ruth `π*ρ`, over all words of `ĝ`.
    Total,
    /// Against the section-induced action `h*(ad|_n)` and `ρ`, over words of `g`.
    Section,
}

/// A skew map `f: n[1]^{⊗k} → V` of degree `degree`, as a `dim V × (dim n)^k` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantHom {
    pub k: usize,
    pub degree: i32,
    pub matrix: SparseMatrix,
}

impl EquivariantHom {
    pub fn identity(dim: usize) -> Self {
        EquivariantHom { k: 1, degree: 0, matrix: SparseMatrix::identity(dim) }
    }

    pub fn scaled(&self, c: &crate::graded::Scalar) -> Self {
        EquivariantHom { matrix: self.matrix.scaled(c), ..self.clone() }
    }

    pub fn sum(&self, other: &EquivariantHom) -> Self {
        EquivariantHom { matrix: self.matrix.sum(&other.matrix), ..self.clone() }
    }
}

/// The acting data `(A, B)` on both sides of the equivariance equation.
fn acting_pair(
    e: &LInftyExtension,
    r: &Ruth,
    k: usize,
    mode: Equivariance,
    section: Option<&Section>,
) -> Result<(Ruth, Ruth), CwlError> {
    match mode {
        Equivariance::Total => {
            let ad = e.kernel_adjoint()?;
            let power = Ruth::tensor_power(&ad, k)?;
            let pulled = Ruth::pullback(e.projection(), r)?;
            Ok((power, pulled))
        }
        Equivariance::Section => {
            let default;
            let h = match section {
                Some(h) => h,
                None => {
                    default = Section::default_for(e)?;
                    &default
                }
            };
            let rho = induced_action(e, h)?;
            let power = Ruth::tensor_power(&rho, k)?;
            Ok((power, r.with_algebra(Arc::clone(e.base()))?))
        }
    }
}

fn words_of(a: &Ruth, b: &Ruth) -> Vec<SymWord> {
    let mut all: BTreeSet<SymWord> = a.components().keys().cloned().collect();
    all.extend(b.components().keys().cloned());
    let mut out = vec![SymWord::unit()];
    out.extend(all);
    out
}

/// Basis of the skew maps `n[1]^{⊗k} → V` of degree `q` that are equivariant in the given sense.
pub fn equivariant_homs(
    e: &LInftyExtension,
    r: &Ruth,
    k: usize,
    q: i32,
    mode: Equivariance,
) -> Result<Vec<EquivariantHom>, CwlError> {
    let (a, b) = acting_pair(e, r, k, mode, None)?;
    let tspace = a.space();
    let vspace = r.space();
    // unknowns: entries (i, j) of f with |v_i| = |t_j| + q
    let mut unknowns = Vec::new();
    let mut index = std::collections::HashMap::new();
    for i in 0..vspace.dim() {
        for j in 0..tspace.dim() {
            if vspace.degree(i) == tspace.degree(j) + q {
                index.insert((i, j), unknowns.len());
                unknowns.push((i, j));
            }
        }
    }
    let mut rows: Vec<SparseVec> = Vec::new();
    let n = unknowns.len();
    let push_rows = |rows: &mut Vec<SparseVec>, left: &SparseMatrix, right: &SparseMatrix, s: i64| {
        // (f∘left − s·right∘f)_{(i, j')} for every output slot
        let mut acc: std::collections::BTreeMap<(usize, usize), SparseVec> = Default::default();
        for (j, jp, c) in left.entries() {
            for i in 0..vspace.dim() {
                if let Some(&u) = index.get(&(i, j)) {
                    acc.entry((i, jp)).or_default().add_at(u, c);
                }
            }
        }
        for (i, ip, c) in right.entries() {
            for jp in 0..tspace.dim() {
                if let Some(&u) = index.get(&(ip, jp)) {
                    acc.entry((i, jp)).or_default().add_at(u, &(c * int(-s)));
                }
            }
        }
        rows.extend(acc.into_values().filter(|v| !v.is_zero()));
    };
    let algebra_words = a.algebra().words();
    for w in words_of(&a, &b) {
        let s = i64::from(sign_pow(i64::from(q) * i64::from(algebra_words.degree(&w) + 1)));
        push_rows(&mut rows, &a.component(&w), &b.component(&w), s);
    }
    let nspace = e.kernel().shifted();
    for sigma in adjacent_transpositions(k) {
        let p = permutation_action(nspace, k, &sigma, true);
        let diff = p.difference(&SparseMatrix::identity(tspace.dim()));
        push_rows(&mut rows, &diff, &SparseMatrix::zero(vspace.dim(), vspace.dim()), 0);
    }
    let kernel = RationalMatrix::from_rows(n, rows).kernel();
    Ok(kernel
        .into_iter()
        .map(|x| {
            let mut m = SparseMatrix::zero(vspace.dim(), tspace.dim());
            for (u, c) in x.iter() {
                let (i, j) = unknowns[u];
                m.add_entry(i, j, c);
            }
            EquivariantHom { k, degree: q, matrix: m }
        })
        .collect())
}

/// Brute-force check of skewness and equivariance on every (word, tensor basis) input.
pub fn check_equivariance(e: &LInftyExtension, r: &Ruth, f: &EquivariantHom, mode: Equivariance) -> Result<Report, CwlError> {
    let (a, b) = acting_pair(e, r, f.k, mode, None)?;
    let mut report = Report::new("equivariance");
    let words = a.algebra().words();
    let tspace = a.space();
    for w in words_of(&a, &b) {
        let s = int(sign_pow(i64::from(f.degree) * i64::from(words.degree(&w) + 1)).into());
        for j in 0..tspace.dim() {
            let t = SparseVec::basis(j);
            let left = f.matrix.apply(&a.act(&w, &t));
            let right = b.act(&w, &f.matrix.apply(&t)).scaled(&s);
            let diff = left.difference(&right);
            report.record(diff.is_zero(), || format!("{} ⊗ {}", words.display(&w), tspace.name(j)), || {
                r.space().format_vector(&diff)
            });
        }
    }
    let nspace = e.kernel().shifted();
    for sigma in adjacent_transpositions(f.k) {
        let p = permutation_action(nspace, f.k, &sigma, true);
        let diff = f.matrix.compose(&p).difference(&f.matrix);
        report.record(diff.is_zero(), || format!("skew {sigma:?}"), || format!("{diff:?}"));
    }
    Ok(report)
}

/// `K^{∧k} = (…(K ∧_id K) ∧_id …) ∧_id K`, valued in `n[1]^{⊗k}`; `k = 0` is the unit cochain.
pub fn curvature_wedge_power(e: &LInftyExtension, k_cochain: &Cochain, k: usize) -> Cochain {
    let words = e.base().words();
    if k == 0 {
        return Cochain::new(0, [(SymWord::unit(), SparseVec::basis(0))].into());
    }
    let n = e.kernel().dim();
    let mut acc = k_cochain.clone();
    let mut dim_acc = n;
    for _ in 1..k {
        let id = SparseMatrix::identity(dim_acc * n);
        acc = product_with(words, &id, n, &acc, k_cochain);
        dim_acc *= n;
    }
    acc
}

/// `f∘K_h^{∧k}` for a given section.
pub fn cwl_cocycle(e: &LInftyExtension, f: &EquivariantHom, h: &Section) -> Result<Cochain, CwlError> {
    let k = curvature(e, h)?;
    let wedge = curvature_wedge_power(e, &k, f.k);
    Ok(wedge.map_values(&f.matrix, f.degree))
}

/// Rechecks `D_ρ(f∘K_h^{∧k}) = 0`.
pub fn check_cwl_cocycle(r: &Ruth, cocycle: &Cochain) -> Report {
    let d = ce_differential(r, cocycle);
    let mut report = Report::new("CWL cocycle");
    let words = r.algebra().words();
    report.record(d.is_zero(), || "D(f∘K^k)".into(), || d.display(words, r.space()));
    report
}

/// The class of `f∘K_h^{∧k}` for the default section.
pub fn cwl_class(e: &LInftyExtension, complex: &CeComplex, f: &EquivariantHom) -> Result<CohomologyClass, CwlError> {
    let h = Section::default_for(e)?;
    cwl_class_with(e, complex, f, &h)
}

pub fn cwl_class_with(
    e: &LInftyExtension,
    complex: &CeComplex,
    f: &EquivariantHom,
    h: &Section,
) -> Result<CohomologyClass, CwlError> {
    if **complex.ruth().algebra() != **e.base() {
        return Err(CwlError::Mismatch("coefficient ruth is not over the base".into()));
    }
    let z = cwl_cocycle(e, f, h)?;
    let report = check_cwl_cocycle(complex.ruth(), &z);
    if !report.is_valid() {
        return Err(CwlError::NotCocycle(report.to_string()));
    }
    Ok(CohomologyClass::new(complex, z)?)
}

/// `β` with `D_ρβ = f_{K_{h1}} − f_{K_{h0}}`, rechecked; absence is an error.
pub fn independence_certificate(
    e: &LInftyExtension,
    complex: &CeComplex,
    f: &EquivariantHom,
    h0: &Section,
    h1: &Section,
) -> Result<Cochain, CwlError> {
    let z0 = cwl_cocycle(e, f, h0)?;
    let z1 = cwl_cocycle(e, f, h1)?;
    complex
        .same_class(&z1, &z0)?
        .ok_or_else(|| CwlError::NoCertificate("cocycles of two sections are not cohomologous".into()))
}

/// Outcome of a naturality check: both cocycles and the certificate relating them.
#[derive(Clone, Debug)]
pub struct Naturality {
    /// `T*(f∘K_h^{∧k})`.
    pub pulled_back: Cochain,
    /// `(t∘f)∘K_{h̄}^{∧k}` for the pulled-back extension.
    pub transported: Cochain,
    pub certificate: Option<Cochain>,
}

impl Naturality {
    pub fn commutes(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Compares `T*[f_{K_h}]` with `[(t∘f)_{K_{h̄}}]` for a ruth morphism `(T, t)` with strict `T`.
pub fn naturality_check(
    m: &RuthMorphism,
    e: &LInftyExtension,
    f: &EquivariantHom,
    h: &Section,
) -> Result<Naturality, CwlError> {
    if !m.morphism.is_strict() {
        return Err(ExtensionError::NotStrict.into());
    }
    let pb = pullback_extension(&m.morphism, e, h)?;
    let z = cwl_cocycle(e, f, h)?;
    let pulled_back = pullback_cochain(m, &z);
    let tf = EquivariantHom { k: f.k, degree: f.degree, matrix: m.map.compose(&f.matrix) };
    let transported = cwl_cocycle(&pb.extension, &tf, &pb.section)?;
    let complex = CeComplex::new(Arc::clone(&m.source));
    let certificate = complex.same_class(&pulled_back, &transported)?;
    Ok(Naturality { pulled_back, transported, certificate })
}

/// `T*K_h = K_{h̄}` for the transported section.
pub fn transported_curvature_agrees(t: &LInftyMorphism, e: &LInftyExtension, h: &Section) -> Result<bool, CwlError> {
    let pb = pullback_extension(t, e, h)?;
    let k = curvature(e, h)?;
    let id = SparseMatrix::identity(e.kernel().dim());
    let pulled = crate::cochain::pullback_along(t, &id, e.kernel().shifted(), &k);
    Ok(pulled == curvature(&pb.extension, &pb.section)?)
}

/// `Λ^k n[1]` as the image of the skew projector, for display.
pub fn exterior_dimension(space: &GradedSpace, k: usize) -> usize {
    let p = crate::ruth::skew_projector(space, k);
    RationalMatrix::from_sparse(&p).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::int;
    use crate::linfty::LieAlgebra;
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
    fn heisenberg_class_is_the_generator() {
        let e = heisenberg();
        let r = Arc::new(Ruth::trivial(Arc::clone(e.base()), e.kernel().shifted().clone()));
        let homs = equivariant_homs(&e, &r, 1, 0, Equivariance::Total).unwrap();
        assert_eq!(homs.len(), 1);
        for mode in [Equivariance::Total, Equivariance::Section] {
            assert!(check_equivariance(&e, &r, &homs[0], mode).unwrap().is_valid());
        }
        let complex = CeComplex::new(Arc::clone(&r));
        assert_eq!(complex.cohomology(1).dim(), 1);
        let class = cwl_class(&e, &complex, &EquivariantHom::identity(1)).unwrap();
        assert!(!class.is_zero());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let h0 = Section::random(&e, &mut rng, 4).unwrap();
        let h1 = Section::random(&e, &mut rng, 4).unwrap();
        let f = EquivariantHom::identity(1);
        let beta = independence_certificate(&e, &complex, &f, &h0, &h1).unwrap();
        let lhs = complex.apply(&beta);
        assert_eq!(lhs, cwl_cocycle(&e, &f, &h1).unwrap().difference(&cwl_cocycle(&e, &f, &h0).unwrap()));
    }

    #[test]
    fn wedge_power_is_associative() {
        let e = heisenberg();
        let h = Section::default_for(&e).unwrap();
        let k = curvature(&e, &h).unwrap();
        let words = e.base().words();
        let id = SparseMatrix::identity(1);
        let left = product_with(words, &id, 1, &product_with(words, &id, 1, &k, &k), &k);
        let right = product_with(words, &id, 1, &k, &product_with(words, &id, 1, &k, &k));
        assert_eq!(left, right);
        assert_eq!(curvature_wedge_power(&e, &k, 1), k);
    }
}
