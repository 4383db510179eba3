//! Representations up to homotopy (ruths), stored in split form.
//!
//! A ruth of `g` on `V` is a degree-1 map `ρ: S(g[1]) ⊗ V → V`. We store its
//! restriction to the unit, the differential `∂ = ρ(1 ⊗ ·)`, and for each nonempty
//! canonical word `w` the endomorphism `ρ̄(w) = ρ(w ⊗ ·)` of degree `|w| + 1`.
//! Data that fails the structure equation is still representable: curved actions
//! induced by non-flat sections are ruth-shaped but not ruths.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::cohomology::matrix::{LinearAlgebraError, Subspace};
use crate::graded::{
    frac, int, sign_pow, signed_kronecker, skew_sign, GradedError, GradedSpace, Scalar, SparseMatrix, SparseVec,
};
use crate::linfty::{LInftyAlgebra, LInftyError, LInftyMorphism};
use crate::report::Report;
use crate::symcoalg::{SymError, SymWord};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RuthError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Words(#[from] SymError),
    #[error(transparent)]
    LInfty(#[from] LInftyError),
    #[error(transparent)]
    Linear(#[from] LinearAlgebraError),
    #[error("{what} has an entry of the wrong degree at row {row}, column {col}")]
    Degree { what: String, row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    Mismatch(String),
    #[error("not an ideal: λ({word} ∨ {element}) leaves the subspace")]
    NotIdeal { word: String, element: String },
}

/// `(∂, ρ̄)` on a graded space `V` over an algebra `g`.
#[derive(Clone)]
pub struct Ruth {
    algebra: Arc<LInftyAlgebra>,
    space: GradedSpace,
    partial: SparseMatrix,
    components: BTreeMap<SymWord, SparseMatrix>,
}

impl fmt::Debug for Ruth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Ruth on {:?}", self.space)?;
        writeln!(f, "  ∂ = {:?}", self.partial)?;
        for (w, m) in &self.components {
            writeln!(f, "  ρ̄({}) = {:?}", self.algebra.words().display(w), m)?;
        }
        Ok(())
    }
}

impl PartialEq for Ruth {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.space == other.space
            && self.partial == other.partial
            && self.components == other.components
    }
}

fn check_matrix_degree(
    space: &GradedSpace,
    m: &SparseMatrix,
    degree: i32,
    what: impl Fn() -> String,
) -> Result<(), RuthError> {
    if m.nrows() != space.dim() || m.ncols() != space.dim() {
        return Err(RuthError::Mismatch(format!("{} is not a square matrix of size {}", what(), space.dim())));
    }
    for (i, j, _) in m.entries() {
        if space.degree(i) != space.degree(j) + degree {
            return Err(RuthError::Degree { what: what(), row: i, col: j });
        }
    }
    Ok(())
}

impl Ruth {
    /// Validates shapes and degrees only; flatness is checked by [`check_ruth`].
    pub fn new(
        algebra: Arc<LInftyAlgebra>,
        space: GradedSpace,
        partial: SparseMatrix,
        components: BTreeMap<SymWord, SparseMatrix>,
    ) -> Result<Self, RuthError> {
        check_matrix_degree(&space, &partial, 1, || "∂".to_string())?;
        let words = algebra.words();
        let mut kept = BTreeMap::new();
        for (w, m) in components {
            if w.is_unit() {
                return Err(RuthError::Mismatch("use the differential for the unit word".into()));
            }
            if let Some(&bad) = w.to_vec().iter().find(|&&i| i >= algebra.dim()) {
                return Err(SymError::UnknownGenerator { index: bad, dim: algebra.dim() }.into());
            }
            check_matrix_degree(&space, &m, words.degree(&w) + 1, || format!("ρ̄({})", words.display(&w)))?;
            if !m.is_zero() {
                kept.insert(w, m);
            }
        }
        Ok(Ruth { algebra, space, partial, components: kept })
    }

    /// `∂ = 0`, `ρ̄ = 0`.
    pub fn trivial(algebra: Arc<LInftyAlgebra>, space: GradedSpace) -> Self {
        let n = space.dim();
        Ruth { algebra, space, partial: SparseMatrix::zero(n, n), components: BTreeMap::new() }
    }

    /// The one-dimensional degree-0 trivial ruth.
    pub fn trivial_line(algebra: Arc<LInftyAlgebra>) -> Self {
        Self::trivial(algebra, GradedSpace::new([("1", 0)]).expect("one name"))
    }

    /// `ρ̄(x_i) = matrices[i]` on generators, zero on longer words.
    pub fn from_generators(
        algebra: Arc<LInftyAlgebra>,
        space: GradedSpace,
        partial: SparseMatrix,
        matrices: Vec<SparseMatrix>,
    ) -> Result<Self, RuthError> {
        if matrices.len() != algebra.dim() {
            return Err(RuthError::Mismatch(format!("{} matrices for {} generators", matrices.len(), algebra.dim())));
        }
        let components = matrices.into_iter().enumerate().map(|(i, m)| (SymWord::generator(i), m)).collect();
        Self::new(algebra, space, partial, components)
    }

    /// The adjoint ruth on `g[1]`: `ρ(w ⊗ y) = λ(w ∨ y)`.
    pub fn adjoint(algebra: Arc<LInftyAlgebra>) -> Self {
        let space = algebra.shifted().clone();
        let basis: Vec<SparseVec> = (0..algebra.dim()).map(SparseVec::basis).collect();
        let components = adjoint_components(&algebra, &space, &basis, |v| Some(v.clone()))
            .expect("the full space is an ideal");
        let partial = algebra.differential();
        Ruth { algebra, space, partial, components }
    }

    /// The adjoint action restricted to `n[1]` for a graded subspace `n` spanned by
    /// homogeneous `basis` vectors; fails with a witness unless `n[1]` is an ideal.
    pub fn restricted_adjoint(
        algebra: Arc<LInftyAlgebra>,
        basis: &[SparseVec],
        names: Vec<String>,
    ) -> Result<Self, RuthError> {
        let shifted = algebra.shifted();
        let mut entries = Vec::with_capacity(basis.len());
        for (b, name) in basis.iter().zip(&names) {
            let degree = shifted
                .homogeneous_degree(b)
                .ok_or_else(|| RuthError::Mismatch(format!("basis vector {name} is zero or inhomogeneous")))?;
            entries.push((name.clone(), degree));
        }
        let space = GradedSpace::new(entries)?;
        let sub = Subspace::new(algebra.dim(), basis.to_vec())?;
        let components = adjoint_components(&algebra, &space, basis, |v| sub.coordinates(v))?;
        let mut partial = SparseMatrix::zero(space.dim(), space.dim());
        let d = algebra.differential();
        for (j, b) in basis.iter().enumerate() {
            let image = d.apply(b);
            let coords = sub.coordinates(&image).ok_or_else(|| RuthError::NotIdeal {
                word: "1".into(),
                element: names[j].clone(),
            })?;
            for (i, c) in coords.iter() {
                partial.add_entry(i, j, c);
            }
        }
        Ok(Ruth { algebra, space, partial, components })
    }

    /// `F*ρ' = ρ' ∘ (F ⊗ id)`.
    pub fn pullback(f: &LInftyMorphism, r: &Ruth) -> Result<Self, RuthError> {
        if **f.target() != *r.algebra {
            return Err(RuthError::Mismatch("pullback needs the ruth's algebra as morphism target".into()));
        }
        let source = Arc::clone(f.source());
        let (lo, hi) = component_window(&r.space);
        let mut components = BTreeMap::new();
        for w in source.words().words_in_degree_range(lo, hi) {
            if w.is_unit() {
                continue;
            }
            let mut m = SparseMatrix::zero(r.space.dim(), r.space.dim());
            for (u, c) in f.apply(&w) {
                if let Some(x) = r.components.get(&u) {
                    m.add_scaled(x, &c);
                }
            }
            if !m.is_zero() {
                components.insert(w, m);
            }
        }
        Ok(Ruth { algebra: source, space: r.space.clone(), partial: r.partial.clone(), components })
    }

    /// `ρ_1 ⊗ id + (id ⊗ ρ_2)∘(T ⊗ id)` on `V_1 ⊗ V_2`.
    pub fn tensor(r1: &Ruth, r2: &Ruth) -> Result<Self, RuthError> {
        if r1.algebra != r2.algebra {
            return Err(RuthError::Mismatch("tensor product of ruths over different algebras".into()));
        }
        let space = r1.space.tensor(&r2.space);
        let id1 = SparseMatrix::identity(r1.space.dim());
        let id2 = SparseMatrix::identity(r2.space.dim());
        let combine = |a: &SparseMatrix, b: &SparseMatrix, degree: i32| {
            let mut m = signed_kronecker(a, &r1.space, &id2, 0);
            m.add_scaled(&signed_kronecker(&id1, &r1.space, b, degree), &Scalar::from_integer(1.into()));
            m
        };
        let partial = combine(&r1.partial, &r2.partial, 1);
        let words = r1.algebra.words();
        let mut components = BTreeMap::new();
        let keys: std::collections::BTreeSet<&SymWord> = r1.components.keys().chain(r2.components.keys()).collect();
        let zero1 = SparseMatrix::zero(r1.space.dim(), r1.space.dim());
        let zero2 = SparseMatrix::zero(r2.space.dim(), r2.space.dim());
        for w in keys {
            let a = r1.components.get(w).unwrap_or(&zero1);
            let b = r2.components.get(w).unwrap_or(&zero2);
            let m = combine(a, b, words.degree(w) + 1);
            if !m.is_zero() {
                components.insert(w.clone(), m);
            }
        }
        Ok(Ruth { algebra: Arc::clone(&r1.algebra), space, partial, components })
    }

    /// `V^{⊗k}` with the iterated tensor ruth; `k = 0` gives the trivial line.
    pub fn tensor_power(r: &Ruth, k: usize) -> Result<Self, RuthError> {
        if k == 0 {
            return Ok(Self::trivial(Arc::clone(&r.algebra), r.space.tensor_power(0)));
        }
        let mut acc = r.clone();
        for _ in 1..k {
            acc = Self::tensor(&acc, r)?;
        }
        Ok(acc)
    }

    pub fn algebra(&self) -> &Arc<LInftyAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn partial(&self) -> &SparseMatrix {
        &self.partial
    }

    pub fn components(&self) -> &BTreeMap<SymWord, SparseMatrix> {
        &self.components
    }

    /// `ρ̄(w)`, with `ρ̄(1) = ∂`.
    pub fn component(&self, w: &SymWord) -> SparseMatrix {
        if w.is_unit() {
            return self.partial.clone();
        }
        self.components
            .get(w)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.space.dim(), self.space.dim()))
    }

    /// `ρ(w ⊗ v)`.
    pub fn act(&self, w: &SymWord, v: &SparseVec) -> SparseVec {
        if w.is_unit() {
            return self.partial.apply(v);
        }
        self.components.get(w).map(|m| m.apply(v)).unwrap_or_default()
    }

    /// Same data viewed over another (equal) algebra handle.
    pub fn with_algebra(&self, algebra: Arc<LInftyAlgebra>) -> Result<Self, RuthError> {
        if *algebra != *self.algebra {
            return Err(RuthError::Mismatch("different algebra".into()));
        }
        Ok(Ruth { algebra, ..self.clone() })
    }

    /// Word degrees where a component can be nonzero.
    pub fn component_window(&self) -> (i32, i32) {
        component_window(&self.space)
    }
}

fn component_window(space: &GradedSpace) -> (i32, i32) {
    match (space.min_degree(), space.max_degree()) {
        (Some(lo), Some(hi)) => (lo - hi - 1, -1),
        _ => (0, -1),
    }
}

/// `ρ̄(w)(b_j) = coords(λ(w ∨ b_j))` for words in the degree window of `space`.
fn adjoint_components(
    algebra: &LInftyAlgebra,
    space: &GradedSpace,
    basis: &[SparseVec],
    coords: impl Fn(&SparseVec) -> Option<SparseVec>,
) -> Result<BTreeMap<SymWord, SparseMatrix>, RuthError> {
    let words = algebra.words();
    let lo = algebra.shifted().min_degree().unwrap_or(-1) - space.max_degree().unwrap_or(-1) - 1;
    let mut components = BTreeMap::new();
    for w in words.words_in_degree_range(lo, -1) {
        if w.is_unit() {
            continue;
        }
        let mut m = SparseMatrix::zero(space.dim(), space.dim());
        for (j, b) in basis.iter().enumerate() {
            let mut image = SparseVec::new();
            for (i, c) in b.iter() {
                for (u, a) in words.vector_times_word(&SparseVec::basis(i), &w) {
                    // x ∨ w = (−1)^{|x||w|} w ∨ x
                    let s = sign_pow(i64::from(words.generator_degree(i)) * i64::from(words.degree(&w)));
                    image.add_scaled(&algebra.bracket(&u), &(a * c * int(s.into())));
                }
            }
            let local = coords(&image).ok_or_else(|| RuthError::NotIdeal {
                word: words.display(&w),
                element: space.name(j).to_string(),
            })?;
            for (i, c) in local.iter() {
                m.add_entry(i, j, c);
            }
        }
        if !m.is_zero() {
            components.insert(w, m);
        }
    }
    Ok(components)
}

/// Graded commutator `AB − (−1)^{ab} BA` of homogeneous endomorphisms.
pub fn graded_commutator(a: &SparseMatrix, da: i32, b: &SparseMatrix, db: i32) -> SparseMatrix {
    let mut out = a.compose(b);
    out.add_scaled(&b.compose(a), &int(-sign_pow(i64::from(da) * i64::from(db)) as i64));
    out
}

/// Word degrees on which the structure equation can be nonzero.
fn equation_window(r: &Ruth) -> (i32, i32) {
    let (lo, hi) = r.component_window();
    (lo - 1, hi)
}

/// Maurer-Cartan form: `∂² = 0` and for each word
/// `[∂, ρ̄(w)] + ρ̄(d_λ w) + ½ Σ_{Δ̄w} c (−1)^{|w_1|} [ρ̄(w_1), ρ̄(w_2)] = 0`.
pub fn check_ruth(r: &Ruth) -> Report {
    let mut report = Report::new("ruth Maurer-Cartan equation");
    let dd = r.partial.compose(&r.partial);
    report.record(dd.is_zero(), || "∂²".into(), || format!("{dd:?}"));
    let words = r.algebra.words();
    let d = r.algebra.coderivation();
    let (lo, hi) = equation_window(r);
    for w in words.words_in_degree_range(lo, hi) {
        if w.is_unit() {
            continue;
        }
        let value = mc_value(r, &w, &d);
        report.record(value.is_zero(), || words.display(&w), || format!("{value:?}"));
    }
    report
}

fn mc_value(r: &Ruth, w: &SymWord, d: &crate::symcoalg::Coderivation<'_>) -> SparseMatrix {
    let words = r.algebra.words();
    let dw = words.degree(w);
    let mut value = graded_commutator(&r.partial, 1, &r.component(w), dw + 1);
    for (u, c) in d.apply(w) {
        if let Some(m) = r.components.get(&u) {
            value.add_scaled(m, &c);
        }
    }
    let half = frac(1, 2);
    for term in words.coproduct(w).iter() {
        if term.left.is_unit() || term.right.is_unit() {
            continue;
        }
        let (Some(a), Some(b)) = (r.components.get(&term.left), r.components.get(&term.right)) else { continue };
        let d1 = words.degree(&term.left);
        let d2 = words.degree(&term.right);
        let c = int(term.coeff * i64::from(sign_pow(i64::from(d1)))) * &half;
        value.add_scaled(&graded_commutator(a, d1 + 1, b, d2 + 1), &c);
    }
    value
}

/// Direct form: `ρ(d_λ w ⊗ v) + Σ_{Δw} c (−1)^{|w_1|} ρ(w_1 ⊗ ρ(w_2 ⊗ v)) = 0` for every basis `v`.
pub fn check_ruth_direct(r: &Ruth) -> Report {
    let mut report = Report::new("ruth structure equation");
    let words = r.algebra.words();
    let d = r.algebra.coderivation();
    let (lo, hi) = equation_window(r);
    let mut all = vec![SymWord::unit()];
    all.extend(words.words_in_degree_range(lo, hi).into_iter().filter(|w| !w.is_unit()));
    for w in all {
        let dw = d.apply(&w);
        let coproduct = words.coproduct(&w);
        for j in 0..r.space.dim() {
            let v = SparseVec::basis(j);
            let mut total = SparseVec::new();
            for (u, c) in &dw {
                total.add_scaled(&r.act(u, &v), c);
            }
            for term in coproduct.iter() {
                let inner = r.act(&term.right, &v);
                if inner.is_zero() {
                    continue;
                }
                let s = term.coeff * i64::from(sign_pow(i64::from(words.degree(&term.left))));
                total.add_scaled(&r.act(&term.left, &inner), &int(s));
            }
            report.record(
                total.is_zero(),
                || format!("{} ⊗ {}", words.display(&w), r.space.name(j)),
                || r.space.format_vector(&total),
            );
        }
    }
    report
}

/// The graded action `v_1⊗…⊗v_k ↦ χ(σ) v_{σ(1)}⊗…⊗v_{σ(k)}` (or with `ε` when `skew` is false).
pub fn permutation_action(space: &GradedSpace, k: usize, perm: &[usize], skew: bool) -> SparseMatrix {
    let n = space.dim();
    let total = n.pow(k as u32);
    let mut m = SparseMatrix::zero(total, total);
    let mut digits = vec![0usize; k];
    for idx in 0..total {
        let mut rest = idx;
        for slot in (0..k).rev() {
            digits[slot] = rest % n;
            rest /= n;
        }
        let degrees: Vec<i32> = digits.iter().map(|&i| space.degree(i)).collect();
        let sign = if skew {
            skew_sign(perm, &degrees).expect("valid permutation")
        } else {
            crate::graded::koszul_sign(perm, &degrees).expect("valid permutation")
        };
        let target = perm.iter().fold(0, |acc, &p| acc * n + digits[p]);
        m.add_entry(target, idx, &int(sign.into()));
    }
    m
}

/// `(1/k!) Σ_σ χ̂(σ)` on `V^{⊗k}`: the idempotent onto the skew tensors, identified with `Λ^k V`.
pub fn skew_projector(space: &GradedSpace, k: usize) -> SparseMatrix {
    let total = space.dim().pow(k as u32);
    let mut out = SparseMatrix::zero(total, total);
    let perms = all_permutations(k);
    let scale = frac(1, perms.len() as i64);
    for p in &perms {
        out.add_scaled(&permutation_action(space, k, p, true), &scale);
    }
    out
}

/// Adjacent transpositions of `k` slots.
pub fn adjacent_transpositions(k: usize) -> Vec<Vec<usize>> {
    (0..k.saturating_sub(1))
        .map(|i| {
            let mut p: Vec<usize> = (0..k).collect();
            p.swap(i, i + 1);
            p
        })
        .collect()
}

pub fn all_permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// A morphism `(F, f): (V, ρ) → (V', ρ')` with `F: g → g'` and `f: V' → V` of degree 0.
#[derive(Clone, Debug)]
pub struct RuthMorphism {
    pub morphism: LInftyMorphism,
    pub map: SparseMatrix,
    pub source: Arc<Ruth>,
    pub target: Arc<Ruth>,
}

impl RuthMorphism {
    pub fn new(
        morphism: LInftyMorphism,
        map: SparseMatrix,
        source: Arc<Ruth>,
        target: Arc<Ruth>,
    ) -> Result<Self, RuthError> {
        if **morphism.source() != *source.algebra || **morphism.target() != *target.algebra {
            return Err(RuthError::Mismatch("morphism does not connect the ruths' algebras".into()));
        }
        if map.nrows() != source.space.dim() || map.ncols() != target.space.dim() {
            return Err(RuthError::Mismatch("coefficient map must go from V' to V".into()));
        }
        for (i, j, _) in map.entries() {
            if source.space.degree(i) != target.space.degree(j) {
                return Err(RuthError::Degree { what: "coefficient map".into(), row: i, col: j });
            }
        }
        Ok(RuthMorphism { morphism, map, source, target })
    }

    pub fn identity(r: Arc<Ruth>) -> Self {
        let id = LInftyMorphism::identity(Arc::clone(&r.algebra));
        let map = SparseMatrix::identity(r.space.dim());
        RuthMorphism { morphism: id, map, source: Arc::clone(&r), target: r }
    }

    /// `(G, g) ∘ (F, f) = (G∘F, f∘g)` where `self = (F, f)` and `next = (G, g)`.
    pub fn then(&self, next: &RuthMorphism) -> Result<RuthMorphism, RuthError> {
        let morphism = next.morphism.compose(&self.morphism)?;
        let map = self.map.compose(&next.map);
        RuthMorphism::new(morphism, map, Arc::clone(&self.source), Arc::clone(&next.target))
    }
}

/// `f ∘ ρ' ∘ (F ⊗ id) = ρ ∘ (id ⊗ f)` on every `(w, v')` in the degree window.
pub fn check_ruth_morphism(m: &RuthMorphism) -> Report {
    let mut report = Report::new("ruth morphism equation");
    let g = m.morphism.source();
    let words = g.words();
    let (vmin, vmax) = joint_range(&m.source.space, &m.target.space);
    let mut all = vec![SymWord::unit()];
    all.extend(words.words_in_degree_range(vmin - vmax - 1, -1).into_iter().filter(|w| !w.is_unit()));
    for w in all {
        let fw = m.morphism.apply(&w);
        for j in 0..m.target.space.dim() {
            let v = SparseVec::basis(j);
            let mut left = SparseVec::new();
            for (u, c) in &fw {
                left.add_scaled(&m.target.act(u, &v), c);
            }
            let left = m.map.apply(&left);
            let right = m.source.act(&w, &m.map.apply(&v));
            let diff = left.difference(&right);
            report.record(
                diff.is_zero(),
                || format!("{} ⊗ {}", words.display(&w), m.target.space.name(j)),
                || m.source.space.format_vector(&diff),
            );
        }
    }
    report
}

fn joint_range(a: &GradedSpace, b: &GradedSpace) -> (i32, i32) {
    let lo = a.min_degree().into_iter().chain(b.min_degree()).min().unwrap_or(0);
    let hi = a.max_degree().into_iter().chain(b.max_degree()).max().unwrap_or(0);
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfty::{CrossedModule, LieAlgebra};

    fn sl2() -> Arc<LInftyAlgebra> {
        Arc::new(LieAlgebra::sl2().to_linfty().unwrap())
    }

    #[test]
    fn trivial_and_adjoint_are_valid() {
        let g = sl2();
        assert!(check_ruth(&Ruth::trivial_line(Arc::clone(&g))).is_valid());
        let ad = Ruth::adjoint(Arc::clone(&g));
        assert!(check_ruth(&ad).is_valid(), "{}", check_ruth(&ad));
        assert!(check_ruth_direct(&ad).is_valid());
        // classical adjoint matrices: ρ̄(h) = ad_h
        let lie = LieAlgebra::sl2();
        for i in 0..3 {
            assert_eq!(ad.component(&SymWord::generator(i)), lie.ad(&SparseVec::basis(i)));
        }
    }

    #[test]
    fn adjoint_of_two_term_algebras() {
        for cm in [CrossedModule::central_heisenberg(), CrossedModule::identity(&LieAlgebra::sl2())] {
            let g = Arc::new(cm.to_linfty().unwrap());
            let ad = Ruth::adjoint(g);
            assert!(check_ruth(&ad).is_valid(), "{}", check_ruth(&ad));
            assert!(check_ruth_direct(&ad).is_valid(), "{}", check_ruth_direct(&ad));
        }
    }

    #[test]
    fn non_representation_is_reported_by_both_checks() {
        let g = sl2();
        let lie = LieAlgebra::sl2();
        let mut mats: Vec<SparseMatrix> = (0..3).map(|i| lie.ad(&SparseVec::basis(i))).collect();
        mats[0] = mats[0].scaled(&int(2));
        let r = Ruth::from_generators(g, lie_space(), SparseMatrix::zero(3, 3), mats).unwrap();
        let a = check_ruth(&r);
        let b = check_ruth_direct(&r);
        assert!(!a.is_valid());
        assert!(!b.is_valid());
    }

    fn lie_space() -> GradedSpace {
        GradedSpace::new([("h", 0), ("e", 0), ("f", 0)]).unwrap()
    }

    #[test]
    fn tensor_square_of_adjoint_is_valid() {
        let g = Arc::new(CrossedModule::central_heisenberg().to_linfty().unwrap());
        let ad = Ruth::adjoint(g);
        let sq = Ruth::tensor(&ad, &ad).unwrap();
        assert!(check_ruth(&sq).is_valid(), "{}", check_ruth(&sq));
        let sl = Ruth::adjoint(sl2());
        let sq = Ruth::tensor_power(&sl, 2).unwrap();
        assert!(check_ruth(&sq).is_valid());
    }

    #[test]
    fn tensor_with_trivial_line_is_isomorphic() {
        let ad = Ruth::adjoint(sl2());
        let t = Ruth::tensor(&ad, &Ruth::trivial_line(Arc::clone(ad.algebra()))).unwrap();
        assert_eq!(t.components(), ad.components());
    }

    #[test]
    fn skew_projector_is_idempotent() {
        let v = GradedSpace::new([("a", -1), ("b", -2), ("c", -1)]).unwrap();
        for k in 1..=3 {
            let p = skew_projector(&v, k);
            assert_eq!(p.compose(&p), p);
        }
    }

    #[test]
    fn restricted_adjoint_examples() {
        let g = Arc::new(LieAlgebra::heisenberg().to_linfty().unwrap());
        let center = Ruth::restricted_adjoint(Arc::clone(&g), &[SparseVec::basis(2)], vec!["z".into()]).unwrap();
        assert!(center.components().is_empty());
        let sl = sl2();
        let err = Ruth::restricted_adjoint(sl, &[SparseVec::basis(1)], vec!["e".into()]).unwrap_err();
        assert!(matches!(err, RuthError::NotIdeal { .. }));
    }

    #[test]
    fn identity_ruth_morphism_is_valid() {
        let ad = Arc::new(Ruth::adjoint(sl2()));
        assert!(check_ruth_morphism(&RuthMorphism::identity(ad)).is_valid());
    }
}
