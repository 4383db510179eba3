//! Minimal models of strict 2-term algebras.
//!
//! For `∂: 𝔤_{−1} → 𝔤_0` the minimal model lives on `coker ∂ ⊕ ker ∂` with zero
//! differential. A splitting consists of a lift `h` of the cokernel into `𝔤_0` and a
//! partial inverse `σ` of `∂` on its image. With `p` the projection onto the
//! cokernel and `κ` the kernel inclusion, the transferred structure is
//!
//! * `λ_2(a∨b) = p λ(ha∨hb)` and `λ_2(a∨k) = λ(ha∨κk)`,
//! * `F¹_1 = h ⊕ κ`, `F¹_2(a∨b) = σ(h λ_2(a∨b) − λ(ha∨hb))`,
//! * `λ_3(a∨b∨c)` is the unique kernel element making `F` a morphism on weight 3.
//!
//! The last component is the characteristic 3-cocycle of the algebra.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;

use super::{LInftyAlgebra, LInftyError, LInftyMorphism};
use crate::cohomology::matrix::{Echelon, RationalMatrix, Subspace};
use crate::graded::{int, GradedSpace, SparseMatrix, SparseVec};
use crate::symcoalg::{SymWord, WordMap};

/// Splitting-independent linear data of a strict 2-term algebra, in global coordinates of `g`.
#[derive(Clone, Debug)]
pub struct TwoTermData {
    dim: usize,
    lower: Vec<usize>,
    upper: Vec<usize>,
    boundary: SparseMatrix,
    image_rows: Vec<SparseVec>,
    image_pivots: Vec<usize>,
    /// Indices `j` of `𝔤_0` whose basis vectors span a complement of `im ∂`.
    complement: Vec<usize>,
    kernel: Subspace,
}

impl TwoTermData {
    pub fn new(g: &LInftyAlgebra) -> Result<Self, LInftyError> {
        if !g.is_strict_two_term() {
            return Err(LInftyError::NotStrictTwoTerm(format!(
                "depth {} and highest bracket arity {}",
                g.depth(),
                g.max_arity()
            )));
        }
        let dim = g.dim();
        let lower = g.space().indices_of_degree(-1);
        let upper = g.space().indices_of_degree(0);
        let boundary = g.differential();
        let images: Vec<SparseVec> = lower.iter().map(|&u| boundary.column(u).clone()).collect();
        let echelon = Echelon::of_rows(dim, &images);
        let image_rows = echelon.reduced_rows();
        let image_pivots = echelon.pivots();
        let complement = upper.iter().copied().filter(|j| !image_pivots.contains(j)).collect();
        let local = RationalMatrix::from_columns(dim, &images);
        let kernel_vectors = local
            .kernel()
            .iter()
            .map(|v| v.remap(|k| Some(lower[k])))
            .collect();
        let kernel = Subspace::new(dim, kernel_vectors)?;
        Ok(TwoTermData { dim, lower, upper, boundary, image_rows, image_pivots, complement, kernel })
    }

    pub fn coker_dim(&self) -> usize {
        self.complement.len()
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.dim()
    }

    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn kernel_basis(&self) -> &[SparseVec] {
        self.kernel.basis()
    }

    /// Coordinates of `x ∈ 𝔤_0` modulo `im ∂`, in the complement basis.
    pub fn project(&self, x: &SparseVec) -> SparseVec {
        let mut residual = x.clone();
        for (row, &p) in self.image_rows.iter().zip(&self.image_pivots) {
            let c = x.get(p);
            if !c.is_zero() {
                residual.add_scaled(row, &-c);
            }
        }
        SparseVec::from_entries(self.complement.iter().enumerate().map(|(a, &j)| (a, residual.get(j))))
    }

    /// Whether `x` lies in `im ∂`.
    pub fn in_image(&self, x: &SparseVec) -> bool {
        x.iter().all(|(i, _)| self.upper.contains(&i)) && self.project(x).is_zero()
    }

    pub fn kernel_coordinates(&self, x: &SparseVec) -> Option<SparseVec> {
        self.kernel.coordinates(x)
    }
}

/// Lift `h` of the cokernel and partial inverse `σ` of `∂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    /// `h(c_a)` in coordinates of `g`, one vector per cokernel basis element.
    pub lift: Vec<SparseVec>,
    /// `σ` as a matrix on `g`; only its restriction to `im ∂` matters.
    pub section: SparseMatrix,
}

impl Splitting {
    /// Lifts by complement basis vectors; `σ` solves `∂x = y − h p y` for each basis `y` of `𝔤_0`.
    pub fn default_for(data: &TwoTermData) -> Self {
        let lift = data.complement.iter().map(|&j| SparseVec::basis(j)).collect::<Vec<_>>();
        let local = RationalMatrix::from_columns(
            data.dim,
            &data.lower.iter().map(|&u| data.boundary.column(u).clone()).collect::<Vec<_>>(),
        );
        let mut section = SparseMatrix::zero(data.dim, data.dim);
        for &i in &data.upper {
            let e = SparseVec::basis(i);
            let mut y = e.clone();
            for (a, c) in data.project(&e).iter() {
                y.add_scaled(&lift[a], &-c.clone());
            }
            let x = local.solve(&y).expect("residual lies in the image");
            for (k, c) in x.iter() {
                section.add_entry(data.lower[k], i, c);
            }
        }
        Splitting { lift, section }
    }

    /// Perturbs the default splitting: `h += ∂∘A`, `σ += κ∘B` with small random integer `A`, `B`.
    pub fn random<R: Rng>(data: &TwoTermData, rng: &mut R) -> Self {
        let mut s = Self::default_for(data);
        for lift in &mut s.lift {
            for &u in &data.lower {
                let c = int(rng.gen_range(-2..=2));
                lift.add_scaled(data.boundary.column(u), &c);
            }
        }
        for &i in &data.upper {
            for k in data.kernel_basis() {
                let c = int(rng.gen_range(-2..=2));
                for (row, x) in k.iter() {
                    s.section.add_entry(row, i, &(x * &c));
                }
            }
        }
        s
    }

    pub fn validate(&self, data: &TwoTermData) -> Result<(), LInftyError> {
        if self.lift.len() != data.coker_dim() {
            return Err(LInftyError::InvalidSplitting(format!(
                "{} lifts for a cokernel of dimension {}",
                self.lift.len(),
                data.coker_dim()
            )));
        }
        for (a, h) in self.lift.iter().enumerate() {
            if h.iter().any(|(i, _)| !data.upper.contains(&i)) || data.project(h) != SparseVec::basis(a) {
                return Err(LInftyError::InvalidSplitting(format!("lift {a} is not a right inverse of the projection")));
            }
        }
        for &u in &data.lower {
            let b = data.boundary.column(u);
            let back = data.boundary.apply(&self.section.apply(b));
            if back != *b {
                return Err(LInftyError::InvalidSplitting(format!("σ does not invert ∂ on ∂(e_{u})")));
            }
        }
        Ok(())
    }
}

/// Output of [`minimal_model_2term`].
#[derive(Clone, Debug)]
pub struct MinimalModel {
    /// Basis: cokernel elements (degree 0) first, then kernel elements (degree −1).
    pub algebra: Arc<LInftyAlgebra>,
    /// The quasi-isomorphism from the minimal model to the original algebra.
    pub morphism: LInftyMorphism,
    /// `λ_3` on cokernel triples, valued in the kernel part.
    pub theta: WordMap,
    pub coker_dim: usize,
    pub kernel_dim: usize,
}

impl MinimalModel {
    /// The cokernel as a Lie algebra in degree 0.
    pub fn coker_algebra(&self) -> Result<LInftyAlgebra, LInftyError> {
        let space = GradedSpace::new((0..self.coker_dim).map(|a| (self.algebra.space().name(a).to_string(), 0)))?;
        let lambda = self
            .algebra
            .lambda()
            .iter()
            .filter(|(w, _)| w.weight() == 2 && w.letters().all(|i| i < self.coker_dim))
            .map(|(w, v)| (w.clone(), v.clone()))
            .collect();
        LInftyAlgebra::from_symmetric(space, lambda)
    }

    /// `k ↦ λ_2(c_a ∨ k)` on kernel coordinates, one matrix per cokernel element.
    pub fn kernel_action(&self) -> Vec<SparseMatrix> {
        let c = self.coker_dim;
        (0..c)
            .map(|a| {
                let cols = (0..self.kernel_dim)
                    .map(|i| {
                        let v = self
                            .algebra
                            .bracket_of_vectors(&[&SparseVec::basis(a), &SparseVec::basis(c + i)]);
                        v.remap(|k| k.checked_sub(c))
                    })
                    .collect();
                SparseMatrix::from_columns(self.kernel_dim, cols)
            })
            .collect()
    }

    /// `θ` on cokernel words with values in kernel coordinates.
    pub fn theta_on_coker(&self) -> WordMap {
        let c = self.coker_dim;
        self.theta.iter().map(|(w, v)| (w.clone(), v.remap(|k| k.checked_sub(c)))).collect()
    }
}

/// Transfers the structure of a strict 2-term algebra to its cohomology.
pub fn minimal_model_2term(
    g: &Arc<LInftyAlgebra>,
    data: &TwoTermData,
    splitting: &Splitting,
) -> Result<MinimalModel, LInftyError> {
    splitting.validate(data)?;
    let (c, k) = (data.coker_dim(), data.kernel_dim());
    let space = GradedSpace::new(
        data.complement
            .iter()
            .map(|&j| (format!("[{}]", g.space().name(j)), 0))
            .chain((0..k).map(|i| (format!("z{i}"), -1))),
    )?;
    let image_of = |i: usize| -> SparseVec {
        if i < c {
            splitting.lift[i].clone()
        } else {
            data.kernel_basis()[i - c].clone()
        }
    };
    let linear: Vec<SparseVec> = (0..c + k).map(image_of).collect();
    let project_to_model = |y: &SparseVec, out_degree: i32| -> Result<SparseVec, LInftyError> {
        if out_degree == -1 {
            if !y.iter().all(|(i, _)| data.upper.contains(&i)) {
                return Err(LInftyError::NotStrictTwoTerm("bracket left 𝔤_0".into()));
            }
            Ok(data.project(y))
        } else {
            let coords = data
                .kernel_coordinates(y)
                .ok_or_else(|| LInftyError::NotStrictTwoTerm("bracket with a cycle left ker ∂".into()))?;
            Ok(coords.remap(|i| Some(i + c)))
        }
    };

    let model_words = crate::symcoalg::WordSpace::new(space.shift(1))?;
    let mut lambda = WordMap::new();
    let mut components = WordMap::new();
    for (i, v) in linear.iter().enumerate() {
        if !v.is_zero() {
            components.insert(SymWord::generator(i), v.clone());
        }
    }
    for degree in [-2, -3] {
        for w in model_words.words_of_degree(degree).iter().filter(|w| w.weight() == 2) {
            let args: Vec<&SparseVec> = w.letters().map(|i| &linear[i]).collect();
            let y = g.bracket_of_vectors(&args);
            let value = project_to_model(&y, degree + 1)?;
            if degree == -2 {
                let mut arg = SparseVec::new();
                for (i, x) in value.iter() {
                    arg.add_scaled(&linear[i], x);
                }
                arg.sub_assign(&y);
                debug_assert!(data.in_image(&arg));
                let f2 = splitting.section.apply(&arg);
                if !f2.is_zero() {
                    components.insert(w.clone(), f2);
                }
            }
            if !value.is_zero() {
                lambda.insert(w.clone(), value);
            }
        }
    }
    let partial = Arc::new(LInftyAlgebra::from_symmetric(space.clone(), lambda.clone())?);
    let f = LInftyMorphism::new(Arc::clone(&partial), Arc::clone(g), components.clone())?;
    let d = partial.coderivation();
    let mut theta = WordMap::new();
    for w in model_words.words_of_degree(-3).iter().filter(|w| w.weight() == 3) {
        let mut defect = g.apply_lambda(&f.apply(w));
        defect.sub_assign(&f.corestriction(&d.apply(w)));
        let coords = data
            .kernel_coordinates(&defect)
            .ok_or_else(|| LInftyError::NotStrictTwoTerm("weight-3 defect is not a cycle".into()))?;
        let value = coords.remap(|i| Some(i + c));
        if !value.is_zero() {
            theta.insert(w.clone(), value.clone());
            lambda.insert(w.clone(), value);
        }
    }
    let algebra = Arc::new(LInftyAlgebra::from_symmetric(space, lambda)?);
    let morphism = LInftyMorphism::new(Arc::clone(&algebra), Arc::clone(g), components)?;
    Ok(MinimalModel { algebra, morphism, theta, coker_dim: c, kernel_dim: k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linfty::{check_jacobi, check_morphism, is_quasi_iso, CrossedModule, LieAlgebra};
    use rand::SeedableRng;

    fn model_of(cm: &CrossedModule) -> (Arc<LInftyAlgebra>, MinimalModel) {
        let g = Arc::new(cm.to_linfty().unwrap());
        let data = TwoTermData::new(&g).unwrap();
        let m = minimal_model_2term(&g, &data, &Splitting::default_for(&data)).unwrap();
        (g, m)
    }

    #[test]
    fn zero_boundary_gives_the_algebra_back() {
        let sl2 = LieAlgebra::sl2();
        let module = (0..3).map(|x| sl2.ad(&SparseVec::basis(x))).collect();
        let cm = CrossedModule::from_representation(&sl2, module).unwrap();
        let (g, m) = model_of(&cm);
        assert_eq!(m.coker_dim, 3);
        assert_eq!(m.kernel_dim, 3);
        assert!(m.theta.is_empty());
        assert_eq!(m.algebra.lambda().len(), g.lambda().len());
        assert!(check_morphism(&m.morphism).is_valid());
    }

    #[test]
    fn contractible_gives_zero() {
        let (_, m) = model_of(&CrossedModule::identity(&LieAlgebra::sl2()));
        assert_eq!(m.algebra.dim(), 0);
        assert!(m.theta.is_empty());
    }

    #[test]
    fn transferred_structure_is_valid_for_random_splittings() {
        let cm = CrossedModule::ideal_inclusion(&LieAlgebra::gl(2), &LieAlgebra::sl_in_gl_basis(2)).unwrap();
        let g = Arc::new(cm.to_linfty().unwrap());
        let data = TwoTermData::new(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3 {
            let s = Splitting::random(&data, &mut rng);
            let m = minimal_model_2term(&g, &data, &s).unwrap();
            assert!(check_jacobi(&m.algebra).is_valid());
            assert!(check_morphism(&m.morphism).is_valid(), "{}", check_morphism(&m.morphism));
            assert!(is_quasi_iso(&m.morphism).is_quasi_iso());
        }
    }

    #[test]
    fn invalid_splitting_is_rejected() {
        let cm = CrossedModule::central_heisenberg();
        let g = Arc::new(cm.to_linfty().unwrap());
        let data = TwoTermData::new(&g).unwrap();
        let mut s = Splitting::default_for(&data);
        s.lift[0] = SparseVec::new();
        assert!(matches!(minimal_model_2term(&g, &data, &s), Err(LInftyError::InvalidSplitting(_))));
    }
}
