//! Exact linear algebra and the cohomology of `(C(g, V), D_ρ)`.
//!
//! Cohomology in degree `p` is computed from the matrices of `D: C^{p−1} → C^p` and
//! `D: C^p → C^{p+1}` in the cochain bases. Representatives are chosen by seeding an
//! echelon form with the coboundaries and keeping the cocycle basis vectors that
//! raise its rank, so they depend only on the basis order.

pub mod matrix;

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::cochain::{ce_differential, ce_matrix, pullback_cochain, Cochain, CochainBasis};
use crate::graded::{int, SparseMatrix, SparseVec};
use crate::ruth::{Ruth, RuthMorphism};

pub use matrix::{Echelon, LinearAlgebraError, RationalMatrix, Subspace};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error(transparent)]
    Linear(#[from] LinearAlgebraError),
    #[error("cochain of degree {degree} is not a cocycle")]
    NotCocycle { degree: i32 },
    #[error("cochain of degree {degree} leaves its degree window")]
    OutsideWindow { degree: i32 },
    #[error("certificate failed its recheck in degree {degree}")]
    Certificate { degree: i32 },
    #[error("pullback of a coboundary is not a coboundary in degree {degree}")]
    NotWellDefined { degree: i32 },
    #[error("mismatch: {0}")]
    Mismatch(String),
}

/// The CE complex of a ruth, with bases and differential matrices cached per degree.
pub struct CeComplex {
    ruth: Arc<Ruth>,
    bases: Mutex<BTreeMap<i32, Arc<CochainBasis>>>,
    matrices: Mutex<BTreeMap<i32, Arc<RationalMatrix>>>,
    groups: Mutex<BTreeMap<i32, Arc<CohomologyGroup>>>,
}

impl std::fmt::Debug for CeComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CeComplex").field("coefficients", self.ruth.space()).finish_non_exhaustive()
    }
}

impl CeComplex {
    pub fn new(ruth: Arc<Ruth>) -> Self {
        CeComplex {
            ruth,
            bases: Mutex::new(BTreeMap::new()),
            matrices: Mutex::new(BTreeMap::new()),
            groups: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn ruth(&self) -> &Arc<Ruth> {
        &self.ruth
    }

    /// The lowest degree with nonzero cochains: constants valued in the bottom of `V`.
    pub fn lowest_degree(&self) -> i32 {
        self.ruth.space().min_degree().unwrap_or(0)
    }

    pub fn basis(&self, p: i32) -> Arc<CochainBasis> {
        if let Some(b) = self.bases.lock().expect("cache lock").get(&p) {
            return Arc::clone(b);
        }
        let b = Arc::new(CochainBasis::new(self.ruth.algebra().words(), self.ruth.space(), p));
        Arc::clone(self.bases.lock().expect("cache lock").entry(p).or_insert(b))
    }

    /// Matrix of `D: C^p → C^{p+1}`.
    pub fn differential(&self, p: i32) -> Arc<RationalMatrix> {
        if let Some(m) = self.matrices.lock().expect("cache lock").get(&p) {
            return Arc::clone(m);
        }
        let m = Arc::new(ce_matrix(&self.ruth, &self.basis(p), &self.basis(p + 1)));
        Arc::clone(self.matrices.lock().expect("cache lock").entry(p).or_insert(m))
    }

    pub fn apply(&self, alpha: &Cochain) -> Cochain {
        ce_differential(&self.ruth, alpha)
    }

    pub fn is_cocycle(&self, alpha: &Cochain) -> bool {
        self.apply(alpha).is_zero()
    }

    pub fn coordinates(&self, alpha: &Cochain) -> Result<SparseVec, CohomologyError> {
        self.basis(alpha.degree)
            .coordinates(alpha)
            .ok_or(CohomologyError::OutsideWindow { degree: alpha.degree })
    }

    pub fn cohomology(&self, p: i32) -> Arc<CohomologyGroup> {
        if let Some(g) = self.groups.lock().expect("cache lock").get(&p) {
            return Arc::clone(g);
        }
        let group = Arc::new(self.compute_group(p));
        Arc::clone(self.groups.lock().expect("cache lock").entry(p).or_insert(group))
    }

    fn compute_group(&self, p: i32) -> CohomologyGroup {
        let basis = self.basis(p);
        let n = basis.dim();
        let incoming = self.differential(p - 1);
        let outgoing = self.differential(p);
        let boundaries = incoming.image();
        let cycles = outgoing.kernel();
        let mut ech = Echelon::of_rows(n, &boundaries);
        let mut reps = Vec::new();
        for z in &cycles {
            if ech.insert(z) {
                reps.push(z.clone());
            }
        }
        let mut spanning = reps.clone();
        spanning.extend(boundaries.iter().cloned());
        let span = Subspace::new(n, spanning).expect("representatives complement the boundaries");
        CohomologyGroup {
            degree: p,
            cocycle_dim: cycles.len(),
            coboundary_dim: boundaries.len(),
            representatives: reps.iter().map(|v| basis.cochain(v)).collect(),
            span,
        }
    }

    /// `β` with `D β = z`, or `None` if `z` is not a coboundary.
    pub fn coboundary_certificate(&self, z: &Cochain) -> Result<Option<Cochain>, CohomologyError> {
        let p = z.degree;
        let target = self.coordinates(z)?;
        match self.differential(p - 1).solve(&target) {
            Ok(x) => {
                let beta = self.basis(p - 1).cochain(&x);
                if self.apply(&beta) != *z {
                    return Err(CohomologyError::Certificate { degree: p });
                }
                Ok(Some(beta))
            }
            Err(LinearAlgebraError::Inconsistent { .. }) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    /// Decides `[z1] = [z2]`; when true, returns `β` with `D β = z1 − z2` (rechecked).
    pub fn same_class(&self, z1: &Cochain, z2: &Cochain) -> Result<Option<Cochain>, CohomologyError> {
        if z1.degree != z2.degree && !(z1.is_zero() || z2.is_zero()) {
            return Err(CohomologyError::Mismatch(format!("degrees {} and {}", z1.degree, z2.degree)));
        }
        let degree = if z1.is_zero() { z2.degree } else { z1.degree };
        for z in [z1, z2] {
            if !self.is_cocycle(z) {
                return Err(CohomologyError::NotCocycle { degree: z.degree });
            }
        }
        let mut diff = Cochain::zero(degree);
        diff.add_scaled(z1, &int(1));
        diff.add_scaled(z2, &int(-1));
        self.coboundary_certificate(&diff)
    }

    /// Coordinates of `[z]` in the representative basis of `H^p`.
    pub fn class_coordinates(&self, z: &Cochain) -> Result<SparseVec, CohomologyError> {
        if !self.is_cocycle(z) {
            return Err(CohomologyError::NotCocycle { degree: z.degree });
        }
        let group = self.cohomology(z.degree);
        let coords = self.coordinates(z)?;
        group.class_coordinates(&coords).ok_or(CohomologyError::Certificate { degree: z.degree })
    }
}

/// `H^p` with a chosen basis of representatives.
#[derive(Debug)]
pub struct CohomologyGroup {
    pub degree: i32,
    pub cocycle_dim: usize,
    pub coboundary_dim: usize,
    pub representatives: Vec<Cochain>,
    span: Subspace,
}

impl CohomologyGroup {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Class coordinates of a cocycle given in cochain-basis coordinates.
    pub fn class_coordinates(&self, cocycle: &SparseVec) -> Option<SparseVec> {
        let all = self.span.coordinates(cocycle)?;
        let k = self.dim();
        Some(all.remap(|i| (i < k).then_some(i)))
    }
}

/// A cohomology class with its cocycle representative, checked on construction.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    pub degree: i32,
    pub representative: Cochain,
    pub coordinates: SparseVec,
}

impl CohomologyClass {
    pub fn new(complex: &CeComplex, representative: Cochain) -> Result<Self, CohomologyError> {
        let coordinates = complex.class_coordinates(&representative)?;
        Ok(CohomologyClass { degree: representative.degree, representative, coordinates })
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.is_zero()
    }
}

/// The map `H^p(target) → H^p(source)` induced by pulling back along a ruth morphism,
/// as a `dim H^p(source) × dim H^p(target)` matrix.
pub fn induced_map_on_cohomology(
    m: &RuthMorphism,
    source: &CeComplex,
    target: &CeComplex,
    p: i32,
) -> Result<SparseMatrix, CohomologyError> {
    if **source.ruth() != *m.source || **target.ruth() != *m.target {
        return Err(CohomologyError::Mismatch("complexes do not belong to the morphism".into()));
    }
    let h_src = source.cohomology(p);
    let h_tgt = target.cohomology(p);
    let incoming = target.differential(p - 1);
    let tb = target.basis(p);
    for b in incoming.image() {
        let pulled = pullback_cochain(m, &tb.cochain(&b));
        if source.coboundary_certificate(&pulled)?.is_none() {
            return Err(CohomologyError::NotWellDefined { degree: p });
        }
    }
    let mut out = SparseMatrix::zero(h_src.dim(), h_tgt.dim());
    for (j, r) in h_tgt.representatives.iter().enumerate() {
        let pulled = pullback_cochain(m, r);
        let coords = source.class_coordinates(&pulled)?;
        for (i, c) in coords.iter() {
            out.add_entry(i, j, c);
        }
    }
    Ok(out)
}
