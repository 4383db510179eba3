//! Finite-dimensional worked examples with a ledger of expected facts.
//!
//! Every constructor validates all of its objects before returning, and every ledger entry
//! can be re-verified with [`GalleryInstance::verify`]. Randomized instances carry their seed
//! in the instance name.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cohomology::matrix::RationalMatrix;
use crate::cohomology::{induced_map_on_cohomology, CeComplex, CohomologyError};
use crate::cwl::{check_equivariance, cwl_class, naturality_check, CwlError, EquivariantHom, Equivariance};
use crate::extension::{
    check_extension, curvature, induced_action, skeletal_extension, ExtensionError, LInftyExtension, Section,
};
use crate::graded::{format_scalar, int, GradedSpace, Scalar, SparseMatrix, SparseVec};
use crate::linfty::{
    check_jacobi, check_morphism, is_quasi_iso, minimal_model_2term, CrossedModule, LInftyAlgebra, LInftyError,
    LInftyMorphism, LieAlgebra, Splitting, TwoTermData,
};
use crate::ruth::{check_ruth, check_ruth_morphism, Ruth, RuthError, RuthMorphism};
use crate::symcoalg::{BracketTable, WordMap};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GalleryError {
    #[error(transparent)]
    LInfty(#[from] LInftyError),
    #[error(transparent)]
    Ruth(#[from] RuthError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Cwl(#[from] CwlError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("{instance}: {object} fails validation: {report}")]
    Invalid { instance: String, object: String, report: String },
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("no {kind} named {name:?}")]
    UnknownName { kind: &'static str, name: String },
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// Follows directly from the construction.
    Immediate,
    /// Computed by an independent brute-force routine in the test suite.
    Oracle,
    /// A textbook fact about the underlying classical object.
    Classical,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Immediate => "immediate",
            Provenance::Oracle => "oracle",
            Provenance::Classical => "classical",
        })
    }
}

/// A checkable statement about named objects of an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    AlgebraValid { algebra: String },
    ExtensionValid { extension: String },
    CohomologyDim { ruth: String, degree: i32, dim: usize },
    /// The set of word weights on which `K_h` is nonzero.
    CurvatureWeights { extension: String, section: String, weights: Vec<usize> },
    Flat { extension: String, section: String, flat: bool },
    /// Whether `cw(id)` vanishes, with `id: n[1] → V` checked to be equivariant.
    CwlClassZero { extension: String, ruth: String, zero: bool },
    QuasiIso { morphism: String },
    /// The ruth morphism induces isomorphisms on `H^p` for `p` in the range.
    InducedIso { ruth_morphism: String, degrees: (i32, i32) },
    Naturality { ruth_morphism: String, extension: String, section: String },
    /// The transferred structure exists, is a quasi-isomorphism, and has these dimensions.
    MinimalModel { algebra: String, coker_dim: usize, kernel_dim: usize },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::AlgebraValid { algebra } => write!(f, "{algebra} satisfies the Jacobi identities"),
            Claim::ExtensionValid { extension } => write!(f, "{extension} is an extension"),
            Claim::CohomologyDim { ruth, degree, dim } => write!(f, "dim H^{degree}({ruth}) = {dim}"),
            Claim::CurvatureWeights { extension, section, weights } => {
                write!(f, "curvature of {extension} at {section} lives in weights {weights:?}")
            }
            Claim::Flat { extension, section, flat } => {
                write!(f, "section {section} of {extension} is {}", if *flat { "flat" } else { "curved" })
            }
            Claim::CwlClassZero { extension, ruth, zero } => {
                write!(f, "cw(id) for {extension} in {ruth} is {}", if *zero { "zero" } else { "nonzero" })
            }
            Claim::QuasiIso { morphism } => write!(f, "{morphism} is a quasi-isomorphism"),
            Claim::InducedIso { ruth_morphism, degrees } => {
                write!(f, "{ruth_morphism} induces isomorphisms on H^{}..H^{}", degrees.0, degrees.1)
            }
            Claim::Naturality { ruth_morphism, extension, section } => {
                write!(f, "cw commutes with {ruth_morphism} for {extension} at {section}")
            }
            Claim::MinimalModel { algebra, coker_dim, kernel_dim } => {
                write!(f, "minimal model of {algebra} has dimensions {coker_dim} + {kernel_dim}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub claim: Claim,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub name: String,
    pub algebra: Arc<LInftyAlgebra>,
}

#[derive(Clone, Debug)]
pub struct RuthEntry {
    pub name: String,
    pub algebra: String,
    pub ruth: Arc<Ruth>,
}

#[derive(Clone, Debug)]
pub struct ExtensionEntry {
    pub name: String,
    pub kernel: String,
    pub total: String,
    pub base: String,
    pub extension: LInftyExtension,
}

#[derive(Clone, Debug)]
pub struct SectionEntry {
    pub name: String,
    pub extension: String,
    pub section: Section,
}

/// A strict morphism between named algebras.
#[derive(Clone, Debug)]
pub struct MorphismEntry {
    pub name: String,
    pub source: String,
    pub target: String,
    pub morphism: LInftyMorphism,
}

#[derive(Clone, Debug)]
pub struct RuthMorphismEntry {
    pub name: String,
    pub morphism: String,
    pub source: String,
    pub target: String,
    pub value: RuthMorphism,
}

#[derive(Clone, Debug, Default)]
pub struct GalleryInstance {
    pub name: String,
    pub algebras: Vec<AlgebraEntry>,
    pub ruths: Vec<RuthEntry>,
    pub extensions: Vec<ExtensionEntry>,
    pub sections: Vec<SectionEntry>,
    pub morphisms: Vec<MorphismEntry>,
    pub ruth_morphisms: Vec<RuthMorphismEntry>,
    pub ledger: Vec<Expectation>,
}

fn unknown(kind: &'static str, name: &str) -> GalleryError {
    GalleryError::UnknownName { kind, name: name.to_string() }
}

impl GalleryInstance {
    fn named(name: impl Into<String>) -> Self {
        GalleryInstance { name: name.into(), ..Default::default() }
    }

    pub fn algebra(&self, name: &str) -> Result<&Arc<LInftyAlgebra>, GalleryError> {
        self.algebras.iter().find(|a| a.name == name).map(|a| &a.algebra).ok_or_else(|| unknown("algebra", name))
    }

    pub fn ruth(&self, name: &str) -> Result<&Arc<Ruth>, GalleryError> {
        self.ruths.iter().find(|r| r.name == name).map(|r| &r.ruth).ok_or_else(|| unknown("ruth", name))
    }

    pub fn extension(&self, name: &str) -> Result<&LInftyExtension, GalleryError> {
        self.extensions
            .iter()
            .find(|e| e.name == name)
            .map(|e| &e.extension)
            .ok_or_else(|| unknown("extension", name))
    }

    pub fn section(&self, extension: &str, name: &str) -> Result<&Section, GalleryError> {
        self.sections
            .iter()
            .find(|s| s.extension == extension && s.name == name)
            .map(|s| &s.section)
            .ok_or_else(|| unknown("section", name))
    }

    /// Sections registered for one extension, in insertion order.
    pub fn sections_of(&self, extension: &str) -> Vec<&SectionEntry> {
        self.sections.iter().filter(|s| s.extension == extension).collect()
    }

    pub fn morphism(&self, name: &str) -> Result<&LInftyMorphism, GalleryError> {
        self.morphisms
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.morphism)
            .ok_or_else(|| unknown("morphism", name))
    }

    pub fn ruth_morphism(&self, name: &str) -> Result<&RuthMorphism, GalleryError> {
        self.ruth_morphisms
            .iter()
            .find(|m| m.name == name)
            .map(|m| &m.value)
            .ok_or_else(|| unknown("ruth morphism", name))
    }

    fn add_algebra(&mut self, name: &str, algebra: LInftyAlgebra) -> Arc<LInftyAlgebra> {
        let algebra = Arc::new(algebra);
        self.algebras.push(AlgebraEntry { name: name.into(), algebra: Arc::clone(&algebra) });
        algebra
    }

    fn add_ruth(&mut self, name: &str, algebra: &str, ruth: Ruth) -> Arc<Ruth> {
        let ruth = Arc::new(ruth);
        self.ruths.push(RuthEntry { name: name.into(), algebra: algebra.into(), ruth: Arc::clone(&ruth) });
        ruth
    }

    fn add_extension(
        &mut self,
        name: &str,
        [kernel, total, base]: [&str; 3],
        iota: &SparseMatrix,
        pi: &SparseMatrix,
    ) -> Result<LInftyExtension, GalleryError> {
        let e = LInftyExtension::new(
            Arc::clone(self.algebra(kernel)?),
            Arc::clone(self.algebra(total)?),
            Arc::clone(self.algebra(base)?),
            iota,
            pi,
        )?;
        self.extensions.push(ExtensionEntry {
            name: name.into(),
            kernel: kernel.into(),
            total: total.into(),
            base: base.into(),
            extension: e.clone(),
        });
        let default = Section::default_for(&e)?;
        self.add_section("default", name, default);
        Ok(e)
    }

    fn add_section(&mut self, name: &str, extension: &str, section: Section) {
        self.sections.push(SectionEntry { name: name.into(), extension: extension.into(), section });
    }

    fn add_morphism(&mut self, name: &str, source: &str, target: &str, matrix: &SparseMatrix) -> Result<LInftyMorphism, GalleryError> {
        let m = LInftyMorphism::strict(Arc::clone(self.algebra(source)?), Arc::clone(self.algebra(target)?), matrix)?;
        self.morphisms.push(MorphismEntry { name: name.into(), source: source.into(), target: target.into(), morphism: m.clone() });
        Ok(m)
    }

    fn add_ruth_morphism(
        &mut self,
        name: &str,
        morphism: &str,
        [source, target]: [&str; 2],
        map: SparseMatrix,
    ) -> Result<(), GalleryError> {
        let value = RuthMorphism::new(
            self.morphism(morphism)?.clone(),
            map,
            Arc::clone(self.ruth(source)?),
            Arc::clone(self.ruth(target)?),
        )?;
        self.ruth_morphisms.push(RuthMorphismEntry {
            name: name.into(),
            morphism: morphism.into(),
            source: source.into(),
            target: target.into(),
            value,
        });
        Ok(())
    }

    fn expect(&mut self, provenance: Provenance, claim: Claim) {
        self.ledger.push(Expectation { claim, provenance });
    }

    fn invalid(&self, object: String, report: impl fmt::Display) -> GalleryError {
        GalleryError::Invalid { instance: self.name.clone(), object, report: report.to_string() }
    }

    /// Runs every structural validator on every object.
    pub fn validate(&self) -> Result<(), GalleryError> {
        for a in &self.algebras {
            let report = check_jacobi(&a.algebra);
            if !report.is_valid() {
                return Err(self.invalid(format!("algebra {}", a.name), report));
            }
        }
        for r in &self.ruths {
            if **self.algebra(&r.algebra)? != **r.ruth.algebra() {
                return Err(self.invalid(format!("ruth {}", r.name), "algebra does not match its declared name"));
            }
            let report = check_ruth(&r.ruth);
            if !report.is_valid() {
                return Err(self.invalid(format!("ruth {}", r.name), report));
            }
        }
        for e in &self.extensions {
            let report = check_extension(&e.extension);
            if !report.is_valid() {
                return Err(self.invalid(format!("extension {}", e.name), report));
            }
        }
        for s in &self.sections {
            self.extension(&s.extension)?;
        }
        for m in &self.morphisms {
            let report = check_morphism(&m.morphism);
            if !report.is_valid() {
                return Err(self.invalid(format!("morphism {}", m.name), report));
            }
        }
        for m in &self.ruth_morphisms {
            let report = check_ruth_morphism(&m.value);
            if !report.is_valid() {
                return Err(self.invalid(format!("ruth morphism {}", m.name), report));
            }
        }
        Ok(())
    }

    fn finish(self) -> Result<Self, GalleryError> {
        self.validate()?;
        Ok(self)
    }

    /// Recomputes one claim from scratch.
    pub fn verify(&self, claim: &Claim) -> Result<bool, GalleryError> {
        Ok(match claim {
            Claim::AlgebraValid { algebra } => check_jacobi(self.algebra(algebra)?).is_valid(),
            Claim::ExtensionValid { extension } => check_extension(self.extension(extension)?).is_valid(),
            Claim::CohomologyDim { ruth, degree, dim } => {
                CeComplex::new(Arc::clone(self.ruth(ruth)?)).cohomology(*degree).dim() == *dim
            }
            Claim::CurvatureWeights { extension, section, weights } => {
                let k = curvature(self.extension(extension)?, self.section(extension, section)?)?;
                let found: BTreeSet<usize> =
                    k.values.iter().filter(|(_, v)| !v.is_zero()).map(|(w, _)| w.weight()).collect();
                found == weights.iter().copied().collect()
            }
            Claim::Flat { extension, section, flat } => {
                let e = self.extension(extension)?;
                let h = self.section(extension, section)?;
                let zero = curvature(e, h)?.is_zero();
                zero == *flat && h.is_morphism(e) == *flat
            }
            Claim::CwlClassZero { extension, ruth, zero } => {
                let e = self.extension(extension)?;
                let r = self.ruth(ruth)?;
                let f = EquivariantHom::identity(e.kernel().dim());
                if !check_equivariance(e, r, &f, Equivariance::Section)?.is_valid() {
                    return Ok(false);
                }
                let complex = CeComplex::new(Arc::clone(r));
                cwl_class(e, &complex, &f)?.is_zero() == *zero
            }
            Claim::QuasiIso { morphism } => {
                let m = self.morphism(morphism)?;
                check_morphism(m).is_valid() && is_quasi_iso(m).is_quasi_iso()
            }
            Claim::InducedIso { ruth_morphism, degrees } => {
                let m = self.ruth_morphism(ruth_morphism)?;
                let source = CeComplex::new(Arc::clone(&m.source));
                let target = CeComplex::new(Arc::clone(&m.target));
                let mut ok = true;
                for p in degrees.0..=degrees.1 {
                    let map = induced_map_on_cohomology(m, &source, &target, p)?;
                    let rank = RationalMatrix::from_sparse(&map).rank();
                    ok &= map.nrows() == map.ncols() && rank == map.nrows();
                }
                ok
            }
            Claim::Naturality { ruth_morphism, extension, section } => {
                let m = self.ruth_morphism(ruth_morphism)?;
                let e = self.extension(extension)?;
                let f = EquivariantHom::identity(e.kernel().dim());
                naturality_check(m, e, &f, self.section(extension, section)?)?.commutes()
            }
            Claim::MinimalModel { algebra, coker_dim, kernel_dim } => {
                let g = self.algebra(algebra)?;
                let data = TwoTermData::new(g)?;
                let model = minimal_model_2term(g, &data, &Splitting::default_for(&data))?;
                model.coker_dim == *coker_dim
                    && model.kernel_dim == *kernel_dim
                    && check_morphism(&model.morphism).is_valid()
                    && is_quasi_iso(&model.morphism).is_quasi_iso()
            }
        })
    }

    /// Every ledger entry with its verification outcome.
    pub fn verify_ledger(&self) -> Vec<(&Expectation, Result<bool, GalleryError>)> {
        self.ledger.iter().map(|x| (x, self.verify(&x.claim))).collect()
    }
}

fn unit_matrix(nrows: usize, ncols: usize, entries: &[(usize, usize)]) -> SparseMatrix {
    SparseMatrix::from_entries(nrows, ncols, entries.iter().map(|&(i, j)| (i, j, int(1))))
}

fn abelian(names: &[(&str, i32)]) -> Result<LInftyAlgebra, GalleryError> {
    Ok(LInftyAlgebra::abelian(GradedSpace::new(names.iter().copied()).map_err(LInftyError::from)?)?)
}

/// `0 → ℝ → 𝔥_3 → ℝ² → 0`, its split counterpart, and strict maps into the plane.
pub fn heisenberg() -> Result<GalleryInstance, GalleryError> {
    let mut g = GalleryInstance::named("heisenberg");
    g.add_algebra("plane", abelian(&[("e0", 0), ("e1", 0)])?);
    g.add_algebra("heisenberg", LieAlgebra::heisenberg().to_linfty()?);
    g.add_algebra("center", abelian(&[("c", 0)])?);
    let split = crate::extension::direct_sum(g.algebra("plane")?, g.algebra("center")?)?;
    g.add_algebra("split", split);
    let iota = unit_matrix(3, 1, &[(2, 0)]);
    let pi = unit_matrix(2, 3, &[(0, 0), (1, 1)]);
    let central = g.add_extension("central", ["center", "heisenberg", "plane"], &iota, &pi)?;
    g.add_extension("split", ["center", "split", "plane"], &iota, &pi)?;
    let tilted = SparseMatrix::from_entries(
        3,
        2,
        [(0, 0, int(1)), (2, 0, int(2)), (1, 1, int(1)), (2, 1, int(-1))],
    );
    g.add_section("tilted", "central", Section::new(&central, tilted)?);
    let plane = Arc::clone(g.algebra("plane")?);
    g.add_ruth("trivial", "plane", Ruth::trivial(plane, central.kernel().shifted().clone()));

    g.add_algebra("line", abelian(&[("s", 0)])?);
    let padded = CrossedModule::new(
        LieAlgebra::abelian("a", 1),
        LieAlgebra::new(["e0", "e1", "b"].map(String::from).to_vec(), [])?,
        unit_matrix(3, 1, &[(2, 0)]),
        vec![SparseMatrix::zero(1, 1); 3],
    )?;
    g.add_algebra("padded", padded.to_linfty()?);
    g.add_morphism("identity", "plane", "plane", &SparseMatrix::identity(2))?;
    let shear = SparseMatrix::from_entries(2, 2, [(0, 0, int(1)), (0, 1, int(1)), (1, 1, int(1))]);
    g.add_morphism("shear", "plane", "plane", &shear)?;
    g.add_morphism("diagonal", "line", "plane", &unit_matrix(2, 1, &[(0, 0), (1, 0)]))?;
    let collapse = g.add_morphism("collapse", "padded", "plane", &unit_matrix(2, 4, &[(0, 1), (1, 2)]))?;
    let line = Arc::clone(g.algebra("line")?);
    g.add_ruth("trivial-line", "line", Ruth::trivial(line, central.kernel().shifted().clone()));
    let pulled = Ruth::pullback(&collapse, g.ruth("trivial")?)?;
    g.add_ruth("trivial-padded", "padded", pulled);
    let id = SparseMatrix::identity(1);
    g.add_ruth_morphism("identity", "identity", ["trivial", "trivial"], id.clone())?;
    g.add_ruth_morphism("shear", "shear", ["trivial", "trivial"], id.scaled(&int(3)))?;
    g.add_ruth_morphism("diagonal", "diagonal", ["trivial-line", "trivial"], id.clone())?;
    g.add_ruth_morphism("collapse", "collapse", ["trivial-padded", "trivial"], id)?;

    use Provenance::*;
    g.expect(Immediate, Claim::ExtensionValid { extension: "central".into() });
    g.expect(Oracle, Claim::CurvatureWeights { extension: "central".into(), section: "default".into(), weights: vec![2] });
    g.expect(Oracle, Claim::Flat { extension: "central".into(), section: "tilted".into(), flat: false });
    g.expect(Immediate, Claim::Flat { extension: "split".into(), section: "default".into(), flat: true });
    g.expect(Classical, Claim::CohomologyDim { ruth: "trivial".into(), degree: 1, dim: 1 });
    g.expect(Oracle, Claim::CwlClassZero { extension: "central".into(), ruth: "trivial".into(), zero: false });
    g.expect(Immediate, Claim::CwlClassZero { extension: "split".into(), ruth: "trivial".into(), zero: true });
    g.expect(Oracle, Claim::QuasiIso { morphism: "collapse".into() });
    g.expect(Oracle, Claim::InducedIso { ruth_morphism: "collapse".into(), degrees: (0, 3) });
    for m in ["identity", "shear", "diagonal", "collapse"] {
        g.expect(Oracle, Claim::Naturality { ruth_morphism: m.into(), extension: "central".into(), section: "tilted".into() });
    }
    g.finish()
}

/// Registers `base`, `kernel`, the extension `skeleton` and its induced action `action`.
fn add_skeletal_extension(g: &mut GalleryInstance, total: &str) -> Result<LInftyExtension, GalleryError> {
    let e = skeletal_extension(Arc::clone(g.algebra(total)?))?;
    g.algebras.push(AlgebraEntry { name: "base".into(), algebra: Arc::clone(e.base()) });
    g.algebras.push(AlgebraEntry { name: "kernel".into(), algebra: Arc::clone(e.kernel()) });
    let (iota, pi) = (e.inclusion_matrix(), e.projection_matrix());
    let e = g.add_extension("skeleton", ["kernel", total, "base"], &iota, &pi)?;
    let h = Section::default_for(&e)?;
    g.add_ruth("action", "base", induced_action(&e, &h)?);
    Ok(e)
}

/// `𝔰𝔩_2` in degree 0 and a line in degree −1 with `[x,y,z]^3 = level·tr([x,y]z)`.
pub fn skeletal_string(level: &Scalar) -> Result<GalleryInstance, GalleryError> {
    let mut g = GalleryInstance::named(format!("skeletal_string[level={}]", format_scalar(level)));
    let sl2 = LieAlgebra::sl2();
    let space = GradedSpace::new([("h", 0), ("e", 0), ("f", 0), ("b", -1)]).map_err(LInftyError::from)?;
    let mut brackets: BracketTable = sl2.structure().iter().map(|(&(i, j), v)| (vec![i, j], v.clone())).collect();
    // tr([h,e]f) = 2 tr(ef) = 2 for the defining representation
    let theta = level * int(2);
    brackets.insert(vec![0, 1, 2], SparseVec::basis(3).scaled(&theta));
    g.add_algebra("string", LInftyAlgebra::from_brackets(space, &brackets)?);
    g.add_algebra("sl2", sl2.to_linfty()?);
    add_skeletal_extension(&mut g, "string")?;
    let sl2 = Arc::clone(g.algebra("sl2")?);
    g.add_ruth("trivial", "sl2", Ruth::trivial_line(sl2));

    use Provenance::*;
    let zero = level == &int(0);
    g.expect(Oracle, Claim::AlgebraValid { algebra: "string".into() });
    g.expect(Classical, Claim::CohomologyDim { ruth: "action".into(), degree: 1, dim: 1 });
    g.expect(Classical, Claim::CohomologyDim { ruth: "trivial".into(), degree: 3, dim: 1 });
    g.expect(
        Immediate,
        Claim::CurvatureWeights {
            extension: "skeleton".into(),
            section: "default".into(),
            weights: if zero { vec![] } else { vec![3] },
        },
    );
    g.expect(if zero { Immediate } else { Oracle }, Claim::CwlClassZero {
        extension: "skeleton".into(),
        ruth: "action".into(),
        zero,
    });
    g.finish()
}

/// `n×n` rational matrices as `𝔤𝔩_n` coordinates.
fn gl_vector(m: &RationalMatrix) -> SparseVec {
    let n = m.nrows();
    SparseVec::from_entries(m.entries().map(|(i, j, c)| (i * n + j, c.clone())))
}

/// Identity crossed modules of `𝔰𝔩_n ⊂ 𝔤𝔩_n` with quotient `id: ℝ → ℝ`, the inclusion
/// `𝔰𝔩_n → 𝔤𝔩_n`, and the identity crossed module of a conjugated Borel subalgebra.
pub fn crossed_module_matrices(n: usize) -> Result<GalleryInstance, GalleryError> {
    if n < 2 {
        return Err(GalleryError::Degenerate(format!("n = {n}; need n ≥ 2")));
    }
    let mut g = GalleryInstance::named(format!("crossed_module_matrices[n={n}]"));
    let gl = LieAlgebra::gl(n);
    let sl_basis = LieAlgebra::sl_in_gl_basis(n);
    let sl_names = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| format!("A{i}{j}")))
        .chain((0..n - 1).map(|i| format!("H{i}")))
        .collect();
    let sl = gl.subalgebra(&sl_basis, sl_names)?;
    g.add_algebra("gl", CrossedModule::identity(&gl).to_linfty()?);
    g.add_algebra("sl", CrossedModule::identity(&sl).to_linfty()?);
    g.add_algebra("trace", CrossedModule::identity(&LieAlgebra::abelian("t", 1)).to_linfty()?);
    let (d, nn) = (sl_basis.len(), n * n);
    let mut iota = SparseMatrix::zero(2 * nn, 2 * d);
    for (k, v) in sl_basis.iter().enumerate() {
        for (i, c) in v.iter() {
            iota.add_entry(i, k, c);
            iota.add_entry(nn + i, d + k, c);
        }
    }
    let diagonal: Vec<usize> = (0..n).map(|i| i * n + i).collect();
    let pi_entries: Vec<(usize, usize)> = diagonal.iter().flat_map(|&k| [(0, k), (1, nn + k)]).collect();
    let e = g.add_extension("matrices", ["sl", "gl", "trace"], &iota, &unit_matrix(2, 2 * nn, &pi_entries))?;
    // E00 on the upper level and E00 + E01 on the lower level: the two levels disagree by ∂
    let curved = SparseMatrix::from_entries(2 * nn, 2, [(0, 0, int(1)), (1, 0, int(1)), (nn, 1, int(1))]);
    g.add_section("curved", "matrices", Section::new(&e, curved)?);
    let trace = Arc::clone(g.algebra("trace")?);
    g.add_ruth("trivial", "trace", Ruth::trivial_line(Arc::clone(&trace)));
    g.add_ruth("adjoint", "trace", Ruth::adjoint(trace));

    g.add_algebra("inclusion", CrossedModule::ideal_inclusion(&gl, &sl_basis)?.to_linfty()?);
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let mut u = RationalMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u.add_entry(j, i, &int(rng.gen_range(-2..=2)));
        }
    }
    let u_inv = u.inverse().expect("unipotent matrices are invertible");
    let borel: Vec<SparseVec> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut unit = RationalMatrix::zero(n, n);
            unit.add_entry(i, j, &int(1));
            gl_vector(&u.mul(&unit).mul(&u_inv))
        })
        .collect();
    let names = (0..borel.len()).map(|k| format!("B{k}")).collect();
    let b = gl.subalgebra(&borel, names)?;
    g.add_algebra("borel", CrossedModule::identity(&b).to_linfty()?);

    use Provenance::*;
    g.expect(Oracle, Claim::AlgebraValid { algebra: "inclusion".into() });
    g.expect(Immediate, Claim::ExtensionValid { extension: "matrices".into() });
    g.expect(Oracle, Claim::Flat { extension: "matrices".into(), section: "default".into(), flat: true });
    g.expect(Oracle, Claim::CurvatureWeights {
        extension: "matrices".into(),
        section: "curved".into(),
        weights: vec![1, 2],
    });
    g.expect(Classical, Claim::CohomologyDim { ruth: "trivial".into(), degree: 0, dim: 1 });
    g.expect(Classical, Claim::CohomologyDim { ruth: "trivial".into(), degree: 2, dim: 0 });
    g.expect(Classical, Claim::CohomologyDim { ruth: "adjoint".into(), degree: 1, dim: 0 });
    g.finish()
}

/// Structure constants of a Lie algebra `g` acting on a module `V` with a 2-cochain `ω`.
#[derive(Clone, Debug)]
pub struct AbelianExtensionData {
    pub lie: LieAlgebra,
    /// One matrix per basis element of `g`.
    pub module: Vec<SparseMatrix>,
    /// `ω(e_i, e_j)` for `i < j`, in module coordinates.
    pub cocycle: BTreeMap<(usize, usize), SparseVec>,
}

impl AbelianExtensionData {
    /// `ℝ²` acting on `ℝ²` through `x ↦ E_{10}`, `y ↦ 0`, with `ω(x, y) = v0`.
    pub fn nilpotent_plane() -> Self {
        let lie = LieAlgebra::new(vec!["x".into(), "y".into()], []).expect("abelian");
        let module = vec![unit_matrix(2, 2, &[(1, 0)]), SparseMatrix::zero(2, 2)];
        let cocycle = [((0, 1), SparseVec::basis(0))].into();
        AbelianExtensionData { lie, module, cocycle }
    }

    /// The total Lie algebra `g ⋉_ω V` on `(g, V)`.
    pub fn total(&self) -> Result<LieAlgebra, GalleryError> {
        let (n, m) = (self.lie.dim(), self.module.first().map_or(0, SparseMatrix::nrows));
        if self.module.len() != n || self.module.iter().any(|a| a.nrows() != m || a.ncols() != m) {
            return Err(GalleryError::Degenerate("module matrices do not match the algebra".into()));
        }
        let mut names: Vec<String> = self.lie.names().to_vec();
        names.extend((0..m).map(|a| format!("v{a}")));
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = self.lie.bracket_basis(i, j);
                if let Some(w) = self.cocycle.get(&(i, j)) {
                    v.add_assign(&w.remap(|a| Some(n + a)));
                }
                brackets.push(((i, j), v));
            }
            for a in 0..m {
                brackets.push(((i, n + a), self.module[i].column(a).remap(|b| Some(n + b))));
            }
        }
        LieAlgebra::new(names, brackets).map_err(|e| GalleryError::Degenerate(format!("not a cocycle or not a module: {e}")))
    }
}

/// `0 → V → g ⋉_ω V → g → 0` and, for comparison, the same module with `ω` replaced by `exact`.
pub fn abelian_extension(
    data: &AbelianExtensionData,
    exact: Option<&BTreeMap<(usize, usize), SparseVec>>,
) -> Result<GalleryInstance, GalleryError> {
    let mut g = GalleryInstance::named("abelian_extension");
    let (n, m) = (data.lie.dim(), data.module.first().map_or(0, SparseMatrix::nrows));
    g.add_algebra("base", data.lie.to_linfty()?);
    let module_space: Vec<(String, i32)> = (0..m).map(|a| (format!("v{a}"), 0)).collect();
    g.add_algebra("module", LInftyAlgebra::abelian(GradedSpace::new(module_space).map_err(LInftyError::from)?)?);
    g.add_algebra("twisted", data.total()?.to_linfty()?);
    let iota = unit_matrix(n + m, m, &(0..m).map(|a| (n + a, a)).collect::<Vec<_>>());
    let pi = unit_matrix(n, n + m, &(0..n).map(|i| (i, i)).collect::<Vec<_>>());
    let e = g.add_extension("twisted", ["module", "twisted", "base"], &iota, &pi)?;
    g.add_ruth("module", "base", induced_action(&e, &Section::default_for(&e)?)?);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    g.add_section("random", "twisted", Section::random(&e, &mut rng, 3)?);
    if let Some(exact) = exact {
        let other = AbelianExtensionData { cocycle: exact.clone(), ..data.clone() };
        g.add_algebra("exact", other.total()?.to_linfty()?);
        g.add_extension("exact", ["module", "exact", "base"], &iota, &pi)?;
    }

    use Provenance::*;
    let nonzero = data.cocycle.values().any(|v| !v.is_zero());
    g.expect(Immediate, Claim::ExtensionValid { extension: "twisted".into() });
    g.expect(Oracle, Claim::CurvatureWeights {
        extension: "twisted".into(),
        section: "default".into(),
        weights: if nonzero { vec![2] } else { vec![] },
    });
    g.expect(Oracle, Claim::Flat { extension: "twisted".into(), section: "default".into(), flat: !nonzero });
    if exact.is_some() {
        g.expect(Oracle, Claim::CwlClassZero { extension: "exact".into(), ruth: "module".into(), zero: true });
    }
    g.finish()
}

/// The default abelian extension with its expected cohomology.
pub fn abelian_extension_default() -> Result<GalleryInstance, GalleryError> {
    let data = AbelianExtensionData::nilpotent_plane();
    // ω' = v1 = x·v0 is exact
    let exact = [((0, 1), SparseVec::basis(1))].into();
    let mut g = abelian_extension(&data, Some(&exact))?;
    g.expect(Provenance::Oracle, Claim::CohomologyDim { ruth: "module".into(), degree: 1, dim: 1 });
    g.expect(Provenance::Oracle, Claim::CwlClassZero { extension: "twisted".into(), ruth: "module".into(), zero: false });
    Ok(g)
}

/// `λ'(w) = P^{-1} λ(S(P) w)`: the same structure in the basis given by the columns of `P`.
pub fn change_basis(g: &LInftyAlgebra, p: &SparseMatrix) -> Result<LInftyAlgebra, GalleryError> {
    let space = g.space();
    let square = p.nrows() == space.dim() && p.ncols() == space.dim();
    if !square || p.entries().any(|(i, j, _)| space.degree(i) != space.degree(j)) {
        return Err(GalleryError::Degenerate("change of basis must be square and of degree 0".into()));
    }
    let inverse = RationalMatrix::from_sparse(p)
        .inverse()
        .ok_or_else(|| GalleryError::Degenerate("change of basis is singular".into()))?
        .to_sparse();
    let words = g.words();
    let shifted = g.shifted();
    let (lo, hi) = (shifted.min_degree().unwrap_or(-1) - 1, shifted.max_degree().unwrap_or(-1) - 1);
    let mut lambda = WordMap::new();
    for w in words.words_in_degree_range(lo, hi) {
        if w.is_unit() || w.weight() > g.max_arity() {
            continue;
        }
        let images: Vec<&SparseVec> = w.letters().map(|i| p.column(i)).collect();
        let v = inverse.apply(&g.apply_lambda(&words.vector_product(&images)));
        if !v.is_zero() {
            lambda.insert(w, v);
        }
    }
    Ok(LInftyAlgebra::from_symmetric(space.clone(), lambda)?)
}

/// A random degree-preserving unipotent matrix with small integer entries.
fn random_unipotent<R: Rng>(space: &GradedSpace, rng: &mut R) -> SparseMatrix {
    let mut p = SparseMatrix::identity(space.dim());
    for i in 0..space.dim() {
        for j in 0..i {
            if space.degree(i) == space.degree(j) {
                p.add_entry(i, j, &int(rng.gen_range(-1..=1)));
            }
        }
    }
    p
}

fn two_term_template(index: usize) -> Result<CrossedModule, GalleryError> {
    let cm = match index {
        // 𝔥_3 ⊕ ℝw acting on (u1, u2) with ∂u1 = z and w·u1 = u2: nonzero λ_3 on the minimal model
        0 => {
            let upper = LieAlgebra::new(["x", "y", "z", "w"].map(String::from).to_vec(), [((0, 1), SparseVec::basis(2))])?;
            let mut action = vec![SparseMatrix::zero(2, 2); 4];
            action[3] = unit_matrix(2, 2, &[(1, 0)]);
            CrossedModule::new(LieAlgebra::abelian("u", 2), upper, unit_matrix(4, 2, &[(2, 0)]), action)?
        }
        // the centre of 𝔥_3 hit by one of two lower elements
        1 => CrossedModule::new(
            LieAlgebra::abelian("c", 2),
            LieAlgebra::heisenberg(),
            unit_matrix(3, 2, &[(2, 0)]),
            vec![SparseMatrix::zero(2, 2); 3],
        )?,
        // 𝔥_3 acting on ℝ² through x with ∂ = 0
        2 => {
            let module = vec![unit_matrix(2, 2, &[(1, 0)]), SparseMatrix::zero(2, 2), SparseMatrix::zero(2, 2)];
            CrossedModule::from_representation(&LieAlgebra::heisenberg(), module)?
        }
        // the defining representation of 𝔰𝔩_2 with ∂ = 0
        _ => {
            let h = SparseMatrix::from_entries(2, 2, [(0, 0, int(1)), (1, 1, int(-1))]);
            let module = vec![h, unit_matrix(2, 2, &[(0, 1)]), unit_matrix(2, 2, &[(1, 0)])];
            CrossedModule::from_representation(&LieAlgebra::sl2(), module)?
        }
    };
    Ok(cm)
}

/// Number of crossed-module templates behind [`random_strict_2term`].
pub const TWO_TERM_TEMPLATES: usize = 4;

/// A strict 2-term algebra with nonzero kernel and cokernel in a random basis, its minimal
/// model, and the skeletal extension of the minimal model.
pub fn random_strict_2term(seed: u64) -> Result<GalleryInstance, GalleryError> {
    let mut g = GalleryInstance::named(format!("random_strict_2term[seed={seed}]"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cm = two_term_template((seed as usize) % TWO_TERM_TEMPLATES)?;
    let strict = cm.to_linfty()?;
    let p = random_unipotent(strict.space(), &mut rng);
    let strict = Arc::new(change_basis(&strict, &p)?);
    let data = TwoTermData::new(&strict)?;
    let model = minimal_model_2term(&strict, &data, &Splitting::random(&data, &mut rng))?;
    let (c, k) = (model.coker_dim, model.kernel_dim);
    g.add_algebra("strict", (*strict).clone());
    g.add_algebra("minimal", (*model.algebra).clone());
    add_skeletal_extension(&mut g, "minimal")?;
    let strict = Arc::clone(g.algebra("strict")?);
    g.add_ruth("trivial", "strict", Ruth::trivial_line(strict));

    use Provenance::*;
    g.expect(Oracle, Claim::AlgebraValid { algebra: "strict".into() });
    g.expect(Immediate, Claim::MinimalModel { algebra: "strict".into(), coker_dim: c, kernel_dim: k });
    g.expect(Immediate, Claim::ExtensionValid { extension: "skeleton".into() });
    let flat = model.theta.values().all(SparseVec::is_zero);
    g.expect(Immediate, Claim::Flat { extension: "skeleton".into(), section: "default".into(), flat });
    g.expect(Oracle, Claim::CwlClassZero { extension: "skeleton".into(), ruth: "action".into(), zero: flat });
    g.finish()
}

/// Span of all brackets of basis elements, an ideal of any Lie algebra.
fn derived_algebra(lie: &LieAlgebra) -> Vec<SparseVec> {
    let mut ech = crate::cohomology::matrix::Echelon::new(lie.dim());
    let mut basis = Vec::new();
    for v in lie.structure().values() {
        if ech.insert(v) {
            basis.push(v.clone());
        }
    }
    basis
}

fn small_lie_algebra<R: Rng>(rng: &mut R) -> LieAlgebra {
    match rng.gen_range(0..5) {
        0 => LieAlgebra::sl2(),
        1 => LieAlgebra::heisenberg(),
        2 => LieAlgebra::borel2(),
        3 => LieAlgebra::gl(2),
        _ => LieAlgebra::abelian("a", rng.gen_range(1..=3)),
    }
}

/// A seeded crossed module with both levels of dimension at most 4, presented in a random basis.
///
/// The shapes cover `∂ = id`, inclusions of derived ideals, modules with `∂ = 0`
/// (adjoint, trivial, or a nilpotent action of an abelian algebra) and central maps.
pub fn random_crossed_module(seed: u64) -> Result<LInftyAlgebra, GalleryError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let upper = small_lie_algebra(&mut rng);
    let n = upper.dim();
    let cm = match rng.gen_range(0..4) {
        0 => CrossedModule::identity(&upper),
        1 => {
            let ideal = derived_algebra(&upper);
            if ideal.is_empty() {
                CrossedModule::identity(&upper)
            } else {
                CrossedModule::ideal_inclusion(&upper, &ideal)?
            }
        }
        2 => {
            let module = match rng.gen_range(0..3) {
                0 => (0..n).map(|x| upper.ad(&SparseVec::basis(x))).collect(),
                1 => vec![SparseMatrix::zero(2, 2); n],
                _ if upper.structure().is_empty() => {
                    let dim = rng.gen_range(2..=3);
                    let nilpotent = SparseMatrix::from_entries(dim, dim, (1..dim).map(|i| (i, i - 1, int(1))));
                    (0..n).map(|_| nilpotent.scaled(&int(rng.gen_range(-2..=2)))).collect()
                }
                _ => (0..n).map(|x| upper.ad(&SparseVec::basis(x))).collect(),
            };
            CrossedModule::from_representation(&upper, module)?
        }
        _ => {
            // ∂ into the centre with zero action; the centre of gl_2 is spanned by the identity
            let centre: Vec<SparseVec> = if upper.structure().is_empty() {
                (0..n).map(SparseVec::basis).collect()
            } else if upper == LieAlgebra::heisenberg() {
                vec![SparseVec::basis(2)]
            } else if upper == LieAlgebra::gl(2) {
                vec![SparseVec::from_entries([(0, int(1)), (3, int(1))])]
            } else {
                Vec::new()
            };
            let k = rng.gen_range(1..=2);
            let mut boundary = SparseMatrix::zero(n, k);
            for j in 0..k {
                for z in &centre {
                    let t = int(rng.gen_range(-2..=2));
                    for (i, c) in z.iter() {
                        boundary.add_entry(i, j, &(c * &t));
                    }
                }
            }
            CrossedModule::new(LieAlgebra::abelian("c", k), upper, boundary, vec![SparseMatrix::zero(k, k); n])?
        }
    };
    let g = cm.to_linfty()?;
    let p = random_unipotent(g.space(), &mut rng);
    change_basis(&g, &p)
}

/// A seeded valid ruth over [`random_crossed_module`]: the adjoint ruth, possibly tensored
/// with a trivial line, or a two-dimensional ruth whose only structure is a random `∂`.
pub fn random_ruth(seed: u64) -> Result<Ruth, GalleryError> {
    let g = Arc::new(random_crossed_module(seed)?);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5eed));
    let adjoint = Ruth::adjoint(Arc::clone(&g));
    Ok(match rng.gen_range(0..3) {
        0 => adjoint,
        1 => {
            let line = GradedSpace::new([("l", rng.gen_range(-1..=0))]).map_err(LInftyError::from)?;
            Ruth::tensor(&adjoint, &Ruth::trivial(Arc::clone(&g), line))?
        }
        _ => {
            let space = GradedSpace::new([("p", 0), ("q", -1)]).map_err(LInftyError::from)?;
            let mut partial = SparseMatrix::zero(2, 2);
            partial.add_entry(0, 1, &int(rng.gen_range(-2..=2)));
            Ruth::new(g, space, partial, BTreeMap::new())?
        }
    })
}

/// Adds `±1` at one degree-correct entry of `∂` or of a generator component.
pub fn perturb_ruth<R: Rng>(r: &Ruth, rng: &mut R) -> Result<Ruth, GalleryError> {
    let g = r.algebra();
    let space = r.space();
    let dim = space.dim();
    let words = g.words();
    for _ in 0..64 {
        let letter = rng.gen_range(0..=g.dim());
        let (word, degree) = if letter == g.dim() {
            (None, 1)
        } else {
            let w = crate::symcoalg::SymWord::generator(letter);
            let d = words.degree(&w) + 1;
            (Some(w), d)
        };
        let slots: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .filter(|&(i, j)| space.degree(i) == space.degree(j) + degree)
            .collect();
        if slots.is_empty() {
            continue;
        }
        let (i, j) = slots[rng.gen_range(0..slots.len())];
        let c = int(if rng.gen_bool(0.5) { 1 } else { -1 });
        let mut partial = r.partial().clone();
        let mut components = r.components().clone();
        match word {
            None => partial.add_entry(i, j, &c),
            Some(w) => components.entry(w).or_insert_with(|| SparseMatrix::zero(dim, dim)).add_entry(i, j, &c),
        }
        return Ok(Ruth::new(Arc::clone(g), space.clone(), partial, components)?);
    }
    Err(GalleryError::Degenerate("no matrix slot of the right degree to perturb".into()))
}

/// Names accepted by [`by_name`] for the deterministic part of the gallery.
pub fn catalogue() -> Vec<String> {
    let mut names: Vec<String> = ["heisenberg", "skeletal_string[level=1]", "skeletal_string[level=0]"]
        .map(String::from)
        .to_vec();
    names.push("crossed_module_matrices[n=2]".into());
    names.push("abelian_extension".into());
    names.extend((0..TWO_TERM_TEMPLATES as u64).map(|s| format!("random_strict_2term[seed={s}]")));
    names
}

/// Builds an instance from its name, e.g. `skeletal_string[level=3/2]` or `random_strict_2term[seed=7]`.
pub fn by_name(name: &str) -> Result<GalleryInstance, GalleryError> {
    let (head, arg) = match name.split_once('[') {
        Some((head, rest)) => {
            let arg = rest.strip_suffix(']').ok_or_else(|| unknown("gallery instance", name))?;
            let (_, value) = arg.split_once('=').ok_or_else(|| unknown("gallery instance", name))?;
            (head, Some(value))
        }
        None => (name, None),
    };
    let bad = || unknown("gallery instance", name);
    match (head, arg) {
        ("heisenberg", None) => heisenberg(),
        ("abelian_extension", None) => abelian_extension_default(),
        ("skeletal_string", Some(v)) => {
            skeletal_string(&crate::graded::parse_scalar(v).map_err(|_| bad())?)
        }
        ("crossed_module_matrices", Some(v)) => crossed_module_matrices(v.parse().map_err(|_| bad())?),
        ("random_strict_2term", Some(v)) => random_strict_2term(v.parse().map_err(|_| bad())?),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_ledger(g: &GalleryInstance) {
        assert!(g.ledger.len() >= 3, "{} has a short ledger", g.name);
        for (x, outcome) in g.verify_ledger() {
            assert_eq!(outcome, Ok(true), "{}: {} ({})", g.name, x.claim, x.provenance);
        }
    }

    #[test]
    fn heisenberg_ledger_holds() {
        assert_ledger(&heisenberg().unwrap());
    }

    #[test]
    fn skeletal_string_ledger_holds() {
        for level in [int(1), int(0), crate::graded::frac(-3, 2)] {
            assert_ledger(&skeletal_string(&level).unwrap());
        }
    }

    #[test]
    fn matrices_ledger_holds() {
        assert_ledger(&crossed_module_matrices(2).unwrap());
    }

    #[test]
    fn abelian_ledger_holds() {
        assert_ledger(&abelian_extension_default().unwrap());
    }

    #[test]
    fn random_two_term_ledgers_hold() {
        for seed in 0..TWO_TERM_TEMPLATES as u64 {
            let g = random_strict_2term(seed).unwrap();
            let data = TwoTermData::new(g.algebra("strict").unwrap()).unwrap();
            assert!(data.coker_dim() > 0 && data.kernel_dim() > 0);
            let curved = g.ledger.iter().any(|x| matches!(x.claim, Claim::Flat { flat: false, .. }));
            assert_eq!(curved, seed == 0);
            assert_ledger(&g);
        }
    }

    #[test]
    fn non_module_is_rejected() {
        let mut data = AbelianExtensionData::nilpotent_plane();
        data.module[1] = unit_matrix(2, 2, &[(0, 1)]);
        assert!(matches!(abelian_extension(&data, None), Err(GalleryError::Degenerate(_))));
    }

    #[test]
    fn names_round_trip() {
        for name in catalogue() {
            assert_eq!(by_name(&name).unwrap().name, name);
        }
        assert!(by_name("nonsense").is_err());
    }
}
