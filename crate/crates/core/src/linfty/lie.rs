//! Ordinary Lie algebras and crossed modules, the inputs of most gallery instances.

use std::collections::BTreeMap;

use super::{LInftyAlgebra, LInftyError};
use crate::cohomology::matrix::Subspace;
use crate::graded::{int, GradedSpace, SparseMatrix, SparseVec};
use crate::report::Report;
use crate::symcoalg::BracketTable;

/// A Lie algebra given by structure constants on a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `[e_i, e_j]` for `i < j`.
    structure: BTreeMap<(usize, usize), SparseVec>,
}

impl LieAlgebra {
    /// Structure constants given on ordered pairs; `(j, i)` entries are implied by skewness.
    pub fn new(
        names: Vec<String>,
        brackets: impl IntoIterator<Item = ((usize, usize), SparseVec)>,
    ) -> Result<Self, LInftyError> {
        let n = names.len();
        GradedSpace::new(names.iter().map(|s| (s.clone(), 0)))?;
        let mut structure: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= n || j >= n || v.max_index().is_some_and(|m| m >= n) {
                return Err(LInftyError::NotLie(format!("bracket [{i},{j}] refers outside the basis")));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(LInftyError::NotLie(format!("[{0},{0}] must vanish", names[i])));
                }
                continue;
            }
            let (key, val) = if i < j { ((i, j), v) } else { ((j, i), v.negated()) };
            if let Some(prev) = structure.get(&key) {
                if *prev != val {
                    return Err(LInftyError::NotLie(format!("conflicting values for [{},{}]", names[i], names[j])));
                }
            }
            if !val.is_zero() {
                structure.insert(key, val);
            }
        }
        let lie = LieAlgebra { names, structure };
        let report = lie.check_jacobi();
        if !report.is_valid() {
            return Err(LInftyError::NotLie(report.to_string()));
        }
        Ok(lie)
    }

    pub fn abelian(prefix: &str, n: usize) -> Self {
        LieAlgebra { names: (0..n).map(|i| format!("{prefix}{i}")).collect(), structure: BTreeMap::new() }
    }

    /// `𝔰𝔩_2` on `h, e, f` with `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let names = ["h", "e", "f"].map(String::from).to_vec();
        LieAlgebra::new(
            names,
            [
                ((0, 1), SparseVec::basis(1).scaled(&int(2))),
                ((0, 2), SparseVec::basis(2).scaled(&int(-2))),
                ((1, 2), SparseVec::basis(0)),
            ],
        )
        .expect("sl2 satisfies Jacobi")
    }

    /// The Heisenberg algebra on `x, y, z` with `[x,y] = z`.
    pub fn heisenberg() -> Self {
        let names = ["x", "y", "z"].map(String::from).to_vec();
        LieAlgebra::new(names, [((0, 1), SparseVec::basis(2))]).expect("Heisenberg satisfies Jacobi")
    }

    /// `𝔤𝔩_n` on matrix units `E_ij` (index `i·n + j`).
    pub fn gl(n: usize) -> Self {
        let names = (0..n * n).map(|k| format!("E{}{}", k / n, k % n)).collect();
        let mut brackets = Vec::new();
        for a in 0..n * n {
            for b in a + 1..n * n {
                let (i, j, k, l) = (a / n, a % n, b / n, b % n);
                let mut v = SparseVec::new();
                if j == k {
                    v.add_at(i * n + l, &int(1));
                }
                if l == i {
                    v.add_at(k * n + j, &int(-1));
                }
                brackets.push(((a, b), v));
            }
        }
        LieAlgebra::new(names, brackets).expect("gl_n satisfies Jacobi")
    }

    /// The upper triangular Borel subalgebra of `𝔤𝔩_2` on `a = E00, b = E01, c = E11`.
    pub fn borel2() -> Self {
        let names = ["a", "b", "c"].map(String::from).to_vec();
        LieAlgebra::new(names, [((0, 1), SparseVec::basis(1)), ((1, 2), SparseVec::basis(1))])
            .expect("borel satisfies Jacobi")
    }

    /// Basis of `𝔰𝔩_n ⊂ 𝔤𝔩_n`: off-diagonal units, then `E_ii − E_{i+1,i+1}`.
    pub fn sl_in_gl_basis(n: usize) -> Vec<SparseVec> {
        let mut basis = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(SparseVec::basis(i * n + j));
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            let mut v = SparseVec::basis(i * n + i);
            v.add_at((i + 1) * n + i + 1, &int(-1));
            basis.push(v);
        }
        basis
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.structure
    }

    /// Same structure, basis names prefixed.
    pub fn renamed(&self, prefix: &str) -> Self {
        LieAlgebra {
            names: self.names.iter().map(|s| format!("{prefix}{s}")).collect(),
            structure: self.structure.clone(),
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> SparseVec {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.structure.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self.structure.get(&(j, i)).map(SparseVec::negated).unwrap_or_default(),
            std::cmp::Ordering::Equal => SparseVec::new(),
        }
    }

    pub fn bracket(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if i != j {
                    out.add_scaled(&self.bracket_basis(i, j), &(a * b));
                }
            }
        }
        out
    }

    /// `ad_x` as a matrix.
    pub fn ad(&self, x: &SparseVec) -> SparseMatrix {
        SparseMatrix::from_columns(
            self.dim(),
            (0..self.dim()).map(|j| self.bracket(x, &SparseVec::basis(j))).collect(),
        )
    }

    pub fn check_jacobi(&self) -> Report {
        let mut report = Report::new("Lie Jacobi identity");
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (SparseVec::basis(i), SparseVec::basis(j), SparseVec::basis(k));
                    let mut s = self.bracket(&x, &self.bracket(&y, &z));
                    s.add_assign(&self.bracket(&y, &self.bracket(&z, &x)));
                    s.add_assign(&self.bracket(&z, &self.bracket(&x, &y)));
                    report.record(
                        s.is_zero(),
                        || format!("({}, {}, {})", self.names[i], self.names[j], self.names[k]),
                        || format!("{s:?}"),
                    );
                }
            }
        }
        report
    }

    /// Structure constants of a subalgebra with the given basis (checked closed).
    pub fn subalgebra(&self, basis: &[SparseVec], names: Vec<String>) -> Result<Self, LInftyError> {
        let sub = Subspace::new(self.dim(), basis.to_vec())?;
        let mut brackets = Vec::new();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let v = self.bracket(&basis[a], &basis[b]);
                let coords = sub
                    .coordinates(&v)
                    .ok_or_else(|| LInftyError::NotLie(format!("span not closed under [{}, {}]", names[a], names[b])))?;
                brackets.push(((a, b), coords));
            }
        }
        LieAlgebra::new(names, brackets)
    }

    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<Self, LInftyError> {
        let n = self.dim();
        let names = self.names.iter().chain(other.names.iter()).cloned().collect();
        let brackets = self
            .structure
            .iter()
            .map(|(&k, v)| (k, v.clone()))
            .chain(other.structure.iter().map(|(&(i, j), v)| ((i + n, j + n), v.remap(|k| Some(k + n)))))
            .collect::<Vec<_>>();
        LieAlgebra::new(names, brackets)
    }

    /// The algebra concentrated in degree 0.
    pub fn to_linfty(&self) -> Result<LInftyAlgebra, LInftyError> {
        let space = GradedSpace::new(self.names.iter().map(|s| (s.clone(), 0)))?;
        let brackets: BracketTable = self.structure.iter().map(|(&(i, j), v)| (vec![i, j], v.clone())).collect();
        LInftyAlgebra::from_brackets(space, &brackets)
    }
}

/// A crossed module `∂: 𝔤_{−1} → 𝔤_0` with action `D: 𝔤_0 → Der(𝔤_{−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    pub lower: LieAlgebra,
    pub upper: LieAlgebra,
    /// `upper.dim × lower.dim`.
    pub boundary: SparseMatrix,
    /// `action[x]` is `D_{e_x}` on `𝔤_{−1}`.
    pub action: Vec<SparseMatrix>,
}

impl CrossedModule {
    pub fn new(
        lower: LieAlgebra,
        upper: LieAlgebra,
        boundary: SparseMatrix,
        action: Vec<SparseMatrix>,
    ) -> Result<Self, LInftyError> {
        if boundary.nrows() != upper.dim() || boundary.ncols() != lower.dim() || action.len() != upper.dim() {
            return Err(LInftyError::CrossedModule("shape mismatch".into()));
        }
        let cm = CrossedModule { lower, upper, boundary, action };
        let report = cm.check();
        if !report.is_valid() {
            return Err(LInftyError::CrossedModule(report.to_string()));
        }
        Ok(cm)
    }

    /// `id: 𝔤 → 𝔤` with the adjoint action.
    pub fn identity(lie: &LieAlgebra) -> Self {
        let lower = lie.renamed("s");
        let action = (0..lie.dim()).map(|x| lie.ad(&SparseVec::basis(x))).collect();
        CrossedModule::new(lower, lie.clone(), SparseMatrix::identity(lie.dim()), action)
            .expect("identity crossed module")
    }

    /// Inclusion of an ideal with the restricted adjoint action.
    pub fn ideal_inclusion(upper: &LieAlgebra, ideal: &[SparseVec]) -> Result<Self, LInftyError> {
        let names = (0..ideal.len()).map(|i| format!("u{i}")).collect();
        let lower = upper.subalgebra(ideal, names)?;
        let sub = Subspace::new(upper.dim(), ideal.to_vec())?;
        let boundary = SparseMatrix::from_columns(upper.dim(), ideal.to_vec());
        let mut action = Vec::new();
        for x in 0..upper.dim() {
            let mut cols = Vec::new();
            for u in ideal {
                let v = upper.bracket(&SparseVec::basis(x), u);
                cols.push(sub.coordinates(&v).ok_or_else(|| {
                    LInftyError::CrossedModule(format!("span is not an ideal: [{}, ·] leaves it", upper.names()[x]))
                })?);
            }
            action.push(SparseMatrix::from_columns(ideal.len(), cols));
        }
        CrossedModule::new(lower, upper.clone(), boundary, action)
    }

    /// The line `ℝ·z` mapped onto the centre of the Heisenberg algebra, trivial action.
    pub fn central_heisenberg() -> Self {
        let upper = LieAlgebra::heisenberg();
        let lower = LieAlgebra::abelian("c", 1);
        let boundary = SparseMatrix::from_entries(3, 1, [(2, 0, int(1))]);
        CrossedModule::new(lower, upper, boundary, vec![SparseMatrix::zero(1, 1); 3]).expect("central crossed module")
    }

    /// Abelian `𝔤_{−1} = V` with a representation and `∂ = 0`.
    pub fn from_representation(upper: &LieAlgebra, module: Vec<SparseMatrix>) -> Result<Self, LInftyError> {
        let dim = module.first().map_or(0, SparseMatrix::nrows);
        CrossedModule::new(
            LieAlgebra::abelian("v", dim),
            upper.clone(),
            SparseMatrix::zero(upper.dim(), dim),
            module,
        )
    }

    fn d(&self, x: &SparseVec) -> SparseMatrix {
        let mut m = SparseMatrix::zero(self.lower.dim(), self.lower.dim());
        for (i, c) in x.iter() {
            m.add_scaled(&self.action[i], c);
        }
        m
    }

    /// Lie axioms, derivation and homomorphism laws, equivariance, and both Peiffer identities.
    pub fn check(&self) -> Report {
        let mut report = Report::new("crossed module");
        report.absorb(self.lower.check_jacobi());
        report.absorb(self.upper.check_jacobi());
        let (m, n) = (self.lower.dim(), self.upper.dim());
        let lower_names = self.lower.names();
        let upper_names = self.upper.names();
        for x in 0..n {
            for u in 0..m {
                for v in 0..m {
                    let (eu, ev) = (SparseVec::basis(u), SparseVec::basis(v));
                    let lhs = self.action[x].apply(&self.lower.bracket(&eu, &ev));
                    let mut rhs = self.lower.bracket(&self.action[x].apply(&eu), &ev);
                    rhs.add_assign(&self.lower.bracket(&eu, &self.action[x].apply(&ev)));
                    report.record(
                        lhs == rhs,
                        || format!("derivation D_{}[{}, {}]", upper_names[x], lower_names[u], lower_names[v]),
                        || "D_x is not a derivation".into(),
                    );
                }
            }
            for y in 0..n {
                let lhs = self.d(&self.upper.bracket_basis(x, y));
                let rhs = self.action[x].compose(&self.action[y]).difference(&self.action[y].compose(&self.action[x]));
                report.record(
                    lhs == rhs,
                    || format!("action D_[{}, {}]", upper_names[x], upper_names[y]),
                    || "D is not a Lie algebra map".into(),
                );
            }
            for u in 0..m {
                let eu = SparseVec::basis(u);
                let lhs = self.boundary.apply(&self.action[x].apply(&eu));
                let rhs = self.upper.bracket(&SparseVec::basis(x), &self.boundary.apply(&eu));
                report.record(
                    lhs == rhs,
                    || format!("∂(D_{} {})", upper_names[x], lower_names[u]),
                    || "second Peiffer identity fails".into(),
                );
            }
        }
        for u in 0..m {
            for v in 0..m {
                let (eu, ev) = (SparseVec::basis(u), SparseVec::basis(v));
                let lhs = self.d(&self.boundary.apply(&eu)).apply(&ev);
                let rhs = self.lower.bracket(&eu, &ev);
                report.record(
                    lhs == rhs,
                    || format!("D_∂{} {}", lower_names[u], lower_names[v]),
                    || "first Peiffer identity fails".into(),
                );
                let lhs = self.boundary.apply(&self.lower.bracket(&eu, &ev));
                let rhs = self.upper.bracket(&self.boundary.apply(&eu), &self.boundary.apply(&ev));
                report.record(
                    lhs == rhs,
                    || format!("∂[{}, {}]", lower_names[u], lower_names[v]),
                    || "∂ is not a Lie algebra map".into(),
                );
            }
        }
        report
    }

    /// The strict 2-term algebra `𝔤_{−1} ⊕ 𝔤_0` with `[u]^1 = ∂u`, `[x,y]^2`, `[x,u]^2 = D_x u`.
    pub fn to_linfty(&self) -> Result<LInftyAlgebra, LInftyError> {
        let m = self.lower.dim();
        let space = GradedSpace::new(
            self.lower
                .names()
                .iter()
                .map(|s| (s.clone(), -1))
                .chain(self.upper.names().iter().map(|s| (s.clone(), 0))),
        )?;
        let up = |v: &SparseVec| v.remap(|k| Some(k + m));
        let mut brackets = BracketTable::new();
        for u in 0..m {
            brackets.insert(vec![u], up(self.boundary.column(u)));
        }
        for (&(x, y), v) in self.upper.structure() {
            brackets.insert(vec![x + m, y + m], up(v));
        }
        for (x, d) in self.action.iter().enumerate() {
            for u in 0..m {
                brackets.insert(vec![x + m, u], d.column(u).clone());
            }
        }
        LInftyAlgebra::from_brackets(space, &brackets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_algebras_satisfy_jacobi() {
        for lie in [LieAlgebra::sl2(), LieAlgebra::heisenberg(), LieAlgebra::gl(3), LieAlgebra::borel2()] {
            assert!(lie.check_jacobi().is_valid());
        }
    }

    #[test]
    fn sl_is_an_ideal_of_gl() {
        let cm = CrossedModule::ideal_inclusion(&LieAlgebra::gl(2), &LieAlgebra::sl_in_gl_basis(2)).unwrap();
        assert_eq!(cm.lower.dim(), 3);
    }

    #[test]
    fn non_ideal_is_rejected() {
        // the line spanned by e is a subalgebra but not an ideal of sl2
        let err = CrossedModule::ideal_inclusion(&LieAlgebra::sl2(), &[SparseVec::basis(1)]).unwrap_err();
        assert!(matches!(err, LInftyError::CrossedModule(_)));
    }

    #[test]
    fn broken_peiffer_is_rejected() {
        let lie = LieAlgebra::sl2();
        let action = vec![SparseMatrix::zero(3, 3); 3];
        let lower = lie.renamed("s");
        assert!(CrossedModule::new(lower, lie, SparseMatrix::identity(3), action).is_err());
    }
}
