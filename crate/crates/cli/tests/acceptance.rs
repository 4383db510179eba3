//! Acceptance suite: prints one pass/fail line per criterion and exits nonzero on any failure.

#[path = "common/mod.rs"]
mod common;
#[path = "support/oracle.rs"]
mod oracle;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use linfty_core::cochain::{
    act_by, ce_differential, curvature_of_degree1, dgla_bracket, dgla_differential, product_with, random_cochain,
    reduced_differential, ruth_cochain, Cochain, CochainBasis, DglaCoefficients,
};
use linfty_core::cohomology::matrix::RationalMatrix;
use linfty_core::cohomology::{induced_map_on_cohomology, CeComplex};
use linfty_core::cwl::{
    check_cwl_cocycle, cwl_class, cwl_cocycle, equivariant_homs, independence_certificate, naturality_check,
    transported_curvature_agrees, EquivariantHom, Equivariance,
};
use linfty_core::extension::{
    bianchi_check, curvature, induced_action, skeletal_extension, variation_check, LInftyExtension, Section,
};
use linfty_core::gallery::{self, perturb_ruth, random_crossed_module, random_ruth, GalleryInstance};
use linfty_core::graded::{frac, int, GradedSpace, Scalar, SparseMatrix, SparseVec};
use linfty_core::linfty::{
    check_jacobi, check_morphism, is_quasi_iso, minimal_model_2term, symmetric_jacobiator, LInftyAlgebra,
    LInftyMorphism, LieAlgebra, Splitting, TwoTermData,
};
use linfty_core::ruth::{check_ruth, check_ruth_direct, Ruth, RuthMorphism};
use linfty_core::symcoalg::SymWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn gallery() -> &'static [GalleryInstance] {
    static CELL: std::sync::OnceLock<Vec<GalleryInstance>> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        gallery::catalogue().iter().map(|n| gallery::by_name(n).expect("gallery instance builds")).collect()
    })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every (instance, extension name, extension) in the gallery.
fn gallery_extensions() -> Vec<(&'static GalleryInstance, &'static str, &'static LInftyExtension)> {
    gallery()
        .iter()
        .flat_map(|g| g.extensions.iter().map(move |e| (g, e.name.as_str(), &e.extension)))
        .collect()
}

fn all_ok<T: Send>(items: Vec<T>, f: impl Fn(T) -> Result<(), String> + Sync + Send) -> Result<(), String> {
    let failures: Vec<String> = items.into_par_iter().filter_map(|x| f(x).err()).collect();
    match failures.first() {
        None => Ok(()),
        Some(first) => Err(format!("{} failure(s); first: {first}", failures.len())),
    }
}

// 1 ───────────────────────────────────────────────────────────────────────────

/// Adds `±1` to one structure constant of a random weight-2 word.
fn perturb_algebra(g: &LInftyAlgebra, rng: &mut ChaCha8Rng) -> Option<LInftyAlgebra> {
    let words = g.words();
    let space = g.space();
    for _ in 0..64 {
        let a = rng.gen_range(0..g.dim());
        let b = rng.gen_range(0..g.dim());
        let Ok(Some((_, w))) = words.canonicalize(&[a, b]) else { continue };
        let out_degree = words.degree(&w) + 2;
        let targets = space.indices_of_degree(out_degree);
        if targets.is_empty() {
            continue;
        }
        let t = targets[rng.gen_range(0..targets.len())];
        let mut lambda = g.lambda().clone();
        lambda.entry(w).or_default().add_at(t, &int(1));
        return LInftyAlgebra::from_symmetric(space.clone(), lambda).ok();
    }
    None
}

/// Compares `check_jacobi` with the dense `D² = 0` oracle, word by word on the output part.
fn compare_with_square_oracle(g: &LInftyAlgebra) -> Result<bool, String> {
    let deg = oracle::shifted_degrees(g);
    let table = oracle::lambda_table(g, &deg);
    let mut oracle_valid = true;
    for word in oracle::words_up_to(&deg, g.validation_weight()) {
        let square = oracle::coderivation_square(&table, &deg, &word);
        oracle_valid &= square.is_empty();
        let Ok(Some((sign, w))) = g.words().canonicalize(&word) else {
            return Err(format!("oracle word {word:?} vanishes in the library"));
        };
        let library = symmetric_jacobiator(g, &w).scaled(&int(sign.into()));
        let oracle_part: SparseVec =
            SparseVec::from_entries(square.iter().filter(|(u, _)| u.len() == 1).map(|(u, c)| (u[0], c.clone())));
        if library != oracle_part {
            return Err(format!("jacobiator at {word:?}: library {library:?}, oracle {oracle_part:?}"));
        }
    }
    let library_valid = check_jacobi(g).is_valid();
    if library_valid != oracle_valid {
        return Err(format!("check_jacobi says {library_valid}, D² oracle says {oracle_valid}"));
    }
    Ok(library_valid)
}

fn structure_equivalence() -> Verdict {
    let start = Instant::now();
    let mut algebras = Vec::new();
    for seed in 0..50 {
        let g = random_crossed_module(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let bad = perturb_algebra(&g, &mut rng(seed + 1000)).ok_or(format!("seed {seed}: cannot perturb"))?;
        algebras.push((format!("crossed module {seed}"), g, Some(true)));
        algebras.push((format!("perturbed crossed module {seed}"), bad, None));
    }
    for inst in gallery() {
        for a in &inst.algebras {
            algebras.push((format!("{}/{}", inst.name, a.name), (*a.algebra).clone(), Some(true)));
        }
    }
    let total = algebras.len();
    let verdicts: Vec<Result<bool, String>> = algebras
        .par_iter()
        .map(|(name, g, expected)| {
            let valid = compare_with_square_oracle(g).map_err(|e| format!("{name}: {e}"))?;
            if let Some(want) = expected {
                ensure!(valid == *want, "{name}: expected valid = {want}");
            }
            Ok(valid)
        })
        .collect();
    let mut invalid = 0;
    for v in verdicts {
        invalid += usize::from(!v?);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{total} algebras agree, {invalid} perturbed ones invalid"))
}

// 2 ───────────────────────────────────────────────────────────────────────────

fn three_way_validity(r: &Ruth) -> Result<bool, String> {
    let direct = check_ruth_direct(r).is_valid();
    let mc = check_ruth(r).is_valid();
    let l = DglaCoefficients::gl(r.space(), r.partial());
    let omega = curvature_of_degree1(r.algebra(), &l, &ruth_cochain(r)).map_err(|e| e.to_string())?;
    let curvature = l.check().is_valid() && omega.is_zero();
    ensure!(direct == mc && mc == curvature, "direct {direct}, Maurer-Cartan {mc}, curvature {curvature}");
    Ok(direct)
}

fn ruth_validity() -> Verdict {
    let start = Instant::now();
    let seeds: Vec<u64> = (0..50).collect();
    all_ok(seeds, |seed| {
        let r = random_ruth(seed).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(three_way_validity(&r).map_err(|e| format!("seed {seed}: {e}"))?, "seed {seed}: valid ruth rejected");
        let mut gen = rng(seed + 2000);
        for attempt in 0..20 {
            let bad = perturb_ruth(&r, &mut gen).map_err(|e| e.to_string())?;
            if check_ruth_direct(&bad).is_valid() {
                continue;
            }
            let valid = three_way_validity(&bad).map_err(|e| format!("seed {seed} perturbation {attempt}: {e}"))?;
            ensure!(!valid, "seed {seed}: perturbed ruth accepted");
            return Ok(());
        }
        Err(format!("seed {seed}: no invalid perturbation found"))
    })?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok("50 valid and 50 perturbed ruths judged alike by all three checks".into())
}

// 3 ───────────────────────────────────────────────────────────────────────────

fn random_reduced(basis: &CochainBasis, rng: &mut ChaCha8Rng) -> Cochain {
    let mut a = random_cochain(basis, rng, 6, 3);
    a.values.remove(&SymWord::unit());
    a
}

fn square_zero_and_curved_square() -> Verdict {
    let ruths: Vec<(String, Arc<Ruth>)> = gallery()
        .iter()
        .flat_map(|g| g.ruths.iter().map(move |r| (format!("{}/{}", g.name, r.name), Arc::clone(&r.ruth))))
        .collect();
    let count = ruths.len();
    all_ok(ruths, |(name, r)| {
        let complex = CeComplex::new(r);
        let lo = complex.lowest_degree();
        for p in lo..=lo + 6 {
            let dd = complex.differential(p + 1).mul(&complex.differential(p));
            ensure!(dd.is_zero(), "{name}: D² ≠ 0 on C^{p}");
        }
        Ok(())
    })?;

    let mut curved = Vec::new();
    for (inst, name, e) in gallery_extensions() {
        let mut sections: Vec<Section> = inst.sections_of(name).into_iter().map(|s| s.section.clone()).collect();
        let mut gen = rng(3);
        sections.push(Section::random(e, &mut gen, 3).map_err(|x| x.to_string())?);
        for h in sections {
            let rho = induced_action(e, &h).map_err(|x| x.to_string())?;
            let l = DglaCoefficients::gl(rho.space(), rho.partial());
            let omega = curvature_of_degree1(e.base(), &l, &ruth_cochain(&rho)).map_err(|x| x.to_string())?;
            if !omega.is_zero() {
                curved.push((format!("{}/{name}", inst.name), rho, omega));
            }
        }
    }
    ensure!(!curved.is_empty(), "no curved induced action in the gallery");
    let curved_count = curved.len();
    all_ok(curved, |(name, rho, omega)| {
        let words = rho.algebra().words();
        let lo = rho.space().min_degree().unwrap_or(0);
        let mut gen = rng(33);
        for i in 0..20 {
            let p = lo + (i % 3);
            let basis = CochainBasis::new(words, rho.space(), p);
            let alpha = random_reduced(&basis, &mut gen);
            let once = reduced_differential(&rho, &alpha).map_err(|x| x.to_string())?;
            let twice = reduced_differential(&rho, &once).map_err(|x| x.to_string())?;
            let mut expected = act_by(words, rho.space(), &omega, &alpha);
            expected.values.remove(&SymWord::unit());
            ensure!(twice == expected, "{name}: D̄²α ≠ Ω∧α for sample {i}");
        }
        Ok(())
    })?;
    Ok(format!("D² = 0 on 7 degrees of {count} ruths; D̄² = Ω∧α on 20 cochains for {curved_count} curved actions"))
}

// 4 ───────────────────────────────────────────────────────────────────────────

fn two_dim_ruth(g: &Arc<LInftyAlgebra>) -> Ruth {
    let space = GradedSpace::new([("p", 0), ("q", -1)]).expect("distinct names");
    let partial = SparseMatrix::from_entries(2, 2, [(0, 1, int(1))]);
    Ruth::new(Arc::clone(g), space, partial, BTreeMap::new()).expect("degree-correct")
}

fn sign(p: i32) -> Scalar {
    if p.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn leibniz_and_dgla() -> Verdict {
    let seeds: Vec<u64> = (0..10).collect();
    all_ok(seeds, |seed| {
        let g = Arc::new(random_crossed_module(seed + 300).map_err(|e| e.to_string())?);
        let words = g.words();
        let r1 = Ruth::adjoint(Arc::clone(&g));
        let r2 = two_dim_ruth(&g);
        let r3 = Ruth::tensor(&r1, &r2).map_err(|e| e.to_string())?;
        let id = SparseMatrix::identity(r1.space().dim() * r2.space().dim());
        let dim2 = r2.space().dim();
        let mut gen = rng(seed + 400);
        for _ in 0..5 {
            let (p, q) = (gen.gen_range(-2..=1), gen.gen_range(-1..=1));
            let a = random_cochain(&CochainBasis::new(words, r1.space(), p), &mut gen, 4, 3);
            let b = random_cochain(&CochainBasis::new(words, r2.space(), q), &mut gen, 4, 3);
            let left = ce_differential(&r3, &product_with(words, &id, dim2, &a, &b));
            let mut right = product_with(words, &id, dim2, &ce_differential(&r1, &a), &b);
            right.add_scaled(&product_with(words, &id, dim2, &a, &ce_differential(&r2, &b)), &sign(p));
            ensure!(left == right, "seed {seed}: Leibniz fails for degrees ({p}, {q})");
        }

        let l = DglaCoefficients::gl(r1.space(), r1.partial());
        ensure!(l.check().is_valid(), "seed {seed}: 𝔤𝔩(V) is not a dgla");
        let end = r1.space().endomorphisms();
        let pick = |gen: &mut ChaCha8Rng| {
            let p = gen.gen_range(-1..=1);
            random_cochain(&CochainBasis::new(words, &end, p), gen, 3, 2)
        };
        for _ in 0..3 {
            let (a, b, c) = (pick(&mut gen), pick(&mut gen), pick(&mut gen));
            let (pa, pb) = (a.degree, b.degree);
            let br = |x: &Cochain, y: &Cochain| dgla_bracket(&g, &l, x, y);
            let d = |x: &Cochain| dgla_differential(&g, &l, x);
            let skew = br(&b, &a).scaled(&-sign(pa * pb));
            ensure!(br(&a, &b) == skew, "seed {seed}: bracket is not graded skew-symmetric");
            let jacobi_left = br(&a, &br(&b, &c));
            let mut jacobi_right = br(&br(&a, &b), &c);
            jacobi_right.add_scaled(&br(&b, &br(&a, &c)), &sign(pa * pb));
            ensure!(jacobi_left == jacobi_right, "seed {seed}: graded Jacobi fails");
            let mut leibniz = br(&d(&a), &b);
            leibniz.add_scaled(&br(&a, &d(&b)), &sign(pa));
            ensure!(d(&br(&a, &b)) == leibniz, "seed {seed}: differential is not a derivation");
            ensure!(d(&d(&a)).is_zero(), "seed {seed}: differential does not square to zero");
        }
        Ok(())
    })?;
    Ok("Leibniz rule and dgla axioms on 10 random algebras".into())
}

// 5, 6 ────────────────────────────────────────────────────────────────────────

fn bianchi() -> Verdict {
    let exts = gallery_extensions();
    let n = exts.len();
    all_ok(exts, |(inst, name, e)| {
        let mut gen = rng(5);
        for i in 0..10 {
            let h = Section::random(e, &mut gen, 4).map_err(|x| x.to_string())?;
            let report = bianchi_check(e, &h).map_err(|x| x.to_string())?;
            ensure!(report.is_valid(), "{}/{name} section {i}: {report}", inst.name);
        }
        Ok(())
    })?;
    Ok(format!("D_ρK_h = 0 for 10 random sections of each of {n} extensions"))
}

fn variation() -> Verdict {
    let exts = gallery_extensions();
    let n = exts.len();
    all_ok(exts, |(inst, name, e)| {
        let mut gen = rng(6);
        for i in 0..10 {
            let h0 = Section::random(e, &mut gen, 3).map_err(|x| x.to_string())?;
            let h1 = Section::random(e, &mut gen, 3).map_err(|x| x.to_string())?;
            let report = variation_check(e, &h0, &h1).map_err(|x| x.to_string())?;
            ensure!(report.is_valid(), "{}/{name} pair {i}: {report}", inst.name);
        }
        Ok(())
    })?;
    Ok(format!("dK/dt = D_ρα as polynomials in t for 10 section pairs of each of {n} extensions"))
}

// 7 ───────────────────────────────────────────────────────────────────────────

fn degree_bounds(space: &GradedSpace) -> (i32, i32) {
    (space.min_degree().unwrap_or(0), space.max_degree().unwrap_or(0))
}

/// Cocycles are checked under all five random sections; classes are compared across the first three.
const CERTIFIED_SECTIONS: usize = 3;

fn cwl_certificates() -> Verdict {
    let mut jobs = Vec::new();
    for (inst, name, e) in gallery_extensions() {
        let before = jobs.len();
        for r in inst.ruths.iter().filter(|r| **r.ruth.algebra() == **e.base()) {
            jobs.push((inst, name, e, r.name.clone(), Arc::clone(&r.ruth)));
        }
        if jobs.len() == before {
            let line = Arc::new(Ruth::trivial_line(Arc::clone(e.base())));
            jobs.push((inst, name, e, "trivial line".into(), line));
        }
    }
    let pairs = jobs.len();
    let maps = std::sync::atomic::AtomicUsize::new(0);
    all_ok(jobs, |(inst, name, e, ruth_name, ruth)| {
        let label = format!("{}/{name} in {ruth_name}", inst.name);
        let complex = CeComplex::new(Arc::clone(&ruth));
        let mut gen = rng(7);
        let sections = (0..5)
            .map(|_| Section::random(e, &mut gen, 3).map_err(|x| x.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let (vlo, vhi) = degree_bounds(ruth.space());
        let (nlo, nhi) = degree_bounds(e.kernel().shifted());
        for k in 1..=2usize {
            let kk = k as i32;
            for q in (vlo - kk * nhi)..=(vhi - kk * nlo) {
                let fs = equivariant_homs(e, &ruth, k, q, Equivariance::Total).map_err(|x| x.to_string())?;
                for f in fs {
                    maps.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let cocycles = sections
                        .iter()
                        .map(|h| cwl_cocycle(e, &f, h).map_err(|x| x.to_string()))
                        .collect::<Result<Vec<_>, _>>()?;
                    for (i, z) in cocycles.iter().enumerate() {
                        ensure!(check_cwl_cocycle(&ruth, z).is_valid(), "{label} k={k} q={q}: section {i} not a cocycle");
                    }
                    for i in 0..CERTIFIED_SECTIONS {
                        for j in i + 1..CERTIFIED_SECTIONS {
                            let beta = independence_certificate(e, &complex, &f, &sections[i], &sections[j])
                                .map_err(|x| format!("{label} k={k} q={q} sections {i},{j}: {x}"))?;
                            let diff = cocycles[j].difference(&cocycles[i]);
                            ensure!(
                                ce_differential(&ruth, &beta) == diff,
                                "{label} k={k} q={q}: certificate for sections {i},{j} fails recheck"
                            );
                        }
                    }
                }
            }
        }
        Ok(())
    })?;
    let maps = maps.into_inner();
    ensure!(maps > 0, "no equivariant maps found");
    Ok(format!("{maps} equivariant maps over {pairs} (extension, ruth) pairs; cocycles under 5 random sections, certificates for all pairs among 3"))
}

// 8 ───────────────────────────────────────────────────────────────────────────

/// A cochain on odd letters as `ascending subset → vector`, for the dense oracle.
fn exterior_values(g: &LInftyAlgebra, c: &Cochain) -> BTreeMap<Vec<usize>, Vec<(usize, Scalar)>> {
    let deg = oracle::shifted_degrees(g);
    c.values
        .iter()
        .filter_map(|(w, v)| {
            let (s, word) = oracle::normalize(&w.to_vec(), &deg)?;
            Some((word, v.iter().map(|(i, x)| (i, x * int(s))).collect()))
        })
        .collect()
}

fn structure_of(lie: &LieAlgebra) -> BTreeMap<(usize, usize), Vec<(usize, Scalar)>> {
    lie.structure().iter().map(|(&k, v)| (k, v.iter().map(|(i, c)| (i, c.clone())).collect())).collect()
}

fn classical_recovery() -> Verdict {
    // Heisenberg: the class of id∘K generates H¹ of the plane with coefficients in ℝ[1]
    let heis = gallery::heisenberg().map_err(|e| e.to_string())?;
    let e = heis.extension("central").map_err(|e| e.to_string())?;
    let r = heis.ruth("trivial").map_err(|e| e.to_string())?;
    let complex = CeComplex::new(Arc::clone(r));
    let class = cwl_class(e, &complex, &EquivariantHom::identity(1)).map_err(|x| x.to_string())?;
    ensure!(complex.cohomology(1).dim() == 1, "H¹ is not one-dimensional");
    ensure!(class.coordinates == SparseVec::basis(0), "cw(id) has coordinates {:?}", class.coordinates);
    let plane = oracle::LieModule::trivial(2, &BTreeMap::new(), 1);
    let dense_dims = plane.cohomology_dims(2);
    let library_dims: Vec<usize> = (-1..=1).map(|p| complex.cohomology(p).dim()).collect();
    ensure!(dense_dims == library_dims, "plane: dense {dense_dims:?}, library {library_dims:?}");
    let dense = plane.dense_cochain(2, &exterior_values(e.base(), &class.representative));
    ensure!(!plane.is_exact(2, &dense), "dense oracle finds the Heisenberg class exact");

    // sl_2 with trivial coefficients
    let sl2 = LieAlgebra::sl2();
    let g = Arc::new(sl2.to_linfty().map_err(|e| e.to_string())?);
    let complex = CeComplex::new(Arc::new(Ruth::trivial_line(Arc::clone(&g))));
    let library: Vec<usize> = (0..=3).map(|p| complex.cohomology(p).dim()).collect();
    let dense = oracle::LieModule::trivial(3, &structure_of(&sl2), 1).cohomology_dims(3);
    ensure!(library == [1, 0, 0, 1] && dense == library, "sl2: library {library:?}, dense {dense:?}");

    // skeletal string: nonzero exactly when the level is
    let module = oracle::LieModule::trivial(3, &structure_of(&sl2), 1);
    for level in [int(1), int(0), frac(3, 2), int(-2)] {
        let inst = gallery::skeletal_string(&level).map_err(|e| e.to_string())?;
        let e = inst.extension("skeleton").map_err(|e| e.to_string())?;
        let r = inst.ruth("action").map_err(|e| e.to_string())?;
        ensure!(**e.base() == *g, "skeletal base is not sl2");
        ensure!(r.components().is_empty() && r.partial().is_zero(), "action on the kernel is not trivial");
        let complex = CeComplex::new(Arc::clone(r));
        let class = cwl_class(e, &complex, &EquivariantHom::identity(1)).map_err(|x| x.to_string())?;
        let dense = module.dense_cochain(3, &exterior_values(e.base(), &class.representative));
        let zero = level == int(0);
        ensure!(class.is_zero() == zero, "level {level}: library class zero = {}", class.is_zero());
        ensure!(module.is_exact(3, &dense) == zero, "level {level}: dense oracle disagrees");
    }
    Ok("Heisenberg cw(id) = generator [1]; sl2 dims (1,0,0,1); skeletal class vanishes iff level 0".into())
}

// 9 ───────────────────────────────────────────────────────────────────────────

fn random_strict_algebras() -> Result<Vec<(String, Arc<LInftyAlgebra>)>, String> {
    let mut out = Vec::new();
    for seed in 0..10u64 {
        let inst = gallery::random_strict_2term(seed).map_err(|e| e.to_string())?;
        out.push((inst.name.clone(), Arc::clone(inst.algebra("strict").map_err(|e| e.to_string())?)));
    }
    for seed in 500..510u64 {
        out.push((format!("crossed module {seed}"), Arc::new(random_crossed_module(seed).map_err(|e| e.to_string())?)));
    }
    Ok(out)
}

/// θ as a dense 3-cochain of the cokernel with values in the kernel, via the skew brackets.
fn theta_is_classical_cocycle(model: &linfty_core::linfty::MinimalModel) -> bool {
    let (c, k) = (model.coker_dim, model.kernel_dim);
    let m = &model.algebra;
    let mut bracket = vec![vec![vec![int(0); c]; c]; c];
    for a in 0..c {
        for b in 0..c {
            for (i, x) in m.skew_bracket(&[a, b]).iter() {
                bracket[a][b][i] = x.clone();
            }
        }
    }
    let mut action = vec![vec![vec![int(0); k]; k]; c];
    for a in 0..c {
        for j in 0..k {
            for (i, x) in m.skew_bracket(&[a, c + j]).iter() {
                action[a][i - c][j] = x.clone();
            }
        }
    }
    let module = oracle::LieModule { dim: c, bracket, action, module_dim: k };
    let mut values = BTreeMap::new();
    for a in 0..c {
        for b in a + 1..c {
            for d in b + 1..c {
                let v: Vec<(usize, Scalar)> = m.skew_bracket(&[a, b, d]).iter().map(|(i, x)| (i - c, x.clone())).collect();
                values.insert(vec![a, b, d], v);
            }
        }
    }
    let theta = module.dense_cochain(3, &values);
    let d = module.differential(3);
    d.iter().all(|row| row.iter().zip(&theta).map(|(x, y)| x * y).sum::<Scalar>() == int(0))
}

fn minimal_models() -> Verdict {
    let algebras = random_strict_algebras()?;
    let n = algebras.len();
    all_ok(algebras, |(name, g)| {
        let data = TwoTermData::new(&g).map_err(|e| format!("{name}: {e}"))?;
        let model = minimal_model_2term(&g, &data, &Splitting::default_for(&data)).map_err(|e| format!("{name}: {e}"))?;
        ensure!(check_morphism(&model.morphism).is_valid(), "{name}: F is not a morphism");
        ensure!(is_quasi_iso(&model.morphism).is_quasi_iso(), "{name}: F is not a quasi-isomorphism");

        let e = skeletal_extension(Arc::clone(&model.algebra)).map_err(|x| x.to_string())?;
        let h = Section::default_for(&e).map_err(|x| x.to_string())?;
        let action = Arc::new(induced_action(&e, &h).map_err(|x| x.to_string())?);
        let theta = curvature(&e, &h).map_err(|x| x.to_string())?;
        ensure!(ce_differential(&action, &theta).is_zero(), "{name}: θ is not a cocycle");
        ensure!(theta_is_classical_cocycle(&model), "{name}: dense oracle rejects θ");

        let complex = CeComplex::new(Arc::clone(&action));
        let mut gen = rng(9);
        for i in 0..2 {
            let other = minimal_model_2term(&g, &data, &Splitting::random(&data, &mut gen)).map_err(|x| x.to_string())?;
            let e2 = skeletal_extension(Arc::clone(&other.algebra)).map_err(|x| x.to_string())?;
            let h2 = Section::default_for(&e2).map_err(|x| x.to_string())?;
            ensure!(induced_action(&e2, &h2).map_err(|x| x.to_string())? == *action, "{name}: splitting {i} changes the action");
            let theta2 = curvature(&e2, &h2).map_err(|x| x.to_string())?;
            let beta = complex
                .same_class(&theta2, &theta)
                .map_err(|x| x.to_string())?
                .ok_or(format!("{name}: splitting {i} changes the class of θ"))?;
            ensure!(ce_differential(&action, &beta) == theta2.difference(&theta), "{name}: certificate fails recheck");
        }

        let trivial = Arc::new(Ruth::trivial_line(Arc::clone(&g)));
        let pulled = Arc::new(Ruth::pullback(&model.morphism, &trivial).map_err(|x| x.to_string())?);
        let rm = RuthMorphism::new(model.morphism.clone(), SparseMatrix::identity(1), Arc::clone(&pulled), Arc::clone(&trivial))
            .map_err(|x| x.to_string())?;
        let (source, target) = (CeComplex::new(pulled), CeComplex::new(trivial));
        for p in 0..=3 {
            let map = induced_map_on_cohomology(&rm, &source, &target, p).map_err(|x| x.to_string())?;
            let rank = RationalMatrix::from_sparse(&map).rank();
            ensure!(map.nrows() == map.ncols() && rank == map.nrows(), "{name}: F* is not bijective on H^{p}");
        }
        Ok(())
    })?;
    Ok(format!("{n} strict algebras: F valid quasi-iso, θ cocycle, class independent of 3 splittings, F* iso on H^0..3"))
}

// 10 ──────────────────────────────────────────────────────────────────────────

fn naturality() -> Verdict {
    let heis = gallery::heisenberg().map_err(|e| e.to_string())?;
    let e = heis.extension("central").map_err(|e| e.to_string())?;
    let mut scenarios: Vec<(String, RuthMorphism, &LInftyExtension, Vec<Section>)> = Vec::new();
    let mut gen = rng(10);
    for m in &heis.ruth_morphisms {
        let mut sections: Vec<Section> = heis.sections_of("central").into_iter().map(|s| s.section.clone()).collect();
        sections.push(Section::random(e, &mut gen, 3).map_err(|x| x.to_string())?);
        scenarios.push((format!("heisenberg {}", m.name), m.value.clone(), e, sections));
    }
    let ab = gallery::abelian_extension_default().map_err(|e| e.to_string())?;
    let twisted = ab.extension("twisted").map_err(|e| e.to_string())?;
    let module = Arc::clone(ab.ruth("module").map_err(|e| e.to_string())?);
    let identity = LInftyMorphism::identity(Arc::clone(module.algebra()));
    let scaled = RuthMorphism::new(identity, SparseMatrix::identity(module.space().dim()).scaled(&int(2)), Arc::clone(&module), module)
        .map_err(|x| x.to_string())?;
    let sections = vec![
        Section::default_for(twisted).map_err(|x| x.to_string())?,
        Section::random(twisted, &mut gen, 3).map_err(|x| x.to_string())?,
    ];
    scenarios.push(("abelian extension, doubled coefficients".into(), scaled, twisted, sections));
    let count = scenarios.len();
    ensure!(count == 5, "expected 5 scenarios, found {count}");
    for (name, m, e, sections) in &scenarios {
        let fs = equivariant_homs(e, &m.target, 1, 0, Equivariance::Total).map_err(|x| x.to_string())?;
        ensure!(!fs.is_empty(), "{name}: no equivariant maps");
        for h in sections {
            ensure!(
                transported_curvature_agrees(&m.morphism, e, h).map_err(|x| x.to_string())?,
                "{name}: T*K_h differs from the transported curvature"
            );
            for f in &fs {
                let n = naturality_check(m, e, f, h).map_err(|x| format!("{name}: {x}"))?;
                let beta = n.certificate.as_ref().ok_or(format!("{name}: T*∘cw ≠ cw∘t♯"))?;
                ensure!(
                    ce_differential(&m.source, beta) == n.pulled_back.difference(&n.transported),
                    "{name}: certificate fails recheck"
                );
            }
        }
    }
    Ok(format!("T*∘cw = cw∘t♯ with rechecked certificates in {count} scenarios"))
}

// 11 ──────────────────────────────────────────────────────────────────────────

fn cli_determinism() -> Verdict {
    let names = gallery::catalogue();
    let problems: Vec<String> = names.par_iter().flat_map(|n| common::check_instance(n, false)).collect();
    ensure!(problems.is_empty(), "{}", problems.join("; "));
    Ok(format!("{} golden documents and reports byte-identical; round trips exact", names.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("structure equivalence", structure_equivalence),
        ("ruth validity equivalence", ruth_validity),
        ("D² and curved D̄²", square_zero_and_curved_square),
        ("Leibniz and dgla axioms", leibniz_and_dgla),
        ("Bianchi identity", bianchi),
        ("curvature variation", variation),
        ("CWL cocycles and independence", cwl_certificates),
        ("classical recovery", classical_recovery),
        ("minimal models", minimal_models),
        ("naturality", naturality),
        ("CLI determinism", cli_determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} {title}: pass ({detail}; {secs:.1} s)", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} {title}: FAIL ({reason}; {secs:.1} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1} s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
