//! Executes the queries of a document and assembles the report.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use linfty_core::cochain::{ce_differential, Cochain};
use linfty_core::cohomology::matrix::RationalMatrix;
use linfty_core::cohomology::{induced_map_on_cohomology, CeComplex, CohomologyClass};
use linfty_core::cwl::{
    check_cwl_cocycle, check_equivariance, cwl_cocycle, equivariant_homs, independence_certificate, naturality_check,
    EquivariantHom, Equivariance,
};
use linfty_core::extension::{bianchi_check, check_extension, curvature, induced_action, skeletal_extension, Section};
use linfty_core::gallery::{GalleryError, GalleryInstance};
use linfty_core::graded::{format_scalar, GradedSpace, Scalar, SparseMatrix, SparseVec};
use linfty_core::linfty::{
    check_jacobi_up_to, check_morphism, check_square_zero, is_quasi_iso, minimal_model_2term, LInftyAlgebra, Splitting,
    TwoTermData,
};
use linfty_core::report::Report;
use linfty_core::ruth::{check_ruth, check_ruth_direct, Ruth};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::document::{Document, Table};
use crate::query::{Expect, FSpec, Query, QuerySpec};

/// Witnesses shown per failed check in the text report.
const SHOWN_WITNESSES: usize = 5;
/// Entry bound for random sections used in certificates.
const SECTION_BOUND: i64 = 3;
const DEFAULT_SPLITTINGS: usize = 2;
/// Degrees reported by `cohomology` without an explicit range: the lowest one and the next three.
const DEFAULT_DEGREE_SPAN: i32 = 3;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Overrides the Jacobi validation weight.
    pub max_weight: Option<usize>,
    /// Cohomology degree range for queries that give none.
    pub degrees: Option<(i32, i32)>,
    /// Seed for random sections and splittings.
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct QueryResult {
    pub index: usize,
    pub command: &'static str,
    pub subject: String,
    pub status: Status,
    pub facts: Expect,
    /// Expected fields that were not met: (field, expected, found).
    pub mismatches: Vec<(&'static str, String, String)>,
    pub lines: Vec<String>,
    pub data: Map<String, Value>,
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub document: String,
    pub results: Vec<QueryResult>,
}

impl RunReport {
    fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    /// 0 when everything passed, 2 when a query could not be evaluated, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.count(Status::Error) > 0 {
            2
        } else if self.count(Status::Fail) > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "document {}", self.document);
        for r in &self.results {
            let _ = writeln!(out, "[{}] {} {}: {}", r.index, r.command, r.subject, r.status.as_str());
            for line in &r.lines {
                let _ = writeln!(out, "    {line}");
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "    error: {e}");
            }
            for (field, want, got) in &r.mismatches {
                let _ = writeln!(out, "    expected {field} = {want}, found {got}");
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} errors",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Error)
        );
        out
    }

    pub fn to_json(&self) -> String {
        let results: Vec<Value> = self
            .results
            .iter()
            .map(|r| {
                let mut obj = Map::new();
                obj.insert("index".into(), json!(r.index));
                obj.insert("command".into(), json!(r.command));
                obj.insert("subject".into(), json!(r.subject));
                obj.insert("status".into(), json!(r.status.as_str()));
                obj.insert("facts".into(), serde_json::to_value(&r.facts).unwrap_or(Value::Null));
                if !r.mismatches.is_empty() {
                    let m: Vec<Value> = r
                        .mismatches
                        .iter()
                        .map(|(f, w, g)| json!({"field": f, "expected": w, "found": g}))
                        .collect();
                    obj.insert("mismatches".into(), Value::Array(m));
                }
                if let Some(e) = &r.error {
                    obj.insert("error".into(), json!(e));
                }
                obj.insert("data".into(), Value::Object(r.data.clone()));
                Value::Object(obj)
            })
            .collect();
        let report = json!({
            "format": crate::document::FORMAT,
            "document": self.document,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "error": self.count(Status::Error),
            },
            "results": results,
        });
        let mut text = serde_json::to_string_pretty(&report).unwrap_or_default();
        text.push('\n');
        text
    }
}

/// Runs every query, possibly in parallel; results keep the document order.
pub fn run(doc: &Document, opts: &RunOptions) -> RunReport {
    let results = doc
        .queries
        .par_iter()
        .enumerate()
        .map(|(i, q)| run_query(&doc.objects, i, q, opts))
        .collect();
    RunReport { document: doc.objects.name.clone(), results }
}

#[derive(Default)]
struct Outcome {
    ok: bool,
    facts: Expect,
    lines: Vec<String>,
    data: Map<String, Value>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, ..Default::default() }
    }

    fn check(&mut self, key: &str, r: &Report) -> bool {
        self.ok &= r.is_valid();
        self.lines.extend(report_lines(r));
        self.data.insert(key.into(), report_json(r));
        r.is_valid()
    }

    fn put(&mut self, key: &str, v: Value) {
        self.data.insert(key.into(), v);
    }
}

fn run_query(g: &GalleryInstance, index: usize, query: &QuerySpec, opts: &RunOptions) -> QueryResult {
    let q = &query.query;
    let outcome = evaluate(g, q, opts);
    let mut result = QueryResult {
        index,
        command: q.command(),
        subject: q.subject(),
        status: Status::Error,
        facts: Expect::default(),
        mismatches: Vec::new(),
        lines: Vec::new(),
        data: Map::new(),
        error: None,
    };
    match outcome {
        Ok(o) => {
            result.mismatches = query.expect.as_ref().map(|e| e.mismatches(&o.facts)).unwrap_or_default();
            result.status = if o.ok && result.mismatches.is_empty() { Status::Pass } else { Status::Fail };
            result.facts = o.facts;
            result.lines = o.lines;
            result.data = o.data;
        }
        Err(e) => result.error = Some(e),
    }
    result
}

type Eval = Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn gerr(e: GalleryError) -> String {
    e.to_string()
}

fn evaluate(g: &GalleryInstance, q: &Query, opts: &RunOptions) -> Eval {
    match q {
        Query::ValidateAlgebra { algebra, max_weight } => {
            let a = g.algebra(algebra).map_err(gerr)?;
            let weight = max_weight.or(opts.max_weight).unwrap_or_else(|| a.validation_weight());
            validate_algebra(a, weight)
        }
        Query::ValidateRuth { ruth } => {
            let r = g.ruth(ruth).map_err(gerr)?;
            let mut o = Outcome::new();
            let mc = check_ruth(r);
            let direct = check_ruth_direct(r);
            o.check("maurer_cartan", &mc);
            o.check("direct", &direct);
            o.facts.valid = Some(mc.is_valid() && direct.is_valid());
            Ok(o)
        }
        Query::ValidateExtension { extension } => {
            let e = g.extension(extension).map_err(gerr)?;
            let mut o = Outcome::new();
            let valid = o.check("extension", &check_extension(e));
            o.facts.valid = Some(valid);
            Ok(o)
        }
        Query::ValidateMorphism { morphism } => {
            let m = g.morphism(morphism).map_err(gerr)?;
            let mut o = Outcome::new();
            let valid = o.check("morphism", &check_morphism(m));
            let qi = is_quasi_iso(m);
            let mut per_degree = Map::new();
            for (d, (s, t, r)) in &qi.per_degree {
                o.lines.push(format!("H_{d}: source {s}, target {t}, rank {r}"));
                per_degree.insert(d.to_string(), json!({"source": s, "target": t, "rank": r}));
            }
            o.put("homology", Value::Object(per_degree));
            o.facts.valid = Some(valid);
            o.facts.iso = Some(qi.is_quasi_iso());
            Ok(o)
        }
        Query::Cohomology { ruth, degrees } => {
            let r = g.ruth(ruth).map_err(gerr)?;
            let complex = CeComplex::new(Arc::clone(r));
            let lo = complex.lowest_degree();
            let [a, b] = degrees.or(opts.degrees.map(|(a, b)| [a, b])).unwrap_or([lo, lo + DEFAULT_DEGREE_SPAN]);
            cohomology(&complex, a, b)
        }
        Query::Curvature { extension, section } => {
            let e = g.extension(extension).map_err(gerr)?;
            let h = g.section(extension, section).map_err(gerr)?;
            let k = curvature(e, h).map_err(err)?;
            let words = e.base().words();
            let weights: BTreeSet<usize> =
                k.values.iter().filter(|(_, v)| !v.is_zero()).map(|(w, _)| w.weight()).collect();
            let mut o = Outcome::new();
            let flat = k.is_zero();
            let morphism = h.is_morphism(e);
            o.lines.push(format!("K = {}", k.display(words, e.kernel().shifted())));
            o.lines.push(format!("section is a morphism: {morphism}"));
            if flat != morphism {
                o.ok = false;
                o.lines.push("flatness and the morphism property disagree".into());
            }
            o.put("curvature", cochain_json(e.base(), e.kernel().shifted(), &k));
            o.put("section_is_morphism", json!(morphism));
            o.facts.weights = Some(weights.into_iter().collect());
            o.facts.flat = Some(flat);
            Ok(o)
        }
        Query::Bianchi { extension, section } => {
            let e = g.extension(extension).map_err(gerr)?;
            let h = g.section(extension, section).map_err(gerr)?;
            let mut o = Outcome::new();
            let valid = o.check("bianchi", &bianchi_check(e, h).map_err(err)?);
            o.facts.valid = Some(valid);
            Ok(o)
        }
        Query::Cwl { extension, ruth, k, degree, f, section } => {
            let e = g.extension(extension).map_err(gerr)?;
            let r = g.ruth(ruth).map_err(gerr)?;
            let h = match section {
                Some(s) => g.section(extension, s).map_err(gerr)?.clone(),
                None => Section::default_for(e).map_err(err)?,
            };
            cwl(e, r, *k, *degree, f.as_ref(), &h, opts)
        }
        Query::MinimalModel { algebra, splittings } => {
            let a = g.algebra(algebra).map_err(gerr)?;
            minimal_model(a, splittings.unwrap_or(DEFAULT_SPLITTINGS), opts)
        }
        Query::Naturality { ruth_morphism, extension, section, f } => {
            let m = g.ruth_morphism(ruth_morphism).map_err(gerr)?;
            let e = g.extension(extension).map_err(gerr)?;
            let h = g.section(extension, section).map_err(gerr)?;
            let f = match f {
                Some(given) => resolve_f(e, m.target.space(), None, 0, given)?,
                None => resolve_f(e, m.target.space(), Some(1), 0, &FSpec::Identity(crate::query::IdentityTag::Identity))?,
            };
            let n = naturality_check(m, e, &f, h).map_err(err)?;
            let alg = m.source.algebra();
            let space = m.source.space();
            let mut o = Outcome::new();
            o.put("pulled_back", cochain_json(alg, space, &n.pulled_back));
            o.put("transported", cochain_json(alg, space, &n.transported));
            o.lines.push(format!("T*(f∘K) = {}", n.pulled_back.display(alg.words(), space)));
            o.lines.push(format!("(t∘f)∘K' = {}", n.transported.display(alg.words(), space)));
            match &n.certificate {
                Some(beta) => {
                    let diff = n.pulled_back.difference(&n.transported);
                    let rechecked = ce_differential(&m.source, beta) == diff;
                    o.ok &= rechecked;
                    o.lines.push(format!("certificate β = {}", beta.display(alg.words(), space)));
                    o.lines.push(format!("Dβ = T*(f∘K) − (t∘f)∘K': {rechecked}"));
                    o.put("certificate", cochain_json(alg, space, beta));
                }
                None => {
                    o.ok = false;
                    o.lines.push("classes differ".into());
                }
            }
            o.facts.commutes = Some(n.commutes());
            Ok(o)
        }
        Query::InducedMap { ruth_morphism, degrees } => {
            let m = g.ruth_morphism(ruth_morphism).map_err(gerr)?;
            let source = CeComplex::new(Arc::clone(&m.source));
            let target = CeComplex::new(Arc::clone(&m.target));
            let mut o = Outcome::new();
            let mut iso = true;
            let mut maps = Map::new();
            for p in degrees[0]..=degrees[1] {
                let map = induced_map_on_cohomology(m, &source, &target, p).map_err(err)?;
                let rank = RationalMatrix::from_sparse(&map).rank();
                let bijective = map.nrows() == map.ncols() && rank == map.nrows();
                iso &= bijective;
                o.lines.push(format!(
                    "H^{p}: {} → {}, rank {rank}{}",
                    map.ncols(),
                    map.nrows(),
                    if bijective { ", isomorphism" } else { "" }
                ));
                maps.insert(p.to_string(), dense_matrix_json(&map));
            }
            o.put("maps", Value::Object(maps));
            o.facts.iso = Some(iso);
            Ok(o)
        }
    }
}

fn validate_algebra(a: &LInftyAlgebra, weight: usize) -> Eval {
    let mut o = Outcome::new();
    let jacobi = check_jacobi_up_to(a, weight);
    let square = check_square_zero(a, weight);
    o.lines.push(format!("checked up to weight {weight}"));
    o.check("jacobi", &jacobi);
    o.check("square_zero", &square);
    if jacobi.failing_slots() != square.failing_slots() {
        o.ok = false;
        o.lines.push("the two checks disagree on the failing words".into());
    }
    o.put("max_weight", json!(weight));
    o.facts.valid = Some(jacobi.is_valid() && square.is_valid());
    Ok(o)
}

fn cohomology(complex: &CeComplex, a: i32, b: i32) -> Eval {
    let r = complex.ruth();
    let mut o = Outcome::new();
    let mut dims = Vec::new();
    let mut groups = Map::new();
    for p in a..=b {
        let h = complex.cohomology(p);
        dims.push(h.dim());
        o.lines.push(format!(
            "H^{p}: dim {} (cochains {}, cocycles {}, coboundaries {})",
            h.dim(),
            complex.basis(p).dim(),
            h.cocycle_dim,
            h.coboundary_dim
        ));
        for (i, rep) in h.representatives.iter().enumerate() {
            o.lines.push(format!("  [{i}] {}", rep.display(r.algebra().words(), r.space())));
        }
        let reps: Vec<Value> = h.representatives.iter().map(|c| cochain_json(r.algebra(), r.space(), c)).collect();
        groups.insert(
            p.to_string(),
            json!({
                "dim": h.dim(),
                "cochains": complex.basis(p).dim(),
                "cocycles": h.cocycle_dim,
                "coboundaries": h.coboundary_dim,
                "representatives": reps,
            }),
        );
    }
    o.put("degrees", json!([a, b]));
    o.put("groups", Value::Object(groups));
    o.facts.dims = Some(dims);
    Ok(o)
}

/// Turns an `FSpec` into a matrix on `n[1]^{⊗k}`; a table without `k` tries small tensor powers.
fn resolve_f(
    e: &linfty_core::extension::LInftyExtension,
    target: &GradedSpace,
    k: Option<usize>,
    degree: i32,
    given: &FSpec,
) -> Result<EquivariantHom, String> {
    let n = e.kernel().shifted();
    match given {
        FSpec::Identity(_) => {
            if k.unwrap_or(1) != 1 || degree != 0 || n.dim() != target.dim() {
                return Err("f = identity needs k = 1, degree 0 and coefficients of the kernel's dimension".into());
            }
            Ok(EquivariantHom::identity(n.dim()))
        }
        FSpec::Table(t) => {
            let candidates: Vec<usize> = match k {
                Some(k) => vec![k],
                None => (1..=4).collect(),
            };
            for k in candidates {
                let source = n.tensor_power(k);
                if t.keys().all(|name| source.index_of(name).is_some()) {
                    let matrix = table_matrix(&source, target, t)?;
                    return Ok(EquivariantHom { k, degree, matrix });
                }
            }
            Err("f names inputs that are not tensor basis elements of the kernel".into())
        }
    }
}

fn table_matrix(source: &GradedSpace, target: &GradedSpace, t: &Table) -> Result<SparseMatrix, String> {
    let mut m = SparseMatrix::zero(target.dim(), source.dim());
    for (input, image) in t {
        let j = source.index_of(input).ok_or_else(|| format!("unknown input {input:?} for f"))?;
        for (name, c) in image {
            let i = target.index_of(name).ok_or_else(|| format!("unknown output {name:?} for f"))?;
            m.add_entry(i, j, &c.0);
        }
    }
    Ok(m)
}

fn cwl(
    e: &linfty_core::extension::LInftyExtension,
    r: &Arc<Ruth>,
    k: usize,
    degree: i32,
    f: Option<&FSpec>,
    h: &Section,
    opts: &RunOptions,
) -> Eval {
    let mut o = Outcome::new();
    let (fs, given) = match f {
        Some(given) => (vec![resolve_f(e, r.space(), Some(k), degree, given)?], true),
        None => (equivariant_homs(e, r, k, degree, Equivariance::Total).map_err(err)?, false),
    };
    let complex = CeComplex::new(Arc::clone(r));
    let p = i32::try_from(k).map_err(err)? + degree;
    let h_dim = complex.cohomology(p).dim();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let other = Section::random(e, &mut rng, SECTION_BOUND).map_err(err)?;
    let base = r.algebra();
    let space = r.space();
    let words = base.words();
    o.lines.push(format!("{} equivariant map(s); H^{p} has dimension {h_dim}", fs.len()));
    let mut all_zero = true;
    let mut classes = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        let mut entry = Map::new();
        if given {
            let eq = check_equivariance(e, r, f, Equivariance::Total).map_err(err)?;
            o.check("equivariance", &eq);
        }
        let z = cwl_cocycle(e, f, h).map_err(err)?;
        let cocycle_ok = o.check("cocycle", &check_cwl_cocycle(r, &z));
        entry.insert("f".into(), matrix_table_json(&e.kernel().shifted().tensor_power(f.k), space, &f.matrix));
        entry.insert("cocycle".into(), cochain_json(base, space, &z));
        o.lines.push(format!("f[{i}]: cocycle {}", z.display(words, space)));
        if !cocycle_ok {
            classes.push(Value::Object(entry));
            continue;
        }
        let class = CohomologyClass::new(&complex, z.clone()).map_err(err)?;
        let coords = dense(&class.coordinates, h_dim);
        o.lines.push(format!("f[{i}]: class coordinates [{}]", coords.join(", ")));
        entry.insert("coordinates".into(), json!(coords));
        all_zero &= class.is_zero();
        if class.is_zero() {
            match complex.coboundary_certificate(&z).map_err(err)? {
                Some(beta) => {
                    o.lines.push(format!("f[{i}]: primitive {}", beta.display(words, space)));
                    entry.insert("primitive".into(), cochain_json(base, space, &beta));
                }
                None => o.ok = false,
            }
        }
        match independence_certificate(e, &complex, f, h, &other) {
            Ok(beta) => {
                let z1 = cwl_cocycle(e, f, &other).map_err(err)?;
                let rechecked = ce_differential(r, &beta) == z1.difference(&z);
                o.ok &= rechecked;
                o.lines.push(format!(
                    "f[{i}]: independence certificate against a random section {}",
                    if rechecked { "rechecked" } else { "FAILED recheck" }
                ));
                entry.insert("independence_certificate".into(), cochain_json(base, space, &beta));
                entry.insert("other_section".into(), matrix_table_json(e.base().space(), e.total().space(), other.matrix()));
            }
            Err(x) => {
                o.ok = false;
                o.lines.push(format!("f[{i}]: no independence certificate: {x}"));
            }
        }
        classes.push(Value::Object(entry));
    }
    o.put("degree", json!(p));
    o.put("cohomology_dim", json!(h_dim));
    o.put("classes", Value::Array(classes));
    o.facts.zero = Some(all_zero);
    Ok(o)
}

fn minimal_model(g: &Arc<LInftyAlgebra>, splittings: usize, opts: &RunOptions) -> Eval {
    let data = TwoTermData::new(g).map_err(err)?;
    let model = minimal_model_2term(g, &data, &Splitting::default_for(&data)).map_err(err)?;
    let mut o = Outcome::new();
    let valid = o.check("morphism", &check_morphism(&model.morphism));
    let iso = is_quasi_iso(&model.morphism).is_quasi_iso();
    o.ok &= iso;
    o.lines.push(format!("cokernel {} + kernel {}; quasi-isomorphism: {iso}", model.coker_dim, model.kernel_dim));
    let e = skeletal_extension(Arc::clone(&model.algebra)).map_err(err)?;
    let h = Section::default_for(&e).map_err(err)?;
    let action = Arc::new(induced_action(&e, &h).map_err(err)?);
    let theta = curvature(&e, &h).map_err(err)?;
    let complex = CeComplex::new(Arc::clone(&action));
    let base = e.base();
    let kspace = e.kernel().shifted();
    let cocycle = o.check("theta_cocycle", &check_cwl_cocycle(&action, &theta));
    o.lines.push(format!("θ = {}", theta.display(base.words(), kspace)));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut certificates = Vec::new();
    for i in 0..splittings {
        let other = minimal_model_2term(g, &data, &Splitting::random(&data, &mut rng)).map_err(err)?;
        let e2 = skeletal_extension(Arc::clone(&other.algebra)).map_err(err)?;
        let h2 = Section::default_for(&e2).map_err(err)?;
        if e2.base() != e.base() || induced_action(&e2, &h2).map_err(err)? != *action {
            o.ok = false;
            o.lines.push(format!("splitting {i}: cokernel bracket or kernel action changed"));
            continue;
        }
        let theta2 = curvature(&e2, &h2).map_err(err)?;
        if !cocycle {
            continue;
        }
        match complex.same_class(&theta2, &theta).map_err(err)? {
            Some(beta) => {
                o.lines.push(format!("splitting {i}: same class, β = {}", beta.display(base.words(), kspace)));
                certificates.push(cochain_json(base, kspace, &beta));
            }
            None => {
                o.ok = false;
                o.lines.push(format!("splitting {i}: θ changes class"));
            }
        }
    }
    let names: Vec<&String> = model.algebra.space().names().iter().collect();
    o.put("basis", json!(names));
    o.put("theta", cochain_json(base, kspace, &theta));
    o.put("splitting_certificates", Value::Array(certificates));
    o.facts.valid = Some(valid);
    o.facts.iso = Some(iso);
    o.facts.coker_dim = Some(model.coker_dim);
    o.facts.kernel_dim = Some(model.kernel_dim);
    Ok(o)
}

fn report_lines(r: &Report) -> Vec<String> {
    let mut out = Vec::new();
    if r.is_valid() {
        out.push(format!("{}: holds on {} slots", r.check, r.slots_checked));
    } else {
        out.push(format!("{}: {} violations in {} slots", r.check, r.violations.len(), r.slots_checked));
        for v in r.violations.iter().take(SHOWN_WITNESSES) {
            out.push(format!("  witness {}: {}", v.slot, v.detail));
        }
        if r.violations.len() > SHOWN_WITNESSES {
            out.push(format!("  … {} more", r.violations.len() - SHOWN_WITNESSES));
        }
    }
    out
}

fn report_json(r: &Report) -> Value {
    let witnesses: Vec<Value> =
        r.violations.iter().map(|v| json!({"slot": v.slot, "residual": v.detail})).collect();
    json!({"check": r.check, "slots": r.slots_checked, "valid": r.is_valid(), "witnesses": witnesses})
}

fn scalar(c: &Scalar) -> Value {
    Value::String(format_scalar(c))
}

fn vector_json(space: &GradedSpace, v: &SparseVec) -> Value {
    Value::Object(v.iter().map(|(i, c)| (space.name(i).to_string(), scalar(c))).collect())
}

/// A cochain as a list of `{word, value}` pairs; words list basis names of the algebra.
pub fn cochain_json(g: &LInftyAlgebra, space: &GradedSpace, c: &Cochain) -> Value {
    let values: Vec<Value> = c
        .values
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(w, v)| {
            let word: Vec<&str> = w.letters().map(|i| g.space().name(i)).collect();
            json!({"word": word, "value": vector_json(space, v)})
        })
        .collect();
    json!({"degree": c.degree, "values": values})
}

fn matrix_table_json(source: &GradedSpace, target: &GradedSpace, m: &SparseMatrix) -> Value {
    Value::Object(
        (0..source.dim())
            .filter(|&j| !m.column(j).is_zero())
            .map(|j| (source.name(j).to_string(), vector_json(target, m.column(j))))
            .collect(),
    )
}

fn dense(v: &SparseVec, dim: usize) -> Vec<String> {
    v.to_dense(dim).iter().map(format_scalar).collect()
}

fn dense_matrix_json(m: &SparseMatrix) -> Value {
    let rows: Vec<Value> =
        (0..m.nrows()).map(|i| json!((0..m.ncols()).map(|j| format_scalar(&m.get(i, j))).collect::<Vec<_>>())).collect();
    Value::Array(rows)
}
