//! The JSON definition format and its resolution into core objects.
//!
//! Coefficients are rational literals, either JSON integers or strings `"p/q"`. Linear maps
//! are tables from input basis names to output vectors; vectors map basis names to
//! coefficients. Brackets are given in the skew convention, keyed by ordered input tuples.

use std::collections::BTreeMap;
use std::sync::Arc;

use indexmap::IndexMap;
use linfty_core::extension::{LInftyExtension, Section};
use linfty_core::gallery::{
    AlgebraEntry, Claim, Expectation, ExtensionEntry, GalleryInstance, MorphismEntry, RuthEntry,
    RuthMorphismEntry, SectionEntry,
};
use linfty_core::graded::{format_scalar, parse_scalar, GradedSpace, Scalar, SparseMatrix, SparseVec};
use linfty_core::linfty::{LInftyAlgebra, LInftyMorphism};
use linfty_core::ruth::{Ruth, RuthMorphism};
use linfty_core::symcoalg::{inverse_decalage, BracketTable, SymWord};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::query::{Query, QuerySpec};

pub const FORMAT: u32 = 1;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: {message}")]
    Reference { line: usize, message: String },
}

/// A rational literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Scalar);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Literal {
            Int(i64),
            Text(String),
        }
        match Literal::deserialize(d)? {
            Literal::Int(n) => Ok(Rational(Scalar::from_integer(n.into()))),
            Literal::Text(t) => parse_scalar(&t).map(Rational).map_err(serde::de::Error::custom),
        }
    }
}

pub type Coefficients = IndexMap<String, Rational>;
/// Input basis name → image vector.
pub type Table = IndexMap<String, Coefficients>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SpaceDef {
    pub name: String,
    pub basis: Vec<(String, i32)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BracketDef {
    pub inputs: Vec<String>,
    pub value: Coefficients,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    pub name: String,
    pub space: String,
    #[serde(default)]
    pub brackets: Vec<BracketDef>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComponentDef {
    /// Generators of the algebra; the component is `ρ̄` on their symmetric product.
    pub word: Vec<String>,
    pub map: Table,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RuthDef {
    pub name: String,
    pub algebra: String,
    pub space: String,
    #[serde(default)]
    pub differential: Table,
    #[serde(default)]
    pub components: Vec<ComponentDef>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDef {
    pub name: String,
    pub kernel: String,
    pub total: String,
    pub base: String,
    pub inclusion: Table,
    pub projection: Table,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SectionDef {
    pub name: String,
    pub extension: String,
    pub map: Table,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MorphismDef {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: Table,
}

/// `map` goes from the target ruth's space to the source ruth's space.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RuthMorphismDef {
    pub name: String,
    pub morphism: String,
    pub source: String,
    pub target: String,
    pub map: Table,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DocumentDef {
    pub format: u32,
    pub name: String,
    #[serde(default)]
    pub spaces: Vec<SpaceDef>,
    #[serde(default)]
    pub algebras: Vec<AlgebraDef>,
    #[serde(default)]
    pub ruths: Vec<RuthDef>,
    #[serde(default)]
    pub extensions: Vec<ExtensionDef>,
    #[serde(default)]
    pub sections: Vec<SectionDef>,
    #[serde(default)]
    pub morphisms: Vec<MorphismDef>,
    #[serde(default)]
    pub ruth_morphisms: Vec<RuthMorphismDef>,
    #[serde(default)]
    pub queries: Vec<QuerySpec>,
}

/// A resolved document: the named objects plus the queries to run on them.
#[derive(Clone, Debug)]
pub struct Document {
    pub objects: GalleryInstance,
    pub queries: Vec<QuerySpec>,
}

/// Finds the line of the last anchor, searching each anchor (as a JSON string) after the previous one.
fn locate(text: &str, anchors: &[&str]) -> usize {
    let mut pos = 0;
    for anchor in anchors {
        let needle = serde_json::to_string(anchor).unwrap_or_default();
        if let Some(offset) = text[pos..].find(&needle) {
            pos += offset;
        }
    }
    text[..pos].matches('\n').count() + 1
}

struct Resolver<'a> {
    text: &'a str,
    spaces: BTreeMap<String, GradedSpace>,
}

impl<'a> Resolver<'a> {
    fn error(&self, anchors: &[&str], message: impl Into<String>) -> InputError {
        InputError::Reference { line: locate(self.text, anchors), message: message.into() }
    }

    fn space(&self, owner: &str, name: &str) -> Result<&GradedSpace, InputError> {
        self.spaces.get(name).ok_or_else(|| self.error(&[owner, name], format!("unknown space {name:?}")))
    }

    fn index(&self, owner: &str, space: &GradedSpace, name: &str) -> Result<usize, InputError> {
        space
            .index_of(name)
            .ok_or_else(|| self.error(&[owner, name], format!("{name:?} is not a basis element here")))
    }

    fn vector(&self, owner: &str, space: &GradedSpace, v: &Coefficients) -> Result<SparseVec, InputError> {
        let mut out = SparseVec::new();
        for (name, c) in v {
            out.add_at(self.index(owner, space, name)?, &c.0);
        }
        Ok(out)
    }

    /// A `target × source` matrix; inputs missing from the table map to zero.
    fn matrix(&self, owner: &str, source: &GradedSpace, target: &GradedSpace, t: &Table) -> Result<SparseMatrix, InputError> {
        let mut m = SparseMatrix::zero(target.dim(), source.dim());
        for (input, image) in t {
            let j = self.index(owner, source, input)?;
            for (i, c) in self.vector(owner, target, image)?.iter() {
                m.add_entry(i, j, c);
            }
        }
        Ok(m)
    }
}

fn lookup<'b, T>(items: &'b [T], name: &str, key: impl Fn(&T) -> &str) -> Option<&'b T> {
    items.iter().find(|x| key(x) == name)
}

/// Parses and resolves a document; structural problems are input errors, identities are not checked.
pub fn parse(text: &str) -> Result<Document, InputError> {
    let def: DocumentDef = serde_json::from_str(text)
        .map_err(|e| InputError::Syntax { line: e.line(), column: e.column(), message: e.to_string() })?;
    resolve(text, &def)
}

pub fn parse_file(path: &std::path::Path) -> Result<Document, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse(&text)
}

fn check_unique<'b>(r: &Resolver<'_>, kind: &str, names: impl Iterator<Item = &'b str>) -> Result<(), InputError> {
    let mut seen = std::collections::BTreeSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(r.error(&[n, n], format!("duplicate {kind} {n:?}")));
        }
    }
    Ok(())
}

fn resolve(text: &str, def: &DocumentDef) -> Result<Document, InputError> {
    if def.format != FORMAT {
        return Err(InputError::Reference {
            line: locate(text, &["format"]),
            message: format!("unsupported format {}; this build reads format {FORMAT}", def.format),
        });
    }
    let mut r = Resolver { text, spaces: BTreeMap::new() };
    check_unique(&r, "space", def.spaces.iter().map(|s| s.name.as_str()))?;
    for s in &def.spaces {
        let space = GradedSpace::new(s.basis.iter().cloned()).map_err(|e| r.error(&[&s.name], e.to_string()))?;
        r.spaces.insert(s.name.clone(), space);
    }
    let mut objects = GalleryInstance { name: def.name.clone(), ..Default::default() };

    check_unique(&r, "algebra", def.algebras.iter().map(|a| a.name.as_str()))?;
    for a in &def.algebras {
        let space = r.space(&a.name, &a.space)?.clone();
        let mut table = BracketTable::new();
        for b in &a.brackets {
            let inputs = b.inputs.iter().map(|n| r.index(&a.name, &space, n)).collect::<Result<Vec<_>, _>>()?;
            if inputs.is_empty() {
                return Err(r.error(&[&a.name, "inputs"], "a bracket needs at least one input"));
            }
            if table.insert(inputs, r.vector(&a.name, &space, &b.value)?).is_some() {
                return Err(r.error(&[&a.name, "inputs"], "bracket listed twice"));
            }
        }
        let algebra = LInftyAlgebra::from_brackets(space, &table).map_err(|e| r.error(&[&a.name], e.to_string()))?;
        objects.algebras.push(AlgebraEntry { name: a.name.clone(), algebra: Arc::new(algebra) });
    }
    let algebra = |owner: &str, name: &str| -> Result<Arc<LInftyAlgebra>, InputError> {
        lookup(&objects.algebras, name, |x| &x.name)
            .map(|x| Arc::clone(&x.algebra))
            .ok_or_else(|| r.error(&[owner, name], format!("unknown algebra {name:?}")))
    };

    let mut ruths = Vec::new();
    check_unique(&r, "ruth", def.ruths.iter().map(|x| x.name.as_str()))?;
    for x in &def.ruths {
        let g = algebra(&x.name, &x.algebra)?;
        let space = r.space(&x.name, &x.space)?.clone();
        let partial = r.matrix(&x.name, &space, &space, &x.differential)?;
        let mut components = BTreeMap::new();
        for c in &x.components {
            let letters = c.word.iter().map(|n| r.index(&x.name, g.space(), n)).collect::<Result<Vec<_>, _>>()?;
            let (sign, word) = g
                .words()
                .canonicalize(&letters)
                .map_err(|e| r.error(&[&x.name], e.to_string()))?
                .filter(|(_, w)| !w.is_unit())
                .ok_or_else(|| r.error(&[&x.name, "word"], "word vanishes or is empty"))?;
            let m = r.matrix(&x.name, &space, &space, &c.map)?.scaled(&Scalar::from_integer(sign.into()));
            if components.insert(word, m).is_some() {
                return Err(r.error(&[&x.name, "word"], "component listed twice"));
            }
        }
        let ruth = Ruth::new(g, space, partial, components).map_err(|e| r.error(&[&x.name], e.to_string()))?;
        ruths.push(RuthEntry { name: x.name.clone(), algebra: x.algebra.clone(), ruth: Arc::new(ruth) });
    }

    let mut extensions = Vec::new();
    check_unique(&r, "extension", def.extensions.iter().map(|x| x.name.as_str()))?;
    for x in &def.extensions {
        let (n, t, b) = (algebra(&x.name, &x.kernel)?, algebra(&x.name, &x.total)?, algebra(&x.name, &x.base)?);
        let iota = r.matrix(&x.name, n.space(), t.space(), &x.inclusion)?;
        let pi = r.matrix(&x.name, t.space(), b.space(), &x.projection)?;
        let e = LInftyExtension::new(n, t, b, &iota, &pi).map_err(|e| r.error(&[&x.name], e.to_string()))?;
        extensions.push(ExtensionEntry {
            name: x.name.clone(),
            kernel: x.kernel.clone(),
            total: x.total.clone(),
            base: x.base.clone(),
            extension: e,
        });
    }

    let mut sections: Vec<SectionEntry> = Vec::new();
    for x in &def.sections {
        let e = lookup(&extensions, &x.extension, |e| &e.name)
            .ok_or_else(|| r.error(&[&x.name, &x.extension], format!("unknown extension {:?}", x.extension)))?;
        if sections.iter().any(|s| s.extension == x.extension && s.name == x.name) {
            return Err(r.error(&[&x.name, &x.name], format!("duplicate section {:?}", x.name)));
        }
        let e = &e.extension;
        let m = r.matrix(&x.name, e.base().space(), e.total().space(), &x.map)?;
        let section = Section::new(e, m).map_err(|err| r.error(&[&x.name], err.to_string()))?;
        sections.push(SectionEntry { name: x.name.clone(), extension: x.extension.clone(), section });
    }

    let mut morphisms = Vec::new();
    check_unique(&r, "morphism", def.morphisms.iter().map(|x| x.name.as_str()))?;
    for x in &def.morphisms {
        let (s, t) = (algebra(&x.name, &x.source)?, algebra(&x.name, &x.target)?);
        let m = r.matrix(&x.name, s.space(), t.space(), &x.map)?;
        let morphism = LInftyMorphism::strict(s, t, &m).map_err(|e| r.error(&[&x.name], e.to_string()))?;
        morphisms.push(MorphismEntry { name: x.name.clone(), source: x.source.clone(), target: x.target.clone(), morphism });
    }

    let mut ruth_morphisms = Vec::new();
    check_unique(&r, "ruth morphism", def.ruth_morphisms.iter().map(|x| x.name.as_str()))?;
    for x in &def.ruth_morphisms {
        let find_ruth = |name: &str| {
            lookup(&ruths, name, |e: &RuthEntry| &e.name)
                .map(|e| Arc::clone(&e.ruth))
                .ok_or_else(|| r.error(&[&x.name, name], format!("unknown ruth {name:?}")))
        };
        let (source, target) = (find_ruth(&x.source)?, find_ruth(&x.target)?);
        let morphism = lookup(&morphisms, &x.morphism, |e: &MorphismEntry| &e.name)
            .ok_or_else(|| r.error(&[&x.name, &x.morphism], format!("unknown morphism {:?}", x.morphism)))?
            .morphism
            .clone();
        let map = r.matrix(&x.name, target.space(), source.space(), &x.map)?;
        let value = RuthMorphism::new(morphism, map, source, target).map_err(|e| r.error(&[&x.name], e.to_string()))?;
        ruth_morphisms.push(RuthMorphismEntry {
            name: x.name.clone(),
            morphism: x.morphism.clone(),
            source: x.source.clone(),
            target: x.target.clone(),
            value,
        });
    }
    objects.ruths = ruths;
    objects.extensions = extensions;
    objects.sections = sections;
    objects.morphisms = morphisms;
    objects.ruth_morphisms = ruth_morphisms;

    for (i, q) in def.queries.iter().enumerate() {
        check_query_references(&objects, &q.query).map_err(|message| InputError::Reference {
            line: locate_query(text, i),
            message: format!("query {i}: {message}"),
        })?;
        if let (Some(p), Some(claim)) = (q.provenance, q.claim()) {
            objects.ledger.push(Expectation { claim, provenance: p });
        }
    }
    Ok(Document { objects, queries: def.queries.clone() })
}

/// Line of the `i`-th `"command"` key.
fn locate_query(text: &str, i: usize) -> usize {
    let mut pos = text.find("\"queries\"").unwrap_or(0);
    for k in 0..=i {
        match text[pos..].find("\"command\"") {
            Some(offset) => pos += offset + usize::from(k < i),
            None => break,
        }
    }
    text[..pos].matches('\n').count() + 1
}

fn check_query_references(g: &GalleryInstance, q: &Query) -> Result<(), String> {
    let err = |e: linfty_core::gallery::GalleryError| e.to_string();
    match q {
        Query::ValidateAlgebra { algebra, .. } | Query::MinimalModel { algebra, .. } => {
            g.algebra(algebra).map_err(err)?;
        }
        Query::ValidateRuth { ruth } | Query::Cohomology { ruth, .. } => {
            g.ruth(ruth).map_err(err)?;
        }
        Query::ValidateExtension { extension } => {
            g.extension(extension).map_err(err)?;
        }
        Query::ValidateMorphism { morphism } => {
            g.morphism(morphism).map_err(err)?;
        }
        Query::Curvature { extension, section } | Query::Bianchi { extension, section } => {
            g.section(extension, section).map_err(err)?;
        }
        Query::Cwl { extension, ruth, section, .. } => {
            g.extension(extension).map_err(err)?;
            g.ruth(ruth).map_err(err)?;
            if let Some(s) = section {
                g.section(extension, s).map_err(err)?;
            }
        }
        Query::Naturality { ruth_morphism, extension, section, .. } => {
            g.ruth_morphism(ruth_morphism).map_err(err)?;
            g.section(extension, section).map_err(err)?;
        }
        Query::InducedMap { ruth_morphism, .. } => {
            g.ruth_morphism(ruth_morphism).map_err(err)?;
        }
    }
    Ok(())
}

fn coefficients(space: &GradedSpace, v: &SparseVec) -> Coefficients {
    v.iter().map(|(i, c)| (space.name(i).to_string(), Rational(c.clone()))).collect()
}

fn table(source: &GradedSpace, target: &GradedSpace, m: &SparseMatrix) -> Table {
    (0..source.dim())
        .filter(|&j| !m.column(j).is_zero())
        .map(|j| (source.name(j).to_string(), coefficients(target, m.column(j))))
        .collect()
}

fn space_def(name: &str, space: &GradedSpace) -> SpaceDef {
    SpaceDef { name: name.to_string(), basis: space.names().iter().cloned().zip(space.degrees().iter().copied()).collect() }
}

/// Coefficient space of a ruth in an exported document.
pub fn coefficient_space_name(ruth: &str) -> String {
    format!("{ruth}/coefficients")
}

/// Writes named objects and their ledger as a document; every ledger entry becomes a query.
pub fn export(g: &GalleryInstance) -> DocumentDef {
    let mut doc = DocumentDef {
        format: FORMAT,
        name: g.name.clone(),
        spaces: Vec::new(),
        algebras: Vec::new(),
        ruths: Vec::new(),
        extensions: Vec::new(),
        sections: Vec::new(),
        morphisms: Vec::new(),
        ruth_morphisms: Vec::new(),
        queries: Vec::new(),
    };
    for a in &g.algebras {
        let space = a.algebra.space();
        doc.spaces.push(space_def(&a.name, space));
        let brackets = inverse_decalage(space, a.algebra.lambda())
            .into_iter()
            .map(|(inputs, v)| BracketDef {
                inputs: inputs.iter().map(|&i| space.name(i).to_string()).collect(),
                value: coefficients(space, &v),
            })
            .collect();
        doc.algebras.push(AlgebraDef { name: a.name.clone(), space: a.name.clone(), brackets });
    }
    for x in &g.ruths {
        let space = x.ruth.space();
        let space_name = coefficient_space_name(&x.name);
        doc.spaces.push(space_def(&space_name, space));
        let gspace = x.ruth.algebra().space();
        let components = x
            .ruth
            .components()
            .iter()
            .map(|(w, m): (&SymWord, &SparseMatrix)| ComponentDef {
                word: w.letters().map(|i| gspace.name(i).to_string()).collect(),
                map: table(space, space, m),
            })
            .collect();
        doc.ruths.push(RuthDef {
            name: x.name.clone(),
            algebra: x.algebra.clone(),
            space: space_name,
            differential: table(space, space, x.ruth.partial()),
            components,
        });
    }
    for x in &g.extensions {
        let e = &x.extension;
        doc.extensions.push(ExtensionDef {
            name: x.name.clone(),
            kernel: x.kernel.clone(),
            total: x.total.clone(),
            base: x.base.clone(),
            inclusion: table(e.kernel().space(), e.total().space(), &e.inclusion_matrix()),
            projection: table(e.total().space(), e.base().space(), &e.projection_matrix()),
        });
    }
    for s in &g.sections {
        let e = g.extension(&s.extension).expect("section of a listed extension");
        doc.sections.push(SectionDef {
            name: s.name.clone(),
            extension: s.extension.clone(),
            map: table(e.base().space(), e.total().space(), s.section.matrix()),
        });
    }
    for m in &g.morphisms {
        let (s, t) = (m.morphism.source().space(), m.morphism.target().space());
        doc.morphisms.push(MorphismDef {
            name: m.name.clone(),
            source: m.source.clone(),
            target: m.target.clone(),
            map: table(s, t, &m.morphism.linear_part()),
        });
    }
    for m in &g.ruth_morphisms {
        let v = &m.value;
        doc.ruth_morphisms.push(RuthMorphismDef {
            name: m.name.clone(),
            morphism: m.morphism.clone(),
            source: m.source.clone(),
            target: m.target.clone(),
            map: table(v.target.space(), v.source.space(), &v.map),
        });
    }
    doc.queries = g.ledger.iter().map(|x| QuerySpec::from_claim(&x.claim, x.provenance)).collect();
    doc
}

/// Canonical pretty JSON, newline-terminated.
pub fn to_json(doc: &DocumentDef) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Whether two sets of named objects carry the same data (names, structures, maps and ledger).
pub fn same_objects(a: &GalleryInstance, b: &GalleryInstance) -> bool {
    let algebras = a.algebras.len() == b.algebras.len()
        && a.algebras.iter().zip(&b.algebras).all(|(x, y)| x.name == y.name && x.algebra == y.algebra);
    let ruths = a.ruths.len() == b.ruths.len()
        && a.ruths.iter().zip(&b.ruths).all(|(x, y)| x.name == y.name && x.algebra == y.algebra && x.ruth == y.ruth);
    let extensions = a.extensions.len() == b.extensions.len()
        && a.extensions.iter().zip(&b.extensions).all(|(x, y)| {
            (&x.name, &x.kernel, &x.total, &x.base) == (&y.name, &y.kernel, &y.total, &y.base)
                && x.extension.inclusion() == y.extension.inclusion()
                && x.extension.projection() == y.extension.projection()
        });
    let sections = a.sections.len() == b.sections.len()
        && a.sections.iter().zip(&b.sections).all(|(x, y)| {
            x.name == y.name && x.extension == y.extension && x.section == y.section
        });
    let morphisms = a.morphisms.len() == b.morphisms.len()
        && a.morphisms.iter().zip(&b.morphisms).all(|(x, y)| {
            (&x.name, &x.source, &x.target) == (&y.name, &y.source, &y.target) && x.morphism == y.morphism
        });
    let ruth_morphisms = a.ruth_morphisms.len() == b.ruth_morphisms.len()
        && a.ruth_morphisms.iter().zip(&b.ruth_morphisms).all(|(x, y)| {
            (&x.name, &x.morphism, &x.source, &x.target) == (&y.name, &y.morphism, &y.source, &y.target)
                && x.value.map == y.value.map
                && x.value.morphism == y.value.morphism
                && x.value.source == y.value.source
                && x.value.target == y.value.target
        });
    a.name == b.name && algebras && ruths && extensions && sections && morphisms && ruth_morphisms && a.ledger == b.ledger
}

impl QuerySpec {
    /// The ledger claim this query checks, when its expectation has one of the recognised shapes.
    pub fn claim(&self) -> Option<Claim> {
        let x = self.expect.as_ref()?;
        Some(match &self.query {
            Query::ValidateAlgebra { algebra, max_weight: None } if x.is_only_valid() => {
                Claim::AlgebraValid { algebra: algebra.clone() }
            }
            Query::ValidateExtension { extension } if x.is_only_valid() => {
                Claim::ExtensionValid { extension: extension.clone() }
            }
            Query::Cohomology { ruth, degrees: Some([a, b]) } if a == b => {
                let dims = x.dims.as_ref()?;
                (dims.len() == 1).then(|| Claim::CohomologyDim { ruth: ruth.clone(), degree: *a, dim: dims[0] })?
            }
            Query::Curvature { extension, section } => match (&x.weights, x.flat) {
                (Some(w), None) => Claim::CurvatureWeights {
                    extension: extension.clone(),
                    section: section.clone(),
                    weights: w.clone(),
                },
                (None, Some(flat)) => Claim::Flat { extension: extension.clone(), section: section.clone(), flat },
                _ => return None,
            },
            Query::Cwl { extension, ruth, k: 1, degree: 0, f: Some(crate::query::FSpec::Identity(_)), section: None } => {
                Claim::CwlClassZero { extension: extension.clone(), ruth: ruth.clone(), zero: x.zero? }
            }
            Query::ValidateMorphism { morphism } if x.iso == Some(true) => Claim::QuasiIso { morphism: morphism.clone() },
            Query::InducedMap { ruth_morphism, degrees } if x.iso == Some(true) => Claim::InducedIso {
                ruth_morphism: ruth_morphism.clone(),
                degrees: (degrees[0], degrees[1]),
            },
            Query::Naturality { ruth_morphism, extension, section, f: None } if x.commutes == Some(true) => {
                Claim::Naturality {
                    ruth_morphism: ruth_morphism.clone(),
                    extension: extension.clone(),
                    section: section.clone(),
                }
            }
            Query::MinimalModel { algebra, splittings: None } => Claim::MinimalModel {
                algebra: algebra.clone(),
                coker_dim: x.coker_dim?,
                kernel_dim: x.kernel_dim?,
            },
            _ => return None,
        })
    }
}
