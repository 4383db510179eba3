//! Queries and their optional expectations.

use linfty_core::gallery::{Claim, Provenance};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::document::Table;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub enum IdentityTag {
    #[serde(rename = "identity")]
    Identity,
}

/// The map `f: n[1]^{⊗k} → V`: the identity, or a table on tensor basis names (`a*b`).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FSpec {
    Identity(IdentityTag),
    Table(Table),
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Query {
    ValidateAlgebra {
        algebra: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_weight: Option<usize>,
    },
    ValidateRuth {
        ruth: String,
    },
    ValidateExtension {
        extension: String,
    },
    /// A strict morphism: the morphism equations and the induced map on homology.
    ValidateMorphism {
        morphism: String,
    },
    Cohomology {
        ruth: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degrees: Option<[i32; 2]>,
    },
    Curvature {
        extension: String,
        section: String,
    },
    Bianchi {
        extension: String,
        section: String,
    },
    Cwl {
        extension: String,
        ruth: String,
        #[serde(default = "one")]
        k: usize,
        #[serde(default)]
        degree: i32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f: Option<FSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        section: Option<String>,
    },
    MinimalModel {
        algebra: String,
        /// Random splittings compared against the default one.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        splittings: Option<usize>,
    },
    Naturality {
        ruth_morphism: String,
        extension: String,
        section: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        f: Option<FSpec>,
    },
    InducedMap {
        ruth_morphism: String,
        degrees: [i32; 2],
    },
}

impl Query {
    pub fn command(&self) -> &'static str {
        match self {
            Query::ValidateAlgebra { .. } => "validate-algebra",
            Query::ValidateRuth { .. } => "validate-ruth",
            Query::ValidateExtension { .. } => "validate-extension",
            Query::ValidateMorphism { .. } => "validate-morphism",
            Query::Cohomology { .. } => "cohomology",
            Query::Curvature { .. } => "curvature",
            Query::Bianchi { .. } => "bianchi",
            Query::Cwl { .. } => "cwl",
            Query::MinimalModel { .. } => "minimal-model",
            Query::Naturality { .. } => "naturality",
            Query::InducedMap { .. } => "induced-map",
        }
    }

    /// The main object the query is about, for report headers.
    pub fn subject(&self) -> String {
        match self {
            Query::ValidateAlgebra { algebra, .. } | Query::MinimalModel { algebra, .. } => algebra.clone(),
            Query::ValidateRuth { ruth } | Query::Cohomology { ruth, .. } => ruth.clone(),
            Query::ValidateExtension { extension } => extension.clone(),
            Query::ValidateMorphism { morphism } => morphism.clone(),
            Query::Curvature { extension, section } | Query::Bianchi { extension, section } => {
                format!("{extension} at {section}")
            }
            Query::Cwl { extension, ruth, .. } => format!("{extension} in {ruth}"),
            Query::Naturality { ruth_morphism, extension, .. } => format!("{ruth_morphism} over {extension}"),
            Query::InducedMap { ruth_morphism, .. } => ruth_morphism.clone(),
        }
    }
}

/// Expected values; each field is compared against the fact of the same name computed by a query.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Expect {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flat: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iso: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutes: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coker_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_dim: Option<usize>,
}

impl Expect {
    pub fn is_only_valid(&self) -> bool {
        *self == Expect { valid: Some(true), ..Default::default() }
    }

    /// Fields expected but not matched by `facts`, as `(field, expected, found)`.
    pub fn mismatches(&self, facts: &Expect) -> Vec<(&'static str, String, String)> {
        fn cmp<T: PartialEq + std::fmt::Debug>(
            out: &mut Vec<(&'static str, String, String)>,
            name: &'static str,
            want: &Option<T>,
            got: &Option<T>,
        ) {
            if let Some(w) = want {
                match got {
                    Some(g) if g == w => {}
                    Some(g) => out.push((name, format!("{w:?}"), format!("{g:?}"))),
                    None => out.push((name, format!("{w:?}"), "not reported by this command".into())),
                }
            }
        }
        let mut out = Vec::new();
        cmp(&mut out, "valid", &self.valid, &facts.valid);
        cmp(&mut out, "dims", &self.dims, &facts.dims);
        cmp(&mut out, "weights", &self.weights, &facts.weights);
        cmp(&mut out, "flat", &self.flat, &facts.flat);
        cmp(&mut out, "zero", &self.zero, &facts.zero);
        cmp(&mut out, "iso", &self.iso, &facts.iso);
        cmp(&mut out, "commutes", &self.commutes, &facts.commutes);
        cmp(&mut out, "coker_dim", &self.coker_dim, &facts.coker_dim);
        cmp(&mut out, "kernel_dim", &self.kernel_dim, &facts.kernel_dim);
        out
    }
}

mod provenance {
    use super::*;

    pub fn serialize<S: Serializer>(p: &Option<Provenance>, s: S) -> Result<S::Ok, S::Error> {
        match p {
            Some(p) => s.serialize_str(&p.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Provenance>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| match t.as_str() {
            "immediate" => Ok(Provenance::Immediate),
            "oracle" => Ok(Provenance::Oracle),
            "classical" => Ok(Provenance::Classical),
            other => Err(serde::de::Error::custom(format!("unknown provenance {other:?}"))),
        })
        .transpose()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct QuerySpec {
    #[serde(flatten)]
    pub query: Query,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expect>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "provenance")]
    pub provenance: Option<Provenance>,
}

impl QuerySpec {
    pub fn plain(query: Query) -> Self {
        QuerySpec { query, expect: None, provenance: None }
    }

    /// The query that re-verifies a ledger claim.
    pub fn from_claim(claim: &Claim, provenance: Provenance) -> Self {
        let valid = Expect { valid: Some(true), ..Default::default() };
        let (query, expect) = match claim.clone() {
            Claim::AlgebraValid { algebra } => (Query::ValidateAlgebra { algebra, max_weight: None }, valid),
            Claim::ExtensionValid { extension } => (Query::ValidateExtension { extension }, valid),
            Claim::CohomologyDim { ruth, degree, dim } => (
                Query::Cohomology { ruth, degrees: Some([degree, degree]) },
                Expect { dims: Some(vec![dim]), ..Default::default() },
            ),
            Claim::CurvatureWeights { extension, section, weights } => {
                (Query::Curvature { extension, section }, Expect { weights: Some(weights), ..Default::default() })
            }
            Claim::Flat { extension, section, flat } => {
                (Query::Curvature { extension, section }, Expect { flat: Some(flat), ..Default::default() })
            }
            Claim::CwlClassZero { extension, ruth, zero } => (
                Query::Cwl { extension, ruth, k: 1, degree: 0, f: Some(FSpec::Identity(IdentityTag::Identity)), section: None },
                Expect { zero: Some(zero), ..Default::default() },
            ),
            Claim::QuasiIso { morphism } => {
                (Query::ValidateMorphism { morphism }, Expect { iso: Some(true), ..Default::default() })
            }
            Claim::InducedIso { ruth_morphism, degrees } => (
                Query::InducedMap { ruth_morphism, degrees: [degrees.0, degrees.1] },
                Expect { iso: Some(true), ..Default::default() },
            ),
            Claim::Naturality { ruth_morphism, extension, section } => (
                Query::Naturality { ruth_morphism, extension, section, f: None },
                Expect { commutes: Some(true), ..Default::default() },
            ),
            Claim::MinimalModel { algebra, coker_dim, kernel_dim } => (
                Query::MinimalModel { algebra, splittings: None },
                Expect { coker_dim: Some(coker_dim), kernel_dim: Some(kernel_dim), ..Default::default() },
            ),
        };
        QuerySpec { query, expect: Some(expect), provenance: Some(provenance) }
    }
}
