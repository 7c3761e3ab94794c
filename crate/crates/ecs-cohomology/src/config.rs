//! Job configuration: JSON ingestion with precise errors, cross-field
//! validation, and construction of engine objects.
//!
//! Rationals travel as `"p/q"` strings so nothing is ever rounded.
//! Parse failures carry the line and column from the JSON reader;
//! semantic failures carry the field path they refer to.

use crate::gkm::GKMGraph;
use crate::poly::Poly;
use crate::rational::parse_rat;
use crate::root_datum::{RootDatum, TorusElement, Weight};
use crate::weights::WeightRep;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl ToString) -> ConfigError {
    ConfigError::Invalid {
        path: path.into(),
        message: message.to_string(),
    }
}

/// Top-level job description. Every section is optional; commands check
/// for the sections they need.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SpaceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub classes: Vec<ClassSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<SuiteSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSpec>,
}

/// Compact group, by catalogue label or by simple-root rows. Exactly one
/// of the two must be present. An optional contrast label names a second
/// group whose torus contains the first's by zero padding, used to
/// compare shift discrepancies for the same sector data.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub simple_roots: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contrast: Option<String>,
}

/// Action data: a fixed-point graph, bare weight lines, or both.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gkm: Option<GkmSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<WeightLineSpec>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GkmSpec {
    pub rank: usize,
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSpec {
    pub name: String,
    pub tangent: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub from: String,
    pub to: String,
    pub weight: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightLineSpec {
    pub weight: Vec<i64>,
    #[serde(default = "one")]
    pub mult: u32,
}

fn one() -> u32 {
    1
}

/// A class on a sector of the graph: torus element entries as `"p/q"`
/// strings, vertex values as explicit term lists. Unnamed vertices get
/// zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpec {
    pub sector: Vec<String>,
    pub values: std::collections::BTreeMap<String, Vec<TermSpec>>,
}

/// One polynomial term: exponent vector and rational coefficient.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// Verification suite selection. An empty check list means the default
/// suite (every check).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSpec {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instances: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default)]
    pub format: ReportFormat,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl JobConfig {
    pub fn from_path(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<Self, ConfigError> {
        let config: JobConfig =
            serde_json::from_str(text).map_err(|e| ConfigError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
        config.validate()?;
        Ok(config)
    }

    /// Cross-field validation beyond what deserialization enforces.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if let Some(group) = &self.group {
            match (&group.label, &group.simple_roots) {
                (None, None) => {
                    return Err(invalid(
                        "group",
                        "needs either \"label\" or \"simple_roots\"",
                    ));
                }
                (Some(_), Some(_)) => {
                    return Err(invalid(
                        "group",
                        "\"label\" and \"simple_roots\" are mutually exclusive",
                    ));
                }
                _ => {}
            }
        }
        if let Some(space) = &self.space {
            if space.gkm.is_none() && space.weights.is_none() {
                return Err(invalid(
                    "space",
                    "needs \"gkm\" and/or \"weights\"",
                ));
            }
        }
        // Builders re-run the deep checks; run them here so validation
        // reports everything a command would trip over later.
        let datum = self.build_datum()?;
        self.build_contrast_datum()?;
        let graph = self.build_graph()?;
        if let Some(rep) = self.build_weight_rep()? {
            if let Some(datum) = &datum {
                if rep.ambient_rank() != datum.rank() {
                    return Err(invalid(
                        "space.weights",
                        format!(
                            "weight length {} does not match group rank {}",
                            rep.ambient_rank(),
                            datum.rank()
                        ),
                    ));
                }
            }
        }
        for (i, spec) in self.classes.iter().enumerate() {
            let graph = graph.as_ref().ok_or_else(|| {
                invalid(format!("classes[{i}]"), "classes need space.gkm")
            })?;
            self.build_class(spec, graph)
                .map_err(|e| match e {
                    ConfigError::Invalid { path, message } => ConfigError::Invalid {
                        path: format!("classes[{i}].{path}"),
                        message,
                    },
                    other => other,
                })?;
        }
        Ok(())
    }

    pub fn max_order(&self) -> u64 {
        self.max_order.unwrap_or(3)
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }

    pub fn build_datum(&self) -> Result<Option<RootDatum>, ConfigError> {
        let Some(group) = &self.group else {
            return Ok(None);
        };
        let datum = if let Some(label) = &group.label {
            RootDatum::from_label(label).map_err(|e| invalid("group.label", e))?
        } else if let Some(rows) = &group.simple_roots {
            RootDatum::from_simple_roots(rows.clone())
                .map_err(|e| invalid("group.simple_roots", e))?
        } else {
            return Err(invalid(
                "group",
                "needs either \"label\" or \"simple_roots\"",
            ));
        };
        Ok(Some(datum))
    }

    /// The contrast group, which must contain the primary group's torus:
    /// same label prefix is not required, only rank at least as large.
    pub fn build_contrast_datum(&self) -> Result<Option<RootDatum>, ConfigError> {
        let Some(group) = &self.group else {
            return Ok(None);
        };
        let Some(contrast) = &group.contrast else {
            return Ok(None);
        };
        let datum = RootDatum::from_label(contrast)
            .map_err(|e| invalid("group.contrast", e))?;
        if let Some(primary) = self.build_datum()? {
            if datum.rank() < primary.rank() {
                return Err(invalid(
                    "group.contrast",
                    format!(
                        "contrast rank {} is smaller than group rank {}",
                        datum.rank(),
                        primary.rank()
                    ),
                ));
            }
        }
        Ok(Some(datum))
    }

    pub fn build_graph(&self) -> Result<Option<GKMGraph>, ConfigError> {
        let Some(spec) = self.space.as_ref().and_then(|s| s.gkm.as_ref()) else {
            return Ok(None);
        };
        let vertices = spec
            .vertices
            .iter()
            .map(|v| {
                (
                    v.name.clone(),
                    v.tangent.iter().map(|w| Weight(w.clone())).collect(),
                )
            })
            .collect();
        let edges = spec
            .edges
            .iter()
            .map(|e| (e.from.clone(), e.to.clone(), Weight(e.weight.clone())))
            .collect();
        let graph = GKMGraph::new(spec.rank, vertices, edges)
            .map_err(|e| invalid("space.gkm", e))?;
        Ok(Some(graph))
    }

    pub fn build_weight_rep(&self) -> Result<Option<WeightRep>, ConfigError> {
        let Some(lines) = self.space.as_ref().and_then(|s| s.weights.as_ref()) else {
            return Ok(None);
        };
        if lines.is_empty() {
            return Err(invalid("space.weights", "empty weight list"));
        }
        let rank = lines[0].weight.len();
        let mut rep = WeightRep::empty(rank);
        for (i, line) in lines.iter().enumerate() {
            rep.push_line(Weight(line.weight.clone()), line.mult)
                .map_err(|e| invalid(format!("space.weights[{i}]"), e))?;
        }
        Ok(Some(rep))
    }

    /// Torus element from `"p/q"` entry strings.
    pub fn parse_element(path: &str, entries: &[String]) -> Result<TorusElement, ConfigError> {
        let mut rats = Vec::with_capacity(entries.len());
        for (i, s) in entries.iter().enumerate() {
            rats.push(
                parse_rat(s).map_err(|e| invalid(format!("{path}[{i}]"), e))?,
            );
        }
        TorusElement::new(rats).map_err(|e| invalid(path, e))
    }

    pub fn build_class(
        &self,
        spec: &ClassSpec,
        graph: &GKMGraph,
    ) -> Result<crate::gkm::EquivariantClass, ConfigError> {
        let element = Self::parse_element("sector", &spec.sector)?;
        if element.rank() != graph.ambient_rank() {
            return Err(invalid(
                "sector",
                format!(
                    "sector rank {} does not match graph rank {}",
                    element.rank(),
                    graph.ambient_rank()
                ),
            ));
        }
        let mut named = Vec::new();
        for (name, terms) in &spec.values {
            let mut poly_terms = Vec::with_capacity(terms.len());
            for (i, term) in terms.iter().enumerate() {
                let coeff = parse_rat(&term.coeff).map_err(|e| {
                    invalid(format!("values.{name}[{i}].coeff"), e)
                })?;
                poly_terms.push((term.exponents.clone(), coeff));
            }
            let poly = Poly::from_terms(graph.ambient_rank(), poly_terms)
                .map_err(|e| invalid(format!("values.{name}"), e))?;
            named.push((name.as_str(), poly));
        }
        crate::gkm::EquivariantClass::from_named_values(graph, &element, &named)
            .map_err(|e| invalid("values", e))
    }
}
