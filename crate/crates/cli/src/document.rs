use std::collections::{BTreeMap, HashMap, HashSet};

use homcycle::{CyclicHom, SimpleGraph};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// On-disk description of a graph, optionally with a target cycle length
/// and a labelling of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hom: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

/// A document resolved against command-line overrides.
#[derive(Debug, Clone)]
pub struct Instance {
    pub labels: Vec<String>,
    pub graph: SimpleGraph,
    pub k: u32,
    pub hom: Option<CyclicHom>,
}

impl Instance {
    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn require_hom(&self) -> Result<&CyclicHom, CliError> {
        self.hom.as_ref().ok_or(CliError::MissingHom)
    }
}

impl GraphDocument {
    /// Parses a document; `origin` names the source in error messages.
    pub fn from_json(text: &str, origin: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            path: origin.to_owned(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    fn index(&self) -> Result<HashMap<&str, usize>, CliError> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, label) in self.vertices.iter().enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(CliError::field(
                    format!("vertices[{i}]"),
                    format!("duplicate label {label:?}"),
                ));
            }
        }
        Ok(index)
    }

    /// The graph with vertices numbered in declaration order.
    pub fn graph(&self) -> Result<SimpleGraph, CliError> {
        let index = self.index()?;
        let lookup = |i: usize, label: &str| {
            index.get(label).copied().ok_or_else(|| {
                CliError::field(format!("edges[{i}]"), format!("unknown vertex {label:?}"))
            })
        };
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, (a, b)) in self.edges.iter().enumerate() {
            let (u, v) = (lookup(i, a)?, lookup(i, b)?);
            if u == v {
                return Err(CliError::field(
                    format!("edges[{i}]"),
                    format!("self-loop at {a:?}"),
                ));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(CliError::field(
                    format!("edges[{i}]"),
                    format!("duplicate edge {a:?}-{b:?}"),
                ));
            }
            edges.push((u, v));
        }
        Ok(SimpleGraph::new(self.vertices.len(), &edges)?)
    }

    /// Applies the `--k` and `--hom` overrides and certifies the labelling.
    /// An override hom replaces the document's entirely.
    pub fn resolve(&self, k: Option<u32>, hom: Option<&str>) -> Result<Instance, CliError> {
        let graph = self.graph()?;
        let k = k.or(self.k).ok_or(CliError::MissingK)?;
        let (field, values) = match hom {
            Some(text) => ("--hom", Some(parse_assignments(text)?)),
            None => ("hom", self.hom.clone()),
        };
        let hom = match values {
            Some(values) => Some(self.certify(&graph, k, field, &values)?),
            None => None,
        };
        Ok(Instance {
            labels: self.vertices.clone(),
            graph,
            k,
            hom,
        })
    }

    fn certify(
        &self,
        graph: &SimpleGraph,
        k: u32,
        field: &str,
        values: &BTreeMap<String, i64>,
    ) -> Result<CyclicHom, CliError> {
        let index = self.index()?;
        if let Some(label) = values.keys().find(|l| !index.contains_key(l.as_str())) {
            return Err(CliError::field(field, format!("unknown vertex {label:?}")));
        }
        let residues =
            self.vertices
                .iter()
                .map(|label| {
                    values.get(label).copied().ok_or_else(|| {
                        CliError::field(field, format!("no value for vertex {label:?}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
        CyclicHom::new(graph, k, &residues).map_err(|e| match e {
            homcycle::Error::NotAHomomorphism(u, v) => {
                CliError::NotAHomomorphism(self.vertices[u].clone(), self.vertices[v].clone())
            }
            other => other.into(),
        })
    }
}

/// Parses `name=value,name=value`.
pub fn parse_assignments(text: &str) -> Result<BTreeMap<String, i64>, CliError> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| {
            CliError::field("--hom", format!("expected name=value, got {part:?}"))
        })?;
        let value: i64 = value.trim().parse().map_err(|_| {
            CliError::field(
                "--hom",
                format!("value of {:?} is not an integer", name.trim()),
            )
        })?;
        if out.insert(name.trim().to_owned(), value).is_some() {
            return Err(CliError::field(
                "--hom",
                format!("vertex {:?} assigned twice", name.trim()),
            ));
        }
    }
    Ok(out)
}
