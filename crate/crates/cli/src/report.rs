use std::fmt::Write;

use homcycle::{ComponentReport, ComponentVerdict};
use serde::Serialize;

use crate::document::Instance;

/// Everything a subcommand prints. Only `--timing` adds run-dependent data.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: InputEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homomorphisms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homs: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<ComponentEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub vertices: Vec<String>,
    pub edges: usize,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentEntry {
    pub representative: String,
    pub size: usize,
    pub homotopy_type: String,
    pub torus_dim: usize,
    /// `None` when `k = 4`.
    pub frozen: Option<Vec<String>>,
    pub k_prime: Option<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictEntry {
    pub representative: String,
    pub size: usize,
    pub homotopy_type: String,
    pub b0: usize,
    pub b1: usize,
    pub pass: bool,
}

impl RunReport {
    pub fn new(command: &str, source: &str, inst: &Instance) -> Self {
        RunReport {
            command: command.to_owned(),
            input: InputEcho {
                source: source.to_owned(),
                vertices: inst.labels.clone(),
                edges: inst.graph.edge_count(),
                k: inst.k,
                hom: inst.hom.as_ref().map(|f| f.label()),
            },
            homomorphisms: None,
            homs: None,
            components: None,
            verdicts: None,
            elapsed_ms: None,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts
            .as_ref()
            .is_none_or(|v| v.iter().all(|v| v.pass))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let input = &self.input;
        let _ = write!(
            out,
            "input: {} ({} vertices, {} edges), k = {}",
            input.source,
            input.vertices.len(),
            input.edges,
            input.k
        );
        if let Some(h) = &input.hom {
            let _ = write!(out, ", hom {h}");
        }
        out.push('\n');
        if let Some(n) = self.homomorphisms {
            let _ = writeln!(out, "homomorphisms: {n}");
        }
        for h in self.homs.iter().flatten() {
            let h = if h.is_empty() { "(empty map)" } else { h };
            let _ = writeln!(out, "  {h}");
        }
        if let Some(components) = &self.components {
            let _ = writeln!(out, "components: {}", components.len());
            for (i, c) in components.iter().enumerate() {
                let frozen = match &c.frozen {
                    Some(f) => format!("{{{}}}", f.join(", ")),
                    None => "n/a".to_owned(),
                };
                let _ = write!(
                    out,
                    "  [{}] representative {}: {}, size {}, frozen {frozen}",
                    i + 1,
                    c.representative,
                    c.homotopy_type,
                    c.size
                );
                if let Some(kp) = c.k_prime {
                    let _ = write!(out, ", k' = {kp}");
                }
                out.push('\n');
            }
        }
        if let Some(verdicts) = &self.verdicts {
            let _ = writeln!(out, "components: {}", verdicts.len());
            for (i, v) in verdicts.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  [{}] representative {}: {}, size {}, b = ({}, {}): {}",
                    i + 1,
                    v.representative,
                    v.homotopy_type,
                    v.size,
                    v.b0,
                    v.b1,
                    if v.pass { "PASS" } else { "FAIL" }
                );
            }
            let passed = verdicts.iter().filter(|v| v.pass).count();
            let _ = writeln!(
                out,
                "summary: {passed} PASS, {} FAIL",
                verdicts.len() - passed
            );
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms:.3} ms");
        }
        out
    }
}

impl ComponentEntry {
    pub fn new(report: &ComponentReport, inst: &Instance) -> Self {
        ComponentEntry {
            representative: report.representative.label(),
            size: report.size,
            homotopy_type: report.homotopy_type.to_string(),
            torus_dim: report.homotopy_type.0,
            frozen: report
                .frozen
                .as_ref()
                .map(|f| f.iter().map(|&v| inst.label(v).to_owned()).collect()),
            k_prime: report.k_prime,
        }
    }
}

impl From<&ComponentVerdict> for VerdictEntry {
    fn from(v: &ComponentVerdict) -> Self {
        VerdictEntry {
            representative: v.representative.label(),
            size: v.size,
            homotopy_type: v.homotopy_type.to_string(),
            b0: v.betti.b0,
            b1: v.betti.b1,
            pass: v.pass,
        }
    }
}
