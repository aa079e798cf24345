//! Input documents. Every file is checked against its schema before any
//! computation starts.

use std::fs;
use std::path::Path;

use latglue_core::curvegraph::{CurveGraph, Vertex};
use latglue_core::{Embedding, Int, IntMatrix, IntegerLattice};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramDoc {
    pub rank: usize,
    pub gram: Vec<Vec<i64>>,
    #[serde(default)]
    pub labels: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDoc {
    pub basis: Vec<Vec<i64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub label: String,
    #[serde(rename = "self")]
    pub self_intersection: i64,
    #[serde(default)]
    pub bold: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<(String, String, i64)>,
}

fn read<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: schema violation: {e}", path.display())))
}

pub fn gram_matrix(doc: &GramDoc) -> Result<IntMatrix, CliError> {
    let n = doc.rank;
    if doc.gram.len() != n || doc.gram.iter().any(|r| r.len() != n) {
        return Err(CliError::usage(format!("gram must be a {n} x {n} matrix")));
    }
    if !doc.labels.is_empty() && doc.labels.len() != n {
        return Err(CliError::usage(format!("expected {n} labels, found {}", doc.labels.len())));
    }
    let m = IntMatrix::from_fn(n, n, |i, j| Int::from(doc.gram[i][j]));
    if !m.is_symmetric() {
        return Err(CliError::usage("gram is not symmetric"));
    }
    Ok(m)
}

/// A non-degenerate lattice.
pub fn load_lattice(path: &Path) -> Result<IntegerLattice, CliError> {
    let doc: GramDoc = read(path)?;
    let m = gram_matrix(&doc)?;
    let l = IntegerLattice::new(m)?;
    if doc.labels.is_empty() {
        Ok(l)
    } else {
        Ok(l.with_labels(doc.labels)?)
    }
}

pub fn load_embedding(ambient: IntegerLattice, path: &Path) -> Result<Embedding, CliError> {
    let doc: EmbeddingDoc = read(path)?;
    let n = ambient.rank();
    if doc.basis.iter().any(|r| r.len() != n) {
        return Err(CliError::usage(format!("basis rows must have length {n}")));
    }
    let rows = doc
        .basis
        .iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect();
    Ok(Embedding::new_unchecked_form(ambient, rows)?)
}

pub fn load_graph(path: &Path) -> Result<CurveGraph, CliError> {
    let doc: GraphDoc = read(path)?;
    let labels: Vec<&str> = doc.vertices.iter().map(|v| v.label.as_str()).collect();
    let idx = |s: &str| {
        labels
            .iter()
            .position(|l| *l == s)
            .ok_or_else(|| CliError::usage(format!("edge refers to unknown vertex {s}")))
    };
    let edges = doc
        .edges
        .iter()
        .map(|(a, b, w)| Ok((idx(a)?, idx(b)?, *w)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let vertices = doc
        .vertices
        .into_iter()
        .map(|v| Vertex {
            label: v.label,
            self_intersection: v.self_intersection,
            bold: v.bold,
        })
        .collect();
    Ok(CurveGraph::new(vertices, edges)?)
}
