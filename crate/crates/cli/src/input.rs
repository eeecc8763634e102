//! Graph and certificate input.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use limpack::io::{from_dimacs, from_edge_list, read_graph6_lines};
use limpack::{Graph, VertexPartition, VertexSet};
use serde_json::Value as Json;

use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// DIMACS if a `p` header is present, graph6 otherwise.
    Auto,
    Graph6,
    Dimacs,
    /// `n m` header, then one `u v` pair per line (0-based).
    Edges,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph file (`-` for stdin); graph6 files may hold several graphs
    #[arg(long, value_name = "FILE")]
    pub graph: Option<String>,
    /// Inline graph6 string
    #[arg(long, value_name = "GRAPH6")]
    pub g6: Option<String>,
}

#[derive(Args, Debug)]
pub struct FormatArg {
    /// Format of the --graph file
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
}

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(Path::new(path))
            .map_err(|e| UsageError(format!("cannot read {path}: {e}")).into())
    }
}

pub fn parse_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    let is_dimacs = text
        .lines()
        .any(|l| l.split_whitespace().next() == Some("p"));
    let graphs = match format {
        Format::Graph6 => read_graph6_lines(text)?,
        Format::Dimacs => vec![from_dimacs(text)?],
        Format::Edges => vec![from_edge_list(text)?],
        Format::Auto if is_dimacs => vec![from_dimacs(text)?],
        Format::Auto => read_graph6_lines(text)?,
    };
    if graphs.is_empty() {
        return Err(UsageError("input holds no graphs".into()).into());
    }
    Ok(graphs)
}

impl GraphInput {
    pub fn graphs(&self, format: Format) -> Result<Vec<Graph>> {
        match (&self.g6, &self.graph) {
            (Some(g6), _) => parse_graphs(g6, Format::Graph6),
            (None, Some(path)) => parse_graphs(&read_text(path)?, format),
            (None, None) => unreachable!("clap enforces one input"),
        }
    }

    /// Exactly one graph.
    pub fn graph(&self, format: Format) -> Result<Graph> {
        let mut graphs = self.graphs(format)?;
        if graphs.len() != 1 {
            return Err(UsageError(format!("expected one graph, input holds {}", graphs.len())).into());
        }
        Ok(graphs.pop().unwrap())
    }
}

/// A vertex set (`[0, 1, 3]`) or a partition (`[[0, 1], [2, 3]]`).
pub enum Certificate {
    Set(VertexSet),
    Partition(VertexPartition),
}

pub fn parse_certificate(text: &str, n: usize) -> Result<Certificate> {
    let bad = |why: &str| UsageError(format!("malformed certificate: {why}"));
    let json: Json = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
    let arr = json.as_array().ok_or_else(|| bad("expected a JSON array"))?;
    let index = |v: &Json| -> Result<usize> {
        Ok(v.as_u64().ok_or_else(|| bad("vertex ids must be non-negative integers"))? as usize)
    };
    if arr.iter().all(Json::is_array) && !arr.is_empty() {
        let classes = arr
            .iter()
            .map(|c| c.as_array().unwrap().iter().map(index).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        let p = VertexPartition::from_classes(n, &classes).map_err(|e| bad(&e.to_string()))?;
        Ok(Certificate::Partition(p))
    } else {
        let members = arr.iter().map(index).collect::<Result<Vec<usize>>>()?;
        let s = VertexSet::from_members(n, members).map_err(|e| bad(&e.to_string()))?;
        Ok(Certificate::Set(s))
    }
}
