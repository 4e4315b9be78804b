//! File formats: tree JSON, matrix CSV, DOT export and campaign reports.
//!
//! Tree JSON:
//!
//! ```json
//! { "vertices": ["a", "b"], "labels": { "a": "1/2", "b": "0" }, "edges": [["a", "b"]] }
//! ```
//!
//! Matrix CSV has the point identifiers as its first row and one row of
//! rational strings per point after it. Rationals are always written as
//! `p/q` (integers without a denominator) and decimals are rejected.

use std::fmt::Write as _;

use crate::explorer::CampaignReport;
use crate::metric::{
    diametrical_graph, multipartite_parts, spanning_star, validate_ultrametric, FiniteUltrametricSpace, MetricError,
};
use crate::rational::{ParseRationalError, Rational};
use crate::tree::{validate_tree, LabeledTree, RawTree, TreeError};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("invalid tree JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid matrix CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("matrix CSV has no header row")]
    EmptyCsv,
    #[error("matrix entry at row {row}, column {col}: {source}")]
    Entry { row: usize, col: usize, source: ParseRationalError },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn parse_tree_json(text: &str) -> Result<LabeledTree, IoError> {
    let raw: RawTree = serde_json::from_str(text)?;
    Ok(validate_tree(&raw)?)
}

/// Only parses; the tree is validated later so that degenerate labelings can
/// still be inspected.
pub fn parse_raw_tree_json(text: &str) -> Result<RawTree, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn tree_to_json(t: &LabeledTree) -> String {
    let mut s = serde_json::to_string_pretty(&t.to_raw()).expect("tree serializes");
    s.push('\n');
    s
}

pub fn parse_matrix_csv(text: &str) -> Result<FiniteUltrametricSpace, IoError> {
    let mut reader =
        csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = records.next().ok_or(IoError::EmptyCsv)??;
    let points: Vec<String> = header.iter().map(str::to_owned).collect();
    let mut matrix = Vec::with_capacity(points.len());
    for (row, record) in records.enumerate() {
        let record = record?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        let entries = record
            .iter()
            .enumerate()
            .map(|(col, cell)| cell.parse::<Rational>().map_err(|source| IoError::Entry { row, col, source }))
            .collect::<Result<Vec<_>, _>>()?;
        matrix.push(entries);
    }
    Ok(validate_ultrametric(points, matrix)?)
}

pub fn matrix_to_csv(s: &FiniteUltrametricSpace) -> String {
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    writer.write_record(s.points()).expect("in-memory write");
    for row in s.to_matrix() {
        writer.write_record(row.iter().map(ToString::to_string)).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8")
}

const PALETTE: [&str; 8] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"];

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering of the diametrical graph. Nodes of the same part share a
/// fill color and the spanning-star center, if any, is drawn as a double
/// circle labeled `star center`.
pub fn diametrical_dot(s: &FiniteUltrametricSpace) -> String {
    let g = diametrical_graph(s);
    let parts = multipartite_parts(&g).ok();
    let star = spanning_star(&g);
    let mut out = String::new();
    writeln!(out, "graph diametrical {{").unwrap();
    writeln!(out, "  // diam = {}", g.diameter()).unwrap();
    writeln!(out, "  node [style=filled];").unwrap();
    for (i, id) in s.points().iter().enumerate() {
        let mut attrs = Vec::new();
        if let Some(p) = parts.as_ref().and_then(|d| d.part_of(i)) {
            attrs.push(format!("fillcolor=\"{}\"", PALETTE[p % PALETTE.len()]));
            attrs.push(format!("group=\"part{}\"", p + 1));
        }
        if star.is_some_and(|c| c.center == i) {
            attrs.push("shape=doublecircle".to_owned());
            attrs.push("xlabel=\"star center\"".to_owned());
        }
        writeln!(out, "  {} [{}];", quote(id), attrs.join(", ")).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {} -- {};", quote(s.point(u)), quote(s.point(v))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn report_to_json(report: &CampaignReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
