//! Output rendering. Every JSON document carries a top-level
//! `"schema": "orbitflops/1"` key; text rendering is plain ASCII unless
//! `ORBITFLOPS_COLOR=1` turns on ANSI styling.

use serde::Serialize;
use std::collections::BTreeMap;

use orbitflops_core::{ChamberReport, FlopGraph, GraphShape, MarkedDiagram, WallKind};

pub const SCHEMA: &str = "orbitflops/1";

pub fn color_enabled() -> bool {
    std::env::var("ORBITFLOPS_COLOR").as_deref() == Ok("1")
}

pub fn paint(s: &str, code: &str) -> String {
    if color_enabled() {
        format!("\x1b[{code}m{s}\x1b[0m")
    } else {
        s.to_string()
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

#[derive(Serialize)]
pub struct ClassifyDoc {
    pub schema: &'static str,
    pub diagram: MarkedDiagram,
    pub flippable: bool,
    #[serde(rename = "type")]
    pub flop_type: Option<String>,
    pub dual_mark: Option<usize>,
}

#[derive(Serialize)]
pub struct MoveDoc {
    pub pivot: usize,
    pub target: MarkedDiagram,
    #[serde(rename = "type")]
    pub flop_type: String,
    pub contraction: MarkedDiagram,
}

#[derive(Serialize)]
pub struct MovesDoc {
    pub schema: &'static str,
    pub diagram: MarkedDiagram,
    pub moves: Vec<MoveDoc>,
}

#[derive(Serialize)]
pub struct ReportSummary {
    pub nodes: usize,
    pub edges: usize,
    pub shape: GraphShape,
    pub flop_types: BTreeMap<String, usize>,
    pub divisorial_walls: usize,
    pub note: &'static str,
}

impl From<&ChamberReport> for ReportSummary {
    fn from(r: &ChamberReport) -> Self {
        ReportSummary {
            nodes: r.nodes,
            edges: r.edges,
            shape: r.shape,
            flop_types: r.flop_types.clone(),
            divisorial_walls: r.divisorial_walls,
            note: r.note,
        }
    }
}

#[derive(Serialize)]
pub struct OrbitClassDoc<'a> {
    pub schema: &'static str,
    pub seed: &'a MarkedDiagram,
    pub nodes: &'a [orbitflops_core::FlopNode],
    pub edges: &'a [orbitflops_core::FlopEdge],
    pub report: ReportSummary,
}

pub fn graph_text(graph: &FlopGraph) -> String {
    let report = graph.report();
    let seed = &graph.nodes[0].diagram;
    let mut out = String::new();
    out.push_str(&format!(
        "class of {seed}: {} chamber{}, {} flop edge{}, shape: {}\n",
        report.nodes,
        plural(report.nodes),
        report.edges,
        plural(report.edges),
        report.shape,
    ));
    if !report.flop_types.is_empty() {
        let types: Vec<String> = report
            .flop_types
            .iter()
            .map(|(label, count)| format!("{label} x{count}"))
            .collect();
        out.push_str(&format!("flop types: {}\n", types.join(", ")));
    }
    out.push_str("nodes:\n");
    for (i, node) in graph.nodes.iter().enumerate() {
        let walls: Vec<String> = node
            .walls
            .iter()
            .map(|w| match w.kind {
                WallKind::Flop => format!("{}={}", w.pivot, paint("FLOP", "32")),
                WallKind::Divisorial => format!("{}={}", w.pivot, paint("DIVISORIAL", "33")),
            })
            .collect();
        out.push_str(&format!(
            "  {i}: {}  walls: {}\n",
            node.diagram,
            walls.join(" ")
        ));
    }
    if !graph.edges.is_empty() {
        out.push_str("edges:\n");
        for e in &graph.edges {
            out.push_str(&format!(
                "  {} -- {}  pivot {}  {}\n",
                e.from,
                e.to,
                e.pivot,
                e.flop.label()
            ));
        }
    }
    out.push_str(&format!("note: {}\n", report.note));
    out
}

fn plural(n: usize) -> &'static str {
    if n == 1 {
        ""
    } else {
        "s"
    }
}
