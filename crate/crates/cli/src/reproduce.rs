//! Built-in golden checks: each id recomputes one of the worked examples
//! shipped with the calculus and compares against frozen expectations.

use std::collections::BTreeSet;

use orbitflops_core::{equivalence_class, moves_from, GraphShape, MarkedDiagram, WallKind};

use crate::output::paint;

pub const EXAMPLE_IDS: [&str; 4] = ["example-3.7", "example-4.6", "example-4.7", "example-4.8"];

pub struct Outcome {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn print(&self) {
        let verdict = if self.passed {
            paint("PASS", "32;1")
        } else {
            paint("FAIL", "31;1")
        };
        println!("{}: {} - {}", self.id, verdict, self.detail);
    }
}

fn diag(s: &str) -> MarkedDiagram {
    s.parse().expect("builtin diagram")
}

fn check(id: &'static str, failures: Vec<String>, ok_detail: &str) -> Outcome {
    if failures.is_empty() {
        Outcome {
            id,
            passed: true,
            detail: ok_detail.to_string(),
        }
    } else {
        Outcome {
            id,
            passed: false,
            detail: failures.join("; "),
        }
    }
}

/// `B3[2,3]` moves at pivot 2 to `B3[1,3]`.
fn example_3_7() -> Outcome {
    let moves = moves_from(&diag("B3[2,3]"));
    let mut failures = Vec::new();
    match moves.iter().find(|m| m.pivot == 2) {
        Some(m) => {
            if m.target != diag("B3[1,3]") {
                failures.push(format!("pivot 2 lands on {}, expected B3[1,3]", m.target));
            }
            if m.contraction != diag("B3[3]") {
                failures.push(format!("contraction is {}", m.contraction));
            }
        }
        None => failures.push("no move at pivot 2".to_string()),
    }
    check(
        "example-3.7",
        failures,
        "B3[2,3] is adjacent to B3[1,3] by the contraction B3[3]",
    )
}

/// The class of `A5[1,3]`: six chambers in a cycle, no divisorial walls.
fn example_4_6() -> Outcome {
    let g = equivalence_class(&diag("A5[1,3]"));
    let report = g.report();
    let mut failures = Vec::new();
    let got: BTreeSet<String> = g.nodes.iter().map(|n| n.diagram.to_string()).collect();
    let want: BTreeSet<String> = [
        "A5[1,3]", "A5[1,4]", "A5[3,4]", "A5[3,5]", "A5[2,5]", "A5[2,3]",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    if got != want {
        failures.push(format!("nodes {got:?}"));
    }
    if report.nodes != 6 || report.edges != 6 {
        failures.push(format!("{} nodes, {} edges", report.nodes, report.edges));
    }
    if report.shape != GraphShape::Cycle {
        failures.push(format!("shape {}", report.shape));
    }
    if report.divisorial_walls != 0 {
        failures.push(format!("{} divisorial walls", report.divisorial_walls));
    }
    check(
        "example-4.6",
        failures,
        "A5[1,3] generates 6 chambers in a cycle with no divisorial walls",
    )
}

/// The class of `D5[5,3]`: four chambers in a path, one divisorial wall at
/// each end chamber.
fn example_4_7() -> Outcome {
    let g = equivalence_class(&diag("D5[5,3]"));
    let report = g.report();
    let mut failures = Vec::new();
    let got: BTreeSet<String> = g.nodes.iter().map(|n| n.diagram.to_string()).collect();
    let want: BTreeSet<String> = ["D5[3,5]", "D5[2,5]", "D5[2,4]", "D5[3,4]"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    if got != want {
        failures.push(format!("nodes {got:?}"));
    }
    if report.nodes != 4 || report.shape != GraphShape::Path {
        failures.push(format!("{} nodes, shape {}", report.nodes, report.shape));
    }
    for (i, node) in g.nodes.iter().enumerate() {
        let degree = g.edges.iter().filter(|e| e.from == i || e.to == i).count();
        let divisorial = node
            .walls
            .iter()
            .filter(|w| w.kind == WallKind::Divisorial)
            .count();
        let expected = if degree == 1 { 1 } else { 0 };
        if divisorial != expected {
            failures.push(format!(
                "{} has {divisorial} divisorial walls, expected {expected}",
                node.diagram
            ));
        }
    }
    check(
        "example-4.7",
        failures,
        "D5[5,3] generates 4 chambers in a path; end chambers carry one divisorial wall each",
    )
}

/// The class of `E6[1,3]`: a path through `E6[1,2]` and `E6[2,6]` to `E6[5,6]` with
/// edge labels D5, A(6,1), D5.
fn example_4_8() -> Outcome {
    let g = equivalence_class(&diag("E6[1,3]"));
    let mut failures = Vec::new();
    let order: Vec<String> = g.nodes.iter().map(|n| n.diagram.to_string()).collect();
    if order != ["E6[1,3]", "E6[1,2]", "E6[2,6]", "E6[5,6]"] {
        failures.push(format!("nodes {order:?}"));
    }
    let labels: Vec<String> = g.edges.iter().map(|e| e.flop.label()).collect();
    if labels != ["D5", "A(6,1)", "D5"] {
        failures.push(format!("edge labels {labels:?}"));
    }
    if g.report().shape != GraphShape::Path {
        failures.push(format!("shape {}", g.report().shape));
    }
    check(
        "example-4.8",
        failures,
        "E6[1,3] generates a 4-chamber path with flops D5, A(6,1), D5",
    )
}

pub fn run(id: &str) -> Option<Vec<Outcome>> {
    match id {
        "example-3.7" => Some(vec![example_3_7()]),
        "example-4.6" => Some(vec![example_4_6()]),
        "example-4.7" => Some(vec![example_4_7()]),
        "example-4.8" => Some(vec![example_4_8()]),
        "all" => Some(vec![
            example_3_7(),
            example_4_6(),
            example_4_7(),
            example_4_8(),
        ]),
        _ => None,
    }
}
