//! The adjacency move on marked diagrams, its equivalence classes and the
//! resulting chamber structure.
//!
//! A single-marked component is *flippable* when its (type, mark position)
//! lies in the small list admitting a dual marking: a chain `A_m` marked off
//! center, an odd-rank `D_m` marked at a fork vertex, or `E6` marked at one
//! of `1, 6, 3, 5`. A move isolates one mark, replaces its flippable
//! component by the dual marking and leaves everything else untouched.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::diagram::{delete_vertices, Family, MarkedDiagram, SingleMarkedComponent};

/// Flop type of a dual pair of single-marked components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlopKind {
    /// Chain of rank `n - 1` marked at position `k` (so `k != n - k`).
    A { n: usize, k: usize },
    /// `D_n` with odd `n >= 5`, marked at a fork vertex.
    D { n: usize },
    /// `E6` marked at an end of the long chain (1 or 6).
    E6I,
    /// `E6` marked next to an end of the long chain (3 or 5).
    E6II,
}

impl FlopKind {
    /// Orientation-independent form: `A(n,k)` and `A(n,n-k)` name the same
    /// flop, so edge labels use the smaller `k`.
    pub fn canonical(self) -> FlopKind {
        match self {
            FlopKind::A { n, k } => FlopKind::A { n, k: k.min(n - k) },
            other => other,
        }
    }

    pub fn label(self) -> String {
        match self {
            FlopKind::A { n, k } => format!("A({n},{k})"),
            FlopKind::D { n } => format!("D{n}"),
            FlopKind::E6I => "E6,I".to_string(),
            FlopKind::E6II => "E6,II".to_string(),
        }
    }
}

impl fmt::Display for FlopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for FlopKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// A flippable single marking: its flop type and the dual mark position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlipClass {
    pub kind: FlopKind,
    /// Ambient vertex carrying the mark of the dual diagram.
    pub dual_mark: usize,
}

/// Flip type of a single-marked component, or `None` when the marking
/// admits no dual.
pub fn classify_single(c: &SingleMarkedComponent) -> Option<FlipClass> {
    let ty = c.underlying.ty;
    let m = ty.rank();
    let pos = c.mark_position();
    let kind = match ty.family() {
        Family::A => {
            if 2 * pos == m + 1 {
                return None;
            }
            FlopKind::A { n: m + 1, k: pos }
        }
        Family::D if m % 2 == 1 && pos >= m - 1 => FlopKind::D { n: m },
        Family::E if m == 6 && matches!(pos, 1 | 6) => FlopKind::E6I,
        Family::E if m == 6 && matches!(pos, 3 | 5) => FlopKind::E6II,
        _ => return None,
    };
    let sigma = c.involution().expect("flippable types have an involution");
    Some(FlipClass {
        kind,
        dual_mark: sigma[&c.mark],
    })
}

/// One application of the adjacency move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMove {
    pub source: MarkedDiagram,
    /// The mark that flips.
    pub pivot: usize,
    pub target: MarkedDiagram,
    pub flop: FlopKind,
    /// The shared contraction: `source` with the pivot unmarked.
    pub contraction: MarkedDiagram,
}

/// All adjacency moves out of `d`, in ascending pivot order.
///
/// For each mark `v`: remove the other marks, classify the component of `v`,
/// and when it is flippable move the mark to its dual position.
pub fn moves_from(d: &MarkedDiagram) -> Vec<AdjacencyMove> {
    let mut moves = Vec::new();
    for &pivot in d.marks() {
        let removed: BTreeSet<usize> = d.marks().iter().copied().filter(|&m| m != pivot).collect();
        let components = delete_vertices(d, &removed).expect("marks are vertices");
        let component = components
            .into_iter()
            .find(|c| c.contains(pivot))
            .expect("pivot survives");
        let single = SingleMarkedComponent::try_from(component).expect("one surviving mark");
        if let Some(flip) = classify_single(&single) {
            let mut marks = d.marks().clone();
            marks.remove(&pivot);
            marks.insert(flip.dual_mark);
            let target = MarkedDiagram::new(d.ty(), marks).expect("dual mark is a vertex");
            moves.push(AdjacencyMove {
                source: d.clone(),
                pivot,
                target,
                flop: flip.kind,
                contraction: d.unmark(pivot),
            });
        }
    }
    moves
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum WallKind {
    /// Face shared with the adjacent chamber reached by the move at this pivot.
    Flop,
    /// Face of no other chamber; a divisorial contraction under the standing
    /// degree-one hypothesis.
    Divisorial,
}

/// One codimension-1 face of a chamber; a chamber has one wall per mark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub pivot: usize,
    pub kind: WallKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlopNode {
    pub diagram: MarkedDiagram,
    pub walls: Vec<Wall>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlopEdge {
    /// Node indices in discovery order.
    pub from: usize,
    pub to: usize,
    /// Pivot in the `from` diagram.
    pub pivot: usize,
    #[serde(rename = "type")]
    pub flop: FlopKind,
    #[serde(skip)]
    pub contraction: MarkedDiagram,
}

/// The equivalence class of a marked diagram: nodes are the equivalent
/// diagrams, edges the moves between them, walls the chamber faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlopGraph {
    pub nodes: Vec<FlopNode>,
    pub edges: Vec<FlopEdge>,
}

/// Breadth-first closure of `moves_from` starting at `seed`.
///
/// Nodes are deduplicated by their mark set, edges up to reversal (two
/// directions of a move share the node pair and the contraction). Discovery
/// order is deterministic: BFS with moves in ascending pivot order.
pub fn equivalence_class(seed: &MarkedDiagram) -> FlopGraph {
    let mut index: HashMap<MarkedDiagram, usize> = HashMap::new();
    let mut nodes: Vec<FlopNode> = Vec::new();
    let mut edges: Vec<FlopEdge> = Vec::new();
    let mut seen_edges: HashSet<(usize, usize, BTreeSet<usize>)> = HashSet::new();
    let mut queue = VecDeque::new();

    index.insert(seed.clone(), 0);
    nodes.push(FlopNode {
        diagram: seed.clone(),
        walls: Vec::new(),
    });
    queue.push_back(0);

    while let Some(i) = queue.pop_front() {
        let diagram = nodes[i].diagram.clone();
        let moves = moves_from(&diagram);
        let flop_pivots: BTreeSet<usize> = moves.iter().map(|m| m.pivot).collect();
        nodes[i].walls = diagram
            .marks()
            .iter()
            .map(|&pivot| Wall {
                pivot,
                kind: if flop_pivots.contains(&pivot) {
                    WallKind::Flop
                } else {
                    WallKind::Divisorial
                },
            })
            .collect();
        for mv in moves {
            let j = *index.entry(mv.target.clone()).or_insert_with(|| {
                nodes.push(FlopNode {
                    diagram: mv.target.clone(),
                    walls: Vec::new(),
                });
                queue.push_back(nodes.len() - 1);
                nodes.len() - 1
            });
            let key = (i.min(j), i.max(j), mv.contraction.marks().clone());
            if seen_edges.insert(key) {
                edges.push(FlopEdge {
                    from: i,
                    to: j,
                    pivot: mv.pivot,
                    flop: mv.flop.canonical(),
                    contraction: mv.contraction,
                });
            }
        }
    }
    FlopGraph { nodes, edges }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphShape {
    Cycle,
    Path,
    Tree,
    Other,
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphShape::Cycle => "cycle",
            GraphShape::Path => "path",
            GraphShape::Tree => "tree",
            GraphShape::Other => "other",
        };
        f.write_str(s)
    }
}

/// Wall classification assumes the Springer map of the seed has degree 1;
/// the calculus does not verify that hypothesis.
pub const DEGREE_ONE_NOTE: &str =
    "wall classification assumes a degree-1 Springer map; degrees are not verified here";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub diagram: MarkedDiagram,
    /// Number of codimension-1 faces of the chamber.
    pub mark_count: usize,
    pub walls: Vec<Wall>,
}

/// Summary of the chamber structure carried by a flop graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChamberReport {
    pub nodes: usize,
    pub edges: usize,
    pub shape: GraphShape,
    /// Canonical edge label -> multiplicity.
    pub flop_types: BTreeMap<String, usize>,
    pub divisorial_walls: usize,
    pub per_node: Vec<NodeReport>,
    pub note: &'static str,
}

impl FlopGraph {
    pub fn report(&self) -> ChamberReport {
        let mut degree = vec![0usize; self.nodes.len()];
        let mut flop_types: BTreeMap<String, usize> = BTreeMap::new();
        for e in &self.edges {
            degree[e.from] += 1;
            degree[e.to] += 1;
            *flop_types.entry(e.flop.label()).or_default() += 1;
        }
        let n = self.nodes.len();
        let m = self.edges.len();
        let shape = if m + 1 == n {
            if degree.iter().all(|&d| d <= 2) {
                GraphShape::Path
            } else {
                GraphShape::Tree
            }
        } else if m == n && degree.iter().all(|&d| d == 2) {
            GraphShape::Cycle
        } else {
            GraphShape::Other
        };
        let divisorial_walls = self
            .nodes
            .iter()
            .flat_map(|node| &node.walls)
            .filter(|w| w.kind == WallKind::Divisorial)
            .count();
        ChamberReport {
            nodes: n,
            edges: m,
            shape,
            flop_types,
            divisorial_walls,
            per_node: self
                .nodes
                .iter()
                .map(|node| NodeReport {
                    diagram: node.diagram.clone(),
                    mark_count: node.diagram.marks().len(),
                    walls: node.walls.clone(),
                })
                .collect(),
            note: DEGREE_ONE_NOTE,
        }
    }

    /// Deterministic Graphviz rendering; nodes carry the compact diagram
    /// form, edges their flop type.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph orbit_class {\n  node [shape=box];\n");
        for (i, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{} [label=\"{}\"];\n", i, node.diagram));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -- n{} [label=\"{}\"];\n",
                e.from,
                e.to,
                e.flop.label()
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn diag(s: &str) -> MarkedDiagram {
        s.parse().unwrap()
    }

    fn single(s: &str) -> SingleMarkedComponent {
        let d = diag(s);
        let comps = delete_vertices(&d, &BTreeSet::new()).unwrap();
        SingleMarkedComponent::try_from(comps.into_iter().next().unwrap()).unwrap()
    }

    #[test]
    fn classify_list_members() {
        let flip = classify_single(&single("A5[2]")).unwrap();
        assert_eq!(flip.kind, FlopKind::A { n: 6, k: 2 });
        assert_eq!(flip.dual_mark, 4);

        assert!(classify_single(&single("A3[2]")).is_none());

        let flip = classify_single(&single("D5[5]")).unwrap();
        assert_eq!(flip.kind, FlopKind::D { n: 5 });
        assert_eq!(flip.dual_mark, 4);

        assert!(classify_single(&single("D4[3]")).is_none());
        assert!(classify_single(&single("D5[2]")).is_none());

        let flip = classify_single(&single("E6[3]")).unwrap();
        assert_eq!(flip.kind, FlopKind::E6II);
        assert_eq!(flip.dual_mark, 5);
        let flip = classify_single(&single("E6[1]")).unwrap();
        assert_eq!(flip.kind, FlopKind::E6I);
        assert_eq!(flip.dual_mark, 6);
        assert!(classify_single(&single("E6[2]")).is_none());

        assert!(classify_single(&single("G2[1]")).is_none());
        assert!(classify_single(&single("B4[2]")).is_none());
        assert!(classify_single(&single("F4[2]")).is_none());
        assert!(classify_single(&single("E7[7]")).is_none());
    }

    #[test]
    fn moves_from_a5() {
        let moves = moves_from(&diag("A5[1,3]"));
        assert_eq!(moves.len(), 2);
        assert_eq!(moves[0].pivot, 1);
        assert_eq!(moves[0].target, diag("A5[2,3]"));
        assert_eq!(moves[0].flop, FlopKind::A { n: 3, k: 1 });
        assert_eq!(moves[1].pivot, 3);
        assert_eq!(moves[1].target, diag("A5[1,4]"));
        assert_eq!(moves[1].flop, FlopKind::A { n: 5, k: 2 });
        assert_eq!(moves[1].contraction, diag("A5[1]"));
    }

    #[test]
    fn moves_from_b3() {
        let moves = moves_from(&diag("B3[2,3]"));
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].pivot, 2);
        assert_eq!(moves[0].target, diag("B3[1,3]"));
    }

    #[test]
    fn moves_from_trivial() {
        assert!(moves_from(&diag("A1[1]")).is_empty());
        assert!(moves_from(&diag("G2[1]")).is_empty());
    }

    #[test]
    fn moves_from_e6() {
        let moves = moves_from(&diag("E6[1,3]"));
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].pivot, 3);
        assert_eq!(moves[0].target, diag("E6[1,2]"));
        assert_eq!(moves[0].flop, FlopKind::D { n: 5 });
    }

    #[test]
    fn class_of_a5_is_a_hexagon() {
        let g = equivalence_class(&diag("A5[1,3]"));
        assert_eq!(g.nodes.len(), 6);
        assert_eq!(g.edges.len(), 6);
        let marks: BTreeSet<String> = g.nodes.iter().map(|n| n.diagram.to_string()).collect();
        let expected: BTreeSet<String> = [
            "A5[1,3]", "A5[1,4]", "A5[3,4]", "A5[3,5]", "A5[2,5]", "A5[2,3]",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        assert_eq!(marks, expected);
        let report = g.report();
        assert_eq!(report.shape, GraphShape::Cycle);
        assert_eq!(report.divisorial_walls, 0);
    }

    #[test]
    fn class_of_d5_is_a_path() {
        let g = equivalence_class(&diag("D5[5,3]"));
        assert_eq!(g.nodes.len(), 4);
        let report = g.report();
        assert_eq!(report.shape, GraphShape::Path);
        assert_eq!(report.divisorial_walls, 2);
        assert_eq!(report.per_node.len(), 4);
        assert!(report.per_node.iter().all(|n| n.mark_count == 2));
        assert!(report.flop_types.values().sum::<usize>() == report.edges);
        // End chambers carry one divisorial wall each, interior none.
        for node in &g.nodes {
            let div = node
                .walls
                .iter()
                .filter(|w| w.kind == WallKind::Divisorial)
                .count();
            let degree = g
                .edges
                .iter()
                .filter(|e| {
                    g.nodes[e.from].diagram == node.diagram || g.nodes[e.to].diagram == node.diagram
                })
                .count();
            assert_eq!(div, 2 - degree);
        }
    }

    #[test]
    fn class_of_e6_with_labels() {
        let g = equivalence_class(&diag("E6[1,3]"));
        let order: Vec<String> = g.nodes.iter().map(|n| n.diagram.to_string()).collect();
        assert_eq!(order, vec!["E6[1,3]", "E6[1,2]", "E6[2,6]", "E6[5,6]"]);
        let labels: Vec<String> = g.edges.iter().map(|e| e.flop.label()).collect();
        assert_eq!(labels, vec!["D5", "A(6,1)", "D5"]);
        assert_eq!(g.report().shape, GraphShape::Path);
    }

    #[test]
    fn singleton_class() {
        let g = equivalence_class(&diag("G2[1]"));
        assert_eq!(g.nodes.len(), 1);
        assert_eq!(g.edges.len(), 0);
        let report = g.report();
        assert_eq!(report.shape, GraphShape::Path);
        assert_eq!(report.divisorial_walls, 1);
    }

    #[test]
    fn dot_is_deterministic() {
        let g = equivalence_class(&diag("A3[1]"));
        let dot = g.to_dot();
        assert!(dot.contains("n0 [label=\"A3[1]\"]"));
        assert!(dot.contains("n0 -- n1 [label=\"A(4,1)\"]"));
        assert_eq!(dot, equivalence_class(&diag("A3[1]")).to_dot());
    }

    #[test]
    fn canonical_labels() {
        assert_eq!(
            FlopKind::A { n: 6, k: 4 }.canonical(),
            FlopKind::A { n: 6, k: 2 }
        );
        assert_eq!(FlopKind::A { n: 6, k: 2 }.label(), "A(6,2)");
        assert_eq!(FlopKind::D { n: 5 }.label(), "D5");
        assert_eq!(FlopKind::E6I.label(), "E6,I");
        assert_eq!(FlopKind::E6II.label(), "E6,II");
    }
}
