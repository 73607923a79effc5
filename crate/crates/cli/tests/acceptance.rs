//! Acceptance gate: one test per criterion, each printing a PASS line and
//! enforcing its runtime budget. Criteria 1-3 drive the installed binary;
//! the rest exercise the library underneath it.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use orbitflops_core::{
    boundary_codim2, classify_single, codim2_witness, collapse, degree_one_parity, delete_vertices,
    equivalence_class, moves_from, orbit_dim, richardson, springer_resolvable, ClassicalFamily,
    DegreeParity, DynkinType, Family, MarkedDiagram, Partition, Richardson, SingleMarkedComponent,
    WallKind,
};

fn diag(s: &str) -> MarkedDiagram {
    s.parse().unwrap()
}

fn cli_json(args: &[&str]) -> serde_json::Value {
    let out = Command::new(env!("CARGO_BIN_EXE_orbitflops"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {:?}", out);
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn mark_sets(doc: &serde_json::Value) -> Vec<Vec<u64>> {
    doc["nodes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| {
            n["diagram"]["marks"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect()
        })
        .collect()
}

fn divisorial_count(node: &serde_json::Value) -> usize {
    node["walls"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|w| w["kind"] == "DIVISORIAL")
        .count()
}

fn finish(criterion: &str, start: Instant, budget: Duration, detail: &str) {
    let elapsed = start.elapsed();
    println!("{criterion}: PASS - {detail} ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_hexagon_class_of_a5_13() {
    let start = Instant::now();
    let doc = cli_json(&["orbit-class", "A5[1,3]", "--format", "json"]);
    let got: BTreeSet<Vec<u64>> = mark_sets(&doc).into_iter().collect();
    let want: BTreeSet<Vec<u64>> = [
        vec![1, 3],
        vec![1, 4],
        vec![3, 4],
        vec![3, 5],
        vec![2, 5],
        vec![2, 3],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 6);
    assert_eq!(doc["report"]["shape"], "cycle");
    assert_eq!(doc["report"]["divisorial_walls"], 0);
    for node in doc["nodes"].as_array().unwrap() {
        assert_eq!(divisorial_count(node), 0);
    }
    finish(
        "criterion 1",
        start,
        Duration::from_secs(1),
        "orbit-class A5[1,3]: 6 chambers in a cycle, no divisorial walls",
    );
}

#[test]
fn criterion_02_path_class_of_d5_53() {
    let start = Instant::now();
    let doc = cli_json(&["orbit-class", "D5[5,3]", "--format", "json"]);
    let nodes = doc["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 4);
    assert_eq!(doc["report"]["shape"], "path");
    let edges = doc["edges"].as_array().unwrap();
    for (i, node) in nodes.iter().enumerate() {
        let degree = edges
            .iter()
            .filter(|e| e["from"] == i as u64 || e["to"] == i as u64)
            .count();
        let expected = if degree == 1 { 1 } else { 0 };
        assert_eq!(divisorial_count(node), expected, "node {i}");
    }
    finish(
        "criterion 2",
        start,
        Duration::from_secs(1),
        "orbit-class D5[5,3]: 4-chamber path, one divisorial wall per end chamber",
    );
}

#[test]
fn criterion_03_path_class_of_e6_13() {
    let start = Instant::now();
    let doc = cli_json(&["orbit-class", "E6[1,3]", "--format", "json"]);
    assert_eq!(
        mark_sets(&doc),
        vec![vec![1, 3], vec![1, 2], vec![2, 6], vec![5, 6]]
    );
    assert_eq!(doc["report"]["shape"], "path");
    let labels: Vec<&str> = doc["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["type"].as_str().unwrap())
        .collect();
    assert_eq!(labels, vec!["D5", "A(6,1)", "D5"]);
    finish(
        "criterion 3",
        start,
        Duration::from_secs(1),
        "orbit-class E6[1,3]: path with ordered flop labels D5, A(6,1), D5",
    );
}

#[test]
fn criterion_04_b3_adjacency() {
    let start = Instant::now();
    let moves = moves_from(&diag("B3[2,3]"));
    assert!(
        moves
            .iter()
            .any(|m| m.pivot == 2 && m.target == diag("B3[1,3]")),
        "missing the pivot-2 move to B3[1,3]"
    );
    finish(
        "criterion 4",
        start,
        Duration::from_secs(1),
        "moves_from(B3[2,3]) contains pivot 2 -> B3[1,3]",
    );
}

#[test]
fn criterion_05_classifier_scan_rank_8() {
    let start = Instant::now();
    let expected = |ty: DynkinType, mark: usize| -> bool {
        let n = ty.rank();
        match ty.family() {
            Family::A => 2 * mark != n + 1,
            Family::D => n % 2 == 1 && mark >= n - 1,
            Family::E if n == 6 => matches!(mark, 1 | 3 | 5 | 6),
            _ => false,
        }
    };
    let single = |ty: DynkinType, mark: usize| -> SingleMarkedComponent {
        let d = MarkedDiagram::new(ty, [mark]).unwrap();
        let comps = delete_vertices(&d, &BTreeSet::new()).unwrap();
        SingleMarkedComponent::try_from(comps.into_iter().next().unwrap()).unwrap()
    };
    let mut scanned = 0;
    for ty in DynkinType::enumerate(8) {
        for mark in ty.vertices() {
            let flip = classify_single(&single(ty, mark));
            assert_eq!(flip.is_some(), expected(ty, mark), "{ty} mark {mark}");
            if let Some(flip) = flip {
                let back = classify_single(&single(ty, flip.dual_mark))
                    .expect("dual marking is flippable");
                assert_eq!(back.dual_mark, mark, "duality must be an involution");
                assert_eq!(back.kind.canonical(), flip.kind.canonical());
            }
            scanned += 1;
        }
    }
    finish(
        "criterion 5",
        start,
        Duration::from_secs(5),
        &format!("classifier agrees with the flip list on {scanned} single markings"),
    );
}

#[test]
fn criterion_06_codim2_witnesses() {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=12 {
        for fam in [
            ClassicalFamily::B(n),
            ClassicalFamily::C(n),
            ClassicalFamily::D(n),
        ] {
            for k in 1..=n {
                if degree_one_parity(fam, k).unwrap() == DegreeParity::DegreeGtOne {
                    continue;
                }
                if matches!(fam, ClassicalFamily::D(_)) && k == n {
                    continue;
                }
                let pair = codim2_witness(fam, k).unwrap();
                let top = orbit_dim(fam, &pair.richardson).unwrap();
                let below = orbit_dim(fam, &pair.witness).unwrap();
                assert_eq!(top - below, 2, "{fam} k={k}");
                assert!(pair.richardson.dominates(&pair.witness), "{fam} k={k}");
                checked += 1;
            }
        }
    }
    finish(
        "criterion 6",
        start,
        Duration::from_secs(5),
        &format!("dim(richardson) - dim(witness) = 2 and dominance hold in all {checked} cases"),
    );
}

fn partitions_of(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions_of(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn has_parity_type(fam: ClassicalFamily, parts: &[usize]) -> bool {
    let bad = |p: usize| match fam {
        ClassicalFamily::B(_) | ClassicalFamily::D(_) => p.is_multiple_of(2),
        ClassicalFamily::C(_) => p % 2 == 1,
        ClassicalFamily::A(_) => false,
    };
    parts
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .filter(|&v| bad(v))
        .all(|v| parts.iter().filter(|&&q| q == v).count() % 2 == 0)
}

#[test]
fn criterion_07_collapse_against_brute_force() {
    let start = Instant::now();
    let mut checked = 0;
    for total in 1..=14 {
        let families: Vec<ClassicalFamily> = if total % 2 == 1 {
            if total >= 3 {
                vec![ClassicalFamily::B((total - 1) / 2)]
            } else {
                vec![]
            }
        } else {
            vec![ClassicalFamily::C(total / 2), ClassicalFamily::D(total / 2)]
        };
        let all = partitions_of(total, total);
        for parts in &all {
            let p = Partition::new(parts.clone()).unwrap();
            for &fam in &families {
                let got = collapse(fam, &p).unwrap();
                // Brute force: dominance-maximal parity-typed partition below p.
                let candidates: Vec<Partition> = all
                    .iter()
                    .filter(|q| has_parity_type(fam, q))
                    .map(|q| Partition::new(q.clone()).unwrap())
                    .filter(|q| p.dominates(q))
                    .collect();
                let maximal: Vec<&Partition> = candidates
                    .iter()
                    .filter(|c| candidates.iter().all(|d| d == *c || !d.dominates(c)))
                    .collect();
                assert_eq!(maximal.len(), 1, "{fam} {p}");
                assert_eq!(&got, maximal[0], "{fam} {p}");
                assert_eq!(collapse(fam, &got).unwrap(), got, "idempotence {fam} {p}");
                if has_parity_type(fam, p.parts()) {
                    assert_eq!(got, p, "fixed point {fam} {p}");
                }
                checked += 1;
            }
        }
    }
    finish(
        "criterion 7",
        start,
        Duration::from_secs(30),
        &format!("collapse equals the brute-force maximal dominated partition in {checked} cases"),
    );
}

#[test]
fn criterion_08_dimension_formula_cross_validation() {
    let start = Instant::now();
    let mut checked = 0;
    for total in 1..=10 {
        for parts in partitions_of(total, total) {
            let p = Partition::new(parts.clone()).unwrap();
            let min_sum: usize = parts
                .iter()
                .flat_map(|&a| parts.iter().map(move |&b| a.min(b)))
                .sum();
            let odd = parts.iter().filter(|&&x| x % 2 == 1).count();

            // Type A against n^2 - sum of squared dual parts.
            let dual_sq: usize = p.dual().parts().iter().map(|&x| x * x).sum();
            assert_eq!(
                orbit_dim(ClassicalFamily::A(total), &p).unwrap(),
                total * total - dual_sq
            );
            checked += 1;

            // so/sp against the centralizer oracle.
            let mut fams = Vec::new();
            if total % 2 == 1 && total >= 3 {
                fams.push(ClassicalFamily::B((total - 1) / 2));
            }
            if total % 2 == 0 {
                fams.push(ClassicalFamily::D(total / 2));
                fams.push(ClassicalFamily::C(total / 2));
            }
            for fam in fams {
                if !fam.valid_jordan(&p) {
                    continue;
                }
                let expected = match fam {
                    ClassicalFamily::C(n) => (2 * (2 * n * n + n) - (min_sum + odd)) / 2,
                    _ => {
                        let m = fam.ambient_dim();
                        (m * m - m + odd - min_sum) / 2
                    }
                };
                assert_eq!(orbit_dim(fam, &p).unwrap(), expected, "{fam} {p}");
                checked += 1;
            }
        }
    }
    let b4 = ClassicalFamily::B(4);
    assert_eq!(orbit_dim(b4, &"[3^2,1^3]".parse().unwrap()).unwrap(), 22);
    assert_eq!(orbit_dim(b4, &"[3,2^2,1^2]".parse().unwrap()).unwrap(), 20);
    let c3 = ClassicalFamily::C(3);
    assert_eq!(orbit_dim(c3, &"[2^3]".parse().unwrap()).unwrap(), 12);
    finish(
        "criterion 8",
        start,
        Duration::from_secs(10),
        &format!(
            "orbit_dim matches the centralizer oracle in {checked} cases, pinned values included"
        ),
    );
}

#[test]
fn criterion_09_exceptional_tables() {
    let start = Instant::now();
    for s in ["G2[1]", "G2[2]"] {
        match richardson(&diag(s)).unwrap() {
            Richardson::Orbit(o) => {
                assert_eq!(o.label, "G2(a1)");
                assert_eq!(o.dim, Some(10));
            }
            other => panic!("{s}: unexpected {other:?}"),
        }
    }
    let e6_1 = match richardson(&diag("E6[1]")).unwrap() {
        Richardson::Orbit(o) => o,
        other => panic!("unexpected {other:?}"),
    };
    assert_eq!(e6_1.label, "2A1");
    assert_eq!(e6_1.dim, Some(32));
    let b = boundary_codim2(&e6_1).unwrap();
    assert_eq!(b.boundary.label, "A1");
    assert_eq!(b.boundary.dim, Some(22));
    assert_eq!(b.codim, 10);

    let e6_3 = match richardson(&diag("E6[3]")).unwrap() {
        Richardson::Orbit(o) => o,
        other => panic!("unexpected {other:?}"),
    };
    assert_eq!(e6_3.label, "A2+2A1");
    assert_eq!(e6_3.dim, Some(50));
    let b = boundary_codim2(&e6_3).unwrap();
    assert_eq!(b.boundary.label, "A2+A1");
    assert_eq!(b.boundary.dim, Some(46));
    assert_eq!(b.codim, 4);

    let count = |f, r| {
        springer_resolvable(DynkinType::new(f, r).unwrap())
            .unwrap()
            .len()
    };
    assert_eq!(count(Family::G, 2), 2);
    assert_eq!(count(Family::F, 4), 8);
    assert_eq!(count(Family::E, 6), 14);
    finish(
        "criterion 9",
        start,
        Duration::from_secs(1),
        "exceptional Richardson orbits, boundaries and Springer-resolvable counts match",
    );
}

#[test]
fn criterion_10_equivalence_class_well_defined() {
    let start = Instant::now();
    let mut checked = 0;
    for ty in DynkinType::enumerate(6) {
        let rank = ty.rank();
        for mask in 1u32..(1 << rank) {
            if mask.count_ones() > 3 {
                continue;
            }
            let marks: Vec<usize> = (1..=rank).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
            let seed = MarkedDiagram::new(ty, marks).unwrap();
            let labeling = |d: &MarkedDiagram| -> BTreeSet<(String, Vec<(usize, bool)>)> {
                equivalence_class(d)
                    .nodes
                    .iter()
                    .map(|n| {
                        (
                            n.diagram.to_string(),
                            n.walls
                                .iter()
                                .map(|w| (w.pivot, w.kind == WallKind::Flop))
                                .collect(),
                        )
                    })
                    .collect()
            };
            let base = labeling(&seed);
            for member in equivalence_class(&seed).nodes {
                assert_eq!(
                    labeling(&member.diagram),
                    base,
                    "class of {seed} restarted from {}",
                    member.diagram
                );
            }
            checked += 1;
        }
    }
    finish(
        "criterion 10",
        start,
        Duration::from_secs(60),
        &format!("identical node set and wall labels from every member, {checked} seeds"),
    );
}
