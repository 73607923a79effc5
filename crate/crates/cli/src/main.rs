//! `orbitflops` - a calculator for the marked-diagram flop calculus.
//!
//! Exit status: 0 on success, 1 on a domain error (a machine-readable error
//! object goes to stderr), 2 on a usage error.

mod output;
mod reproduce;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeSet;

use orbitflops_core::{
    boundary_codim2, classify_single, codim2_witness, collapse, degree_one_parity, delete_vertices,
    equivalence_class, levi_type, moves_from, orbit_dim, orbitdata, richardson,
    springer_resolvable, ClassicalFamily, DynkinType, Error as CoreError, MarkedDiagram, Partition,
    Richardson, SingleMarkedComponent,
};

use output::{
    graph_text, paint, print_json, ClassifyDoc, MoveDoc, MovesDoc, OrbitClassDoc, ReportSummary,
    SCHEMA,
};

#[derive(Parser)]
#[command(
    name = "orbitflops",
    version,
    about = "Marked Dynkin diagram calculus: flop graphs, chamber walls, partitions and orbit tables",
    after_help = "Diagrams use the grammar FAMILY RANK '[' marks ']' in Bourbaki numbering, e.g. A5[1,3].\n\
                  Partitions accept expanded ([3,3,1,1,1]) and exponent ([3^2,1^3]) notation.\n\
                  Classical families are written so9, sp6, sl6 or B4, C3, A5."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a single-marked diagram as a flop type (or not flippable)
    Classify {
        diagram: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the adjacency moves out of a marked diagram
    Moves {
        diagram: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate the equivalence class of a diagram with its chamber walls
    #[command(alias = "graph")]
    OrbitClass {
        diagram: String,
        #[arg(long, value_enum, default_value = "text")]
        format: GraphFormat,
    },
    /// Richardson orbit of a single-marked diagram
    Richardson {
        diagram: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// B/C/D collapse of a partition
    Collapse {
        family: String,
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dimension of the nilpotent orbit with the given Jordan type
    Dim {
        family: String,
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Levi type of the (k, q, k) flag
    Levi {
        family: String,
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Richardson orbit of the (k, q, k) flag and its codimension-2 witness
    Witness {
        family: String,
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Query the static orbit tables
    Db {
        #[command(subcommand)]
        cmd: DbCmd,
    },
    /// Re-run a built-in worked example and compare against its golden data
    Reproduce {
        /// example-3.7, example-4.6, example-4.7, example-4.8 or all
        example: String,
    },
}

#[derive(Subcommand)]
enum DbCmd {
    /// JSON export of all tables
    Dump,
    /// Orbits whose closures admit Springer resolutions (G2, F4, E6)
    SpringerResolvable {
        algebra: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum CliError {
    Core(CoreError),
    Golden(usize),
    UnknownExample(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

#[derive(Serialize)]
struct ErrorDoc<'a> {
    schema: &'static str,
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

fn main() {
    // Die quietly when the consumer of a pipe goes away.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli.cmd) {
        let (kind, message) = match &e {
            CliError::Core(e) => (e.kind(), e.to_string()),
            CliError::Golden(n) => ("golden-mismatch", format!("{n} golden check(s) failed")),
            CliError::UnknownExample(id) => (
                "unknown-example",
                format!(
                    "unknown example `{id}`; expected one of {} or all",
                    reproduce::EXAMPLE_IDS.join(", ")
                ),
            ),
        };
        let doc = ErrorDoc {
            schema: SCHEMA,
            error: ErrorBody { kind, message },
        };
        eprintln!("{}", serde_json::to_string(&doc).expect("error object"));
        std::process::exit(1);
    }
}

fn parse_diagram(s: &str) -> Result<MarkedDiagram, CliError> {
    Ok(s.parse::<MarkedDiagram>()?)
}

fn parse_family(s: &str) -> Result<ClassicalFamily, CliError> {
    Ok(s.parse::<ClassicalFamily>()?)
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse::<Partition>()?)
}

fn whole_diagram_component(d: &MarkedDiagram) -> Result<SingleMarkedComponent, CliError> {
    let comps = delete_vertices(d, &BTreeSet::new())?;
    let comp = comps.into_iter().next().expect("diagram is nonempty");
    Ok(SingleMarkedComponent::try_from(comp)?)
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Classify { diagram, format } => {
            let d = parse_diagram(&diagram)?;
            let single = whole_diagram_component(&d)?;
            let flip = classify_single(&single);
            match format {
                Format::Json => print_json(&ClassifyDoc {
                    schema: SCHEMA,
                    diagram: d,
                    flippable: flip.is_some(),
                    flop_type: flip.map(|f| f.kind.label()),
                    dual_mark: flip.map(|f| f.dual_mark),
                }),
                Format::Text => match flip {
                    Some(f) => println!("{d}: flop type {}, dual mark {}", f.kind, f.dual_mark),
                    None => println!("{d}: not flippable"),
                },
            }
        }
        Cmd::Moves { diagram, format } => {
            let d = parse_diagram(&diagram)?;
            let moves = moves_from(&d);
            match format {
                Format::Json => print_json(&MovesDoc {
                    schema: SCHEMA,
                    diagram: d,
                    moves: moves
                        .iter()
                        .map(|m| MoveDoc {
                            pivot: m.pivot,
                            target: m.target.clone(),
                            flop_type: m.flop.canonical().label(),
                            contraction: m.contraction.clone(),
                        })
                        .collect(),
                }),
                Format::Text => {
                    println!(
                        "{d}: {} move{}",
                        moves.len(),
                        if moves.len() == 1 { "" } else { "s" }
                    );
                    for m in &moves {
                        println!(
                            "  pivot {} -> {}  {}  via {}",
                            m.pivot,
                            m.target,
                            m.flop.canonical().label(),
                            m.contraction
                        );
                    }
                }
            }
        }
        Cmd::OrbitClass { diagram, format } => {
            let d = parse_diagram(&diagram)?;
            let graph = equivalence_class(&d);
            match format {
                GraphFormat::Json => {
                    let report = graph.report();
                    print_json(&OrbitClassDoc {
                        schema: SCHEMA,
                        seed: &d,
                        nodes: &graph.nodes,
                        edges: &graph.edges,
                        report: ReportSummary::from(&report),
                    });
                }
                GraphFormat::Dot => print!("{}", graph.to_dot()),
                GraphFormat::Text => print!("{}", graph_text(&graph)),
            }
        }
        Cmd::Richardson { diagram, format } => {
            let d = parse_diagram(&diagram)?;
            run_richardson(&d, format)?;
        }
        Cmd::Collapse {
            family,
            partition,
            format,
        } => {
            let fam = parse_family(&family)?;
            let p = parse_partition(&partition)?;
            let result = collapse(fam, &p)?;
            let very_even = matches!(fam, ClassicalFamily::D(_)) && result.is_very_even();
            match format {
                Format::Json => print_json(&CollapseDoc {
                    schema: SCHEMA,
                    family: fam.to_string(),
                    input: p,
                    result,
                    very_even,
                }),
                Format::Text => {
                    println!("{result}");
                    if very_even {
                        println!("very even: labels two orbits in type D");
                    }
                }
            }
        }
        Cmd::Dim {
            family,
            partition,
            format,
        } => {
            let fam = parse_family(&family)?;
            let p = parse_partition(&partition)?;
            let dim = orbit_dim(fam, &p)?;
            match format {
                Format::Json => print_json(&DimDoc {
                    schema: SCHEMA,
                    family: fam.to_string(),
                    partition: p,
                    dim,
                }),
                Format::Text => println!("{dim}"),
            }
        }
        Cmd::Levi { family, k, format } => {
            let fam = parse_family(&family)?;
            let levi = levi_type(fam, k)?;
            let parity = degree_one_parity(fam, k)?;
            match format {
                Format::Json => print_json(&LeviDoc {
                    schema: SCHEMA,
                    family: fam.to_string(),
                    k,
                    levi_type: levi,
                    degree_parity: parity,
                }),
                Format::Text => println!("{levi}"),
            }
        }
        Cmd::Witness { family, k, format } => {
            let fam = parse_family(&family)?;
            let pair = codim2_witness(fam, k)?;
            let top = orbit_dim(fam, &pair.richardson)?;
            let below = orbit_dim(fam, &pair.witness)?;
            match format {
                Format::Json => print_json(&WitnessDoc {
                    schema: SCHEMA,
                    family: fam.to_string(),
                    k,
                    richardson: PartitionWithDim {
                        partition: pair.richardson,
                        dim: top,
                    },
                    witness: PartitionWithDim {
                        partition: pair.witness,
                        dim: below,
                    },
                    codim: top - below,
                }),
                Format::Text => {
                    println!("richardson: {}  dim {top}", pair.richardson);
                    println!("witness:    {}  dim {below}", pair.witness);
                    println!("codim: {}", top - below);
                }
            }
        }
        Cmd::Db { cmd } => match cmd {
            DbCmd::Dump => {
                let dump = orbitdata::dump();
                print_json(&DbDumpDoc {
                    schema: SCHEMA,
                    orbits: dump.orbits,
                    richardson: dump.richardson,
                    boundaries: dump.boundaries,
                    springer_resolvable: dump.springer_resolvable,
                });
            }
            DbCmd::SpringerResolvable { algebra, format } => {
                let ty = parse_algebra(&algebra)?;
                let orbits = springer_resolvable(ty)?;
                match format {
                    Format::Json => print_json(&SpringerDoc {
                        schema: SCHEMA,
                        algebra: ty.to_string(),
                        orbits,
                    }),
                    Format::Text => {
                        println!(
                            "{ty}: {} orbit closures admit Springer resolutions",
                            orbits.len()
                        );
                        for o in &orbits {
                            match o.dim {
                                Some(d) => println!("  {}  dim {d}", o.label),
                                None => println!("  {}", o.label),
                            }
                        }
                    }
                }
            }
        },
        Cmd::Reproduce { example } => {
            let outcomes = reproduce::run(&example)
                .ok_or_else(|| CliError::UnknownExample(example.clone()))?;
            let mut failed = 0;
            for outcome in &outcomes {
                outcome.print();
                if !outcome.passed {
                    failed += 1;
                }
            }
            if failed > 0 {
                return Err(CliError::Golden(failed));
            }
        }
    }
    Ok(())
}

/// Algebra argument of `db springer-resolvable`: a bare type like `G2`.
fn parse_algebra(s: &str) -> Result<DynkinType, CliError> {
    let t = s.trim();
    let mut chars = t.chars();
    let letter = chars
        .next()
        .and_then(|c| orbitflops_core::Family::from_letter(c.to_ascii_uppercase()))
        .ok_or_else(|| CoreError::MalformedDiagram(t.to_string()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CoreError::MalformedDiagram(t.to_string()))?;
    Ok(DynkinType::new(letter, rank)?)
}

fn run_richardson(d: &MarkedDiagram, format: Format) -> Result<(), CliError> {
    match richardson(d)? {
        Richardson::Jordan {
            partition,
            very_even,
        } => match format {
            Format::Json => print_json(&RichardsonJordanDoc {
                schema: SCHEMA,
                diagram: d.clone(),
                kind: "jordan",
                partition,
                very_even,
            }),
            Format::Text => {
                println!("{d}: Jordan type {partition}");
                if very_even {
                    println!("very even: labels two orbits in type D");
                }
            }
        },
        Richardson::Orbit(orbit) => {
            let boundary = boundary_codim2(&orbit).ok();
            match format {
                Format::Json => print_json(&RichardsonOrbitDoc {
                    schema: SCHEMA,
                    diagram: d.clone(),
                    kind: "orbit",
                    orbit: orbit.clone(),
                    boundary: boundary.map(|b| BoundaryDoc {
                        label: b.boundary.label.clone(),
                        dim: b.boundary.dim,
                        codim: b.codim,
                    }),
                }),
                Format::Text => {
                    match orbit.dim {
                        Some(dim) => println!("{d}: orbit {}  dim {dim}", paint(&orbit.label, "1")),
                        None => println!("{d}: orbit {}", paint(&orbit.label, "1")),
                    }
                    if let Some(b) = boundary {
                        match b.boundary.dim {
                            Some(dim) => println!(
                                "boundary: {}  dim {dim}  codim {}",
                                b.boundary.label, b.codim
                            ),
                            None => println!("boundary: {}  codim {}", b.boundary.label, b.codim),
                        }
                    }
                }
            }
        }
        Richardson::OneOf(orbits) => match format {
            Format::Json => print_json(&RichardsonOneOfDoc {
                schema: SCHEMA,
                diagram: d.clone(),
                kind: "one-of",
                orbits,
            }),
            Format::Text => {
                let labels: Vec<&str> = orbits.iter().map(|o| o.label.as_str()).collect();
                println!(
                    "{d}: one of {{{}}} (per-mark assignment not tabulated)",
                    labels.join(", ")
                );
            }
        },
    }
    Ok(())
}

#[derive(Serialize)]
struct CollapseDoc {
    schema: &'static str,
    family: String,
    input: Partition,
    result: Partition,
    very_even: bool,
}

#[derive(Serialize)]
struct DimDoc {
    schema: &'static str,
    family: String,
    partition: Partition,
    dim: usize,
}

#[derive(Serialize)]
struct LeviDoc {
    schema: &'static str,
    family: String,
    k: usize,
    levi_type: Partition,
    degree_parity: orbitflops_core::DegreeParity,
}

#[derive(Serialize)]
struct PartitionWithDim {
    partition: Partition,
    dim: usize,
}

#[derive(Serialize)]
struct WitnessDoc {
    schema: &'static str,
    family: String,
    k: usize,
    richardson: PartitionWithDim,
    witness: PartitionWithDim,
    codim: usize,
}

#[derive(Serialize)]
struct DbDumpDoc {
    schema: &'static str,
    orbits: Vec<orbitflops_core::OrbitRecord>,
    richardson: Vec<orbitflops_core::orbitdata::DbRichardsonRow>,
    boundaries: Vec<orbitflops_core::orbitdata::DbBoundaryRow>,
    springer_resolvable: Vec<orbitflops_core::orbitdata::DbSpringerRow>,
}

#[derive(Serialize)]
struct SpringerDoc {
    schema: &'static str,
    algebra: String,
    orbits: Vec<orbitflops_core::OrbitRecord>,
}

#[derive(Serialize)]
struct RichardsonJordanDoc {
    schema: &'static str,
    diagram: MarkedDiagram,
    kind: &'static str,
    partition: Partition,
    very_even: bool,
}

#[derive(Serialize)]
struct BoundaryDoc {
    label: String,
    dim: Option<usize>,
    codim: usize,
}

#[derive(Serialize)]
struct RichardsonOrbitDoc {
    schema: &'static str,
    diagram: MarkedDiagram,
    kind: &'static str,
    orbit: orbitflops_core::OrbitRecord,
    boundary: Option<BoundaryDoc>,
}

#[derive(Serialize)]
struct RichardsonOneOfDoc {
    schema: &'static str,
    diagram: MarkedDiagram,
    kind: &'static str,
    orbits: Vec<orbitflops_core::OrbitRecord>,
}
