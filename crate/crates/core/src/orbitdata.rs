//! Static tables for the exceptional types: Richardson orbits of the single
//! markings, recorded codimension-2 boundary orbits, and the lists of orbit
//! closures admitting Springer resolutions; plus a unified Richardson
//! resolver that falls back to the partition engine for classical types.
//!
//! Orbit labels are Bala-Carter strings in ASCII: a tilde becomes a `~`
//! prefix (`~A2`), parenthesized arguments stay (`F4(a3)`). Fields the
//! tables do not pin down are `None`.

use serde::Serialize;

use crate::diagram::{DynkinType, Family, MarkedDiagram};
use crate::partitions::{collapse, levi_type, ClassicalFamily, Partition};
use crate::{Error, Result};

/// A nilpotent orbit of an exceptional algebra, as far as the tables know it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    #[serde(serialize_with = "ser_algebra")]
    pub algebra: DynkinType,
    pub label: String,
    pub dim: Option<usize>,
    pub pi1_trivial: Option<bool>,
    pub special: Option<bool>,
    /// Where the row's data comes from.
    pub source: &'static str,
}

fn ser_algebra<S: serde::Serializer>(
    ty: &DynkinType,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ty.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Exc {
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Exc {
    fn ty(self) -> DynkinType {
        let (family, rank) = match self {
            Exc::G2 => (Family::G, 2),
            Exc::F4 => (Family::F, 4),
            Exc::E6 => (Family::E, 6),
            Exc::E7 => (Family::E, 7),
            Exc::E8 => (Family::E, 8),
        };
        DynkinType::new(family, rank).expect("exceptional type")
    }

    fn of(ty: DynkinType) -> Option<Exc> {
        match (ty.family(), ty.rank()) {
            (Family::G, 2) => Some(Exc::G2),
            (Family::F, 4) => Some(Exc::F4),
            (Family::E, 6) => Some(Exc::E6),
            (Family::E, 7) => Some(Exc::E7),
            (Family::E, 8) => Some(Exc::E8),
            _ => None,
        }
    }
}

struct OrbitRow {
    alg: Exc,
    label: &'static str,
    dim: Option<usize>,
    pi1_trivial: Option<bool>,
    source: &'static str,
}

const CM_G2: &str = "CM 8.4 table, p.128 (G2)";
const CM_F4: &str = "CM 8.4 table, p.128 (F4)";
const CM_E6: &str = "CM 8.4 table, p.129 (E6)";
const CM_E7: &str = "CM 8.4 tables, p.130-131 (E7)";
const CM_E8: &str = "CM 8.4 tables, p.132-134 (E8)";
const CARTER_E6: &str = "Carter 13.4 closure diagram, p.441 (E6)";
const DIM_COUNT: &str = "Richardson dimension count: dim = 2 dim G/P";
const FU_LIST: &str = "Fu, Symplectic resolutions for nilpotent orbits";
const UNTABULATED: &str = "per-mark assignment not tabulated";

#[rustfmt::skip]
const ORBITS: &[OrbitRow] = &[
    OrbitRow { alg: Exc::G2, label: "G2",       dim: None,     pi1_trivial: None,       source: CM_G2 },
    OrbitRow { alg: Exc::G2, label: "G2(a1)",   dim: Some(10), pi1_trivial: None,       source: CM_G2 },
    OrbitRow { alg: Exc::G2, label: "~A1",      dim: Some(8),  pi1_trivial: None,       source: CM_G2 },
    OrbitRow { alg: Exc::F4, label: "A2",       dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "~A2",      dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "F4(a3)",   dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "B3",       dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "C3",       dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "F4(a2)",   dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "F4(a1)",   dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::F4, label: "F4",       dim: None,     pi1_trivial: None,       source: CM_F4 },
    OrbitRow { alg: Exc::E6, label: "A1",       dim: Some(22), pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "2A1",      dim: Some(32), pi1_trivial: Some(true), source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "3A1",      dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A2",       dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A2+A1",    dim: Some(46), pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A2+2A1",   dim: Some(50), pi1_trivial: Some(true), source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "2A2",      dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A3",       dim: Some(52), pi1_trivial: Some(true), source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A3+A1",    dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "D4(a1)",   dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A4",       dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "D4",       dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "A4+A1",    dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "D5(a1)",   dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "E6(a3)",   dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "D5",       dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "E6(a1)",   dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E6, label: "E6",       dim: None,     pi1_trivial: None,       source: CM_E6 },
    OrbitRow { alg: Exc::E7, label: "(3A1)''",  dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "A2",       dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "2A2",      dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "A2+3A1",   dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "D4(a1)",   dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "A3+A2+A1", dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E7, label: "A4+A2",    dim: None,     pi1_trivial: None,       source: CM_E7 },
    OrbitRow { alg: Exc::E8, label: "A2",       dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "2A2",      dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "D4(a1)",   dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "D4(a1)+A2", dim: None,    pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "A4+A2",    dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "A4+A2+A1", dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "E8(a7)",   dim: None,     pi1_trivial: None,       source: CM_E8 },
    OrbitRow { alg: Exc::E8, label: "A6+A1",    dim: None,     pi1_trivial: None,       source: CM_E8 },
];

struct RichardsonRow {
    alg: Exc,
    mark: usize,
    /// Per-mark orbit when determined; otherwise the possibilities.
    orbit: Option<&'static str>,
    one_of: &'static [&'static str],
    source: &'static str,
}

const E7_SET: &[&str] = &[
    "(3A1)''", "A2", "2A2", "A2+3A1", "D4(a1)", "A3+A2+A1", "A4+A2",
];
const E8_SET: &[&str] = &[
    "A2",
    "2A2",
    "D4(a1)",
    "D4(a1)+A2",
    "A4+A2",
    "A4+A2+A1",
    "E8(a7)",
    "A6+A1",
];
const F4_PAIR: &[&str] = &["A2", "~A2"];
const E6_PAIR: &[&str] = &["A2", "D4(a1)"];

#[rustfmt::skip]
const RICHARDSON: &[RichardsonRow] = &[
    RichardsonRow { alg: Exc::G2, mark: 1, orbit: Some("G2(a1)"), one_of: &[], source: CM_G2 },
    RichardsonRow { alg: Exc::G2, mark: 2, orbit: Some("G2(a1)"), one_of: &[], source: CM_G2 },
    RichardsonRow { alg: Exc::F4, mark: 1, orbit: None, one_of: F4_PAIR, source: UNTABULATED },
    RichardsonRow { alg: Exc::F4, mark: 2, orbit: Some("F4(a3)"), one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::F4, mark: 3, orbit: Some("F4(a3)"), one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::F4, mark: 4, orbit: None, one_of: F4_PAIR, source: UNTABULATED },
    RichardsonRow { alg: Exc::E6, mark: 1, orbit: Some("2A1"),    one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::E6, mark: 2, orbit: None, one_of: E6_PAIR, source: UNTABULATED },
    RichardsonRow { alg: Exc::E6, mark: 3, orbit: Some("A2+2A1"), one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::E6, mark: 4, orbit: None, one_of: E6_PAIR, source: UNTABULATED },
    RichardsonRow { alg: Exc::E6, mark: 5, orbit: Some("A2+2A1"), one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::E6, mark: 6, orbit: Some("2A1"),    one_of: &[], source: DIM_COUNT },
    RichardsonRow { alg: Exc::E7, mark: 1, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 2, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 3, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 4, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 5, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 6, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E7, mark: 7, orbit: None, one_of: E7_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 1, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 2, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 3, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 4, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 5, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 6, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 7, orbit: None, one_of: E8_SET, source: UNTABULATED },
    RichardsonRow { alg: Exc::E8, mark: 8, orbit: None, one_of: E8_SET, source: UNTABULATED },
];

struct BoundaryRow {
    alg: Exc,
    orbit: &'static str,
    boundary: &'static str,
    codim: usize,
    source: &'static str,
}

#[rustfmt::skip]
const BOUNDARIES: &[BoundaryRow] = &[
    BoundaryRow { alg: Exc::G2, orbit: "G2(a1)",  boundary: "~A1",   codim: 2,  source: CM_G2 },
    BoundaryRow { alg: Exc::E6, orbit: "2A1",     boundary: "A1",    codim: 10, source: CARTER_E6 },
    BoundaryRow { alg: Exc::E6, orbit: "A2",      boundary: "3A1",   codim: 2,  source: CARTER_E6 },
    BoundaryRow { alg: Exc::E6, orbit: "A2+2A1",  boundary: "A2+A1", codim: 4,  source: CARTER_E6 },
    BoundaryRow { alg: Exc::E6, orbit: "D4(a1)",  boundary: "A3+A1", codim: 2,  source: CARTER_E6 },
];

const SPRINGER_G2: &[&str] = &["G2", "G2(a1)"];
const SPRINGER_F4: &[&str] = &["A2", "~A2", "F4(a3)", "B3", "C3", "F4(a2)", "F4(a1)", "F4"];
const SPRINGER_E6: &[&str] = &[
    "2A1", "A2", "2A2", "A2+2A1", "A3", "D4(a1)", "A4", "D4", "A4+A1", "D5(a1)", "E6(a3)", "D5",
    "E6(a1)", "E6",
];

fn springer_list(alg: Exc) -> Option<&'static [&'static str]> {
    match alg {
        Exc::G2 => Some(SPRINGER_G2),
        Exc::F4 => Some(SPRINGER_F4),
        Exc::E6 => Some(SPRINGER_E6),
        Exc::E7 | Exc::E8 => None,
    }
}

fn record(alg: Exc, label: &str) -> Result<OrbitRecord> {
    let row = ORBITS
        .iter()
        .find(|r| r.alg == alg && r.label == label)
        .ok_or_else(|| Error::OrbitNotInTable {
            algebra: alg.ty().to_string(),
            label: label.to_string(),
        })?;
    Ok(OrbitRecord {
        algebra: alg.ty(),
        label: row.label.to_string(),
        dim: row.dim,
        pi1_trivial: row.pi1_trivial,
        special: None,
        source: row.source,
    })
}

/// Look up one orbit by algebra and Bala-Carter label.
pub fn orbit(algebra: DynkinType, label: &str) -> Result<OrbitRecord> {
    let alg = Exc::of(algebra).ok_or_else(|| Error::OrbitNotInTable {
        algebra: algebra.to_string(),
        label: label.to_string(),
    })?;
    record(alg, label)
}

/// Result of the Richardson resolver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Richardson {
    /// Classical: the Jordan type, flagged when it is very even (type D
    /// labels two orbits then).
    Jordan {
        partition: Partition,
        very_even: bool,
    },
    /// Exceptional with a determined per-mark orbit.
    Orbit(OrbitRecord),
    /// Exceptional where only the candidate set is known for this mark.
    OneOf(Vec<OrbitRecord>),
}

/// Richardson orbit of a single-marked diagram.
///
/// Classical families go through the partition engine: the Jordan type is
/// the collapse of the Levi type of the `(k, q, k)` flag (type A transposes
/// the two-block flag directly). Exceptional families use the tables.
pub fn richardson(d: &MarkedDiagram) -> Result<Richardson> {
    if d.marks().len() != 1 {
        return Err(Error::NotSingleMarked(d.marks().len()));
    }
    let mark = *d.marks().iter().next().unwrap();
    let n = d.ty().rank();
    match d.ty().family() {
        Family::A => {
            // Two-block flag (k, n+1-k); its transpose is the Jordan type.
            let jordan = Partition::new([mark, n + 1 - mark])?.dual();
            Ok(Richardson::Jordan {
                partition: jordan,
                very_even: false,
            })
        }
        Family::B | Family::C | Family::D => {
            let (fam, k) = classical_flag(d.ty().family(), n, mark);
            let jordan = collapse(fam, &levi_type(fam, k)?)?;
            let very_even = matches!(fam, ClassicalFamily::D(_)) && jordan.is_very_even();
            Ok(Richardson::Jordan {
                partition: jordan,
                very_even,
            })
        }
        Family::E | Family::F | Family::G => {
            let alg = Exc::of(d.ty()).expect("exceptional");
            let row = RICHARDSON
                .iter()
                .find(|r| r.alg == alg && r.mark == mark)
                .expect("every single mark has a row");
            match row.orbit {
                Some(label) => Ok(Richardson::Orbit(record(alg, label)?)),
                None => Ok(Richardson::OneOf(
                    row.one_of
                        .iter()
                        .map(|label| record(alg, label))
                        .collect::<Result<_>>()?,
                )),
            }
        }
    }
}

/// `(family, k)` of the `(k, q, k)` flag of a B/C/D single mark; fork marks
/// of `D_n` give `k = n`.
fn classical_flag(family: Family, n: usize, mark: usize) -> (ClassicalFamily, usize) {
    match family {
        Family::B => (ClassicalFamily::B(n), mark),
        Family::C => (ClassicalFamily::C(n), mark),
        Family::D => {
            let k = if mark >= n - 1 { n } else { mark };
            (ClassicalFamily::D(n), k)
        }
        _ => unreachable!(),
    }
}

/// Boundary orbit with its codimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryInfo {
    pub orbit: OrbitRecord,
    pub boundary: OrbitRecord,
    pub codim: usize,
}

/// The recorded maximal codimension-2 orbit in the closure of `o`.
pub fn boundary_codim2(o: &OrbitRecord) -> Result<BoundaryInfo> {
    let alg = Exc::of(o.algebra).ok_or_else(|| Error::BoundaryNotRecorded {
        algebra: o.algebra.to_string(),
        label: o.label.clone(),
    })?;
    let row = BOUNDARIES
        .iter()
        .find(|r| r.alg == alg && r.orbit == o.label)
        .ok_or_else(|| Error::BoundaryNotRecorded {
            algebra: o.algebra.to_string(),
            label: o.label.clone(),
        })?;
    Ok(BoundaryInfo {
        orbit: record(alg, row.orbit)?,
        boundary: record(alg, row.boundary)?,
        codim: row.codim,
    })
}

/// Orbits of `algebra` whose closures admit Springer resolutions. Only G2,
/// F4 and E6 are tabulated.
pub fn springer_resolvable(algebra: DynkinType) -> Result<Vec<OrbitRecord>> {
    let alg = Exc::of(algebra).ok_or_else(|| Error::NotTabulated(algebra.to_string()))?;
    let labels = springer_list(alg).ok_or_else(|| Error::NotTabulated(algebra.to_string()))?;
    labels.iter().map(|label| record(alg, label)).collect()
}

/// Full JSON export of the tables, for `db dump`.
#[derive(Debug, Clone, Serialize)]
pub struct DbDump {
    pub orbits: Vec<OrbitRecord>,
    pub richardson: Vec<DbRichardsonRow>,
    pub boundaries: Vec<DbBoundaryRow>,
    pub springer_resolvable: Vec<DbSpringerRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DbRichardsonRow {
    pub algebra: String,
    pub mark: usize,
    pub orbit: Option<String>,
    pub one_of: Option<Vec<String>>,
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct DbBoundaryRow {
    pub algebra: String,
    pub orbit: String,
    pub boundary: String,
    pub codim: usize,
    pub source: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct DbSpringerRow {
    pub algebra: String,
    pub orbits: Vec<String>,
    pub source: &'static str,
}

pub fn dump() -> DbDump {
    DbDump {
        orbits: ORBITS
            .iter()
            .map(|r| record(r.alg, r.label).expect("row exists"))
            .collect(),
        richardson: RICHARDSON
            .iter()
            .map(|r| DbRichardsonRow {
                algebra: r.alg.ty().to_string(),
                mark: r.mark,
                orbit: r.orbit.map(|s| s.to_string()),
                one_of: if r.one_of.is_empty() {
                    None
                } else {
                    Some(r.one_of.iter().map(|s| s.to_string()).collect())
                },
                source: r.source,
            })
            .collect(),
        boundaries: BOUNDARIES
            .iter()
            .map(|r| DbBoundaryRow {
                algebra: r.alg.ty().to_string(),
                orbit: r.orbit.to_string(),
                boundary: r.boundary.to_string(),
                codim: r.codim,
                source: r.source,
            })
            .collect(),
        springer_resolvable: [Exc::G2, Exc::F4, Exc::E6]
            .iter()
            .map(|&alg| DbSpringerRow {
                algebra: alg.ty().to_string(),
                orbits: springer_list(alg)
                    .unwrap()
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                source: FU_LIST,
            })
            .collect(),
    }
}
