use thiserror::Error;

use crate::diagram::DynkinType;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed diagram `{0}`: expected FAMILY RANK '[' id (',' id)* ']', e.g. A5[1,3]")]
    MalformedDiagram(String),
    #[error("rank {rank} is out of range for family {family}")]
    RankOutOfRange { family: char, rank: usize },
    #[error("mark {mark} is out of range 1..={rank}")]
    MarkOutOfRange { mark: usize, rank: usize },
    #[error("duplicate mark {0}")]
    DuplicateMark(usize),
    #[error("vertex {vertex} is out of range 1..={rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("{0} has no nontrivial diagram automorphism")]
    NoDual(DynkinType),
    #[error("expected exactly one mark, found {0}")]
    NotSingleMarked(usize),
    #[error("subgraph is not a Dynkin diagram component")]
    UnclassifiableComponent,
    #[error("malformed partition `{0}`: expected e.g. [3,3,1,1,1] or [3^2,1^3]")]
    MalformedPartition(String),
    #[error("unknown classical family `{0}`: expected e.g. so9, sp6, sl6 or B4, C3, D5, A5")]
    UnknownFamily(String),
    #[error("k = {k} is not a legal flag parameter for {family} (need 1 <= k <= {max})")]
    IllegalFlag {
        family: String,
        k: usize,
        max: usize,
    },
    #[error("operation is not defined for type {0}")]
    UnsupportedFamily(String),
    #[error("partition of {got} does not fit {family} (ambient dimension {expected})")]
    TotalMismatch {
        family: String,
        expected: usize,
        got: usize,
    },
    #[error("partition {partition} is not a valid Jordan type for {family}")]
    InvalidPartitionType { family: String, partition: String },
    #[error("dimension formula gave a non-integer value for {family} {partition}")]
    NonIntegerDimension { family: String, partition: String },
    #[error("no codimension-2 witness is tabulated for {family}, k = {k}: {reason}")]
    WitnessOutOfScope {
        family: String,
        k: usize,
        reason: String,
    },
    #[error("orbit `{label}` of {algebra} is not in the table")]
    OrbitNotInTable { algebra: String, label: String },
    #[error("no boundary orbit is recorded for `{label}` of {algebra}")]
    BoundaryNotRecorded { algebra: String, label: String },
    #[error("Springer-resolvable orbits are tabulated for G2, F4 and E6 only, not {0}")]
    NotTabulated(String),
    #[error("flag-type conversion is only provided for this shape: {0}")]
    FlagShapeUnsupported(String),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedDiagram(_) => "malformed-diagram",
            Error::RankOutOfRange { .. } => "rank-out-of-range",
            Error::MarkOutOfRange { .. } => "mark-out-of-range",
            Error::DuplicateMark(_) => "duplicate-mark",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::NoDual(_) => "no-dual",
            Error::NotSingleMarked(_) => "not-single-marked",
            Error::UnclassifiableComponent => "unclassifiable-component",
            Error::MalformedPartition(_) => "malformed-partition",
            Error::UnknownFamily(_) => "unknown-family",
            Error::IllegalFlag { .. } => "illegal-flag",
            Error::UnsupportedFamily(_) => "unsupported-family",
            Error::TotalMismatch { .. } => "total-mismatch",
            Error::InvalidPartitionType { .. } => "invalid-partition-type",
            Error::NonIntegerDimension { .. } => "non-integer-dimension",
            Error::WitnessOutOfScope { .. } => "witness-out-of-scope",
            Error::OrbitNotInTable { .. } => "orbit-not-in-table",
            Error::BoundaryNotRecorded { .. } => "boundary-not-recorded",
            Error::NotTabulated(_) => "not-tabulated",
            Error::FlagShapeUnsupported(_) => "flag-shape-unsupported",
        }
    }
}
