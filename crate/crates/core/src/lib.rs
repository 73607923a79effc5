//! A calculus on marked Dynkin diagrams: the adjacency move and its
//! equivalence classes (the combinatorial chamber structure of the movable
//! cone of a Springer resolution), plus the partition machinery for
//! classical Richardson orbits and static tables for the exceptional ones.
//!
//! Everything is an immutable value and every operation is a pure function,
//! so all types are freely shareable across threads.

pub mod diagram;
mod error;
pub mod flops;
pub mod orbitdata;
pub mod partitions;

pub use diagram::{
    delete_vertices, Bond, Component, DynkinType, Family, MarkedDiagram, SingleMarkedComponent,
};
pub use error::Error;
pub use flops::{
    classify_single, equivalence_class, moves_from, AdjacencyMove, ChamberReport, FlipClass,
    FlopEdge, FlopGraph, FlopKind, FlopNode, GraphShape, Wall, WallKind,
};
pub use orbitdata::{boundary_codim2, richardson, springer_resolvable, OrbitRecord, Richardson};
pub use partitions::{
    codim2_witness, collapse, degree_one_parity, levi_type, orbit_dim, ClassicalFamily,
    DegreeParity, Partition, WitnessPair,
};

pub type Result<T> = std::result::Result<T, Error>;
