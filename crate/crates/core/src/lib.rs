//! Edge colorings of complete geometric graphs.
//!
//! A complete geometric graph is `K_n` drawn with straight segments on
//! points in general position. Declaring two edges adjacent when they
//! cross, intersect, are disjoint, or do not cross gives four conflict
//! graphs; this crate builds large colorings of each in which every edge of
//! color `j` has a neighbor of every color `i < j`, certifies them against
//! explicit verifiers, and compares the result to closed-form bounds and,
//! at small sizes, to exhaustive search.
//!
//! The geometry is exact: integer coordinates, widened-integer determinant
//! signs, no floating point.

pub mod bitmat;
pub mod bounds;
pub mod coloring;
pub mod conflict;
pub mod constructions;
pub mod designs;
mod error;
pub mod geometry;
pub mod oracle;
pub mod rng;
pub mod scalar;
pub mod verify;

pub use coloring::{EdgeColoring, Stage};
pub use conflict::{adjacent, build_conflict_graph, ConflictGraph, Criterion};
pub use error::Error;
pub use geometry::{
    all_edges, edge_index, gen_convex, gen_general, halving_line, orientation, segment_relation,
    Edge, HalvingLine, Orientation, SegmentRelation,
};
pub use scalar::Coord;
pub use verify::{verify, VerificationReport};

/// Default coordinate scalar; determinants widen to `i128`.
pub type DefaultCoord = i64;

/// Concrete aliases over the default scalar.
pub type Point = geometry::Point<DefaultCoord>;
pub type PointSet = geometry::PointSet<DefaultCoord>;
