//! Edge-adjacency criteria and the derived conflict graph.
//!
//! The nodes of a conflict graph are the `C(n,2)` edges of the complete
//! graph on a point set; two nodes are adjacent when the chosen criterion
//! holds for the segment pair. The four criteria pair up into complements:
//! `Intersection = Crossing + SharedEndpoint`, `Disjointness = !Intersection`
//! and `NonCrossing = !Crossing`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitmat::BitMatrix;
use crate::geometry::{segment_relation, Edge, PointSet, SegmentRelation};
use crate::scalar::Coord;

/// One of the four edge-adjacency rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Crossing,
    Intersection,
    Disjointness,
    NonCrossing,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::Crossing,
        Criterion::Intersection,
        Criterion::Disjointness,
        Criterion::NonCrossing,
    ];

    pub fn holds(self, rel: SegmentRelation) -> bool {
        match self {
            Criterion::Crossing => rel == SegmentRelation::Crossing,
            Criterion::Intersection => rel != SegmentRelation::Disjoint,
            Criterion::Disjointness => rel == SegmentRelation::Disjoint,
            Criterion::NonCrossing => rel != SegmentRelation::Crossing,
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Criterion::Crossing => "crossing",
            Criterion::Intersection => "intersection",
            Criterion::Disjointness => "disjointness",
            Criterion::NonCrossing => "noncrossing",
        };
        f.write_str(s)
    }
}

impl FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "crossing" => Ok(Criterion::Crossing),
            "intersection" => Ok(Criterion::Intersection),
            "disjointness" => Ok(Criterion::Disjointness),
            "noncrossing" | "non-crossing" => Ok(Criterion::NonCrossing),
            other => Err(format!("unknown criterion `{other}`")),
        }
    }
}

/// Are `e` and `f` adjacent over `s` under criterion `c`?
pub fn adjacent<C: Coord>(s: &PointSet<C>, e: Edge, f: Edge, c: Criterion) -> bool {
    c.holds(segment_relation(s, e, f))
}

/// Materialized adjacency over all edge pairs of `K_n`, for one criterion.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    n: usize,
    criterion: Criterion,
    edges: Vec<Edge>,
    adj: BitMatrix,
}

impl ConflictGraph {
    /// Number of vertices of the underlying complete graph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of conflict-graph nodes, `C(n,2)`.
    pub fn node_count(&self) -> usize {
        self.edges.len()
    }

    pub fn criterion(&self) -> Criterion {
        self.criterion
    }

    /// Edges of `K_n` in lexicographic order; node `i` is `edges()[i]`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Lexicographic index of an edge among all `C(n,2)` edges.
    pub fn edge_index(&self, e: Edge) -> usize {
        let (a, b, n) = (e.a(), e.b(), self.n);
        a * n - a * (a + 1) / 2 + (b - a - 1)
    }

    pub fn are_adjacent(&self, e: Edge, f: Edge) -> bool {
        self.adj.get(self.edge_index(e), self.edge_index(f))
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    pub fn degree(&self, e: Edge) -> usize {
        self.adj.row_count_ones(self.edge_index(e))
    }

    /// Maximum geometric edge-degree of the drawing. Only meaningful for
    /// the two intersection-flavored criteria; callers must not ask for it
    /// under a complement criterion.
    pub fn max_edge_degree(&self) -> usize {
        assert!(
            matches!(self.criterion, Criterion::Crossing | Criterion::Intersection),
            "maximum edge-degree is defined for the crossing and intersection criteria"
        );
        self.max_degree()
    }

    /// Maximum node degree, any criterion.
    pub fn max_degree(&self) -> usize {
        (0..self.node_count())
            .map(|i| self.adj.row_count_ones(i))
            .max()
            .unwrap_or(0)
    }
}

/// Builds the full conflict graph of `K_n` over `s` under criterion `c`.
pub fn build_conflict_graph<C: Coord>(s: &PointSet<C>, c: Criterion) -> ConflictGraph {
    let edges: Vec<Edge> = s.edges().collect();
    let m = edges.len();
    let mut adj = BitMatrix::zeroed(m);
    for i in 0..m {
        for j in i + 1..m {
            if c.holds(segment_relation(s, edges[i], edges[j])) {
                adj.set_sym(i, j);
            }
        }
    }
    ConflictGraph {
        n: s.len(),
        criterion: c,
        edges,
        adj,
    }
}
