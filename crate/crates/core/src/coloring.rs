//! Edge colorings of `K_n`: the shared value type produced by every
//! construction and consumed by the verifiers and the CLI.

use serde::{Deserialize, Serialize};

use crate::conflict::Criterion;
use crate::error::Error;
use crate::geometry::{all_edges, edge_index, Edge};

/// Which phase assigned an edge its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Constructed,
    GreedyCompleted,
}

/// A (possibly partial) assignment of positive colors to the edges of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    criterion: Criterion,
    colors: Vec<Option<u32>>,
    stages: Vec<Option<Stage>>,
}

impl EdgeColoring {
    pub fn new(n: usize, criterion: Criterion) -> Self {
        let m = n * (n - 1) / 2;
        EdgeColoring {
            n,
            criterion,
            colors: vec![None; m],
            stages: vec![None; m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn criterion(&self) -> Criterion {
        self.criterion
    }

    pub fn set(&mut self, e: Edge, color: u32, stage: Stage) {
        assert!(color > 0, "colors are positive");
        let i = edge_index(self.n, e);
        debug_assert!(self.colors[i].is_none(), "edge {e:?} colored twice");
        self.colors[i] = Some(color);
        self.stages[i] = Some(stage);
    }

    pub fn color(&self, e: Edge) -> Option<u32> {
        self.colors[edge_index(self.n, e)]
    }

    pub fn stage(&self, e: Edge) -> Option<Stage> {
        self.stages[edge_index(self.n, e)]
    }

    pub fn color_by_index(&self, i: usize) -> Option<u32> {
        self.colors[i]
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(|c| c.is_some())
    }

    /// First uncolored edge, if any.
    pub fn first_uncolored(&self) -> Option<Edge> {
        all_edges(self.n).find(|&e| self.color(e).is_none())
    }

    /// Largest color in use (0 when nothing is colored).
    pub fn color_count(&self) -> u32 {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors carried by at least one constructed-stage
    /// edge.
    pub fn constructed_color_count(&self) -> usize {
        let mut colors: Vec<u32> = self
            .colors
            .iter()
            .zip(&self.stages)
            .filter_map(|(c, s)| match (c, s) {
                (Some(c), Some(Stage::Constructed)) => Some(*c),
                _ => None,
            })
            .collect();
        colors.sort_unstable();
        colors.dedup();
        colors.len()
    }

    /// Class sizes indexed by color (slot 0 unused).
    pub fn class_sizes(&self) -> Vec<usize> {
        let k = self.color_count() as usize;
        let mut sizes = vec![0usize; k + 1];
        for c in self.colors.iter().flatten() {
            sizes[*c as usize] += 1;
        }
        sizes
    }

    /// Edges carrying the given color, lexicographic.
    pub fn class(&self, color: u32) -> Vec<Edge> {
        all_edges(self.n)
            .filter(|&e| self.color(e) == Some(color))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let assignments: Vec<AssignmentJson> = all_edges(self.n)
            .filter_map(|e| {
                self.color(e).map(|color| AssignmentJson {
                    edge: [e.a(), e.b()],
                    color,
                    stage: self.stage(e).expect("stage set with color"),
                })
            })
            .collect();
        let doc = ColoringJson {
            n: self.n,
            criterion: self.criterion,
            assignments,
        };
        serde_json::to_string_pretty(&doc).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: ColoringJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("coloring JSON: {e}")))?;
        let mut coloring = EdgeColoring::new(doc.n, doc.criterion);
        for a in doc.assignments {
            if a.edge[0] == a.edge[1] || a.edge[0] >= doc.n || a.edge[1] >= doc.n {
                return Err(Error::Parse(format!("bad edge {:?}", a.edge)));
            }
            if a.color == 0 {
                return Err(Error::Parse("colors must be positive".into()));
            }
            coloring.set(Edge::new(a.edge[0], a.edge[1]), a.color, a.stage);
        }
        Ok(coloring)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    n: usize,
    criterion: Criterion,
    assignments: Vec<AssignmentJson>,
}

#[derive(Serialize, Deserialize)]
struct AssignmentJson {
    edge: [usize; 2],
    color: u32,
    stage: Stage,
}
