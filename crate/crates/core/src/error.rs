use thiserror::Error;

/// Errors surfaced by generators, validators and verifiers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("coordinate magnitude exceeds the exact-arithmetic bound")]
    CoordinateOutOfRange,
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1}, {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("general-position generator exhausted its retry budget (n={n}, seed={seed}); grid too small")]
    GeneratorBudgetExhausted { n: usize, seed: u64 },
    #[error("point set is not a convex cycle, required by this construction")]
    NotConvex,
    #[error("construction requires n >= {min}, got {got}")]
    ConstructionTooSmall { min: usize, got: usize },
    #[error("no certified convex quadruple of size >= 2 found within the search budget")]
    QuadrupleSearchFailed,
    #[error("coloring is partial: edge ({0}, {1}) has no color")]
    PartialColoring(usize, usize),
    #[error("coloring does not match the point set (expected {expected} vertices, got {got})")]
    SizeMismatch { expected: usize, got: usize },
    #[error("conflict-graph instance too large for exhaustive search: {got} nodes (cap {cap})")]
    InstanceTooLarge { got: usize, cap: usize },
    #[error("criterion {0} is not supported by this operation")]
    UnsupportedCriterion(String),
    #[error("triangle decomposition search failed for n={0}")]
    DecompositionSearchFailed(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
