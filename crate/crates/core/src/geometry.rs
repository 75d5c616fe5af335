//! Exact planar geometry over integer coordinates: orientation predicate,
//! pairwise segment relations, point-set generators and halving lines.
//!
//! All predicates are decided by exact sign computations; point sets are
//! required to be in general position (no three collinear points), which
//! makes every segment relation unambiguous.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rng::SplitMix64;
use crate::scalar::Coord;

/// Sign of the signed area of an ordered point triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

/// A planar point with exact integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point<C: Coord> {
    pub x: C,
    pub y: C,
}

impl<C: Coord> Point<C> {
    pub fn new(x: C, y: C) -> Self {
        Point { x, y }
    }

    fn in_bounds(&self) -> bool {
        self.x.abs() <= C::MAX_ABS && self.y.abs() <= C::MAX_ABS
    }
}

/// Exact orientation of the triple `(p, q, r)`: the sign of the determinant
/// of `(q - p, r - p)`, computed in widened integer arithmetic.
pub fn orientation<C: Coord>(p: Point<C>, q: Point<C>, r: Point<C>) -> Orientation {
    let ux = (q.x - p.x).to_wide();
    let uy = (q.y - p.y).to_wide();
    let vx = (r.x - p.x).to_wide();
    let vy = (r.y - p.y).to_wide();
    let det = ux * vy - uy * vx;
    if det > C::Wide::zero() {
        Orientation::CounterClockwise
    } else if det < C::Wide::zero() {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// An edge of the complete graph on a point set, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    a: usize,
    b: usize,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "an edge needs two distinct vertices");
        if a < b {
            Edge { a, b }
        } else {
            Edge { a: b, b: a }
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.a == other.a || self.a == other.b || self.b == other.a || self.b == other.b
    }
}

/// Lexicographic index of `e` among all `C(n,2)` edges of `K_n`.
pub fn edge_index(n: usize, e: Edge) -> usize {
    let (a, b) = (e.a(), e.b());
    debug_assert!(b < n);
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

/// All edges of `K_n` in lexicographic order.
pub fn all_edges(n: usize) -> impl Iterator<Item = Edge> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| Edge::new(a, b)))
}

/// How two distinct edges of a general-position point set relate as segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentRelation {
    /// The edges share a vertex.
    SharedEndpoint,
    /// The open segments intersect in a single interior point.
    Crossing,
    /// Neither endpoints nor interiors meet.
    Disjoint,
}

/// A set of labeled points in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet<C: Coord> {
    points: Vec<Point<C>>,
}

impl<C: Coord> PointSet<C> {
    /// Builds a point set, checking coordinate bounds, distinctness and
    /// general position. Validation is cubic in the number of points.
    pub fn new(points: Vec<Point<C>>) -> Result<Self, Error> {
        if points.len() < 3 {
            return Err(Error::TooFewPoints(points.len()));
        }
        for p in &points {
            if !p.in_bounds() {
                return Err(Error::CoordinateOutOfRange);
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i, j));
                }
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                for k in j + 1..points.len() {
                    if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                        return Err(Error::CollinearTriple(i, j, k));
                    }
                }
            }
        }
        Ok(PointSet { points })
    }

    /// Builds a point set whose invariants are guaranteed by construction
    /// (generators). Checked fully in debug builds only.
    pub(crate) fn new_unchecked(points: Vec<Point<C>>) -> Self {
        debug_assert!(PointSet::new(points.clone()).is_ok());
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point<C> {
        self.points[i]
    }

    pub fn points(&self) -> &[Point<C>] {
        &self.points
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| (a + 1..n).map(move |b| Edge::new(a, b)))
    }

    /// True when the points, in storage order, trace a convex polygon
    /// (every consecutive triple turns the same way).
    pub fn is_convex_cycle(&self) -> bool {
        let n = self.len();
        let first = orientation(self.points[0], self.points[1], self.points[2]);
        if first == Orientation::Collinear {
            return false;
        }
        (0..n).all(|i| {
            orientation(
                self.points[i],
                self.points[(i + 1) % n],
                self.points[(i + 2) % n],
            ) == first
        })
    }

    /// Serializes as text: first line the point count, then one `x y` line
    /// per point.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.len());
        for p in &self.points {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }

    /// Parses the text format produced by [`PointSet::to_text`].
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty point file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("bad point count".into()))?;
        let mut points = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("truncated point file".into()))?;
            let mut it = line.split_whitespace();
            let x = it
                .next()
                .and_then(|t| t.parse::<i64>().ok())
                .ok_or_else(|| Error::Parse("bad x coordinate".into()))?;
            let y = it
                .next()
                .and_then(|t| t.parse::<i64>().ok())
                .ok_or_else(|| Error::Parse("bad y coordinate".into()))?;
            let x = C::from_i64(x).ok_or(Error::CoordinateOutOfRange)?;
            let y = C::from_i64(y).ok_or(Error::CoordinateOutOfRange)?;
            points.push(Point::new(x, y));
        }
        PointSet::new(points)
    }
}

/// Relation between two distinct edges over a general-position point set.
///
/// Exactly one of the three relations holds: a shared index short-circuits,
/// and otherwise four orientation tests decide whether the open segments
/// cross (general position rules out touching configurations).
pub fn segment_relation<C: Coord>(s: &PointSet<C>, e: Edge, f: Edge) -> SegmentRelation {
    assert!(e != f, "segment_relation requires distinct edges");
    if e.shares_endpoint(&f) {
        return SegmentRelation::SharedEndpoint;
    }
    let (p1, p2) = (s.point(e.a()), s.point(e.b()));
    let (q1, q2) = (s.point(f.a()), s.point(f.b()));
    let o1 = orientation(p1, p2, q1);
    let o2 = orientation(p1, p2, q2);
    let o3 = orientation(q1, q2, p1);
    let o4 = orientation(q1, q2, p2);
    if o1 != o2 && o3 != o4 {
        SegmentRelation::Crossing
    } else {
        SegmentRelation::Disjoint
    }
}

/// `n` points in convex position, labeled in clockwise order.
///
/// Uses integer points on the strictly convex curve `y = -x^2`; left-to-right
/// order along that parabola is clockwise around the hull. Deterministic.
pub fn gen_convex<C: Coord>(n: usize) -> Result<PointSet<C>, Error> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    let mut points = Vec::with_capacity(n);
    for t in 0..n {
        let x = C::from_usize(t).ok_or(Error::CoordinateOutOfRange)?;
        let y = C::from_usize(t * t)
            .map(|v| C::zero() - v)
            .ok_or(Error::CoordinateOutOfRange)?;
        let p = Point::new(x, y);
        if !p.in_bounds() {
            return Err(Error::CoordinateOutOfRange);
        }
        points.push(p);
    }
    Ok(PointSet::new_unchecked(points))
}

/// `n` random grid points in general position; deterministic for a fixed
/// seed. Candidates that collide or create a collinear triple are redrawn,
/// with a bounded retry budget.
pub fn gen_general<C: Coord>(n: usize, seed: u64) -> Result<PointSet<C>, Error> {
    if n < 3 {
        return Err(Error::TooFewPoints(n));
    }
    // Grid large enough that collinear triples are rare at any tested n.
    let half = (4 * (n as i64) * (n as i64)).max(64);
    if C::from_i64(half).map(|h| h > C::MAX_ABS).unwrap_or(true) {
        return Err(Error::CoordinateOutOfRange);
    }
    let mut rng = SplitMix64::new(seed);
    let span = (2 * half + 1) as u64;
    let mut points: Vec<Point<C>> = Vec::with_capacity(n);
    let budget = 1000 * n as u64;
    let mut attempts = 0u64;
    while points.len() < n {
        attempts += 1;
        if attempts > budget {
            return Err(Error::GeneratorBudgetExhausted { n, seed });
        }
        let x = C::from_i64(rng.below(span) as i64 - half).unwrap();
        let y = C::from_i64(rng.below(span) as i64 - half).unwrap();
        let cand = Point::new(x, y);
        if points.contains(&cand) {
            continue;
        }
        let collinear = (0..points.len()).any(|i| {
            (i + 1..points.len())
                .any(|j| orientation(points[i], points[j], cand) == Orientation::Collinear)
        });
        if collinear {
            continue;
        }
        points.push(cand);
    }
    Ok(PointSet::new_unchecked(points))
}

/// A halving line: the line through two points of the set splitting the
/// remaining points as evenly as parity allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalvingLine {
    /// First spanning point (lexicographically smaller index).
    pub a: usize,
    /// Second spanning point.
    pub b: usize,
    /// Indices strictly on the counterclockwise side of `a -> b`.
    pub left: Vec<usize>,
    /// Indices strictly on the clockwise side of `a -> b`.
    pub right: Vec<usize>,
}

/// Finds the halving line with the lexicographically smallest spanning pair.
///
/// For even `n` both sides carry `(n-2)/2` points; for odd `n` the sides
/// carry `(n-3)/2` and `(n-1)/2`. Every general-position set has one.
pub fn halving_line<C: Coord>(s: &PointSet<C>) -> Result<HalvingLine, Error> {
    let n = s.len();
    if n < 4 {
        return Err(Error::TooFewPoints(n));
    }
    let want = if n.is_multiple_of(2) {
        [(n - 2) / 2, (n - 2) / 2]
    } else {
        [(n - 3) / 2, (n - 1) / 2]
    };
    for a in 0..n {
        for b in a + 1..n {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for v in 0..n {
                if v == a || v == b {
                    continue;
                }
                match orientation(s.point(a), s.point(b), s.point(v)) {
                    Orientation::CounterClockwise => left.push(v),
                    Orientation::Clockwise => right.push(v),
                    Orientation::Collinear => unreachable!("general position"),
                }
            }
            let mut sizes = [left.len(), right.len()];
            sizes.sort_unstable();
            if sizes == want {
                return Ok(HalvingLine { a, b, left, right });
            }
        }
    }
    unreachable!("every general-position point set has a halving line")
}
