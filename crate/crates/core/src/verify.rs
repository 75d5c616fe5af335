//! Certification of edge colorings: proper, complete, and the per-edge
//! downward-witness property that makes a coloring (pseudo-)Grundy.
//!
//! Everything here is an explicit check against the conflict graph; no
//! property of any construction is assumed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::EdgeColoring;
use crate::conflict::ConflictGraph;
use crate::error::Error;
use crate::geometry::Edge;

/// Outcome of a full verification pass.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub color_count: u32,
    pub proper: bool,
    pub complete: bool,
    pub grundy_property: bool,
    pub singleton_class_count: usize,
    /// Class size -> number of classes of that size.
    pub class_size_histogram: BTreeMap<usize, usize>,
    /// On a Grundy-property failure: (lower color, upper color, witness edge).
    pub first_violation: Option<(u32, u32, [usize; 2])>,
}

impl VerificationReport {
    /// A proper coloring with the downward-witness property is a certified
    /// Grundy coloring; the witness property alone certifies pseudo-Grundy.
    pub fn certifies_grundy(&self) -> bool {
        self.proper && self.grundy_property
    }

    pub fn certifies_pseudo_grundy(&self) -> bool {
        self.grundy_property
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn check_inputs(g: &ConflictGraph, col: &EdgeColoring) -> Result<(), Error> {
    if g.n() != col.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: col.n(),
        });
    }
    if let Some(e) = col.first_uncolored() {
        return Err(Error::PartialColoring(e.a(), e.b()));
    }
    Ok(())
}

/// For every node, the set of colors present among its neighbors, as a
/// bitmask over colors (bit `c - 1` for color `c`).
fn neighbor_color_sets(g: &ConflictGraph, col: &EdgeColoring) -> Vec<Vec<u64>> {
    let k = col.color_count() as usize;
    let words = k.div_ceil(64);
    let m = g.node_count();
    let mut sets = vec![vec![0u64; words]; m];
    for (i, set) in sets.iter_mut().enumerate() {
        g.adjacency().for_each_in_row(i, |j| {
            let c = col.color_by_index(j).expect("total coloring") as usize;
            set[(c - 1) / 64] |= 1u64 << ((c - 1) % 64);
        });
    }
    sets
}

/// True iff no two adjacent edges share a color.
pub fn is_proper(g: &ConflictGraph, col: &EdgeColoring) -> Result<bool, Error> {
    check_inputs(g, col)?;
    let m = g.node_count();
    for i in 0..m {
        let ci = col.color_by_index(i).unwrap();
        let mut ok = true;
        g.adjacency().for_each_in_row(i, |j| {
            if j > i && col.color_by_index(j) == Some(ci) {
                ok = false;
            }
        });
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every unordered pair of used colors meets on some adjacent pair.
pub fn is_complete(g: &ConflictGraph, col: &EdgeColoring) -> Result<bool, Error> {
    check_inputs(g, col)?;
    let k = col.color_count() as usize;
    let words = k.div_ceil(64);
    let sets = neighbor_color_sets(g, col);
    // met[c-1] = colors adjacent to class c somewhere.
    let mut met = vec![vec![0u64; words]; k];
    for (i, set) in sets.iter().enumerate() {
        let c = col.color_by_index(i).unwrap() as usize;
        for (w, bits) in set.iter().enumerate() {
            met[c - 1][w] |= bits;
        }
    }
    for (hi, met_row) in met.iter().enumerate().skip(1) {
        for lo in 0..hi {
            if met_row[lo / 64] & (1u64 << (lo % 64)) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Per-edge downward witnesses: every edge colored `j` must have, for each
/// `i < j`, at least one neighbor colored `i`. Returns the first violation
/// `(i, j, edge)` if any.
pub fn has_grundy_property(
    g: &ConflictGraph,
    col: &EdgeColoring,
) -> Result<Option<(u32, u32, Edge)>, Error> {
    check_inputs(g, col)?;
    let sets = neighbor_color_sets(g, col);
    for (i, e) in g.edges().iter().enumerate() {
        let j = col.color_by_index(i).unwrap();
        let need = (j - 1) as usize;
        let set = &sets[i];
        let mut have = 0usize;
        for (w, &bits) in set.iter().enumerate() {
            let lo = w * 64;
            if lo >= need {
                break;
            }
            let take = (need - lo).min(64);
            let mask = if take == 64 { u64::MAX } else { (1u64 << take) - 1 };
            let present = bits & mask;
            if present.count_ones() as usize != take {
                let missing = (!present & mask).trailing_zeros() as usize + lo;
                return Ok(Some((missing as u32 + 1, j, *e)));
            }
            have += take;
        }
        if have < need {
            return Ok(Some((have as u32 + 1, j, *e)));
        }
    }
    Ok(None)
}

/// Number of colors used by exactly one edge.
pub fn singleton_count(col: &EdgeColoring) -> usize {
    col.class_sizes().iter().filter(|&&s| s == 1).count()
}

/// Runs all checks and assembles the report.
pub fn verify(g: &ConflictGraph, col: &EdgeColoring) -> Result<VerificationReport, Error> {
    check_inputs(g, col)?;
    let proper = is_proper(g, col)?;
    let complete = is_complete(g, col)?;
    let violation = has_grundy_property(g, col)?;
    let sizes = col.class_sizes();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for &s in sizes.iter().skip(1) {
        *histogram.entry(s).or_insert(0) += 1;
    }
    Ok(VerificationReport {
        color_count: col.color_count(),
        proper,
        complete,
        grundy_property: violation.is_none(),
        singleton_class_count: sizes.iter().filter(|&&s| s == 1).count(),
        class_size_histogram: histogram,
        first_violation: violation.map(|(i, j, e)| (i, j, [e.a(), e.b()])),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Stage;
    use crate::conflict::{build_conflict_graph, Criterion};
    use crate::geometry::{all_edges, gen_convex};

    fn color_all(n: usize, c: Criterion, f: impl Fn(Edge) -> u32) -> EdgeColoring {
        let mut col = EdgeColoring::new(n, c);
        for e in all_edges(n) {
            col.set(e, f(e), Stage::Constructed);
        }
        col
    }

    #[test]
    fn proper_detects_crossing_conflict() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Crossing);
        // Both diagonals colored 1: improper.
        let col = color_all(4, Criterion::Crossing, |_| 1);
        assert!(!is_proper(&g, &col).unwrap());

        // Diagonals 1 and 2, boundary all 1: proper (boundary crosses nothing).
        let col = color_all(4, Criterion::Crossing, |e| {
            if e == Edge::new(0, 2) {
                1
            } else if e == Edge::new(1, 3) {
                2
            } else {
                1
            }
        });
        assert!(is_proper(&g, &col).unwrap());
    }

    #[test]
    fn complete_cases_on_k4() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Crossing);
        let single = color_all(4, Criterion::Crossing, |_| 1);
        assert!(is_complete(&g, &single).unwrap());

        // Three colors but only one adjacency: some pair never meets.
        let col = color_all(4, Criterion::Crossing, |e| {
            if e == Edge::new(0, 2) {
                2
            } else if e == Edge::new(1, 3) {
                3
            } else {
                1
            }
        });
        assert!(!is_complete(&g, &col).unwrap());
    }

    #[test]
    fn grundy_property_witness() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Crossing);
        let all_one = color_all(4, Criterion::Crossing, |_| 1);
        assert!(has_grundy_property(&g, &all_one).unwrap().is_none());

        // A color-2 edge with no color-1 neighbor: boundary edge {0,1}
        // crosses nothing, so coloring it 2 has no witness.
        let col = color_all(4, Criterion::Crossing, |e| {
            if e == Edge::new(0, 1) {
                2
            } else {
                1
            }
        });
        let w = has_grundy_property(&g, &col).unwrap();
        assert_eq!(w, Some((1, 2, Edge::new(0, 1))));
    }

    #[test]
    fn grundy_implies_complete_on_fixtures() {
        let s = gen_convex::<i64>(5).unwrap();
        for c in Criterion::ALL {
            let g = build_conflict_graph(&s, c);
            let col = color_all(5, c, |_| 1);
            if has_grundy_property(&g, &col).unwrap().is_none() {
                assert!(is_complete(&g, &col).unwrap());
            }
        }
    }

    #[test]
    fn singleton_count_all_distinct_k3() {
        let col = color_all(3, Criterion::Intersection, |e| {
            crate::geometry::edge_index(3, e) as u32 + 1
        });
        assert_eq!(singleton_count(&col), 3);
    }

    /// Naive triple-loop verifiers, the independent route the bitset
    /// implementations are compared against on random colorings.
    mod naive {
        use super::*;

        pub fn complete(g: &ConflictGraph, col: &EdgeColoring) -> bool {
            let k = col.color_count();
            let edges = g.edges();
            for i in 1..=k {
                for j in i + 1..=k {
                    let mut met = false;
                    'scan: for &e in edges {
                        for &f in edges {
                            if e != f
                                && g.are_adjacent(e, f)
                                && col.color(e) == Some(i)
                                && col.color(f) == Some(j)
                            {
                                met = true;
                                break 'scan;
                            }
                        }
                    }
                    if !met {
                        return false;
                    }
                }
            }
            true
        }

        pub fn grundy(g: &ConflictGraph, col: &EdgeColoring) -> bool {
            let edges = g.edges();
            for &e in edges {
                let j = col.color(e).unwrap();
                for i in 1..j {
                    let witnessed = edges
                        .iter()
                        .any(|&f| f != e && g.are_adjacent(e, f) && col.color(f) == Some(i));
                    if !witnessed {
                        return false;
                    }
                }
            }
            true
        }

        pub fn proper(g: &ConflictGraph, col: &EdgeColoring) -> bool {
            let edges = g.edges();
            for &e in edges {
                for &f in edges {
                    if e < f && g.are_adjacent(e, f) && col.color(e) == col.color(f) {
                        return false;
                    }
                }
            }
            true
        }
    }

    proptest::proptest! {
        #[test]
        fn verifiers_agree_with_naive_loops(seed in 0u64..60, n in 4usize..7, k in 1u32..6) {
            let s = crate::geometry::gen_general::<i64>(n, seed).unwrap();
            let mut rng = crate::rng::SplitMix64::new(seed ^ 0xC01);
            for c in Criterion::ALL {
                let g = build_conflict_graph(&s, c);
                let mut col = EdgeColoring::new(n, c);
                for e in all_edges(n) {
                    col.set(e, rng.below(k as u64) as u32 + 1, Stage::Constructed);
                }
                proptest::prop_assert_eq!(is_proper(&g, &col).unwrap(), naive::proper(&g, &col));
                proptest::prop_assert_eq!(is_complete(&g, &col).unwrap(), naive::complete(&g, &col));
                proptest::prop_assert_eq!(
                    has_grundy_property(&g, &col).unwrap().is_none(),
                    naive::grundy(&g, &col)
                );
            }
        }
    }

    #[test]
    fn verify_rejects_partial_colorings() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Crossing);
        let mut col = EdgeColoring::new(4, Criterion::Crossing);
        col.set(Edge::new(0, 1), 1, Stage::Constructed);
        assert!(matches!(
            verify(&g, &col),
            Err(Error::PartialColoring(_, _))
        ));
    }
}
