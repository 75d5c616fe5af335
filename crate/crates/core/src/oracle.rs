//! Exhaustive ground truth on small conflict graphs: exact Grundy and
//! pseudo-Grundy indices by complete search, and the disjoint-pair check.
//!
//! Size caps keep the searches honest: 15 nodes for the pseudo-Grundy
//! backtracking, 12 for proper-Grundy backtracking, with all node orderings
//! enumerated instead when the instance has at most 10 nodes.

use crate::conflict::ConflictGraph;
use crate::error::Error;
use crate::geometry::{segment_relation, Edge, PointSet, SegmentRelation};
use crate::scalar::Coord;

pub const PSEUDO_GRUNDY_NODE_CAP: usize = 15;
pub const GRUNDY_NODE_CAP: usize = 12;
const ORDERING_NODE_CAP: usize = 10;

/// A conflict graph small enough for exhaustive search.
#[derive(Debug, Clone)]
pub struct SmallInstance {
    nodes: usize,
    adj: Vec<u16>,
}

impl SmallInstance {
    pub fn from_conflict_graph(g: &ConflictGraph) -> Result<Self, Error> {
        let m = g.node_count();
        if m > PSEUDO_GRUNDY_NODE_CAP {
            return Err(Error::InstanceTooLarge {
                got: m,
                cap: PSEUDO_GRUNDY_NODE_CAP,
            });
        }
        let mut adj = vec![0u16; m];
        for (i, row) in adj.iter_mut().enumerate() {
            g.adjacency().for_each_in_row(i, |j| *row |= 1 << j);
        }
        Ok(SmallInstance { nodes: m, adj })
    }

    /// Hand-built fixture from an explicit symmetric pair list.
    pub fn from_pairs(nodes: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        if nodes > PSEUDO_GRUNDY_NODE_CAP {
            return Err(Error::InstanceTooLarge {
                got: nodes,
                cap: PSEUDO_GRUNDY_NODE_CAP,
            });
        }
        let mut adj = vec![0u16; nodes];
        for &(a, b) in pairs {
            assert!(a != b && a < nodes && b < nodes);
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(SmallInstance { nodes, adj })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.nodes).map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// Greedy run in a fixed node order; returns the number of colors used.
/// Greedy colorings are proper and have the downward-witness property.
fn greedy_colors(inst: &SmallInstance, order: &[usize]) -> u32 {
    let mut colors = vec![0u32; inst.nodes];
    let mut max = 0;
    for &v in order {
        let mut used: u32 = 0;
        let mut nb = inst.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            if colors[u] > 0 {
                used |= 1 << (colors[u] - 1);
            }
            nb &= nb - 1;
        }
        let c = (!used).trailing_zeros() + 1;
        colors[v] = c;
        max = max.max(c);
    }
    max
}

/// Largest `k` admitting a coloring with the downward-witness property
/// (properness not required), by branch-and-prune over color assignments.
pub fn exact_pseudo_grundy(inst: &SmallInstance) -> Result<u32, Error> {
    if inst.nodes > PSEUDO_GRUNDY_NODE_CAP {
        return Err(Error::InstanceTooLarge {
            got: inst.nodes,
            cap: PSEUDO_GRUNDY_NODE_CAP,
        });
    }
    if inst.nodes == 0 {
        return Ok(0);
    }
    // A node colored k needs k-1 distinctly-colored neighbors.
    let ub = inst.max_degree() as u32 + 1;
    let order: Vec<usize> = natural_order(inst);
    let mut best = greedy_colors(inst, &order);
    // Dropping the top class of a witness-valid coloring keeps it valid, so
    // feasibility is monotone in k and the first failure is the answer.
    for k in best + 1..=ub {
        if feasible(inst, k, false) {
            best = k;
        } else {
            break;
        }
    }
    Ok(best)
}

/// Largest `k` admitting a proper Grundy `k`-coloring. Instances with at
/// most 10 nodes enumerate all node orderings (the greedy maximum equals
/// the Grundy number); larger instances up to the cap use branch-and-prune
/// with properness, iterating `k` downward.
pub fn exact_grundy(inst: &SmallInstance) -> Result<u32, Error> {
    if inst.nodes > GRUNDY_NODE_CAP {
        return Err(Error::InstanceTooLarge {
            got: inst.nodes,
            cap: GRUNDY_NODE_CAP,
        });
    }
    if inst.nodes == 0 {
        return Ok(0);
    }
    if inst.nodes <= ORDERING_NODE_CAP {
        let mut order: Vec<usize> = (0..inst.nodes).collect();
        let mut best = 0;
        permute(&mut order, 0, &mut |perm| {
            best = best.max(greedy_colors(inst, perm));
        });
        return Ok(best);
    }
    let ub = inst.max_degree() as u32 + 1;
    for k in (1..=ub).rev() {
        if feasible(inst, k, true) {
            return Ok(k);
        }
    }
    Ok(1)
}

fn natural_order(inst: &SmallInstance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..inst.nodes).collect();
    order.sort_by(|&a, &b| inst.degree(b).cmp(&inst.degree(a)).then(a.cmp(&b)));
    order
}

fn permute(items: &mut Vec<usize>, at: usize, f: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        f(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, f);
        items.swap(at, i);
    }
}

/// Is there a (proper, if requested) coloring with colors in `1..=k`, max
/// color exactly `k`, where every node colored `c` has a neighbor of every
/// color below `c`?
fn feasible(inst: &SmallInstance, k: u32, proper: bool) -> bool {
    let order = natural_order(inst);
    let n = inst.nodes;
    let mut state = SearchState {
        inst,
        k,
        proper,
        order,
        colors: vec![0; n],
        // present[v] = colors among v's assigned neighbors, as a bitmask.
        present: vec![0u32; n],
        unassigned_deg: (0..n).map(|v| inst.degree(v) as u32).collect(),
    };
    state.dfs(0, 0)
}

struct SearchState<'a> {
    inst: &'a SmallInstance,
    k: u32,
    proper: bool,
    order: Vec<usize>,
    colors: Vec<u32>,
    present: Vec<u32>,
    unassigned_deg: Vec<u32>,
}

impl SearchState<'_> {
    /// Missing lower colors of an assigned node must be coverable by its
    /// still-unassigned neighbors, one color each.
    fn witness_ok(&self, v: usize) -> bool {
        let c = self.colors[v];
        debug_assert!(c > 0);
        let low = if c == 1 { 0 } else { (1u32 << (c - 1)) - 1 };
        let missing = (low & !self.present[v]).count_ones();
        missing <= self.unassigned_deg[v]
    }

    fn dfs(&mut self, pos: usize, max_used: u32) -> bool {
        if pos == self.inst.nodes {
            return max_used == self.k
                && (0..self.inst.nodes).all(|v| {
                    let c = self.colors[v];
                    let low = if c == 1 { 0 } else { (1u32 << (c - 1)) - 1 };
                    low & !self.present[v] == 0
                });
        }
        let v = self.order[pos];
        // The remaining nodes must still be able to realize color k.
        let remaining = (self.inst.nodes - pos) as u32;
        let cap = self.inst.degree(v) as u32 + 1;
        for c in 1..=self.k.min(cap) {
            if max_used < self.k && max_used.max(c) < self.k && remaining == 1 {
                continue;
            }
            if self.proper && self.present[v] & (1 << (c - 1)) != 0 {
                continue;
            }
            self.colors[v] = c;
            let mut nb = self.inst.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                self.present[u] |= 1 << (c - 1);
                self.unassigned_deg[u] -= 1;
                nb &= nb - 1;
            }
            let mut ok = self.witness_ok(v);
            if ok {
                let mut nb = self.inst.adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    if self.colors[u] > 0 && !self.witness_ok(u) {
                        ok = false;
                        break;
                    }
                    nb &= nb - 1;
                }
            }
            if ok && self.dfs(pos + 1, max_used.max(c)) {
                return true;
            }
            let mut nb = self.inst.adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                // Another assigned neighbor may still contribute color c.
                let still = {
                    let mut any = false;
                    let mut nb2 = self.inst.adj[u];
                    while nb2 != 0 {
                        let w = nb2.trailing_zeros() as usize;
                        if w != v && self.colors[w] == c {
                            any = true;
                            break;
                        }
                        nb2 &= nb2 - 1;
                    }
                    any
                };
                if !still {
                    self.present[u] &= !(1 << (c - 1));
                }
                self.unassigned_deg[u] += 1;
                nb &= nb - 1;
            }
            self.colors[v] = 0;
        }
        false
    }
}

/// Does some pair among `edges` have disjoint segments over `s`?
pub fn disjoint_pair_exists<C: Coord>(s: &PointSet<C>, edges: &[Edge]) -> bool {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if segment_relation(s, edges[i], edges[j]) == SegmentRelation::Disjoint {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::{build_conflict_graph, Criterion};
    use crate::geometry::{gen_convex, PointSet, Point};
    use crate::rng::SplitMix64;

    fn clique(k: usize) -> SmallInstance {
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                pairs.push((i, j));
            }
        }
        SmallInstance::from_pairs(k, &pairs).unwrap()
    }

    #[test]
    fn pseudo_grundy_trivials() {
        assert_eq!(exact_pseudo_grundy(&clique(3)).unwrap(), 3);
        let edgeless = SmallInstance::from_pairs(3, &[]).unwrap();
        assert_eq!(exact_pseudo_grundy(&edgeless).unwrap(), 1);
    }

    #[test]
    fn pseudo_grundy_convex_k4_crossing_is_two() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Crossing);
        let inst = SmallInstance::from_conflict_graph(&g).unwrap();
        assert_eq!(exact_pseudo_grundy(&inst).unwrap(), 2);
    }

    #[test]
    fn grundy_trivials() {
        assert_eq!(exact_grundy(&clique(3)).unwrap(), 3);
        let star = SmallInstance::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(exact_grundy(&star).unwrap(), 2);
    }

    #[test]
    fn grundy_convex_k4_intersection_bracket() {
        let s = gen_convex::<i64>(4).unwrap();
        let g = build_conflict_graph(&s, Criterion::Intersection);
        let inst = SmallInstance::from_conflict_graph(&g).unwrap();
        let v = exact_grundy(&inst).unwrap();
        assert!((4..=5).contains(&v), "got {v}");
        // Backtracking route must agree with the ordering route.
        let ub = inst.max_degree() as u32 + 1;
        let mut via_backtrack = 1;
        for k in (1..=ub).rev() {
            if super::feasible(&inst, k, true) {
                via_backtrack = k;
                break;
            }
        }
        assert_eq!(v, via_backtrack);
    }

    /// Plain odometer enumeration over all colorings, no pruning; the
    /// independent route the search answers are checked against.
    fn brute_force_index(inst: &SmallInstance, proper: bool) -> u32 {
        let n = inst.nodes();
        let ub = inst.max_degree() as u32 + 1;
        let mut colors = vec![1u32; n];
        let mut best = 0;
        loop {
            let mut valid = true;
            'nodes: for v in 0..n {
                let c = colors[v];
                let mut seen = 0u32;
                let mut nb = inst.adj[v];
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    if proper && colors[u] == c {
                        valid = false;
                        break 'nodes;
                    }
                    if colors[u] < c {
                        seen |= 1 << (colors[u] - 1);
                    }
                    nb &= nb - 1;
                }
                let low = if c == 1 { 0 } else { (1u32 << (c - 1)) - 1 };
                if seen & low != low {
                    valid = false;
                    break;
                }
            }
            if valid {
                best = best.max(*colors.iter().max().unwrap());
            }
            // Advance the odometer.
            let mut pos = 0;
            loop {
                if pos == n {
                    return best;
                }
                if colors[pos] < ub {
                    colors[pos] += 1;
                    break;
                }
                colors[pos] = 1;
                pos += 1;
            }
        }
    }

    #[test]
    fn search_matches_brute_force_on_small_graphs() {
        let mut rng = SplitMix64::new(23);
        for trial in 0..25 {
            let nodes = 3 + (trial % 4);
            let mut pairs = Vec::new();
            for i in 0..nodes {
                for j in i + 1..nodes {
                    if rng.below(3) > 0 {
                        pairs.push((i, j));
                    }
                }
            }
            let inst = SmallInstance::from_pairs(nodes, &pairs).unwrap();
            assert_eq!(
                exact_pseudo_grundy(&inst).unwrap(),
                brute_force_index(&inst, false),
                "pseudo mismatch on {pairs:?}"
            );
            assert_eq!(
                exact_grundy(&inst).unwrap(),
                brute_force_index(&inst, true),
                "grundy mismatch on {pairs:?}"
            );
        }
    }

    #[test]
    fn grundy_never_exceeds_pseudo_grundy() {
        let mut rng = SplitMix64::new(11);
        for trial in 0..30 {
            let nodes = 4 + (trial % 5);
            let mut pairs = Vec::new();
            for i in 0..nodes {
                for j in i + 1..nodes {
                    if rng.below(2) == 0 {
                        pairs.push((i, j));
                    }
                }
            }
            let inst = SmallInstance::from_pairs(nodes, &pairs).unwrap();
            let g = exact_grundy(&inst).unwrap();
            let p = exact_pseudo_grundy(&inst).unwrap();
            assert!(g <= p, "nodes={nodes} pairs={pairs:?} g={g} p={p}");
        }
    }

    #[test]
    fn size_caps_are_enforced() {
        let big = SmallInstance::from_pairs(15, &[(0, 1)]).unwrap();
        assert_eq!(exact_pseudo_grundy(&big).unwrap(), 2);
        assert!(matches!(
            exact_grundy(&big),
            Err(Error::InstanceTooLarge { got: 15, cap: 12 })
        ));
        assert!(matches!(
            SmallInstance::from_pairs(16, &[]),
            Err(Error::InstanceTooLarge { got: 16, cap: 15 })
        ));
    }

    #[test]
    fn disjoint_pair_trivials() {
        // A star has no disjoint pair.
        let s = PointSet::new(vec![
            Point::new(0i64, 0),
            Point::new(10, 1),
            Point::new(9, 5),
            Point::new(-3, 8),
        ])
        .unwrap();
        let star: Vec<Edge> = (1..4).map(|v| Edge::new(0, v)).collect();
        assert!(!disjoint_pair_exists(&s, &star));
        // Two separated parallel-ish segments are disjoint.
        let edges = vec![Edge::new(1, 2), Edge::new(0, 3)];
        assert!(disjoint_pair_exists(&s, &edges));
    }
}
