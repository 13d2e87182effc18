//! Independent reference implementations used by the test suites.
//!
//! These deliberately avoid the accumulation machinery in [`crate::metrics`]:
//! loads are computed by enumerating every shortest path explicitly, path by
//! path, and summing 1/sigma(s,t) per traversed arc. Quadratic and slow, but
//! obviously correct; the fast path must match it exactly.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::metrics::TrafficScope;
use crate::topology::{Role, Topology};

/// Exact per-arc loads by explicit shortest-path enumeration.
/// Returns (v, w) -> load over directed arcs. Only for small graphs.
pub fn arc_loads_by_enumeration(
    g: &Topology,
    scope: TrafficScope,
) -> BTreeMap<(u32, u32), BigRational> {
    let scoped: Vec<u32> = match scope {
        TrafficScope::AllPairs => (0..g.n() as u32).collect(),
        TrafficScope::LeafToLeaf => (0..g.n() as u32)
            .filter(|&v| g.role(v as usize) == Role::Leaf)
            .collect(),
    };
    let mut loads: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            loads.insert((v as u32, w), BigRational::from_integer(BigInt::from(0)));
        }
    }
    for &s in &scoped {
        // BFS distances from s.
        let mut dist = vec![u32::MAX; g.n()];
        dist[s as usize] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x as usize) {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        for &t in &scoped {
            if t == s {
                continue;
            }
            let paths = enumerate_paths(g, &dist, s, t);
            let weight = BigRational::new(BigInt::from(1), BigInt::from(paths.len() as u64));
            for path in &paths {
                for pair in path.windows(2) {
                    *loads.get_mut(&(pair[0], pair[1])).unwrap() += &weight;
                }
            }
        }
    }
    loads
}

/// Every shortest path from s to t, as vertex sequences.
fn enumerate_paths(g: &Topology, dist_from_s: &[u32], s: u32, t: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![s]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if last == t {
            out.push(path);
            continue;
        }
        for &next in g.neighbors(last as usize) {
            if dist_from_s[next as usize] == dist_from_s[last as usize] + 1
                && dist_from_s[next as usize] <= dist_from_s[t as usize]
            {
                // Only continue along vertices that can still reach t
                // shortest-wise; pruned below by the final check.
                let mut longer = path.clone();
                longer.push(next);
                stack.push(longer);
            }
        }
    }
    // Keep only genuine s-t shortest paths.
    out.retain(|p| p.len() as u32 == dist_from_s[t as usize] + 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::arc_loads;
    use crate::topology::{build, params1, Family};

    #[test]
    fn enumeration_matches_accumulation_on_small_graphs() {
        let cases = vec![
            build(Family::Pn, &params1("q", 2)).unwrap(),
            build(Family::DemiPn, &params1("q", 3)).unwrap(),
            build(Family::Mms, &params1("q", 3)).unwrap(),
            build(Family::Complete, &params1("n", 6)).unwrap(),
            build(Family::Hypercube, &params1("n", 4)).unwrap(),
        ];
        for g in cases {
            let fast = arc_loads(&g, TrafficScope::AllPairs).unwrap();
            let slow = arc_loads_by_enumeration(&g, TrafficScope::AllPairs);
            for (i, (arc, load)) in fast.iter().enumerate() {
                assert_eq!(load, slow[&arc], "{}: arc {arc:?} (index {i})", g.family());
            }
        }
    }
}
