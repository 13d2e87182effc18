//! Multi-layer full-mesh: the incidence graph of the complete graph K_n with
//! every leaf replicated n-1 times. C(n,2) spines of degree 2(n-1), n(n-1)
//! leaves of degree n-1.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::topology::{params1, Family, GraphBuilder, Predicted, Role, Topology};

pub fn build_mlfm(n: u64) -> Result<Topology> {
    if n < 2 {
        return Err(Error::precondition("mlfm requires n >= 2"));
    }
    let leaves = (n * (n - 1)) as usize;
    let spines = (n * (n - 1) / 2) as usize;
    let total = leaves + spines;
    // Leaves first: replica i of K_n vertex v at id v*(n-1)+i. Spines after:
    // pair {v, w} with v < w in lexicographic order.
    let leaf_id = |v: u64, i: u64| -> usize { (v * (n - 1) + i) as usize };
    let mut spine_ids: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    let mut next = leaves;
    for v in 0..n {
        for w in (v + 1)..n {
            spine_ids.insert((v, w), next);
            next += 1;
        }
    }

    let mut b = GraphBuilder::new(total);
    for v in 0..n {
        for i in 0..(n - 1) {
            b.label(leaf_id(v, i), format!("l{v}.{i}"));
        }
    }
    for (&(v, w), &id) in &spine_ids {
        b.label(id, format!("s{v}-{w}"));
        b.role(id, Role::Spine);
    }
    for (&(v, w), &id) in &spine_ids {
        for i in 0..(n - 1) {
            b.edge(leaf_id(v, i), id);
            b.edge(leaf_id(w, i), id);
        }
    }
    let mut degree_counts = BTreeMap::new();
    degree_counts.insert((n - 1) as usize, leaves);
    // K_2 degenerates: spine degree 2(n-1) equals leaf degree when n = 2.
    *degree_counts.entry((2 * (n - 1)) as usize).or_insert(0) += spines;
    let predicted = Predicted {
        n: total,
        degree_counts,
    };
    b.finish(Family::Mlfm, params1("n", n), predicted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mlfm4_shape() {
        let g = build_mlfm(4).unwrap();
        assert_eq!(g.spine_count(), 6);
        assert_eq!(g.leaf_count(), 12);
        for v in g.leaves() {
            assert_eq!(g.degree(v), 3);
        }
        assert_eq!(g.leaf_to_leaf_degree(), 0);
    }

    #[test]
    fn mlfm22_matches_case_study() {
        let g = build_mlfm(22).unwrap();
        assert_eq!(g.n(), 693);
        assert_eq!(g.leaf_count(), 462);
        assert_eq!(g.edge_count(), 9702);
    }

    #[test]
    fn rejects_tiny_n() {
        assert!(build_mlfm(1).is_err());
    }
}
