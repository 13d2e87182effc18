//! McKay-Miller-Siran graphs (the Slim Fly topology).
//!
//! Vertices are (s, x, y) with s in {0,1} and x, y in F_q. Column (s, x)
//! holds the q vertices sharing s and x. Local edges join vertices of one
//! column whose y difference lies in the generator set X_s; global edges join
//! (0,x1,y1) to (1,x2,y2) when y1 - y2 = x2*x1. Each vertex gets |X_0| local
//! and q global edges, so the graph is (3q-eps)/2 regular on 2q^2 vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::topology::{params1, EdgeClass, Family, GraphBuilder, Predicted, Topology};

/// eps in {-1, 0, 1} with q = 4w + eps.
pub fn epsilon(q: u64) -> Result<i64> {
    match q % 4 {
        0 => Ok(0),
        1 => Ok(1),
        3 => Ok(-1),
        _ => Err(Error::precondition(format!(
            "q = {q} = 2 mod 4 is not a prime power other than 2"
        ))),
    }
}

/// The local generator set X_0 and X_1 = xi * X_0.
///
/// For q = 4w+1 these are the squares and non-squares. For q = 4w-1 the
/// squares are not closed under negation, so X_0 takes {±xi^(2i)}: the even
/// powers up to xi^(2w-2) together with the odd powers from xi^(2w-1) on.
/// For q = 4w (characteristic 2) X_0 is the even powers; negation is the
/// identity so symmetry is free, at the price of X_0 and X_1 sharing {1}.
fn generator_sets(field: &FieldSpec) -> Result<(BTreeSet<FieldElement>, BTreeSet<FieldElement>)> {
    let q = field.order();
    let eps = epsilon(q)?;
    let xi = field.primitive_element()?;
    let mut x0 = BTreeSet::new();
    match eps {
        1 => {
            for i in 0..(q - 1) / 2 {
                x0.insert(field.pow(xi, 2 * i));
            }
        }
        0 => {
            for i in 0..q / 2 {
                x0.insert(field.pow(xi, 2 * i));
            }
        }
        _ => {
            let w = (q + 1) / 4;
            for i in 0..w {
                x0.insert(field.pow(xi, 2 * i));
                x0.insert(field.pow(xi, 2 * i + 2 * w - 1));
            }
        }
    }
    let x1: BTreeSet<FieldElement> = x0.iter().map(|&e| field.mul(xi, e)).collect();
    let expected = ((q as i64 - eps) / 2) as usize;
    if x0.len() != expected || x1.len() != expected {
        return Err(Error::invariant(format!(
            "mms generator sets have size {}, expected {expected}",
            x0.len()
        )));
    }
    for &e in &x0 {
        if !x0.contains(&field.neg(e)) {
            return Err(Error::invariant("X_0 is not symmetric under negation"));
        }
    }
    Ok((x0, x1))
}

/// Build MMS(q) for a prime power q >= 3.
pub fn build_mms(q: u64) -> Result<Topology> {
    if q == 2 {
        return Err(Error::precondition("mms is undefined for q = 2"));
    }
    if q < 3 {
        return Err(Error::precondition("mms requires q >= 3"));
    }
    let field = FieldSpec::create_order(q)
        .map_err(|_| Error::precondition(format!("q must be a prime power, got {q}")))?;
    let eps = epsilon(q)?;
    let (x0, x1) = generator_sets(&field)?;
    let sets = [&x0, &x1];

    let n = (2 * q * q) as usize;
    let id = |s: u64, x: u64, y: u64| -> usize { (s * q * q + x * q + y) as usize };
    let mut b = GraphBuilder::new(n);
    for s in 0..2u64 {
        for x in field.elements() {
            for y in field.elements() {
                let v = id(s, x.value(), y.value());
                b.label(
                    v,
                    format!("({s},{},{})", field.render(x), field.render(y)),
                );
            }
        }
    }
    // Interleave columns so that merging consecutive atoms pairs (0,x) with
    // (1,x) in the physical layout.
    let clusters: Vec<u32> = (0..n)
        .map(|v| {
            let s = v as u64 / (q * q);
            let x = (v as u64 / q) % q;
            (2 * x + s) as u32
        })
        .collect();
    b.clusters(clusters);

    for s in 0..2u64 {
        for x in field.elements() {
            for y1 in field.elements() {
                for y2 in field.elements() {
                    if y1 < y2 && sets[s as usize].contains(&field.sub(y1, y2)) {
                        b.classed_edge(
                            id(s, x.value(), y1.value()),
                            id(s, x.value(), y2.value()),
                            Some(EdgeClass::Local),
                        );
                    }
                }
            }
        }
    }
    for x1v in field.elements() {
        for y1 in field.elements() {
            for x2 in field.elements() {
                let y2 = field.sub(y1, field.mul(x2, x1v));
                b.classed_edge(
                    id(0, x1v.value(), y1.value()),
                    id(1, x2.value(), y2.value()),
                    Some(EdgeClass::Global),
                );
            }
        }
    }
    let delta = ((3 * q as i64 - eps) / 2) as usize;
    b.finish(Family::Mms, params1("q", q), Predicted::regular(n, delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::EdgeClass;

    #[test]
    fn rejects_bad_q() {
        assert!(build_mms(2).is_err());
        assert!(build_mms(6).is_err());
        assert!(build_mms(10).is_err());
    }

    #[test]
    fn hoffman_singleton_is_mms5() {
        let g = build_mms(5).unwrap();
        assert_eq!(g.n(), 50);
        assert!((0..50).all(|v| g.degree(v) == 7));
        // Diameter 2 and girth 5: the Hoffman-Singleton graph.
        for v in 0..g.n() {
            let w = g.vertex_distance_distribution(v);
            assert_eq!(w, vec![1, 7, 42]);
        }
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn sizes_match_case_studies() {
        let g19 = build_mms(19).unwrap();
        assert_eq!(g19.n(), 722);
        assert_eq!(g19.delta(), 29);
        let g27 = build_mms(27).unwrap();
        assert_eq!(g27.n(), 1458);
        assert_eq!(g27.delta(), 41);
    }

    /// Per-vertex edge type counts: (q-eps)/2 local and q global.
    #[test]
    fn edge_type_counts() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
            let g = build_mms(q).unwrap();
            let eps = epsilon(q).unwrap();
            let local_per_vertex = ((q as i64 - eps) / 2) as usize;
            for v in 0..g.n() {
                let mut local = 0;
                let mut global = 0;
                for i in 0..g.degree(v) {
                    match g.edge_class(v, i).unwrap() {
                        EdgeClass::Local => local += 1,
                        EdgeClass::Global => global += 1,
                    }
                }
                assert_eq!(local, local_per_vertex, "q = {q}");
                assert_eq!(global, q as usize, "q = {q}");
            }
        }
    }

    #[test]
    fn diameter_two() {
        for q in [3u64, 4, 5, 7, 8, 9, 11, 13] {
            let g = build_mms(q).unwrap();
            for v in 0..g.n() {
                let w = g.vertex_distance_distribution(v);
                assert!(w.len() <= 3, "q = {q}: diameter exceeds 2");
                assert_eq!(w.iter().sum::<u64>(), g.n() as u64, "q = {q}");
            }
        }
    }
}
