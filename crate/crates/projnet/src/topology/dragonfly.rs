//! Canonic dragonfly: groups of 2h fully connected routers, h global ports
//! per router, 2h^2+1 groups, one global link between every pair of groups,
//! wired with the palmtree arrangement.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::topology::{params1, EdgeClass, Family, GraphBuilder, Predicted, Topology};

/// Build a canonic dragonfly with h global links per router: group size
/// a = 2h, g = 2h^2+1 groups, N = 4h^3+2h routers of degree 3h-1.
pub fn build_dragonfly(h: u64) -> Result<Topology> {
    if h < 1 {
        return Err(Error::precondition("dragonfly requires h >= 1"));
    }
    let a = 2 * h;
    let g = a * h + 1;
    let n = (a * g) as usize;
    let pack = |group: u64, offset: u64| -> usize { (group * a + offset) as usize };

    let mut b = GraphBuilder::new(n);
    for group in 0..g {
        for offset in 0..a {
            b.label(pack(group, offset), format!("({group},{offset})"));
        }
    }
    b.clusters((0..n).map(|v| (v as u64 / a) as u32).collect());

    for group in 0..g {
        for o1 in 0..a {
            for o2 in (o1 + 1)..a {
                b.classed_edge(pack(group, o1), pack(group, o2), Some(EdgeClass::Local));
            }
        }
    }
    // Palmtree arrangement: port p of router `offset` in group i goes to
    // router a-1-offset in group i + 1 + ((a-1-offset)*h + (h-1-p)) mod (g-1).
    // The map is an involution and gives each group pair exactly one link.
    for group in 0..g {
        for offset in 0..a {
            for port in 0..h {
                let t_offset = a - offset - 1;
                let t_port = h - 1 - port;
                let t_group = (group + 1 + (t_offset * h + t_port) % (g - 1)) % g;
                let u = pack(group, offset);
                let v = pack(t_group, t_offset);
                if u < v {
                    b.classed_edge(u, v, Some(EdgeClass::Global));
                }
            }
        }
    }
    let delta = (3 * h - 1) as usize;
    b.finish(Family::Dragonfly, params1("h", h), Predicted::regular(n, delta))
}

/// Average distance under canonical hierarchical (local-global-local) minimal
/// routing: W(1) = 3h-1 neighbours, W(2) = 2h(2h-1) (the gateway groups'
/// remaining routers plus the landing routers of non-gateway groups), and the
/// rest at 3 hops. This is the dimensioning convention for dragonflies; the
/// graph distance is slightly smaller because global-global shortcuts exist.
pub fn hierarchical_avg_distance(h: u64) -> BigRational {
    let n = 4 * h * h * h + 2 * h;
    let w1 = 3 * h - 1;
    let w2 = 2 * h * (2 * h - 1);
    let w3 = (2 * h * h - h) * (2 * h - 1);
    debug_assert_eq!(w1 + w2 + w3, n - 1);
    BigRational::new(BigInt::from(w1 + 2 * w2 + 3 * w3), BigInt::from(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dragonfly7_shape() {
        let g = build_dragonfly(7).unwrap();
        assert_eq!(g.n(), 1386);
        assert!((0..g.n()).all(|v| g.degree(v) == 20));
        assert_eq!(g.edge_count(), 13860);
    }

    #[test]
    fn one_global_link_per_group_pair() {
        for h in [2u64, 3, 7] {
            let g = build_dragonfly(h).unwrap();
            let a = 2 * h;
            let groups = (a * h + 1) as usize;
            let mut seen = vec![0u32; groups * groups];
            for (u, v) in g.edges() {
                let gu = u as u64 / a;
                let gv = v as u64 / a;
                if gu != gv {
                    seen[(gu as usize) * groups + gv as usize] += 1;
                    seen[(gv as usize) * groups + gu as usize] += 1;
                }
            }
            for i in 0..groups {
                for j in 0..groups {
                    if i != j {
                        assert_eq!(seen[i * groups + j], 1, "h = {h}: groups {i},{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn hierarchical_distance_examples() {
        // h = 7: (20 + 2*364/2 ... ) = 3933/1385; h = 9: 8441/2933.
        let k7 = hierarchical_avg_distance(7);
        assert_eq!(k7, BigRational::new(BigInt::from(3933), BigInt::from(1385)));
        let k9 = hierarchical_avg_distance(9);
        assert_eq!(k9, BigRational::new(BigInt::from(8441), BigInt::from(2933)));
    }

    #[test]
    fn rejects_h_zero() {
        assert!(build_dragonfly(0).is_err());
    }
}
