//! Classic reference families: complete, complete bipartite, Turan, Paley,
//! Hamming and hypercube graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::topology::{params1, params2, Family, GraphBuilder, Predicted, Topology};

pub fn build_complete(n: u64) -> Result<Topology> {
    if n < 2 {
        return Err(Error::precondition("complete graph requires n >= 2"));
    }
    let mut b = GraphBuilder::new(n as usize);
    for v in 0..n as usize {
        b.label(v, v.to_string());
        for w in (v + 1)..n as usize {
            b.edge(v, w);
        }
    }
    b.finish(
        Family::Complete,
        params1("n", n),
        Predicted::regular(n as usize, n as usize - 1),
    )
}

/// K_{n,n}.
pub fn build_complete_bipartite(n: u64) -> Result<Topology> {
    if n < 1 {
        return Err(Error::precondition("complete bipartite requires n >= 1"));
    }
    let total = (2 * n) as usize;
    let mut b = GraphBuilder::new(total);
    for v in 0..total {
        b.label(v, v.to_string());
    }
    for v in 0..n as usize {
        for w in n as usize..total {
            b.edge(v, w);
        }
    }
    b.finish(
        Family::CompleteBipartite,
        params1("n", n),
        Predicted::regular(total, n as usize),
    )
}

/// Turan(n, r): complete multipartite graph on n vertices with r parts of
/// near-equal size; vertices are adjacent iff they are in different parts.
pub fn build_turan(n: u64, r: u64) -> Result<Topology> {
    if r < 2 || r > n {
        return Err(Error::precondition("turan requires 2 <= r <= n"));
    }
    // First (n mod r) parts get ceil(n/r) vertices, the rest floor(n/r);
    // parts are contiguous id blocks.
    let small = n / r;
    let extra = n % r;
    let mut part = Vec::with_capacity(n as usize);
    for p in 0..r {
        let size = if p < extra { small + 1 } else { small };
        for _ in 0..size {
            part.push(p);
        }
    }
    let mut b = GraphBuilder::new(n as usize);
    let mut degree_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..n as usize {
        b.label(v, v.to_string());
        let own = if (part[v]) < extra { small + 1 } else { small };
        *degree_counts.entry((n - own) as usize).or_insert(0) += 1;
        for w in (v + 1)..n as usize {
            if part[v] != part[w] {
                b.edge(v, w);
            }
        }
    }
    let predicted = Predicted {
        n: n as usize,
        degree_counts,
    };
    b.finish(Family::Turan, params2("n", n, "r", r), predicted)
}

/// Paley(q) for a prime power q = 1 mod 4: vertices are field elements,
/// adjacent when their difference is a nonzero square.
pub fn build_paley(q: u64) -> Result<Topology> {
    let field = FieldSpec::create_order(q)
        .map_err(|_| Error::precondition(format!("q must be a prime power, got {q}")))?;
    if q % 4 != 1 {
        return Err(Error::precondition(format!(
            "paley requires q = 1 mod 4 so that adjacency is symmetric, got {q}"
        )));
    }
    let squares: std::collections::BTreeSet<_> = field.nonzero_squares().into_iter().collect();
    let mut b = GraphBuilder::new(q as usize);
    for v in field.elements() {
        b.label(v.value() as usize, field.render(v));
    }
    for a in field.elements() {
        for c in field.elements() {
            if a < c && squares.contains(&field.sub(a, c)) {
                b.edge(a.value() as usize, c.value() as usize);
            }
        }
    }
    b.finish(
        Family::Paley,
        params1("q", q),
        Predicted::regular(q as usize, ((q - 1) / 2) as usize),
    )
}

/// Hamming graph of side n and dimension dim: the Cartesian product of dim
/// complete graphs K_n. Vertices are coordinate tuples, adjacent at Hamming
/// distance 1.
pub fn build_hamming(n: u64, dim: u64) -> Result<Topology> {
    if n < 2 || dim < 1 {
        return Err(Error::precondition("hamming requires n >= 2 and dim >= 1"));
    }
    let total = (n as u128).checked_pow(dim as u32).filter(|&t| t <= 1 << 22).ok_or_else(
        || Error::precondition(format!("hamming {n}^{dim} is too large")),
    )? as usize;
    let mut b = GraphBuilder::new(total);
    let coords = |mut v: usize| -> Vec<u64> {
        let mut c = vec![0u64; dim as usize];
        for d in (0..dim as usize).rev() {
            c[d] = (v as u64) % n;
            v /= n as usize;
        }
        c
    };
    for v in 0..total {
        let c = coords(v);
        b.label(
            v,
            format!(
                "({})",
                c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        );
        // Vary one coordinate upward; each produces a distinct higher id.
        let mut stride = 1usize;
        for d in (0..dim as usize).rev() {
            let base = v - (c[d] as usize) * stride;
            for other in (c[d] + 1)..n {
                b.edge(v, base + other as usize * stride);
            }
            stride *= n as usize;
        }
    }
    // Natural layout atoms: rows by first coordinate.
    b.clusters((0..total).map(|v| (v / (total / n as usize)) as u32).collect());
    let predicted = Predicted::regular(total, (dim * (n - 1)) as usize);
    b.finish(Family::Hamming, params2("n", n, "dim", dim), predicted)
}

/// Hypercube C_2^n.
pub fn build_hypercube(n: u64) -> Result<Topology> {
    if n < 1 || n > 20 {
        return Err(Error::precondition("hypercube requires 1 <= n <= 20"));
    }
    let total = 1usize << n;
    let mut b = GraphBuilder::new(total);
    for v in 0..total {
        b.label(v, format!("{v:0width$b}", width = n as usize));
        for bit in 0..n {
            let w = v ^ (1 << bit);
            if v < w {
                b.edge(v, w);
            }
        }
    }
    b.finish(
        Family::Hypercube,
        params1("n", n),
        Predicted::regular(total, n as usize),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paley13_differences() {
        let g = build_paley(13).unwrap();
        assert_eq!(g.n(), 13);
        assert!((0..13).all(|v| g.degree(v) == 6));
        let n0: Vec<u32> = g.neighbors(0).to_vec();
        assert_eq!(n0, vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn paley_is_self_complementary_sized() {
        // Self-complementary forces |E| = n(n-1)/4.
        for q in [5u64, 9, 13, 17, 25] {
            let g = build_paley(q).unwrap();
            assert_eq!(g.edge_count() as u64, q * (q - 1) / 4, "q = {q}");
        }
    }

    #[test]
    fn paley_rejects_3_mod_4() {
        assert!(build_paley(7).is_err());
        assert!(build_paley(8).is_err());
    }

    #[test]
    fn turan_16_4() {
        let g = build_turan(16, 4).unwrap();
        assert_eq!(g.n(), 16);
        assert!((0..16).all(|v| g.degree(v) == 12));
    }

    #[test]
    fn turan_uneven_parts() {
        let g = build_turan(10, 3).unwrap(); // parts 4, 3, 3
        let mut deg: Vec<usize> = (0..10).map(|v| g.degree(v)).collect();
        deg.sort_unstable();
        assert_eq!(deg, vec![6, 6, 6, 6, 7, 7, 7, 7, 7, 7]);
        assert_eq!(
            build_turan(2 * 6, 2).unwrap().edges(),
            build_complete_bipartite(6).unwrap().edges()
        );
    }

    #[test]
    fn hamming_22_2() {
        let g = build_hamming(22, 2).unwrap();
        assert_eq!(g.n(), 484);
        assert!((0..g.n()).all(|v| g.degree(v) == 42));
    }

    #[test]
    fn hamming_rows_are_cliques() {
        let g = build_hamming(5, 2).unwrap();
        let clusters = g.clusters().unwrap();
        for v in 0..g.n() {
            let internal = g
                .neighbors(v)
                .iter()
                .filter(|&&w| clusters[w as usize] == clusters[v])
                .count();
            assert_eq!(internal, 4);
        }
    }

    #[test]
    fn hypercube_sizes() {
        let g = build_hypercube(4).unwrap();
        assert_eq!(g.n(), 16);
        assert!((0..16).all(|v| g.degree(v) == 4));
        assert!(g.is_bipartite());
    }

    #[test]
    fn complete_graphs() {
        let g = build_complete(5).unwrap();
        assert_eq!(g.edge_count(), 10);
        let b = build_complete_bipartite(3).unwrap();
        assert_eq!(b.edge_count(), 9);
        assert!(b.is_bipartite());
    }
}
