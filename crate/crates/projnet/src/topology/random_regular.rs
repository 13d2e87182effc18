//! Seeded random regular graphs via stub matching.
//!
//! Repeatedly pairs random free stubs, skipping pairs that would create a
//! self-loop or duplicate edge, and restarts from scratch when no valid pair
//! remains (full rejection of a uniform pairing is hopeless at these
//! degrees: the probability of a uniform pairing being simple decays like
//! exp(-(d^2-1)/4)). The result is resampled until connected.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::topology::{Family, GraphBuilder, Params, Predicted, Topology};

pub fn build_random_regular(n: u64, degree: u64, seed: u64) -> Result<Topology> {
    if degree >= n {
        return Err(Error::precondition("random regular requires degree < n"));
    }
    if n * degree % 2 != 0 {
        return Err(Error::precondition(
            "random regular requires an even number of stubs (n * degree even)",
        ));
    }
    if degree < 3 {
        return Err(Error::precondition("random regular requires degree >= 3"));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let edges = loop {
        if let Some(edges) = try_matching(n as usize, degree as usize, &mut rng) {
            if connected(n as usize, &edges) {
                break edges;
            }
        }
    };
    let mut b = GraphBuilder::new(n as usize);
    for v in 0..n as usize {
        b.label(v, v.to_string());
    }
    for &(u, v) in &edges {
        b.edge(u, v);
    }
    let mut params = Params::new();
    params.insert("n".into(), n);
    params.insert("degree".into(), degree);
    params.insert("seed".into(), seed);
    b.finish(
        Family::RandomRegular,
        params,
        Predicted::regular(n as usize, degree as usize),
    )
}

fn try_matching(n: usize, degree: usize, rng: &mut ChaCha20Rng) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(degree)).collect();
    stubs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * degree / 2);
    let mut have = std::collections::HashSet::with_capacity(n * degree / 2);
    while !stubs.is_empty() {
        // Bounded number of random picks before declaring a dead end; near
        // the end of the matching every remaining pair can be invalid.
        let mut placed = false;
        for _ in 0..200 {
            let i = rng.gen_range(0..stubs.len());
            let j = rng.gen_range(0..stubs.len());
            if i == j {
                continue;
            }
            let (u, v) = (stubs[i], stubs[j]);
            if u == v {
                continue;
            }
            let key = (u.min(v), u.max(v));
            if have.contains(&key) {
                continue;
            }
            have.insert(key);
            edges.push(key);
            let (hi, lo) = (i.max(j), i.min(j));
            stubs.swap_remove(hi);
            stubs.swap_remove(lo);
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    Some(edges)
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}
