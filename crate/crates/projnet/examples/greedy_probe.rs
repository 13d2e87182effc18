use projnet::topology::{build, Family};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

fn greedy(g: &projnet::topology::Topology, per_group: usize, seed: u64, budget_div: usize) -> u64 {
    let n = g.n();
    let full_groups = n / per_group;
    let mut sizes = vec![per_group; full_groups];
    if n % per_group > 0 { sizes.push(n % per_group); }
    let gc = sizes.len();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut group_of = vec![0usize; n];
    let mut idx = 0;
    for (gi, &s) in sizes.iter().enumerate() {
        for _ in 0..s { group_of[order[idx]] = gi; idx += 1; }
    }
    let mut cnt = vec![0i32; n * gc];
    for v in 0..n {
        for &w in g.neighbors(v) { cnt[v * gc + group_of[w as usize]] += 1; }
    }
    let budget = (n / budget_div).max(1);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < budget && attempts < 40 * n {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (gu, gv) = (group_of[u], group_of[v]);
        if gu == gv { continue; }
        let adj = i32::from(g.has_edge(u, v));
        let delta = cnt[u * gc + gv] + cnt[v * gc + gu] - cnt[u * gc + gu] - cnt[v * gc + gv] - 2 * adj;
        if delta <= 0 { continue; }
        accepted += 1;
        group_of[u] = gv; group_of[v] = gu;
        for &w in g.neighbors(u) { cnt[w as usize * gc + gu] -= 1; cnt[w as usize * gc + gv] += 1; }
        for &w in g.neighbors(v) { cnt[w as usize * gc + gv] -= 1; cnt[w as usize * gc + gu] += 1; }
    }
    g.edges().iter().filter(|&&(u, v)| group_of[u as usize] == group_of[v as usize]).count() as u64
}

fn main() {
    let mut params = std::collections::BTreeMap::new();
    params.insert("q".to_string(), 27u64);
    let g = build(Family::DemiPn, &params).unwrap();
    for div in [16usize, 20, 24, 32] {
        let es: Vec<u64> = (0..10).map(|s| greedy(&g, 36, s, div)).collect();
        let mn = es.iter().min().unwrap();
        let mx = es.iter().max().unwrap();
        println!("budget N/{div}: {:?}  range [{mn},{mx}] band [501,611]", es);
    }
}
