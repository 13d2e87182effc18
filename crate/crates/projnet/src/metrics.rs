//! Exact distance and load analysis.
//!
//! Distances, distance distributions and per-arc loads under ideal uniform
//! traffic with minimal routing. Every ordered pair of scoped vertices
//! contributes one unit of demand, split evenly across all of its shortest
//! paths. Loads are exact rationals.
//!
//! The per-arc accumulation works in scaled integers: with L the least
//! common multiple of all shortest-path counts sigma(s,t), the quantity
//!
//!   D_s(w) = sum over scoped targets t below w of sigma(w,t) * L / sigma(s,t)
//!
//! satisfies D_s(w) = L/sigma(s,w) + sum of D_s over the BFS successors of w,
//! and the load of arc (v,w) from source s is sigma(s,v) * D_s(w) / L. The
//! integer recurrence avoids rational arithmetic in the hot loop; sums run in
//! u128 when L and the loads fit, falling back to arbitrary precision
//! otherwise. Per-source work is independent, so sources run in parallel and
//! the (commutative, associative) integer merges make the result identical
//! for any worker count.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::topology::{EdgeClass, Topology};

/// Which ordered pairs carry demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrafficScope {
    /// Every ordered pair of routers.
    AllPairs,
    /// Ordered pairs of leaf routers only; spines still forward traffic.
    LeafToLeaf,
}

impl std::str::FromStr for TrafficScope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "all-pairs" => Ok(TrafficScope::AllPairs),
            "leaf" | "leaf-to-leaf" => Ok(TrafficScope::LeafToLeaf),
            other => Err(Error::precondition(format!("unknown scope '{other}'"))),
        }
    }
}

fn scoped_vertices(g: &Topology, scope: TrafficScope) -> Result<Vec<u32>> {
    match scope {
        TrafficScope::AllPairs => Ok((0..g.n() as u32).collect()),
        TrafficScope::LeafToLeaf => {
            if g.spine_count() == 0 {
                return Err(Error::precondition(
                    "leaf-to-leaf scope requires a topology with spine vertices",
                ));
            }
            Ok(g.leaves().map(|v| v as u32).collect())
        }
    }
}

/// Exact distance distribution over scoped ordered pairs.
#[derive(Debug, Clone)]
pub struct DistanceMetrics {
    pub scope: TrafficScope,
    /// Number of scoped vertices.
    pub considered: usize,
    /// t -> number of scoped ordered pairs at distance t (t >= 1).
    pub w: BTreeMap<u32, u64>,
    pub diameter: u32,
    pub total_distance: u128,
    pub kbar: BigRational,
}

struct Bfs {
    dist: Vec<u32>,
    sigma: Vec<u64>,
    order: Vec<u32>,
}

impl Bfs {
    fn new(n: usize) -> Bfs {
        Bfs {
            dist: vec![u32::MAX; n],
            sigma: vec![0; n],
            order: Vec::with_capacity(n),
        }
    }

    fn run(&mut self, g: &Topology, s: u32) -> Result<()> {
        self.dist.fill(u32::MAX);
        self.sigma.fill(0);
        self.order.clear();
        self.dist[s as usize] = 0;
        self.sigma[s as usize] = 1;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            self.order.push(v);
            let dv = self.dist[v as usize];
            for &w in g.neighbors(v as usize) {
                if self.dist[w as usize] == u32::MAX {
                    self.dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
                if self.dist[w as usize] == dv + 1 {
                    self.sigma[w as usize] = self.sigma[w as usize]
                        .checked_add(self.sigma[v as usize])
                        .ok_or_else(|| Error::invariant("shortest-path count overflows u64"))?;
                }
            }
        }
        Ok(())
    }
}

/// Exact distance metrics (W, diameter, average distance) for a scope.
pub fn distance_metrics(g: &Topology, scope: TrafficScope) -> Result<DistanceMetrics> {
    let scoped = scoped_vertices(g, scope)?;
    let per_source: Vec<(BTreeMap<u32, u64>, u32, u128)> = scoped
        .par_iter()
        .map_init(
            || Bfs::new(g.n()),
            |bfs, &s| {
                bfs.run(g, s).expect("path counts fit u64");
                let mut w = BTreeMap::new();
                let mut diameter = 0;
                let mut total = 0u128;
                for &t in &scoped {
                    if t == s {
                        continue;
                    }
                    let d = bfs.dist[t as usize];
                    assert!(d != u32::MAX, "scoped vertices must be mutually reachable");
                    *w.entry(d).or_insert(0u64) += 1;
                    diameter = diameter.max(d);
                    total += d as u128;
                }
                (w, diameter, total)
            },
        )
        .collect();
    let mut w = BTreeMap::new();
    let mut diameter = 0;
    let mut total = 0u128;
    for (ws, d, t) in per_source {
        for (k, v) in ws {
            *w.entry(k).or_insert(0) += v;
        }
        diameter = diameter.max(d);
        total += t;
    }
    let considered = scoped.len();
    let pairs = considered as u128 * (considered as u128 - 1);
    Ok(DistanceMetrics {
        scope,
        considered,
        w,
        diameter,
        total_distance: total,
        kbar: big_ratio(total, pairs),
    })
}

fn big_ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigUint::from(num).into(), BigUint::from(den).into())
}

fn scoped_mask(g: &Topology, scoped: &[u32]) -> Vec<bool> {
    let mut mask = vec![false; g.n()];
    for &v in scoped {
        mask[v as usize] = true;
    }
    mask
}

/// Exact per-arc loads for a scope.
#[derive(Debug, Clone)]
pub struct ArcLoads {
    /// Directed arcs (v, w) in CSR order: all arcs out of vertex 0 first.
    pub arcs: Vec<(u32, u32)>,
    /// Edge class per arc, when the topology annotates edges.
    pub classes: Option<Vec<EdgeClass>>,
    scaled: Vec<BigUint>,
    denom: BigUint,
}

impl ArcLoads {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn load(&self, i: usize) -> BigRational {
        BigRational::new(self.scaled[i].clone().into(), self.denom.clone().into())
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), BigRational)> + '_ {
        (0..self.arcs.len()).map(move |i| (self.arcs[i], self.load(i)))
    }

    /// Sum of all arc loads; equals the sum of scoped pairwise distances.
    pub fn total(&self) -> BigRational {
        let sum: BigUint = self.scaled.iter().sum();
        BigRational::new(sum.into(), self.denom.clone().into())
    }

    pub fn max(&self) -> BigRational {
        let mx = self.scaled.iter().max().cloned().unwrap_or_else(BigUint::zero);
        BigRational::new(mx.into(), self.denom.clone().into())
    }

    pub fn mean(&self) -> BigRational {
        let sum: BigUint = self.scaled.iter().sum();
        BigRational::new(sum.into(), (self.denom.clone() * BigUint::from(self.arcs.len())).into())
    }

    /// Average utilization u = mean / max. In (0, 1], and exactly 1 iff all
    /// arc loads are equal.
    pub fn utilization(&self) -> BigRational {
        let sum: BigUint = self.scaled.iter().sum();
        let mx = self.scaled.iter().max().cloned().expect("nonempty arc set");
        BigRational::new(sum.into(), (mx * BigUint::from(self.arcs.len())).into())
    }

    /// Aggregate load per edge class, when annotated.
    pub fn class_totals(&self) -> Option<BTreeMap<EdgeClass, BigRational>> {
        let classes = self.classes.as_ref()?;
        let mut sums: BTreeMap<u8, BigUint> = BTreeMap::new();
        for (i, c) in classes.iter().enumerate() {
            let key = match c {
                EdgeClass::Local => 0u8,
                EdgeClass::Global => 1u8,
            };
            *sums.entry(key).or_insert_with(BigUint::zero) += &self.scaled[i];
        }
        let mut out = BTreeMap::new();
        for (k, v) in sums {
            let class = if k == 0 { EdgeClass::Local } else { EdgeClass::Global };
            out.insert(class, BigRational::new(v.into(), self.denom.clone().into()));
        }
        Some(out)
    }

    /// Histogram: distinct exact load -> number of arcs carrying it.
    pub fn histogram(&self) -> BTreeMap<BigRational, usize> {
        let mut h = BTreeMap::new();
        for i in 0..self.scaled.len() {
            *h.entry(self.load(i)).or_insert(0) += 1;
        }
        h
    }
}

/// Integer accumulator abstraction: u128 fast path, BigUint fallback.
trait Accum: Clone + Send + Sync {
    fn acc_zero() -> Self;
    fn from_big(v: &BigUint) -> Option<Self>;
    fn add_assign_checked(&mut self, other: &Self) -> bool;
    fn mul_u64_checked(&self, k: u64) -> Option<Self>;
    fn div_exact_u64(&self, k: u64) -> Self;
    fn into_big(self) -> BigUint;
}

impl Accum for u128 {
    fn acc_zero() -> Self {
        0
    }
    fn from_big(v: &BigUint) -> Option<Self> {
        v.to_u128()
    }
    fn add_assign_checked(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn mul_u64_checked(&self, k: u64) -> Option<Self> {
        self.checked_mul(k as u128)
    }
    fn div_exact_u64(&self, k: u64) -> Self {
        debug_assert_eq!(self % k as u128, 0);
        self / k as u128
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Accum for BigUint {
    fn acc_zero() -> Self {
        BigUint::zero()
    }
    fn from_big(v: &BigUint) -> Option<Self> {
        Some(v.clone())
    }
    fn add_assign_checked(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn mul_u64_checked(&self, k: u64) -> Option<Self> {
        Some(self * BigUint::from(k))
    }
    fn div_exact_u64(&self, k: u64) -> Self {
        self / BigUint::from(k)
    }
    fn into_big(self) -> BigUint {
        self
    }
}

struct Csr {
    row_start: Vec<usize>,
}

impl Csr {
    fn new(g: &Topology) -> Csr {
        let mut row_start = Vec::with_capacity(g.n() + 1);
        let mut acc = 0usize;
        for v in 0..g.n() {
            row_start.push(acc);
            acc += g.degree(v);
        }
        row_start.push(acc);
        Csr { row_start }
    }

    fn arc_count(&self) -> usize {
        *self.row_start.last().unwrap()
    }
}

/// Exact arc loads under even-split minimal routing for the scoped demand.
pub fn arc_loads(g: &Topology, scope: TrafficScope) -> Result<ArcLoads> {
    let scoped = scoped_vertices(g, scope)?;
    let mask = scoped_mask(g, &scoped);
    let csr = Csr::new(g);

    // Pass A: global lcm of shortest-path counts over scoped pairs.
    let lcm: BigUint = scoped
        .par_iter()
        .map_init(
            || Bfs::new(g.n()),
            |bfs, &s| {
                bfs.run(g, s).expect("path counts fit u64");
                let mut l = BigUint::one();
                for &t in &scoped {
                    if t != s {
                        assert!(
                            bfs.dist[t as usize] != u32::MAX,
                            "scoped vertices must be mutually reachable"
                        );
                        l = l.lcm(&BigUint::from(bfs.sigma[t as usize]));
                    }
                }
                l
            },
        )
        .reduce(BigUint::one, |a, b| a.lcm(&b));

    // Pass B: scaled integer accumulation, u128 first.
    let scaled: Vec<BigUint> = if let Some(l128) = <u128 as Accum>::from_big(&lcm) {
        match accumulate::<u128>(g, &scoped, &mask, &csr, l128) {
            Some(v) => v.into_iter().map(Accum::into_big).collect(),
            None => accumulate::<BigUint>(g, &scoped, &mask, &csr, lcm.clone())
                .expect("BigUint accumulation cannot overflow"),
        }
    } else {
        accumulate::<BigUint>(g, &scoped, &mask, &csr, lcm.clone())
            .expect("BigUint accumulation cannot overflow")
    };

    let mut arcs = Vec::with_capacity(csr.arc_count());
    for v in 0..g.n() {
        for &w in g.neighbors(v) {
            arcs.push((v as u32, w));
        }
    }
    let classes = if g.has_edge_classes() {
        let mut cs = Vec::with_capacity(csr.arc_count());
        for v in 0..g.n() {
            for i in 0..g.degree(v) {
                cs.push(g.edge_class(v, i).unwrap());
            }
        }
        Some(cs)
    } else {
        None
    };
    Ok(ArcLoads {
        arcs,
        classes,
        scaled,
        denom: lcm,
    })
}

/// Returns None when the accumulator type overflows.
fn accumulate<A: Accum>(
    g: &Topology,
    scoped: &[u32],
    mask: &[bool],
    csr: &Csr,
    l: A,
) -> Option<Vec<A>> {
    scoped
        .par_iter()
        .map_init(
            || (Bfs::new(g.n()), vec![A::acc_zero(); g.n()]),
            |(bfs, d), &s| source_loads(g, csr, mask, &l, bfs, d, s),
        )
        .try_reduce(
            || vec![A::acc_zero(); csr.arc_count()],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part.iter()) {
                    if !a.add_assign_checked(p) {
                        return Err(());
                    }
                }
                Ok(acc)
            },
        )
        .ok()
}

fn source_loads<A: Accum>(
    g: &Topology,
    csr: &Csr,
    mask: &[bool],
    l: &A,
    bfs: &mut Bfs,
    d: &mut [A],
    s: u32,
) -> std::result::Result<Vec<A>, ()> {
    bfs.run(g, s).map_err(|_| ())?;
    // D(v) = [v scoped, v != s] L/sigma(v) + sum of D over BFS successors.
    for &v in bfs.order.iter().rev() {
        let mut acc = if mask[v as usize] && v != s {
            l.div_exact_u64(bfs.sigma[v as usize])
        } else {
            A::acc_zero()
        };
        let dv = bfs.dist[v as usize];
        for &w in g.neighbors(v as usize) {
            if bfs.dist[w as usize] == dv + 1 && !acc.add_assign_checked(&d[w as usize]) {
                return Err(());
            }
        }
        d[v as usize] = acc;
    }
    let mut out = vec![A::acc_zero(); csr.arc_count()];
    for &v in &bfs.order {
        let dv = bfs.dist[v as usize];
        let sigma_v = bfs.sigma[v as usize];
        let base = csr.row_start[v as usize];
        for (i, &w) in g.neighbors(v as usize).iter().enumerate() {
            if bfs.dist[w as usize] == dv + 1 {
                let contribution = d[w as usize].mul_u64_checked(sigma_v).ok_or(())?;
                if !out[base + i].add_assign_checked(&contribution) {
                    return Err(());
                }
            }
        }
    }
    Ok(out)
}

/// Average link utilization u = mean(arc loads) / max(arc loads).
pub fn utilization(g: &Topology, scope: TrafficScope) -> Result<BigRational> {
    Ok(arc_loads(g, scope)?.utilization())
}

/// Full metrics report: distance distribution plus load analysis.
#[derive(Debug, Clone)]
pub struct MetricsReport {
    pub scope: TrafficScope,
    pub considered: usize,
    pub w: BTreeMap<u32, u64>,
    pub diameter: u32,
    pub kbar: BigRational,
    pub total_distance: u128,
    pub arc_count: usize,
    pub mean_arc_load: BigRational,
    pub max_arc_load: BigRational,
    pub u: BigRational,
    /// Accepted load per router at saturation, a = Delta * u / kbar.
    pub accepted_load: BigRational,
    pub load_by_class: Option<BTreeMap<EdgeClass, BigRational>>,
}

pub fn metrics_report(g: &Topology, scope: TrafficScope) -> Result<(MetricsReport, ArcLoads)> {
    let dm = distance_metrics(g, scope)?;
    let loads = arc_loads(g, scope)?;
    // Flow conservation: unit demands each spread over d(s,t) arcs in total.
    let total = loads.total();
    let expected = big_ratio(dm.total_distance, 1);
    if total != expected {
        return Err(Error::invariant(format!(
            "flow conservation violated: arc loads sum to {total}, distances sum to {}",
            dm.total_distance
        )));
    }
    let u = loads.utilization();
    let delta = BigRational::from_integer(g.delta().into());
    let accepted_load = if dm.kbar.is_zero() {
        BigRational::zero()
    } else {
        delta * &u / &dm.kbar
    };
    let report = MetricsReport {
        scope,
        considered: dm.considered,
        w: dm.w.clone(),
        diameter: dm.diameter,
        kbar: dm.kbar.clone(),
        total_distance: dm.total_distance,
        arc_count: loads.arc_count(),
        mean_arc_load: loads.mean(),
        max_arc_load: loads.max(),
        u,
        accepted_load,
        load_by_class: loads.class_totals(),
    };
    Ok((report, loads))
}

/// Render a rational with a fixed number of decimal places (round half away
/// from zero).
pub fn decimal(r: &BigRational, places: u32) -> String {
    let scale = BigUint::from(10u32).pow(places);
    let num = r.numer().magnitude() * &scale;
    let den = r.denom().magnitude();
    let q = &num / den;
    let rem = &num % den;
    let q = if &rem * 2u32 >= *den { q + 1u32 } else { q };
    let digits = q.to_string();
    let sign = if r.numer().sign() == num_bigint::Sign::Minus {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let digits = if digits.len() <= places as usize {
        format!("{0:0>1$}", digits, places as usize + 1)
    } else {
        digits
    };
    let (whole, frac) = digits.split_at(digits.len() - places as usize);
    format!("{sign}{whole}.{frac}")
}

/// The scope of interest for a topology: leaf-to-leaf when it has spines,
/// all-pairs otherwise.
pub fn scope_for(g: &Topology) -> TrafficScope {
    if g.spine_count() > 0 {
        TrafficScope::LeafToLeaf
    } else {
        TrafficScope::AllPairs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build, params1, Family};
    use num_bigint::BigInt;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn heawood_distance_metrics() {
        let g = build(Family::Pn, &params1("q", 2)).unwrap();
        let dm = distance_metrics(&g, TrafficScope::AllPairs).unwrap();
        assert_eq!(dm.diameter, 3);
        assert_eq!(dm.kbar, ratio(27, 13));
        assert_eq!(dm.w.get(&1), Some(&42));
        assert_eq!(dm.w.get(&2), Some(&84));
        assert_eq!(dm.w.get(&3), Some(&56));
        // Per-vertex view: [1, 3, 6, 4].
        for v in 0..g.n() {
            assert_eq!(g.vertex_distance_distribution(v), vec![1, 3, 6, 4]);
        }
    }

    #[test]
    fn pn_closed_form_kbar() {
        for q in [2u64, 3, 4, 5, 7] {
            let g = build(Family::Pn, &params1("q", q)).unwrap();
            let dm = distance_metrics(&g, TrafficScope::AllPairs).unwrap();
            let expect = ratio(
                (5 * q * q + 3 * q + 1) as i64,
                (2 * q * q + 2 * q + 1) as i64,
            );
            assert_eq!(dm.kbar, expect, "q = {q}");
        }
    }

    #[test]
    fn demi_pn_utilization_closed_form() {
        for q in [2u64, 3, 4, 5] {
            let g = build(Family::DemiPn, &params1("q", q)).unwrap();
            let u = utilization(&g, TrafficScope::AllPairs).unwrap();
            let expect = ratio((2 * q * q + q + 1) as i64, (2 * q * (q + 1)) as i64);
            assert_eq!(u, expect, "q = {q}");
        }
    }

    #[test]
    fn demi_pn2_arc_loads_from_proof() {
        // Arcs between degree-2 and degree-3 vertices carry 4 = 2q units,
        // degree-3/degree-3 arcs carry 3 = 2q-1.
        let g = build(Family::DemiPn, &params1("q", 2)).unwrap();
        let loads = arc_loads(&g, TrafficScope::AllPairs).unwrap();
        for ((v, w), load) in loads.iter() {
            let expected = if g.degree(v as usize) == 2 || g.degree(w as usize) == 2 {
                ratio(4, 1)
            } else {
                ratio(3, 1)
            };
            assert_eq!(load, expected, "arc ({v},{w})");
        }
    }

    #[test]
    fn complete_graph_unit_loads() {
        let g = build(Family::Complete, &params1("n", 5)).unwrap();
        let loads = arc_loads(&g, TrafficScope::AllPairs).unwrap();
        for (_, load) in loads.iter() {
            assert_eq!(load, ratio(1, 1));
        }
        assert_eq!(loads.utilization(), ratio(1, 1));
    }

    #[test]
    fn pn_is_perfectly_balanced() {
        for q in [2u64, 3, 4] {
            let g = build(Family::Pn, &params1("q", q)).unwrap();
            assert_eq!(utilization(&g, TrafficScope::AllPairs).unwrap(), ratio(1, 1));
        }
    }

    #[test]
    fn oft_leaf_scope_metrics() {
        let g = build(Family::Oft, &params1("q", 2)).unwrap();
        let dm = distance_metrics(&g, TrafficScope::LeafToLeaf).unwrap();
        assert_eq!(dm.kbar, ratio(2, 1));
        assert_eq!(dm.diameter, 2);
        assert_eq!(utilization(&g, TrafficScope::LeafToLeaf).unwrap(), ratio(1, 1));
    }

    #[test]
    fn leaf_scope_requires_spines() {
        let g = build(Family::Complete, &params1("n", 4)).unwrap();
        assert!(distance_metrics(&g, TrafficScope::LeafToLeaf).is_err());
    }

    #[test]
    fn mms9_class_load_ratio_near_three() {
        let g = build(Family::Mms, &params1("q", 9)).unwrap();
        let loads = arc_loads(&g, TrafficScope::AllPairs).unwrap();
        let totals = loads.class_totals().unwrap();
        let ratio_gl = totals[&EdgeClass::Global].clone() / totals[&EdgeClass::Local].clone();
        let r = ratio_gl.to_f64().unwrap();
        assert!((r - 3.0).abs() / 3.0 < 0.15, "global/local = {r}");
    }

    #[test]
    fn flow_conservation_every_family() {
        use crate::topology::params2;
        let cases: Vec<crate::topology::Topology> = vec![
            build(Family::Pn, &params1("q", 3)).unwrap(),
            build(Family::DemiPn, &params1("q", 4)).unwrap(),
            build(Family::Mms, &params1("q", 5)).unwrap(),
            build(Family::Dragonfly, &params1("h", 2)).unwrap(),
            build(Family::Hamming, &params2("n", 4, "dim", 2)).unwrap(),
            build(Family::Turan, &params2("n", 10, "r", 3)).unwrap(),
        ];
        for g in cases {
            let (report, loads) = metrics_report(&g, TrafficScope::AllPairs).unwrap();
            assert_eq!(loads.total(), big_ratio(report.total_distance, 1));
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let g = build(Family::Mms, &params1("q", 9)).unwrap();
        let pool1 = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let pool4 = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = pool1.install(|| arc_loads(&g, TrafficScope::AllPairs).unwrap());
        let b = pool4.install(|| arc_loads(&g, TrafficScope::AllPairs).unwrap());
        assert_eq!(a.scaled, b.scaled);
        assert_eq!(a.denom, b.denom);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal(&ratio(27, 13), 4), "2.0769");
        assert_eq!(decimal(&ratio(11, 12), 4), "0.9167");
        assert_eq!(decimal(&ratio(-1, 8), 2), "-0.13");
        assert_eq!(decimal(&ratio(2715, 1105), 3), "2.457");
        assert_eq!(decimal(&ratio(3, 1), 0), "3");
    }
}
