//! Moore-type bounds and the generalized Moore distance distribution check.

use crate::error::{Error, Result};
use crate::topology::Topology;

/// Moore bound M(Delta, k) = (Delta(Delta-1)^k - 2) / (Delta - 2): the
/// maximum number of vertices of a Delta-regular graph of diameter k.
/// Delta = 2 (the ring case) sits on the formula's pole and is rejected.
pub fn moore_bound(delta: u64, k: u32) -> Result<u128> {
    if delta < 3 {
        return Err(Error::precondition("moore_bound requires degree >= 3"));
    }
    if k < 1 {
        return Err(Error::precondition("moore_bound requires diameter >= 1"));
    }
    let d = delta as u128;
    let mut pow = 1u128;
    for _ in 0..k {
        pow = pow
            .checked_mul(d - 1)
            .ok_or_else(|| Error::precondition("moore_bound overflow"))?;
    }
    let num = d
        .checked_mul(pow)
        .and_then(|v| v.checked_sub(2))
        .ok_or_else(|| Error::precondition("moore_bound overflow"))?;
    Ok(num / (d - 2))
}

/// Does every vertex see the generalized Moore distance distribution
/// W(t) = Delta(Delta-1)^(t-1) for 1 <= t <= k-1, with the remaining
/// N - M(Delta, k-1) vertices at distance k? Requires a regular graph.
///
/// Since the per-vertex counts always sum to N, full layers below the
/// diameter are necessary and sufficient; the remainder condition follows.
pub fn generalized_moore_check(g: &Topology) -> Result<bool> {
    let delta = g.degree(0);
    if (1..g.n()).any(|v| g.degree(v) != delta) {
        return Err(Error::precondition(
            "generalized_moore_check requires a regular graph",
        ));
    }
    for v in 0..g.n() {
        let w = g.vertex_distance_distribution(v);
        let k = w.len() - 1;
        let mut layer = delta as u128;
        for t in 1..k {
            if w[t] as u128 != layer {
                return Ok(false);
            }
            layer *= (delta as u128) - 1;
        }
    }
    Ok(true)
}

/// Generalized Moore approximation of the average distance,
/// kbar ~ k - Delta^(k-1)/N (valid for large Delta).
pub fn gm_avg_distance_approx(delta: u64, k: u32, n: u64) -> Result<f64> {
    if k < 1 {
        return Err(Error::precondition("diameter must be >= 1"));
    }
    let pow = (delta as f64).powi(k as i32 - 1);
    if (n as f64) <= pow {
        return Err(Error::precondition(format!(
            "approximation needs N > Delta^(k-1) = {pow}"
        )));
    }
    Ok(k as f64 - pow / n as f64)
}

/// Terminal bound T ~ R^k kbar^(k-1) / ((k - kbar)(kbar + 1)^k): the maximum
/// number of compute nodes reachable with radix R at average distance kbar
/// and diameter k. Pole at kbar = k.
pub fn terminal_bound(r: u64, k: u32, kbar: f64) -> Result<f64> {
    if kbar < 1.0 {
        return Err(Error::precondition("average distance below 1"));
    }
    if kbar >= k as f64 {
        return Err(Error::precondition(
            "terminal bound requires kbar < k (pole at kbar = k)",
        ));
    }
    let rk = (r as f64).powi(k as i32);
    Ok(rk * kbar.powi(k as i32 - 1) / ((k as f64 - kbar) * (kbar + 1.0).powi(k as i32)))
}

/// Leaf Moore bound for indirect networks of leaf-to-leaf diameter 2:
/// L <= 1 + delta^2 + (Delta - delta)(R - 1), with delta the leaf-to-leaf
/// degree. delta = Delta recovers M(Delta, 2); delta = 0 is the fully
/// indirect case L <= 1 + Delta(R - 1).
pub fn indirect_leaf_bound(delta_big: u64, delta_small: u64, r: u64) -> Result<u128> {
    if delta_small > delta_big || delta_big > r {
        return Err(Error::precondition(
            "indirect_leaf_bound requires 0 <= delta <= Delta <= R",
        ));
    }
    let d = delta_small as u128;
    let big = delta_big as u128;
    Ok(1 + d * d + (big - d) * (r as u128 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build, params1, params2, Family};

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_bound(3, 2).unwrap(), 10); // Petersen
        assert_eq!(moore_bound(7, 2).unwrap(), 50); // Hoffman-Singleton
        assert_eq!(moore_bound(57, 2).unwrap(), 3250);
        assert!(moore_bound(2, 3).is_err());
    }

    #[test]
    fn heawood_is_generalized_moore() {
        let g = build(Family::Pn, &params1("q", 2)).unwrap();
        assert!(generalized_moore_check(&g).unwrap());
    }

    #[test]
    fn hamming_2d_is_generalized_moore() {
        for n in [3u64, 5, 8] {
            let g = build(Family::Hamming, &params2("n", n, "dim", 2)).unwrap();
            assert!(generalized_moore_check(&g).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn paley13_is_generalized_moore() {
        let g = build(Family::Paley, &params1("q", 13)).unwrap();
        assert!(generalized_moore_check(&g).unwrap());
    }

    #[test]
    fn dragonfly_is_not_generalized_moore() {
        let g = build(Family::Dragonfly, &params1("h", 2)).unwrap();
        assert!(!generalized_moore_check(&g).unwrap());
    }

    #[test]
    fn non_regular_input_rejected() {
        let g = build(Family::DemiPn, &params1("q", 3)).unwrap();
        assert!(generalized_moore_check(&g).is_err());
    }

    #[test]
    fn gm_avg_distance_values() {
        let v = gm_avg_distance_approx(24, 3, 1106).unwrap();
        assert!((v - 2.479).abs() < 5e-4, "{v}");
        let complete = gm_avg_distance_approx(99, 1, 100).unwrap();
        assert!((complete - 0.99).abs() < 1e-12);
        let mms = gm_avg_distance_approx(29, 2, 722).unwrap();
        assert!((mms - 1.9598).abs() < 5e-5, "{mms}");
        assert!(gm_avg_distance_approx(10, 3, 50).is_err());
    }

    #[test]
    fn terminal_bound_values() {
        // Frozen by direct evaluation: 64^2 * 1.96 / (0.04 * 2.96^2).
        let t = terminal_bound(64, 2, 1.96).unwrap();
        let direct = 4096.0 * 1.96 / (0.04 * 2.96f64.powi(2));
        assert!((t - direct).abs() < 1e-9);
        assert!((t - 22907.23155588751).abs() < 1e-6);
        // Monotone growth toward the pole.
        let near = terminal_bound(64, 2, 1.999).unwrap();
        assert!(near > t);
        // A diameter-3 point past the k=2 value.
        let t3 = terminal_bound(64, 3, 2.5).unwrap();
        assert!(t3 > t);
        assert!(terminal_bound(64, 2, 2.0).is_err());
    }

    #[test]
    fn indirect_leaf_bound_values() {
        // delta = Delta reduces to 1 + Delta^2 (M(Delta,2) at R = Delta).
        assert_eq!(indirect_leaf_bound(7, 7, 7).unwrap(), 50);
        assert_eq!(
            indirect_leaf_bound(7, 7, 7).unwrap(),
            moore_bound(7, 2).unwrap()
        );
        // Fully indirect OFT cases.
        assert_eq!(indirect_leaf_bound(17, 0, 34).unwrap(), 562);
        assert_eq!(indirect_leaf_bound(3, 0, 6).unwrap(), 16);
        assert!(indirect_leaf_bound(3, 5, 6).is_err());
    }
}
