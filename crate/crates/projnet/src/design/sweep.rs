//! Scalability sweep: (T, kbar/u) and (R, T) sample points per family for
//! every feasible parameter with radix at most R_max, plus the generalized
//! Moore bound curve.
//!
//! Families with known exact closed forms (average distance and utilization)
//! are evaluated symbolically; MMS instances with eps != 1 have no
//! closed-form utilization and are measured on the constructed graph.
//! Terminals per router follow the integer dimensioning rule, except for the
//! complete graph and the dragonfly, which follow their structural
//! conventions (Delta0 = N and Delta0 = h). Cost columns price every
//! inter-router cable as optical.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::bounds::terminal_bound;
use crate::design::{price, subscription_threshold, CostConfig};
use crate::error::{Error, Result};
use crate::metrics::utilization;
use crate::metrics::TrafficScope;
use crate::topology::{build, hierarchical_avg_distance, params1, Family, Params};

#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub family: String,
    pub param: u64,
    pub r: f64,
    pub n: f64,
    pub t: f64,
    pub kbar: f64,
    pub u: f64,
    pub kbar_over_u: f64,
    pub cost: f64,
    pub power: f64,
}

/// A family series to sweep. `All` covers every constructible family plus
/// the symbolic rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepFamily {
    Named(Family),
    /// Turan series at a fixed part count.
    Turan(u64),
    Bound,
}

impl std::str::FromStr for SweepFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "bound" {
            return Ok(SweepFamily::Bound);
        }
        if let Some(r) = s.strip_prefix("turan-r") {
            let r: u64 = r
                .parse()
                .map_err(|_| Error::precondition(format!("bad turan series '{s}'")))?;
            return Ok(SweepFamily::Turan(r));
        }
        Ok(SweepFamily::Named(s.parse()?))
    }
}

pub fn default_families() -> Vec<SweepFamily> {
    vec![
        SweepFamily::Named(Family::Complete),
        SweepFamily::Turan(3),
        SweepFamily::Turan(4),
        SweepFamily::Named(Family::CompleteBipartite),
        SweepFamily::Named(Family::Paley),
        SweepFamily::Named(Family::Hamming),
        SweepFamily::Named(Family::DemiPn),
        SweepFamily::Named(Family::Mms),
        SweepFamily::Named(Family::Pn),
        SweepFamily::Named(Family::Dragonfly),
        SweepFamily::Named(Family::DelormeQuadrangle),
        SweepFamily::Named(Family::QuadrangleIncidence),
        SweepFamily::Named(Family::DelormeHexagon),
        SweepFamily::Named(Family::HexagonIncidence),
        SweepFamily::Named(Family::Hypercube),
        SweepFamily::Named(Family::Oft),
        SweepFamily::Named(Family::Mlfm),
        SweepFamily::Bound,
    ]
}

struct ClosedForm {
    n: BigRational,
    delta: BigRational,
    kbar: BigRational,
    u: BigRational,
    /// Terminals per router when the family fixes it structurally.
    delta0_convention: Option<BigRational>,
    /// Leaf count when not all routers host nodes.
    leaves: Option<BigRational>,
    /// Inter-router links when not N*Delta/2.
    edges: Option<BigRational>,
}

fn int(v: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(n: i128, d: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn is_prime_power(q: u64) -> bool {
    crate::field::factor_prime_power(q).is_some()
}

/// Exact closed forms where they exist; None means "measure the graph".
fn closed_form(series: &SweepFamily, param: u64) -> Result<Option<ClosedForm>> {
    let q = param as i128;
    let cf = match series {
        SweepFamily::Named(Family::Complete) => ClosedForm {
            n: int(q),
            delta: int(q - 1),
            kbar: int(1),
            u: int(1),
            delta0_convention: Some(int(q)),
            leaves: None,
            edges: None,
        },
        SweepFamily::Turan(r) => {
            let r = *r as i128;
            let s = q / r;
            ClosedForm {
                n: int(q),
                delta: int(q - s),
                kbar: frac(q + s - 2, q - 1),
                u: int(1),
                delta0_convention: None,
                leaves: None,
                edges: None,
            }
        }
        SweepFamily::Named(Family::CompleteBipartite) => ClosedForm {
            n: int(2 * q),
            delta: int(q),
            kbar: frac(3 * q - 2, 2 * q - 1),
            u: int(1),
            delta0_convention: None,
            leaves: None,
            edges: None,
        },
        SweepFamily::Named(Family::Paley) => ClosedForm {
            n: int(q),
            delta: frac(q - 1, 2),
            kbar: frac(3, 2),
            u: int(1),
            delta0_convention: None,
            leaves: None,
            edges: None,
        },
        SweepFamily::Named(Family::Hamming) => ClosedForm {
            n: int(q * q),
            delta: int(2 * (q - 1)),
            kbar: frac(2 * q, q + 1),
            u: int(1),
            delta0_convention: None,
            leaves: None,
            edges: None,
        },
        SweepFamily::Named(Family::DemiPn) => {
            let n = q * q + q + 1;
            let e = q * (q + 1) * (q + 1) / 2;
            ClosedForm {
                n: int(n),
                delta: int(q + 1),
                kbar: int(2) - frac(2 * e, n * (n - 1)),
                u: frac(2 * q * q + q + 1, 2 * q * (q + 1)),
                delta0_convention: None,
                leaves: None,
                edges: Some(int(e)),
            }
        }
        SweepFamily::Named(Family::Pn) => ClosedForm {
            n: int(2 * (q * q + q + 1)),
            delta: int(q + 1),
            kbar: frac(5 * q * q + 3 * q + 1, 2 * q * q + 2 * q + 1),
            u: int(1),
            delta0_convention: None,
            leaves: None,
            edges: None,
        },
        SweepFamily::Named(Family::Mms) => {
            if param % 4 != 1 {
                return Ok(None); // no closed-form utilization; measure.
            }
            let n = 2 * q * q;
            let delta = (3 * q - 1) / 2;
            ClosedForm {
                n: int(n),
                delta: int(delta),
                kbar: frac(delta + 2 * (n - 1 - delta), n - 1),
                u: frac(8 * q * q - 3 * q - 3, 9 * q * q - 9 * q + 2),
                delta0_convention: None,
                leaves: None,
                edges: None,
            }
        }
        SweepFamily::Named(Family::Dragonfly) => ClosedForm {
            n: int(4 * q * q * q + 2 * q),
            delta: int(3 * q - 1),
            kbar: hierarchical_avg_distance(param),
            u: int(1),
            delta0_convention: Some(int(q)),
            leaves: None,
            edges: None,
        },
        SweepFamily::Named(Family::Hypercube) => {
            let n = 1i128 << param;
            ClosedForm {
                n: int(n),
                delta: int(q),
                kbar: frac(q * (n / 2), n - 1),
                u: int(1),
                delta0_convention: Some(int(2)),
                leaves: None,
                edges: None,
            }
        }
        SweepFamily::Named(Family::Oft) => {
            let np = q * q + q + 1;
            ClosedForm {
                n: int(3 * np),
                delta: int(q + 1),
                kbar: int(2),
                u: int(1),
                delta0_convention: Some(int(q + 1)),
                leaves: Some(int(2 * np)),
                edges: Some(int(2 * (q + 1) * np)),
            }
        }
        SweepFamily::Named(Family::Mlfm) => ClosedForm {
            n: int(q * (q - 1) + q * (q - 1) / 2),
            delta: int(q - 1),
            kbar: int(2),
            u: int(1),
            delta0_convention: Some(int(q - 1)),
            leaves: Some(int(q * (q - 1))),
            edges: Some(int(q * (q - 1) * (q - 1))),
        },
        SweepFamily::Named(
            f @ (Family::DelormeQuadrangle
            | Family::QuadrangleIncidence
            | Family::DelormeHexagon
            | Family::HexagonIncidence),
        ) => {
            let row = crate::topology::params::expected_params(*f, &params1("q", param))?;
            ClosedForm {
                n: row.n.clone(),
                delta: row.delta.clone(),
                kbar: row.kbar_limit.clone(),
                u: int(1),
                delta0_convention: Some(row.delta0.clone()),
                leaves: None,
                edges: None,
            }
        }
        _ => return Ok(None),
    };
    Ok(Some(cf))
}

/// Parameter values to try, in order, per series.
fn parameter_stream(series: &SweepFamily) -> Vec<u64> {
    match series {
        SweepFamily::Named(Family::Complete) => (2..=256).collect(),
        SweepFamily::Turan(r) => (1..=64).map(|k| k * r).collect(),
        SweepFamily::Named(Family::CompleteBipartite) => (2..=128).collect(),
        SweepFamily::Named(Family::Paley) => (5..=512).filter(|&q| q % 4 == 1 && is_prime_power(q)).collect(),
        SweepFamily::Named(Family::Hamming) => (2..=64).collect(),
        SweepFamily::Named(Family::Hypercube) => (2..=16).collect(),
        SweepFamily::Named(Family::Mlfm) => (3..=64).collect(),
        SweepFamily::Named(Family::Dragonfly) => (1..=32).collect(),
        SweepFamily::Named(Family::Mms) => (3..=128).filter(|&q| is_prime_power(q)).collect(),
        SweepFamily::Named(
            Family::DelormeQuadrangle | Family::DelormeHexagon,
        ) => vec![2, 8, 32, 128], // odd powers of two only
        SweepFamily::Named(_) => (2..=128).filter(|&q| is_prime_power(q)).collect(),
        SweepFamily::Bound => Vec::new(),
    }
}

pub fn scalability_sweep(
    r_max: u64,
    families: &[SweepFamily],
    cfg: &CostConfig,
) -> Result<Vec<SweepPoint>> {
    if r_max < 5 {
        return Err(Error::precondition("sweep requires --rmax >= 5"));
    }
    let threshold = subscription_threshold();
    let mut out = Vec::new();
    for series in families {
        if *series == SweepFamily::Bound {
            bound_curve(r_max, &mut out);
            continue;
        }
        for param in parameter_stream(series) {
            let cf = match closed_form(series, param)? {
                Some(cf) => Some(cf),
                None => measured_form(series, param)?,
            };
            let Some(cf) = cf else { continue };
            // Terminals per router: structural convention or the largest
            // integer under the subscription threshold.
            let delta0 = match &cf.delta0_convention {
                Some(d) => d.clone(),
                None => {
                    let cap = &cf.delta * &cf.u / &cf.kbar * &threshold;
                    let d = cap.floor();
                    if d < BigRational::one() {
                        continue;
                    }
                    d
                }
            };
            let r = (&cf.delta + &delta0).ceil();
            let r_int = r.to_integer().to_u64().unwrap_or(u64::MAX);
            if r_int > r_max {
                break;
            }
            let leaves = cf.leaves.clone().unwrap_or_else(|| cf.n.clone());
            let t = &leaves * &delta0;
            let edges = cf
                .edges
                .clone()
                .unwrap_or_else(|| &cf.n * &cf.delta / int(2));
            let ratio = &cf.kbar / &cf.u;
            let priced = price(
                cf.n.to_f64().unwrap().round() as u64,
                r_int,
                t.to_f64().unwrap().round().max(1.0) as u64,
                0,
                edges.to_f64().unwrap().round() as u64,
                cfg,
            );
            let name = match series {
                SweepFamily::Turan(r) => format!("turan-r{r}"),
                SweepFamily::Named(f) => f.name().to_string(),
                SweepFamily::Bound => unreachable!(),
            };
            out.push(SweepPoint {
                family: name,
                param,
                r: r_int as f64,
                n: cf.n.to_f64().unwrap(),
                t: t.to_f64().unwrap(),
                kbar: cf.kbar.to_f64().unwrap(),
                u: cf.u.to_f64().unwrap(),
                kbar_over_u: ratio.to_f64().unwrap(),
                cost: priced.cost_per_node,
                power: priced.power_per_node,
            });
        }
    }
    Ok(out)
}

/// Measure kbar and u on the constructed graph (MMS with eps != 1).
fn measured_form(series: &SweepFamily, param: u64) -> Result<Option<ClosedForm>> {
    let SweepFamily::Named(family) = series else {
        return Ok(None);
    };
    // Guard: only measure when the radix can still be feasible, sizes stay
    // moderate, and the family is constructible.
    let mut params = Params::new();
    match family {
        Family::Mms => {
            params.insert("q".into(), param);
            if 2 * param * param > 4200 {
                return Ok(None);
            }
        }
        _ => return Ok(None),
    }
    let g = build(*family, &params)?;
    let dm = crate::metrics::distance_metrics(&g, TrafficScope::AllPairs)?;
    let u = utilization(&g, TrafficScope::AllPairs)?;
    Ok(Some(ClosedForm {
        n: int(g.n() as i128),
        delta: int(g.delta() as i128),
        kbar: dm.kbar,
        u,
        delta0_convention: None,
        leaves: None,
        edges: Some(int(g.edge_count() as i128)),
    }))
}

fn bound_curve(r_max: u64, out: &mut Vec<SweepPoint>) {
    for k in 2..=6u32 {
        for i in 1..100u32 {
            let kbar = (k - 1) as f64 + i as f64 / 100.0;
            let Ok(t) = terminal_bound(r_max, k, kbar) else {
                continue;
            };
            out.push(SweepPoint {
                family: "bound".into(),
                param: k as u64,
                r: r_max as f64,
                n: f64::NAN,
                t,
                kbar,
                u: 1.0,
                kbar_over_u: kbar,
                cost: f64::NAN,
                power: f64::NAN,
            });
        }
    }
}

/// CSV rendering of sweep points.
pub fn sweep_csv(points: &[SweepPoint]) -> String {
    let mut out = String::from("family,param,R,N,T,kbar,u,kbar_over_u,cost,power\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.2},{:.3}\n",
            p.family, p.param, p.r, p.n, p.t, p.kbar, p.u, p.kbar_over_u, p.cost, p.power
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_rmax() {
        assert!(scalability_sweep(4, &default_families(), &CostConfig::reference_10k()).is_err());
    }

    #[test]
    fn demi_pn_point_at_q27() {
        let pts = scalability_sweep(
            64,
            &[SweepFamily::Named(Family::DemiPn)],
            &CostConfig::reference_10k(),
        )
        .unwrap();
        let p = pts.iter().find(|p| p.param == 27).expect("q = 27 present");
        assert_eq!(p.r, 42.0);
        assert_eq!(p.t, 10598.0);
        assert!((p.kbar_over_u - 1.997).abs() < 2e-3, "{}", p.kbar_over_u);
    }

    #[test]
    fn complete_series_contains_the_radix_48_case() {
        let pts = scalability_sweep(
            64,
            &[SweepFamily::Named(Family::Complete)],
            &CostConfig::reference_10k(),
        )
        .unwrap();
        let p = pts.iter().find(|p| p.r == 47.0).expect("N = 24 point");
        assert_eq!(p.t, 576.0);
    }

    #[test]
    fn bound_curve_delegates_to_terminal_bound() {
        let pts = scalability_sweep(64, &[SweepFamily::Bound], &CostConfig::reference_10k()).unwrap();
        let p = pts
            .iter()
            .find(|p| p.param == 3 && (p.kbar - 2.5).abs() < 1e-9)
            .expect("k = 3, kbar = 2.5 grid point");
        let direct = terminal_bound(64, 3, 2.5).unwrap();
        assert!((p.t - direct).abs() < 1e-9);
    }

    #[test]
    fn delorme_quadrangle_has_two_points_under_radix_64() {
        let pts = scalability_sweep(
            64,
            &[SweepFamily::Named(Family::DelormeQuadrangle)],
            &CostConfig::reference_10k(),
        )
        .unwrap();
        let params: Vec<u64> = pts.iter().map(|p| p.param).collect();
        assert_eq!(params, vec![2, 8, 32]);
    }
}
