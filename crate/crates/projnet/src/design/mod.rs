//! Turning a topology into a dimensioned, priced design: terminals per
//! router, subscription, electrical/optical cable split under a group
//! layout, dollars and watts per compute node.

pub mod layout;
pub mod reference_data;
pub mod sweep;
pub mod tables;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{distance_metrics, scope_for, utilization};
use crate::topology::{hierarchical_avg_distance, Family, Topology};

/// Cost constants. The two bundled presets carry the reference values used
/// by the case-study tables: 40 Gbps links, 0.985 $/Gbps electrical cable,
/// 7.7432 (10k-node installations) or 7.9178 (25k) $/Gbps optical cable,
/// 350.4*R - 892.3 $ per router, and 2.8 W per port.
#[derive(Debug, Clone, Serialize)]
pub struct CostConfig {
    pub link_rate_gbps: f64,
    pub electrical_cost_per_gbps: f64,
    pub optical_cost_per_gbps: f64,
    pub router_cost_slope: f64,
    pub router_cost_intercept: f64,
    pub port_power_watts: f64,
    pub target_group_size: u64,
}

impl CostConfig {
    /// Preset for installations around 10,000 compute nodes.
    pub fn reference_10k() -> CostConfig {
        CostConfig {
            link_rate_gbps: 40.0,
            electrical_cost_per_gbps: 0.985,
            optical_cost_per_gbps: 7.7432,
            router_cost_slope: 350.4,
            router_cost_intercept: -892.3,
            port_power_watts: 2.8,
            target_group_size: 500,
        }
    }

    /// Preset for installations around 25,000 compute nodes.
    pub fn reference_25k() -> CostConfig {
        CostConfig {
            optical_cost_per_gbps: 7.9178,
            ..CostConfig::reference_10k()
        }
    }

    /// Resolve a preset name or load a key=value file.
    pub fn load(spec: &str) -> Result<CostConfig> {
        match spec {
            "paper-10k" => Ok(CostConfig::reference_10k()),
            "paper-25k" => Ok(CostConfig::reference_25k()),
            path => CostConfig::from_file(std::path::Path::new(path)),
        }
    }

    /// Plain key=value file; '#' starts a comment. Unknown keys are errors.
    pub fn from_file(path: &std::path::Path) -> Result<CostConfig> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::precondition(format!("cannot read config {}: {e}", path.display())))?;
        let mut cfg = CostConfig::reference_10k();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::precondition(format!("{}:{}: expected key=value", path.display(), lineno + 1))
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse = |v: &str| -> Result<f64> {
                v.parse::<f64>()
                    .map_err(|_| Error::precondition(format!("bad number '{v}' for {key}")))
            };
            match key {
                "preset" => cfg = CostConfig::load(value)?,
                "link_rate_gbps" => cfg.link_rate_gbps = parse(value)?,
                "electrical_cost_per_gbps" => cfg.electrical_cost_per_gbps = parse(value)?,
                "optical_cost_per_gbps" => cfg.optical_cost_per_gbps = parse(value)?,
                "router_cost_slope" => cfg.router_cost_slope = parse(value)?,
                "router_cost_intercept" => cfg.router_cost_intercept = parse(value)?,
                "port_power_watts" => cfg.port_power_watts = parse(value)?,
                "target_group_size" => {
                    cfg.target_group_size = value
                        .parse()
                        .map_err(|_| Error::precondition(format!("bad integer '{value}'")))?
                }
                other => {
                    return Err(Error::precondition(format!("unknown config key '{other}'")))
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("link_rate_gbps", self.link_rate_gbps),
            ("electrical_cost_per_gbps", self.electrical_cost_per_gbps),
            ("optical_cost_per_gbps", self.optical_cost_per_gbps),
            ("router_cost_slope", self.router_cost_slope),
            ("port_power_watts", self.port_power_watts),
        ];
        for (name, v) in positive {
            if v <= 0.0 {
                return Err(Error::precondition(format!("{name} must be positive")));
            }
        }
        if self.target_group_size == 0 {
            return Err(Error::precondition("target_group_size must be positive"));
        }
        Ok(())
    }
}

/// Oversubscription acceptance threshold for integer dimensioning: the
/// loosest value consistent with the published case studies (1.002 in,
/// 1.024 out).
pub fn subscription_threshold() -> BigRational {
    BigRational::new(BigInt::from(201), BigInt::from(200))
}

/// The metric basis a family is dimensioned against.
#[derive(Debug, Clone)]
pub struct MetricBasis {
    pub kbar: BigRational,
    pub u: BigRational,
    /// True when the basis is a per-family convention rather than the exact
    /// graph metric.
    pub convention: bool,
}

/// Dimensioning basis per family. Dragonflies follow the hierarchical
/// local-global-local routing convention (balanced by construction, u = 1,
/// average distance from the canonical three-level distance count); all
/// other families use the exact graph metrics.
pub fn metric_basis(g: &Topology) -> Result<MetricBasis> {
    if g.family() == Family::Dragonfly {
        let h = g.params()["h"];
        return Ok(MetricBasis {
            kbar: hierarchical_avg_distance(h),
            u: BigRational::one(),
            convention: true,
        });
    }
    let scope = scope_for(g);
    let dm = distance_metrics(g, scope)?;
    let u = utilization(g, scope)?;
    Ok(MetricBasis {
        kbar: dm.kbar,
        u,
        convention: false,
    })
}

/// A dimensioned design: how many compute nodes each leaf router hosts.
#[derive(Debug, Clone)]
pub struct Dimensioned {
    pub delta: u64,
    /// Links from a leaf router to other leaf routers (delta of the indirect
    /// bound; equals delta for direct networks).
    pub delta_leaf: u64,
    pub delta0: u64,
    pub radix: u64,
    pub terminals: u64,
    pub subscription: BigRational,
    pub basis: MetricBasis,
}

/// Compute nodes per router under the saturation constraint: the largest
/// integer with subscription <= the threshold, where subscription is
/// Delta0 * kbar / (Delta_eff * u) and Delta_eff is Delta for direct
/// networks and 2*Delta - delta for indirect ones. `policy` overrides the
/// automatic choice.
pub fn dimension(g: &Topology, policy: Option<u64>) -> Result<Dimensioned> {
    let basis = metric_basis(g)?;
    dimension_with_basis(g, policy, basis)
}

pub fn dimension_with_basis(
    g: &Topology,
    policy: Option<u64>,
    basis: MetricBasis,
) -> Result<Dimensioned> {
    let delta = g.delta() as u64;
    let indirect = g.spine_count() > 0;
    let delta_leaf = if indirect { g.leaf_to_leaf_degree() as u64 } else { delta };
    let delta_eff = if indirect { 2 * delta - delta_leaf } else { delta };

    let capacity = BigRational::from_integer(BigInt::from(delta_eff)) * &basis.u / &basis.kbar;
    let delta0 = match policy {
        Some(v) => v,
        None => {
            // max n with n <= capacity * threshold
            let limit = &capacity * subscription_threshold();
            let n = limit.floor().to_integer().to_u64().unwrap_or(0);
            if n < 1 {
                return Err(Error::precondition(
                    "no feasible terminal count: even one node per router oversubscribes",
                ));
            }
            n
        }
    };
    let subscription = BigRational::from_integer(BigInt::from(delta0)) / &capacity;
    let leaf_count = g.leaf_count() as u64;
    let spine_radix = (0..g.n())
        .filter(|&v| g.role(v) == crate::topology::Role::Spine)
        .map(|v| g.degree(v) as u64)
        .max()
        .unwrap_or(0);
    let radix = (delta + delta0).max(spine_radix);
    Ok(Dimensioned {
        delta,
        delta_leaf,
        delta0,
        radix,
        terminals: leaf_count * delta0,
        subscription,
        basis,
    })
}

/// Eq.-style abstract cost per compute node: c_i + c_t*kbar/u +
/// c_r*(1 + kbar/u)/R. Also the figure of merit kbar/u.
pub fn abstract_cost_per_node(
    kbar: &BigRational,
    u: &BigRational,
    r: u64,
    c_injection: f64,
    c_transit: f64,
    c_router: f64,
) -> Result<f64> {
    if u <= &BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::precondition("utilization must be positive"));
    }
    let ratio = (kbar / u).to_f64().ok_or_else(|| Error::invariant("ratio overflow"))?;
    Ok(c_injection + c_transit * ratio + c_router * (1.0 + ratio) / r as f64)
}

/// Dollar and watt cost of a laid-out design. Terminal links carry no cable
/// cost; they are priced only through their router ports.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Priced {
    pub cost_per_node: f64,
    pub power_per_node: f64,
}

pub fn price(
    routers: u64,
    radix: u64,
    terminals: u64,
    electrical_cables: u64,
    optical_cables: u64,
    cfg: &CostConfig,
) -> Priced {
    let cable = |count: u64, per_gbps: f64| count as f64 * per_gbps * cfg.link_rate_gbps;
    let router_cost = routers as f64 * (cfg.router_cost_slope * radix as f64 + cfg.router_cost_intercept);
    let total = cable(electrical_cables, cfg.electrical_cost_per_gbps)
        + cable(optical_cables, cfg.optical_cost_per_gbps)
        + router_cost;
    Priced {
        cost_per_node: total / terminals as f64,
        power_per_node: cfg.port_power_watts * routers as f64 * radix as f64 / terminals as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{build, params1, params2};

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn pn23_dimensioning() {
        let g = build(Family::Pn, &params1("q", 23)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert_eq!(d.delta0, 9);
        assert_eq!(d.radix, 33);
        assert_eq!(d.terminals, 9954);
        // subscription = 9 * (2715/1105) / 24 = 0.921...
        assert_eq!(d.subscription, ratio(24435, 26520));
        assert_eq!(crate::metrics::decimal(&d.subscription, 3), "0.921");
    }

    #[test]
    fn hamming22_dimensioning() {
        let g = build(Family::Hamming, &params2("n", 22, "dim", 2)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert_eq!(d.delta0, 22);
        assert_eq!(crate::metrics::decimal(&d.subscription, 3), "1.002");
    }

    #[test]
    fn demi_pn37_dimensioning() {
        let g = build(Family::DemiPn, &params1("q", 37)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert_eq!(d.delta0, 19);
        assert_eq!(crate::metrics::decimal(&d.subscription, 3), "0.999");
    }

    #[test]
    fn dragonfly_follows_hierarchical_convention() {
        let g = build(Family::Dragonfly, &params1("h", 7)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert!(d.basis.convention);
        assert_eq!(d.delta0, 7);
        assert_eq!(d.radix, 27);
        assert_eq!(d.terminals, 9702);
        assert_eq!(crate::metrics::decimal(&d.subscription, 3), "0.994");
    }

    #[test]
    fn oft_indirect_dimensioning() {
        let g = build(Family::Oft, &params1("q", 16)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert_eq!(d.delta0, 17);
        assert_eq!(d.radix, 34);
        assert_eq!(d.terminals, 9282);
        assert_eq!(d.delta_leaf, 0);
    }

    #[test]
    fn mlfm_indirect_dimensioning() {
        let g = build(Family::Mlfm, &params1("n", 22)).unwrap();
        let d = dimension(&g, None).unwrap();
        assert_eq!(d.delta0, 21);
        assert_eq!(d.radix, 42);
        assert_eq!(d.terminals, 9702);
    }

    #[test]
    fn abstract_cost_examples() {
        let one = BigRational::one();
        let c = abstract_cost_per_node(&one, &one, 10, 1.0, 1.0, 0.0).unwrap();
        assert!((c - 2.0).abs() < 1e-12);
    }

    #[test]
    fn price_matches_reference_hamming_row() {
        // Injected split 5082/5082 at the 10k preset.
        let p = price(484, 64, 10648, 5082, 5082, &CostConfig::reference_10k());
        assert!((p.cost_per_node - 1145.41).abs() < 0.05, "{}", p.cost_per_node);
        assert!((p.power_per_node - 8.15).abs() < 0.01);
    }

    #[test]
    fn config_file_roundtrip() {
        let dir = std::env::temp_dir().join("projnet-cfg-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cost.conf");
        std::fs::write(
            &path,
            "preset=paper-25k\ntarget_group_size=400 # nodes\nlink_rate_gbps=100\n",
        )
        .unwrap();
        let cfg = CostConfig::from_file(&path).unwrap();
        assert_eq!(cfg.target_group_size, 400);
        assert!((cfg.link_rate_gbps - 100.0).abs() < 1e-12);
        assert!((cfg.optical_cost_per_gbps - 7.9178).abs() < 1e-12);
        assert!(CostConfig::load("paper-10k").is_ok());
        assert!(CostConfig::load("/no/such/file").is_err());
    }
}
