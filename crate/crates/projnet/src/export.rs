//! File formats: edge lists, DOT, JSON descriptors and reports.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::Serializer;
use serde_json::json;

use crate::error::{Error, Result};
use crate::metrics::{decimal, ArcLoads, MetricsReport};
use crate::topology::{Family, GraphBuilder, Params, Predicted, Role, Topology};

/// Serialize a BigRational as {num, den, decimal}.
pub fn serialize_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 3)?;
    st.serialize_field("num", &r.numer().to_string())?;
    st.serialize_field("den", &r.denom().to_string())?;
    st.serialize_field("decimal", &decimal(r, 4))?;
    st.end()
}

fn rational_json(r: &BigRational) -> serde_json::Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "decimal": decimal(r, 4),
    })
}

/// ASCII edge list: one "u v" pair per line, 0-based ids, u < v,
/// lexicographically sorted.
pub fn edge_list(g: &Topology) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// GraphViz DOT with role-based coloring (leaves white, spines gray) and
/// display labels.
pub fn dot(g: &Topology) -> String {
    let mut out = String::from("graph topology {\n  node [style=filled];\n");
    for v in 0..g.n() {
        let color = match g.role(v) {
            Role::Leaf => "white",
            Role::Spine => "lightgray",
        };
        out.push_str(&format!(
            "  {v} [label=\"{}\", fillcolor={color}];\n",
            g.label(v)
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// JSON descriptor: family, parameters, predicted structure, counts.
pub fn descriptor(g: &Topology) -> serde_json::Value {
    json!({
        "schema": 1,
        "family": g.family().name(),
        "params": g.params(),
        "n": g.n(),
        "edges": g.edge_count(),
        "leaves": g.leaf_count(),
        "spines": g.spine_count(),
        "predicted": {
            "n": g.predicted().n,
            "degree_counts": g.predicted().degree_counts,
        },
    })
}

/// Metrics report JSON with exact rationals and 4-decimal renderings.
pub fn metrics_json(g: &Topology, report: &MetricsReport) -> serde_json::Value {
    let w: BTreeMap<String, u64> = report.w.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let load_by_class = report.load_by_class.as_ref().map(|m| {
        m.iter()
            .map(|(k, v)| (format!("{k:?}").to_lowercase(), rational_json(v)))
            .collect::<BTreeMap<String, serde_json::Value>>()
    });
    json!({
        "schema": 1,
        "family": g.family().name(),
        "params": g.params(),
        "scope": match report.scope {
            crate::metrics::TrafficScope::AllPairs => "all",
            crate::metrics::TrafficScope::LeafToLeaf => "leaf",
        },
        "considered": report.considered,
        "w": w,
        "diameter": report.diameter,
        "kbar": rational_json(&report.kbar),
        "total_distance": report.total_distance.to_string(),
        "arc_count": report.arc_count,
        "mean_arc_load": rational_json(&report.mean_arc_load),
        "max_arc_load": rational_json(&report.max_arc_load),
        "u": rational_json(&report.u),
        "accepted_load": rational_json(&report.accepted_load),
        "load_by_class": load_by_class,
    })
}

/// CSV of the distance distribution: t, W(t).
pub fn distribution_csv(report: &MetricsReport) -> String {
    let mut out = String::from("t,w\n");
    for (t, w) in &report.w {
        out.push_str(&format!("{t},{w}\n"));
    }
    out
}

/// CSV histogram of arc loads: load (4 decimals), exact num/den, arc count.
pub fn arc_load_histogram_csv(loads: &ArcLoads) -> String {
    let mut out = String::from("load,num,den,arcs\n");
    for (value, count) in loads.histogram() {
        out.push_str(&format!(
            "{},{},{},{count}\n",
            decimal(&value, 4),
            value.numer(),
            value.denom()
        ));
    }
    out
}

/// Parse an edge list back into an anonymous topology (family `edge-list`,
/// all leaf roles). The graph must be simple and connected.
pub fn read_edge_list(text: &str) -> Result<Topology> {
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut max_id = 0u32;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::precondition(format!(
                    "line {}: expected 'u v'",
                    lineno + 1
                )))
            }
        };
        let u: u32 = a
            .parse()
            .map_err(|_| Error::precondition(format!("line {}: bad vertex id '{a}'", lineno + 1)))?;
        let v: u32 = b
            .parse()
            .map_err(|_| Error::precondition(format!("line {}: bad vertex id '{b}'", lineno + 1)))?;
        if u == v {
            return Err(Error::precondition(format!("line {}: self loop", lineno + 1)));
        }
        max_id = max_id.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::precondition("edge list is empty"));
    }
    let n = max_id as usize + 1;
    let mut b = GraphBuilder::new(n);
    let mut degree = vec![0usize; n];
    for v in 0..n {
        b.label(v, v.to_string());
    }
    for &(u, v) in &edges {
        degree[u as usize] += 1;
        degree[v as usize] += 1;
        b.edge(u as usize, v as usize);
    }
    let mut degree_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for d in degree {
        *degree_counts.entry(d).or_insert(0) += 1;
    }
    if degree_counts.contains_key(&0) {
        return Err(Error::precondition("edge list leaves isolated vertices"));
    }
    let predicted = Predicted { n, degree_counts };
    let mut params = Params::new();
    params.insert("n".into(), n as u64);
    b.finish(Family::Imported, params, predicted)
        .map_err(|e| match e {
            // A malformed or disconnected input file is the caller's fault.
            Error::Invariant(msg) => Error::Precondition(msg),
            other => other,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{metrics_report, TrafficScope};
    use crate::topology::{build, params1};

    #[test]
    fn heawood_edge_list_roundtrip() {
        let g = build(Family::Pn, &params1("q", 2)).unwrap();
        let text = edge_list(&g);
        assert_eq!(text.lines().count(), 21);
        let back = read_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
        let (ra, _) = metrics_report(&g, TrafficScope::AllPairs).unwrap();
        let (rb, _) = metrics_report(&back, TrafficScope::AllPairs).unwrap();
        assert_eq!(ra.kbar, rb.kbar);
        assert_eq!(ra.u, rb.u);
    }

    #[test]
    fn edge_list_is_sorted() {
        let g = build(Family::Mms, &params1("q", 5)).unwrap();
        let text = edge_list(&g);
        let lines: Vec<&str> = text.lines().collect();
        let mut sorted = lines.clone();
        sorted.sort_by_key(|l| {
            let mut it = l.split(' ');
            let u: u32 = it.next().unwrap().parse().unwrap();
            let v: u32 = it.next().unwrap().parse().unwrap();
            (u, v)
        });
        assert_eq!(lines, sorted);
    }

    #[test]
    fn dot_mentions_roles() {
        let g = build(Family::Oft, &params1("q", 2)).unwrap();
        let text = dot(&g);
        assert!(text.contains("lightgray"));
        assert!(text.contains("white"));
    }

    #[test]
    fn rejects_malformed_and_disconnected() {
        assert!(read_edge_list("0 1 2\n").is_err());
        assert!(read_edge_list("0 0\n").is_err());
        assert!(read_edge_list("").is_err());
        // Two disconnected edges.
        assert!(read_edge_list("0 1\n2 3\n").is_err());
    }

    #[test]
    fn descriptor_shape() {
        let g = build(Family::DemiPn, &params1("q", 2)).unwrap();
        let d = descriptor(&g);
        assert_eq!(d["schema"], 1);
        assert_eq!(d["n"], 7);
        assert_eq!(d["edges"], 9);
    }
}
