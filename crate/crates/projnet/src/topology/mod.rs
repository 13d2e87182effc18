//! Topology families as explicit graphs.
//!
//! Every generator produces a [`Topology`]: a simple undirected connected
//! graph with stable vertex ids, display labels, per-vertex roles
//! (leaf/spine), optional local/global edge annotations, optional natural
//! clustering used by the physical layout, and the predicted structural
//! parameters the construction must satisfy. Generators validate their output
//! against the prediction before returning it.

mod classic;
mod dragonfly;
mod mlfm;
mod mms;
pub mod params;
mod projective_nets;
mod random_regular;

pub use dragonfly::hierarchical_avg_distance;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Topology family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Pn,
    DemiPn,
    Mms,
    Oft,
    Mlfm,
    Complete,
    CompleteBipartite,
    Turan,
    Paley,
    Hamming,
    Hypercube,
    Dragonfly,
    RandomRegular,
    /// Anonymous graph loaded from an edge list.
    Imported,
    // Families evaluated only through their closed-form structural
    // parameters; `build` rejects them.
    QuadrangleIncidence,
    HexagonIncidence,
    DelormeQuadrangle,
    DelormeHexagon,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Pn => "pn",
            Family::DemiPn => "demi-pn",
            Family::Mms => "mms",
            Family::Oft => "oft",
            Family::Mlfm => "mlfm",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Turan => "turan",
            Family::Paley => "paley",
            Family::Hamming => "hamming",
            Family::Hypercube => "hypercube",
            Family::Dragonfly => "dragonfly",
            Family::RandomRegular => "random-regular",
            Family::Imported => "edge-list",
            Family::QuadrangleIncidence => "quadrangle-incidence",
            Family::HexagonIncidence => "hexagon-incidence",
            Family::DelormeQuadrangle => "delorme-quadrangle",
            Family::DelormeHexagon => "delorme-hexagon",
        }
    }

    /// Families with spine routers; their traffic scope of interest is
    /// leaf-to-leaf.
    pub fn is_indirect(self) -> bool {
        matches!(self, Family::Oft | Family::Mlfm)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Ok(match norm.as_str() {
            "pn" => Family::Pn,
            "demi-pn" | "demipn" => Family::DemiPn,
            "mms" | "slim-fly" | "slimfly" => Family::Mms,
            "oft" => Family::Oft,
            "mlfm" => Family::Mlfm,
            "complete" => Family::Complete,
            "complete-bipartite" => Family::CompleteBipartite,
            "turan" => Family::Turan,
            "paley" => Family::Paley,
            "hamming" => Family::Hamming,
            "hypercube" => Family::Hypercube,
            "dragonfly" => Family::Dragonfly,
            "random-regular" => Family::RandomRegular,
            "edge-list" => Family::Imported,
            "quadrangle-incidence" => Family::QuadrangleIncidence,
            "hexagon-incidence" => Family::HexagonIncidence,
            "delorme-quadrangle" => Family::DelormeQuadrangle,
            "delorme-hexagon" => Family::DelormeHexagon,
            _ => return Err(Error::precondition(format!("unknown family '{s}'"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Leaf,
    Spine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Local,
    Global,
}

/// Structural ground truth a construction must satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicted {
    pub n: usize,
    /// degree -> number of vertices with that degree.
    pub degree_counts: BTreeMap<usize, usize>,
}

impl Predicted {
    pub fn regular(n: usize, degree: usize) -> Predicted {
        let mut degree_counts = BTreeMap::new();
        degree_counts.insert(degree, n);
        Predicted { n, degree_counts }
    }

    /// Maximum degree.
    pub fn delta(&self) -> usize {
        self.degree_counts.keys().max().copied().unwrap_or(0)
    }
}

/// A constructed interconnection topology.
#[derive(Debug, Clone)]
pub struct Topology {
    family: Family,
    params: BTreeMap<String, u64>,
    labels: Vec<String>,
    adj: Vec<Vec<u32>>,
    /// Parallel to `adj` when the family annotates its edges.
    classes: Option<Vec<Vec<EdgeClass>>>,
    roles: Vec<Role>,
    /// Natural layout atoms (same id = same atom), when the construction has
    /// them.
    clusters: Option<Vec<u32>>,
    predicted: Predicted,
}

impl Topology {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &BTreeMap<String, u64> {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree over leaf vertices (the graph degree Delta of the
    /// paper's model; for direct networks this is the plain maximum degree).
    pub fn delta(&self) -> usize {
        (0..self.n())
            .filter(|&v| self.roles[v] == Role::Leaf)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.roles[v] == Role::Leaf)
    }

    pub fn spine_count(&self) -> usize {
        self.roles.iter().filter(|r| **r == Role::Spine).count()
    }

    pub fn leaf_count(&self) -> usize {
        self.n() - self.spine_count()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn clusters(&self) -> Option<&[u32]> {
        self.clusters.as_deref()
    }

    /// Class of the i-th incident edge of v, when annotated.
    pub fn edge_class(&self, v: usize, i: usize) -> Option<EdgeClass> {
        self.classes.as_ref().map(|c| c[v][i])
    }

    pub fn has_edge_classes(&self) -> bool {
        self.classes.is_some()
    }

    pub fn predicted(&self) -> &Predicted {
        &self.predicted
    }

    /// Undirected edges as ordered (u, v) pairs with u < v, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n() {
            for &w in &self.adj[v] {
                if (v as u32) < w {
                    out.push((v as u32, w));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Leaf-to-leaf degree for indirect designs: links from a leaf router to
    /// other leaf routers (the paper's delta). Constant by construction for
    /// the bundled families.
    pub fn leaf_to_leaf_degree(&self) -> usize {
        self.leaves()
            .next()
            .map(|v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| self.roles[w as usize] == Role::Leaf)
                    .count()
            })
            .unwrap_or(0)
    }

    /// Distance distribution from one vertex, including W(0) = 1.
    pub fn vertex_distance_distribution(&self, v: usize) -> Vec<u64> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[v] = 0;
        queue.push_back(v as u32);
        let mut w = vec![0u64; 1];
        w[0] = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x as usize] {
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    let d = dist[y as usize] as usize;
                    if w.len() <= d {
                        w.resize(d + 1, 0);
                    }
                    w[d] += 1;
                    queue.push_back(y);
                }
            }
        }
        w
    }

    /// Girth (length of a shortest cycle), for structural tests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n() {
            let mut dist = vec![u32::MAX; self.n()];
            let mut parent = vec![u32::MAX; self.n()];
            let mut queue = std::collections::VecDeque::new();
            dist[s] = 0;
            queue.push_back(s as u32);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x as usize] {
                    if dist[y as usize] == u32::MAX {
                        dist[y as usize] = dist[x as usize] + 1;
                        parent[y as usize] = x;
                        queue.push_back(y);
                    } else if parent[x as usize] != y {
                        let cycle = (dist[x as usize] + dist[y as usize] + 1) as usize;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![2u8; self.n()];
        for s in 0..self.n() {
            if color[s] != 2 {
                continue;
            }
            color[s] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s as u32);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x as usize] {
                    if color[y as usize] == 2 {
                        color[y as usize] = 1 - color[x as usize];
                        queue.push_back(y);
                    } else if color[y as usize] == color[x as usize] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Collects edges for a topology under construction, then checks the result.
pub(crate) struct GraphBuilder {
    labels: Vec<String>,
    roles: Vec<Role>,
    edges: Vec<(u32, u32, Option<EdgeClass>)>,
    clusters: Option<Vec<u32>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            labels: vec![String::new(); n],
            roles: vec![Role::Leaf; n],
            edges: Vec::new(),
            clusters: None,
        }
    }

    pub fn label(&mut self, v: usize, label: String) {
        self.labels[v] = label;
    }

    pub fn role(&mut self, v: usize, role: Role) {
        self.roles[v] = role;
    }

    pub fn clusters(&mut self, clusters: Vec<u32>) {
        self.clusters = Some(clusters);
    }

    pub fn edge(&mut self, u: usize, v: usize) {
        self.classed_edge(u, v, None);
    }

    pub fn classed_edge(&mut self, u: usize, v: usize, class: Option<EdgeClass>) {
        debug_assert_ne!(u, v, "self loop");
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.edges.push((a as u32, b as u32, class));
    }

    pub fn finish(
        self,
        family: Family,
        params: BTreeMap<String, u64>,
        predicted: Predicted,
    ) -> Result<Topology> {
        let n = self.labels.len();
        if predicted.n != n {
            return Err(Error::invariant(format!(
                "{family}: built {n} vertices, predicted {}",
                predicted.n
            )));
        }
        let mut edges = self.edges;
        edges.sort_unstable_by_key(|&(a, b, _)| (a, b));
        for w in edges.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(Error::invariant(format!(
                    "{family}: duplicate edge ({}, {})",
                    w[0].0, w[0].1
                )));
            }
        }
        let annotated = edges.iter().any(|e| e.2.is_some());
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut classes: Vec<Vec<EdgeClass>> = if annotated { vec![Vec::new(); n] } else { Vec::new() };
        for &(a, b, class) in &edges {
            if a == b || a as usize >= n || b as usize >= n {
                return Err(Error::invariant(format!("{family}: bad edge ({a}, {b})")));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
            if annotated {
                let c = class.ok_or_else(|| {
                    Error::invariant(format!("{family}: edge ({a}, {b}) is missing its class"))
                })?;
                classes[a as usize].push(c);
                classes[b as usize].push(c);
            }
        }
        // Sort each neighbor list, keeping class annotations aligned.
        for v in 0..n {
            if annotated {
                let mut pairs: Vec<(u32, EdgeClass)> =
                    adj[v].iter().copied().zip(classes[v].iter().copied()).collect();
                pairs.sort_unstable_by_key(|p| p.0);
                adj[v] = pairs.iter().map(|p| p.0).collect();
                classes[v] = pairs.iter().map(|p| p.1).collect();
            } else {
                adj[v].sort_unstable();
            }
        }
        let topo = Topology {
            family,
            params,
            labels: self.labels,
            adj,
            classes: if annotated { Some(classes) } else { None },
            roles: self.roles,
            clusters: self.clusters,
            predicted,
        };
        validate(&topo)?;
        Ok(topo)
    }
}

fn validate(t: &Topology) -> Result<()> {
    // Connectivity.
    let n = t.n();
    if n == 0 {
        return Err(Error::invariant("empty graph"));
    }
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0u32);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &y in &t.adj[x as usize] {
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    if count != n {
        return Err(Error::invariant(format!(
            "{}: graph is disconnected ({count} of {n} reachable)",
            t.family
        )));
    }
    // Degree sequence against the prediction.
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..n {
        *counts.entry(t.degree(v)).or_insert(0) += 1;
    }
    if counts != t.predicted.degree_counts {
        return Err(Error::invariant(format!(
            "{}: degree sequence {:?} does not match prediction {:?}",
            t.family, counts, t.predicted.degree_counts
        )));
    }
    Ok(())
}

/// Construction parameters, by name. Which names apply depends on the family
/// (q, n, r, h, dim, degree, seed).
pub type Params = BTreeMap<String, u64>;

pub fn param(params: &Params, key: &str) -> Result<u64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::precondition(format!("missing required parameter --{key}")))
}

/// Build any constructible family from its named parameters.
pub fn build(family: Family, params: &Params) -> Result<Topology> {
    match family {
        Family::Pn => projective_nets::build_pn(param(params, "q")?),
        Family::DemiPn => projective_nets::build_demi_pn(param(params, "q")?),
        Family::Oft => projective_nets::build_oft(param(params, "q")?),
        Family::Mms => mms::build_mms(param(params, "q")?),
        Family::Mlfm => mlfm::build_mlfm(param(params, "n")?),
        Family::Complete => classic::build_complete(param(params, "n")?),
        Family::CompleteBipartite => classic::build_complete_bipartite(param(params, "n")?),
        Family::Turan => classic::build_turan(param(params, "n")?, param(params, "r")?),
        Family::Paley => classic::build_paley(param(params, "q")?),
        Family::Hamming => {
            classic::build_hamming(param(params, "n")?, params.get("dim").copied().unwrap_or(2))
        }
        Family::Hypercube => classic::build_hypercube(param(params, "n")?),
        Family::Dragonfly => dragonfly::build_dragonfly(param(params, "h")?),
        Family::RandomRegular => random_regular::build_random_regular(
            param(params, "n")?,
            param(params, "degree")?,
            param(params, "seed")?,
        ),
        other => Err(Error::precondition(format!(
            "family '{other}' has closed-form parameters only and cannot be constructed"
        ))),
    }
}

pub(crate) fn params1(k: &str, v: u64) -> Params {
    let mut m = BTreeMap::new();
    m.insert(k.to_string(), v);
    m
}

pub(crate) fn params2(k1: &str, v1: u64, k2: &str, v2: u64) -> Params {
    let mut m = params1(k1, v1);
    m.insert(k2.to_string(), v2);
    m
}
