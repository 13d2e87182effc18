//! The projective families: the incidence graph PN(q), its point/line
//! identified quotient demi-PN(q), and the two-level orthogonal fat tree
//! OFT(q).
//!
//! Vertex ids are lexicographic over (column tag, canonical point), so the
//! exported edge lists are identical across runs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::projective::{dot, plane_points, subplane_partition, ProjectivePoint};
use crate::topology::{params1, Family, GraphBuilder, Predicted, Role, Topology};

fn plane(q: u64) -> Result<(FieldSpec, Vec<ProjectivePoint>)> {
    let field = FieldSpec::create_order(q)
        .map_err(|_| Error::precondition(format!("q must be a prime power, got {q}")))?;
    let points = plane_points(&field);
    Ok((field, points))
}

fn point_label(field: &FieldSpec, p: &ProjectivePoint) -> String {
    let [a, b, c] = p.coords();
    format!(
        "({},{},{})",
        field.render(a),
        field.render(b),
        field.render(c)
    )
}

/// Subplane index per plane point when q is a square small enough for the
/// Singer construction; None otherwise.
fn subplane_index(field: &FieldSpec, points: &[ProjectivePoint]) -> Option<Vec<u32>> {
    let groups = subplane_partition(field).ok()?;
    let mut index: BTreeMap<ProjectivePoint, u32> = BTreeMap::new();
    for (g, members) in groups.iter().enumerate() {
        for p in members {
            index.insert(*p, g as u32);
        }
    }
    Some(points.iter().map(|p| index[p]).collect())
}

/// For each line (dual point), the subplane the line is "rich" for: the
/// unique group containing s+1 of its points (every other group contributes
/// exactly one point).
fn line_richness(field: &FieldSpec, points: &[ProjectivePoint], point_group: &[u32]) -> Vec<u32> {
    let groups = point_group.iter().copied().max().unwrap() as usize + 1;
    points
        .iter()
        .map(|line| {
            let mut counts = vec![0u32; groups];
            for (i, p) in points.iter().enumerate() {
                if dot(field, p, line) == field.zero() {
                    counts[point_group[i] as usize] += 1;
                }
            }
            let (best, _) = counts
                .iter()
                .enumerate()
                .max_by_key(|(_, &c)| c)
                .expect("at least one group");
            best as u32
        })
        .collect()
}

/// Incidence graph of P2(F_q): bipartite point/line columns, edge iff
/// orthogonal, (q+1)-regular on 2(q^2+q+1) vertices.
pub fn build_pn(q: u64) -> Result<Topology> {
    let (field, points) = plane(q)?;
    let np = points.len();
    let mut b = GraphBuilder::new(2 * np);
    for (i, p) in points.iter().enumerate() {
        b.label(i, format!("p:{}", point_label(&field, p)));
        b.label(np + i, format!("l:{}", point_label(&field, p)));
    }
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if dot(&field, p, l) == field.zero() {
                b.edge(i, np + j);
            }
        }
    }
    if let Some(point_group) = subplane_index(&field, &points) {
        let line_group = line_richness(&field, &points, &point_group);
        let mut clusters = Vec::with_capacity(2 * np);
        clusters.extend(point_group.iter().copied());
        clusters.extend(line_group.iter().copied());
        b.clusters(clusters);
    }
    let predicted = Predicted::regular(2 * np, (q + 1) as usize);
    b.finish(Family::Pn, params1("q", q), predicted)
}

/// Modified incidence graph (Brown graph): vertices are the plane points,
/// edges join orthogonal distinct points. The q+1 self-orthogonal points have
/// degree q, the rest q+1.
pub fn build_demi_pn(q: u64) -> Result<Topology> {
    let (field, points) = plane(q)?;
    let np = points.len();
    let mut b = GraphBuilder::new(np);
    for (i, p) in points.iter().enumerate() {
        b.label(i, point_label(&field, p));
    }
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate().skip(i + 1) {
            if dot(&field, p, l) == field.zero() {
                b.edge(i, j);
            }
        }
    }
    if let Some(point_group) = subplane_index(&field, &points) {
        b.clusters(point_group);
    }
    let mut degree_counts = BTreeMap::new();
    degree_counts.insert(q as usize, (q + 1) as usize);
    degree_counts.insert((q + 1) as usize, (np as u64 - (q + 1)) as usize);
    let predicted = Predicted {
        n: np,
        degree_counts,
    };
    b.finish(Family::DemiPn, params1("q", q), predicted)
}

/// Two-level orthogonal fat tree: three point columns, middle column spines.
/// Edges {(0,P),(1,L)} and {(1,P),(2,L)} whenever P is orthogonal to L.
pub fn build_oft(q: u64) -> Result<Topology> {
    let (field, points) = plane(q)?;
    let np = points.len();
    let mut b = GraphBuilder::new(3 * np);
    for (i, p) in points.iter().enumerate() {
        for col in 0..3usize {
            b.label(col * np + i, format!("{col}:{}", point_label(&field, p)));
        }
        b.role(np + i, Role::Spine);
    }
    for (i, p) in points.iter().enumerate() {
        for (j, l) in points.iter().enumerate() {
            if dot(&field, p, l) == field.zero() {
                b.edge(i, np + j); // (0,P) -- (1,L)
                b.edge(np + i, 2 * np + j); // (1,P) -- (2,L)
            }
        }
    }
    let mut degree_counts = BTreeMap::new();
    degree_counts.insert((q + 1) as usize, 2 * np);
    degree_counts.insert((2 * (q + 1)) as usize, np);
    let predicted = Predicted {
        n: 3 * np,
        degree_counts,
    };
    b.finish(Family::Oft, params1("q", q), predicted)
}
