//! Points of the projective plane P2(F_q): canonical representatives,
//! orthogonality, cross products, and the partition of P2(F_{s^2}) into
//! subplanes of order s.
//!
//! Lines are not a separate type. Every line is represented by its dual
//! point: the point P lies on the line with dual point L exactly when the
//! scalar product of their coordinate triples vanishes.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A point of P2(F_q) in canonical form: exactly one of (1,x,y), (0,1,x),
/// (0,0,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [FieldElement; 3],
}

impl ProjectivePoint {
    pub fn coords(&self) -> [FieldElement; 3] {
        self.coords
    }
}

/// Scale a nonzero coordinate triple so its leftmost nonzero entry becomes 1.
/// Idempotent on canonical points. Errors on the zero vector.
pub fn canonicalize(field: &FieldSpec, v: [FieldElement; 3]) -> Result<ProjectivePoint> {
    let zero = field.zero();
    let lead = v
        .iter()
        .position(|&c| c != zero)
        .ok_or_else(|| Error::precondition("cannot canonicalize the zero vector"))?;
    let scale = field.inv(v[lead])?;
    let coords = [
        field.mul(v[0], scale),
        field.mul(v[1], scale),
        field.mul(v[2], scale),
    ];
    Ok(ProjectivePoint { coords })
}

/// All q^2+q+1 points of P2(F_q), sorted by coordinate encoding. The order is
/// (0,0,1), then the (0,1,x) block, then the (1,x,y) block.
pub fn plane_points(field: &FieldSpec) -> Vec<ProjectivePoint> {
    let zero = field.zero();
    let one = field.one();
    let mut pts = Vec::with_capacity((field.order() * field.order() + field.order() + 1) as usize);
    pts.push(ProjectivePoint {
        coords: [zero, zero, one],
    });
    for x in field.elements() {
        pts.push(ProjectivePoint {
            coords: [zero, one, x],
        });
    }
    for x in field.elements() {
        for y in field.elements() {
            pts.push(ProjectivePoint {
                coords: [one, x, y],
            });
        }
    }
    pts.sort_unstable();
    pts
}

/// Scalar product of the coordinate triples. Zero means incidence between a
/// point and the line represented by the other argument.
pub fn dot(field: &FieldSpec, a: &ProjectivePoint, b: &ProjectivePoint) -> FieldElement {
    let mut acc = field.zero();
    for i in 0..3 {
        acc = field.add(acc, field.mul(a.coords[i], b.coords[i]));
    }
    acc
}

/// Canonicalized vector cross product. The result is orthogonal to both
/// inputs; it is the unique common neighbour in the orthogonality graph.
/// Errors when the inputs are projectively equal.
pub fn cross(field: &FieldSpec, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<ProjectivePoint> {
    let [a0, a1, a2] = a.coords;
    let [b0, b1, b2] = b.coords;
    let c = [
        field.sub(field.mul(a1, b2), field.mul(a2, b1)),
        field.sub(field.mul(a2, b0), field.mul(a0, b2)),
        field.sub(field.mul(a0, b1), field.mul(a1, b0)),
    ];
    canonicalize(field, c).map_err(|_| Error::precondition("cross product of projectively equal points"))
}

/// The q+1 points X with X orthogonal to itself.
pub fn self_orthogonal_points(field: &FieldSpec) -> Vec<ProjectivePoint> {
    plane_points(field)
        .into_iter()
        .filter(|p| dot(field, p, p) == field.zero())
        .collect()
}

/// Points on the line whose dual point is `line`.
pub fn line_points(field: &FieldSpec, line: &ProjectivePoint) -> Vec<ProjectivePoint> {
    plane_points(field)
        .into_iter()
        .filter(|p| dot(field, p, line) == field.zero())
        .collect()
}

/// Partition P2(F_q), q = s^2, into s^2-s+1 subplanes of order s with
/// s^2+s+1 points each.
///
/// The partition is the classical one by Singer orbits: realize the plane as
/// GF(q^3)*/GF(q)*, index points by discrete log modulo q^2+q+1 with respect
/// to a primitive element of GF(q^3), and group indices by residue modulo
/// s^2-s+1. The orbits of that subgroup of the Singer cycle are subplanes of
/// order s.
pub fn subplane_partition(field: &FieldSpec) -> Result<Vec<Vec<ProjectivePoint>>> {
    if field.degree() % 2 != 0 {
        return Err(Error::precondition(format!(
            "q = {} is not the square of a prime power",
            field.order()
        )));
    }
    let q = field.order();
    let s = {
        let mut s = 1u64;
        for _ in 0..(field.degree() / 2) {
            s *= field.characteristic();
        }
        s
    };
    let cubic = FieldSpec::create(field.characteristic(), field.degree() * 3).map_err(|_| {
        Error::precondition(format!(
            "subplane partition needs GF(q^3); q = {q} is too large for the field size cap"
        ))
    })?;

    // Embed F_q into GF(q^3) by sending the generator of F_q to a root of its
    // modulus; take the first root in enumeration order.
    let root = cubic
        .elements()
        .find(|&e| {
            // Horner evaluation of the F_q modulus at e, inside GF(q^3).
            let mut acc = cubic.zero();
            for &c in field.modulus().iter().rev() {
                acc = cubic.add(cubic.mul(acc, e), cubic.element(c));
            }
            acc == cubic.zero()
        })
        .expect("the modulus of F_q splits in GF(q^3)");
    let embed = |e: FieldElement| -> FieldElement {
        let mut acc = cubic.zero();
        for &c in field.coeffs(e).iter().rev() {
            acc = cubic.add(cubic.mul(acc, root), cubic.element(c));
        }
        acc
    };

    // {1, t, t^2} is an F_q-basis of GF(q^3) for the polynomial generator t.
    let t = cubic.element(cubic.characteristic());
    let t2 = cubic.mul(t, t);

    let n_points = q * q + q + 1;
    let group_count = s * s - s + 1;
    let mut groups: Vec<Vec<ProjectivePoint>> = vec![Vec::new(); group_count as usize];
    for point in plane_points(field) {
        let [a, b, c] = point.coords();
        let w = cubic.add(
            cubic.add(embed(a), cubic.mul(embed(b), t)),
            cubic.mul(embed(c), t2),
        );
        let singer_index = cubic.dlog(w)? % n_points;
        groups[(singer_index % group_count) as usize].push(point);
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    let expected = (s * s + s + 1) as usize;
    for (i, g) in groups.iter().enumerate() {
        if g.len() != expected {
            return Err(Error::invariant(format!(
                "subplane group {i} has {} points, expected {expected}",
                g.len()
            )));
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::create_order(q).unwrap()
    }

    fn pt(field: &FieldSpec, a: u64, b: u64, c: u64) -> ProjectivePoint {
        canonicalize(field, [field.element(a), field.element(b), field.element(c)]).unwrap()
    }

    #[test]
    fn plane_sizes() {
        assert_eq!(plane_points(&f(2)).len(), 7); // Fano plane
        assert_eq!(plane_points(&f(3)).len(), 13);
        assert_eq!(plane_points(&f(4)).len(), 21);
    }

    #[test]
    fn canonicalize_examples() {
        let f5 = f(5);
        assert_eq!(pt(&f5, 2, 4, 1), pt(&f5, 1, 2, 3));
        let f2 = f(2);
        assert_eq!(pt(&f2, 0, 1, 1).coords().map(|e| e.value()), [0, 1, 1]);
        let f4 = f(4);
        let x = f4.element(2); // the polynomial generator of GF(4)
        let p = canonicalize(&f4, [x, f4.zero(), x]).unwrap();
        assert_eq!(p.coords().map(|e| e.value()), [1, 0, 1]);
        // Idempotent.
        let again = canonicalize(&f4, p.coords()).unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn canonicalize_rejects_zero() {
        let f2 = f(2);
        assert!(canonicalize(&f2, [f2.zero(), f2.zero(), f2.zero()]).is_err());
    }

    #[test]
    fn dot_examples() {
        let f2 = f(2);
        assert_eq!(dot(&f2, &pt(&f2, 1, 0, 0), &pt(&f2, 0, 0, 1)), f2.zero());
        assert_eq!(dot(&f2, &pt(&f2, 1, 1, 1), &pt(&f2, 1, 1, 1)), f2.one());
        let f3 = f(3);
        assert_eq!(dot(&f3, &pt(&f3, 1, 1, 1), &pt(&f3, 1, 2, 0)), f3.zero());
    }

    #[test]
    fn cross_examples() {
        let f2 = f(2);
        assert_eq!(cross(&f2, &pt(&f2, 1, 0, 0), &pt(&f2, 0, 1, 0)).unwrap(), pt(&f2, 0, 0, 1));
        assert_eq!(cross(&f2, &pt(&f2, 1, 1, 0), &pt(&f2, 0, 1, 1)).unwrap(), pt(&f2, 1, 1, 1));
        assert!(cross(&f2, &pt(&f2, 1, 1, 0), &pt(&f2, 1, 1, 0)).is_err());
    }

    #[test]
    fn cross_is_orthogonal_to_both() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            let fq = f(q);
            let pts = plane_points(&fq);
            for a in &pts {
                for b in &pts {
                    if a == b {
                        continue;
                    }
                    let c = cross(&fq, a, b).unwrap();
                    assert_eq!(dot(&fq, &c, a), fq.zero());
                    assert_eq!(dot(&fq, &c, b), fq.zero());
                }
            }
        }
    }

    #[test]
    fn self_orthogonal_counts() {
        let f2 = f(2);
        let so: Vec<_> = self_orthogonal_points(&f2)
            .iter()
            .map(|p| p.coords().map(|e| e.value()))
            .collect();
        assert_eq!(so, vec![[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        for q in [2u64, 3, 5, 7, 8, 9, 11, 13, 16] {
            assert_eq!(self_orthogonal_points(&f(q)).len() as u64, q + 1, "q = {q}");
        }
    }

    /// For any two distinct points there is a unique Z orthogonal to both,
    /// and every point has exactly q+1 orthogonal points.
    #[test]
    fn orthogonality_structure() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let fq = f(q);
            let pts = plane_points(&fq);
            for a in &pts {
                let orth = pts.iter().filter(|p| dot(&fq, a, p) == fq.zero()).count() as u64;
                assert_eq!(orth, q + 1, "q = {q}");
                for b in &pts {
                    if a == b {
                        continue;
                    }
                    let common = pts
                        .iter()
                        .filter(|z| dot(&fq, a, z) == fq.zero() && dot(&fq, b, z) == fq.zero())
                        .count();
                    assert_eq!(common, 1, "q = {q}");
                }
            }
        }
    }

    #[test]
    fn subplane_partition_sizes() {
        // q = 4: 3 groups of 7; q = 9: 7 groups of 13; q = 16: 13 groups of 21.
        for (q, s) in [(4u64, 2u64), (9, 3), (16, 4)] {
            let fq = f(q);
            let groups = subplane_partition(&fq).unwrap();
            assert_eq!(groups.len() as u64, s * s - s + 1);
            let mut all = std::collections::BTreeSet::new();
            for g in &groups {
                assert_eq!(g.len() as u64, s * s + s + 1);
                for p in g {
                    assert!(all.insert(*p), "groups overlap");
                }
            }
            assert_eq!(all.len() as u64, q * q + q + 1);
        }
    }

    /// Each group is a genuine subplane of order s: the line through any two
    /// group members meets the group in exactly s+1 points.
    #[test]
    fn subplane_partition_closure() {
        for (q, s) in [(4u64, 2u64), (9, 3)] {
            let fq = f(q);
            let groups = subplane_partition(&fq).unwrap();
            for g in &groups {
                for i in 0..g.len() {
                    for j in (i + 1)..g.len() {
                        let line = cross(&fq, &g[i], &g[j]).unwrap();
                        let on_line = g.iter().filter(|p| dot(&fq, p, &line) == fq.zero()).count() as u64;
                        assert_eq!(on_line, s + 1, "q = {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn subplane_partition_rejects_non_squares() {
        assert!(subplane_partition(&f(8)).is_err());
    }
}
