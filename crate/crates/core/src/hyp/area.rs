use super::angles::{mod_two_pi, oriented_angle, tangent_toward, tangent_toward_boundary};
use super::error::HypError;
use super::point::{distance, Boundary, HPoint};
use super::Result;
use std::f64::consts::PI;

/// A polygon vertex: interior point or ideal (boundary) vertex. Ideal
/// vertices contribute zero interior angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyVertex {
    In(HPoint),
    Ideal(Boundary),
}

fn tangent_toward_vertex(v: HPoint, target: &PolyVertex) -> Result<f64> {
    match target {
        PolyVertex::In(p) => tangent_toward(v, *p),
        PolyVertex::Ideal(b) => tangent_toward_boundary(v, *b),
    }
}

fn vertices_coincide(a: &PolyVertex, b: &PolyVertex) -> bool {
    match (a, b) {
        (PolyVertex::In(p), PolyVertex::In(q)) => distance(*p, *q) < 1e-13,
        (PolyVertex::Ideal(u), PolyVertex::Ideal(v)) => u.approx_eq(v, 1e-13),
        _ => false,
    }
}

/// Signed area of a geodesic triangle by angle deficit: magnitude
/// π − α − β − γ, positive when the vertices are anti-clockwise oriented.
/// At least one vertex must be interior.
fn triangle_area(a: &PolyVertex, b: &PolyVertex, c: &PolyVertex) -> Result<f64> {
    if vertices_coincide(a, b) || vertices_coincide(b, c) || vertices_coincide(a, c) {
        return Ok(0.0);
    }
    let verts = [a, b, c];
    // oriented angle at each interior vertex from the ray toward the next
    // vertex to the ray toward the previous one
    let mut oriented = [0.0f64; 3];
    let mut has_interior = false;
    let mut orientation_ref = None;
    for k in 0..3 {
        if let PolyVertex::In(v) = verts[k] {
            let t1 = tangent_toward_vertex(*v, verts[(k + 1) % 3])?;
            let t2 = tangent_toward_vertex(*v, verts[(k + 2) % 3])?;
            oriented[k] = mod_two_pi(t2 - t1);
            has_interior = true;
            if orientation_ref.is_none() {
                orientation_ref = Some(oriented[k]);
            }
        }
    }
    debug_assert!(has_interior, "triangle with three ideal vertices is unsupported");
    let anticlockwise = orientation_ref.unwrap_or(0.0) < PI;
    let mut angle_sum = 0.0;
    for k in 0..3 {
        if matches!(verts[k], PolyVertex::In(_)) {
            let theta = oriented[k];
            angle_sum += if anticlockwise { theta } else { 2.0 * PI - theta };
        }
    }
    let area = PI - angle_sum;
    Ok(if anticlockwise { area } else { -area })
}

/// Signed area of a geodesic polygon with possibly-ideal vertices, by fan
/// triangulation from the first vertex (which must be interior when any
/// ideal vertex is present).
pub fn signed_area_mixed(vertices: &[PolyVertex]) -> Result<f64> {
    if vertices.len() < 3 {
        return Err(HypError::TooFewVertices(vertices.len()));
    }
    let mut acc = 0.0;
    for i in 1..vertices.len() - 1 {
        acc += triangle_area(&vertices[0], &vertices[i], &vertices[i + 1])?;
    }
    Ok(acc)
}

/// Signed area of a geodesic polygon: fan triangulation from vertex 0; each
/// triangle contributes ±(π − α − β − γ), signed by vertex orientation.
/// Additive and orientation-reversing under vertex-order reversal.
pub fn signed_area(vertices: &[HPoint]) -> Result<f64> {
    let v: Vec<PolyVertex> = vertices.iter().map(|p| PolyVertex::In(*p)).collect();
    signed_area_mixed(&v)
}

/// Interior angles of a simple geodesic polygon, using the polygon
/// orientation determined by its signed area.
pub fn interior_angles(vertices: &[HPoint]) -> Result<Vec<f64>> {
    if vertices.len() < 3 {
        return Err(HypError::TooFewVertices(vertices.len()));
    }
    let n = vertices.len();
    let anticlockwise = signed_area(vertices)? >= 0.0;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let v = vertices[k];
        let next = vertices[(k + 1) % n];
        let prev = vertices[(k + n - 1) % n];
        let theta = oriented_angle(v, next, prev)?;
        out.push(if anticlockwise { theta } else { mod_two_pi(-theta) });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::geodesic::geodesic_through;
    use super::super::to_imaginary_axis;
    use super::*;

    /// Green's-theorem oracle: signed hyperbolic area = ∮ dx/y over the
    /// boundary traversed in vertex order, each side being a geodesic arc.
    fn green_area_oracle(vertices: &[HPoint]) -> f64 {
        let n = vertices.len();
        let mut acc = 0.0;
        for k in 0..n {
            let p = vertices[k];
            let q = vertices[(k + 1) % n];
            if distance(p, q) < 1e-13 {
                continue;
            }
            let g = geodesic_through(p, q).unwrap();
            let t = to_imaginary_axis(&g);
            let ti = t.inverse();
            let a = t.apply(p).y.ln();
            let b = t.apply(q).y.ln();
            let steps = 4000;
            // integrate dx/y along the arc, parametrized by arclength
            let mut side = 0.0;
            let mut prev = ti.apply(HPoint::new(0.0, a.exp()));
            for s in 1..=steps {
                let u = a + (b - a) * s as f64 / steps as f64;
                let cur = ti.apply(HPoint::new(0.0, u.exp()));
                let ym = 0.5 * (prev.y + cur.y);
                side += (cur.x - prev.x) / ym;
                prev = cur;
            }
            acc += side;
        }
        acc
    }

    #[test]
    fn triangle_orientation_flip_negates() {
        let a = HPoint::new(0.0, 1.0);
        let b = HPoint::new(1.0, 1.2);
        let c = HPoint::new(0.4, 2.0);
        let fwd = signed_area(&[a, b, c]).unwrap();
        let bwd = signed_area(&[c, b, a]).unwrap();
        assert!((fwd + bwd).abs() < 1e-12);
        assert!(fwd.abs() > 1e-3);
    }

    #[test]
    fn triangle_matches_green_oracle() {
        let a = HPoint::new(-0.5, 0.8);
        let b = HPoint::new(1.3, 1.1);
        let c = HPoint::new(0.2, 2.4);
        let ours = signed_area(&[a, b, c]).unwrap();
        let oracle = green_area_oracle(&[a, b, c]);
        assert!((ours - oracle).abs() < 1e-6, "ours {ours} oracle {oracle}");
    }

    #[test]
    fn nonconvex_quad_matches_green_oracle() {
        let a = HPoint::new(-1.0, 1.0);
        let b = HPoint::new(1.0, 1.0);
        let c = HPoint::new(0.0, 3.0);
        let d = HPoint::new(0.0, 1.4); // reflex-ish dent
        let ours = signed_area(&[a, b, c, d]).unwrap();
        let oracle = green_area_oracle(&[a, b, c, d]);
        assert!((ours - oracle).abs() < 1e-6, "ours {ours} oracle {oracle}");
    }

    #[test]
    fn too_few_vertices_rejected() {
        assert!(matches!(
            signed_area(&[HPoint::i(), HPoint::new(0.0, 2.0)]),
            Err(HypError::TooFewVertices(2))
        ));
    }
}
