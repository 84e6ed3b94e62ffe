use super::error::HypError;
use super::isometry::Isometry;
use super::point::{distance, Boundary, HPoint};
use super::Result;

/// An oriented geodesic line: ordered pair of distinct boundary points. The
/// orientation runs from `repelling` toward `attracting`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    pub repelling: Boundary,
    pub attracting: Boundary,
}

impl Geodesic {
    pub fn new(repelling: Boundary, attracting: Boundary) -> Self {
        debug_assert!(
            !repelling.approx_eq(&attracting, 0.0),
            "geodesic endpoints must be distinct"
        );
        Self { repelling, attracting }
    }

    /// The imaginary axis oriented from 0 toward ∞.
    pub fn imaginary_axis() -> Self {
        Self { repelling: Boundary::Finite(0.0), attracting: Boundary::Infinity }
    }

    /// Same line, opposite orientation.
    pub fn reversed(&self) -> Self {
        Self { repelling: self.attracting, attracting: self.repelling }
    }

    pub fn approx_eq_as_line(&self, other: &Geodesic, eps: f64) -> bool {
        (self.repelling.approx_eq(&other.repelling, eps)
            && self.attracting.approx_eq(&other.attracting, eps))
            || (self.repelling.approx_eq(&other.attracting, eps)
                && self.attracting.approx_eq(&other.repelling, eps))
    }
}

/// A determinant-1 Möbius map sending `g` to the imaginary axis with the
/// repelling endpoint at 0 and the attracting endpoint at ∞.
pub fn to_imaginary_axis(g: &Geodesic) -> Isometry {
    match (g.repelling, g.attracting) {
        (Boundary::Finite(u), Boundary::Infinity) => {
            Isometry::renormalized([[1.0, -u], [0.0, 1.0]], false)
        }
        (Boundary::Infinity, Boundary::Finite(v)) => {
            // z ↦ 1/(v − z): ∞ → 0, v → ∞
            Isometry::renormalized([[0.0, 1.0], [-1.0, v]], false)
        }
        (Boundary::Finite(u), Boundary::Finite(v)) => {
            // u → 0, v → ∞, with positive determinant
            if v > u {
                Isometry::renormalized([[1.0, -u], [-1.0, v]], false)
            } else {
                Isometry::renormalized([[-1.0, u], [1.0, -v]], false)
            }
        }
        (Boundary::Infinity, Boundary::Infinity) => unreachable!("endpoints must be distinct"),
    }
}

/// The oriented geodesic through two distinct interior points, oriented so
/// that traveling from `p` toward `q` heads to the attracting endpoint.
pub fn geodesic_through(p: HPoint, q: HPoint) -> Result<Geodesic> {
    if distance(p, q) < 1e-13 {
        return Err(HypError::DegenerateRay);
    }
    let dx = q.x - p.x;
    let scale = p.x.abs() + p.y.abs() + q.x.abs() + q.y.abs() + 1.0;
    if dx.abs() < 1e-14 * scale {
        // common vertical line x = p.x
        return Ok(if q.y > p.y {
            Geodesic::new(Boundary::Finite(p.x), Boundary::Infinity)
        } else {
            Geodesic::new(Boundary::Infinity, Boundary::Finite(p.x))
        });
    }
    // circle center c on the real axis with |p−c| = |q−c|
    let c = (q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y) / (2.0 * dx);
    let r = (p.x - c).hypot(p.y);
    // on the semicircle, x decreases as the parameter angle increases
    Ok(if q.x < p.x {
        Geodesic::new(Boundary::Finite(c + r), Boundary::Finite(c - r))
    } else {
        Geodesic::new(Boundary::Finite(c - r), Boundary::Finite(c + r))
    })
}

/// Orthogonal projection of `p` onto `g`.
pub fn foot(p: HPoint, g: &Geodesic) -> HPoint {
    let t = to_imaginary_axis(g);
    let z = t.apply(p);
    t.inverse().apply(HPoint::new(0.0, z.abs()))
}

/// Distance from a point to a geodesic line (0 when the point lies on it).
pub fn dist_to_geodesic(p: HPoint, g: &Geodesic) -> f64 {
    let z = to_imaginary_axis(g).apply(p);
    (z.x / z.y).abs().asinh()
}

/// Signed distance along `g` from `from` to `to`; positive when the
/// displacement points toward the attracting endpoint. Both points must lie
/// on `g` within `eps_on` (a distance threshold).
pub fn signed_distance_along(g: &Geodesic, from: HPoint, to: HPoint, eps_on: f64) -> Result<f64> {
    let t = to_imaginary_axis(g);
    let a = t.apply(from);
    let b = t.apply(to);
    if (a.x / a.y).abs() > eps_on || (b.x / b.y).abs() > eps_on {
        return Err(HypError::OffGeodesic);
    }
    Ok((b.y / a.y).ln())
}

/// Midpoint of the geodesic segment [p, q].
pub fn midpoint(p: HPoint, q: HPoint) -> Result<HPoint> {
    let g = geodesic_through(p, q)?;
    let t = to_imaginary_axis(&g);
    let a = t.apply(p);
    let b = t.apply(q);
    Ok(t.inverse().apply(HPoint::new(0.0, (a.abs() * b.abs()).sqrt())))
}

/// Intersection point of two geodesic lines, if they cross inside the plane.
pub fn geodesic_intersection(g1: &Geodesic, g2: &Geodesic) -> Option<HPoint> {
    let t = to_imaginary_axis(g1);
    let u = t.apply_boundary(g2.repelling).finite()?;
    let v = t.apply_boundary(g2.attracting).finite()?;
    if u * v >= 0.0 {
        return None;
    }
    Some(t.inverse().apply(HPoint::new(0.0, (-u * v).sqrt())))
}

/// Common perpendicular of two disjoint geodesics with no shared endpoint.
/// Returns the perpendicular line oriented from `g1` toward `g2`, the foot H
/// on `g1` and the foot H′ on `g2`.
pub fn common_perpendicular(g1: &Geodesic, g2: &Geodesic) -> Result<(Geodesic, HPoint, HPoint)> {
    let t = to_imaginary_axis(g1);
    let (u, v) = match (
        t.apply_boundary(g2.repelling),
        t.apply_boundary(g2.attracting),
    ) {
        (Boundary::Finite(u), Boundary::Finite(v)) => (u, v),
        // an endpoint at ∞ in this frame is shared with g1
        _ => return Err(HypError::NoPerpendicular),
    };
    if u * v <= 0.0 || u == 0.0 || v == 0.0 {
        // opposite signs: the lines cross; zero: shared endpoint
        return Err(HypError::NoPerpendicular);
    }
    let r = (u * v).sqrt();
    // the circle |z| = r is orthogonal to both the imaginary axis and g2
    let h = HPoint::new(0.0, r);
    let hx = 2.0 * u * v / (u + v);
    let hy2 = r * r - hx * hx;
    if hy2 <= 0.0 {
        return Err(HypError::NoPerpendicular);
    }
    let hp = HPoint::new(hx, hy2.sqrt());
    // orient the perpendicular from the g1 side toward the g2 side
    let perp = if hx > 0.0 {
        Geodesic::new(Boundary::Finite(-r), Boundary::Finite(r))
    } else {
        Geodesic::new(Boundary::Finite(r), Boundary::Finite(-r))
    };
    let ti = t.inverse();
    Ok((ti.apply_geodesic(&perp), ti.apply(h), ti.apply(hp)))
}

/// The perpendicular geodesic to `g` through a point `p` lying on `g`,
/// oriented arbitrarily.
pub fn perpendicular_at(g: &Geodesic, p: HPoint) -> Geodesic {
    let t = to_imaginary_axis(g);
    let h = t.apply(p).abs();
    let perp = Geodesic::new(Boundary::Finite(-h), Boundary::Finite(h));
    t.inverse().apply_geodesic(&perp)
}

/// Sign of the side of `g` on which `p` lies (+, −, or 0 on the line),
/// in the frame where `g` is the imaginary axis oriented upward.
pub fn side_of(g: &Geodesic, p: HPoint) -> f64 {
    let z = to_imaginary_axis(g).apply(p);
    if z.x == 0.0 {
        0.0
    } else {
        z.x.signum()
    }
}

/// Reflection of a point through the line `g` (cheaper than building the
/// reflecting isometry).
pub fn reflect_point(g: &Geodesic, p: HPoint) -> HPoint {
    let t = to_imaginary_axis(g);
    let z = t.apply(p);
    t.inverse().apply(HPoint::new(-z.x, z.y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_map_sends_endpoints_correctly() {
        let g = Geodesic::new(Boundary::Finite(-1.0), Boundary::Finite(3.0));
        let t = to_imaginary_axis(&g);
        assert!(t.apply_boundary(g.repelling).approx_eq(&Boundary::Finite(0.0), 1e-12));
        assert!(t.apply_boundary(g.attracting).is_infinity());
    }

    #[test]
    fn common_perpendicular_symmetric_semicircles() {
        let g1 = Geodesic::new(Boundary::Finite(-1.0), Boundary::Finite(1.0));
        let g2 = Geodesic::new(Boundary::Finite(-4.0), Boundary::Finite(4.0));
        let (perp, h, hp) = common_perpendicular(&g1, &g2).unwrap();
        assert!(perp.approx_eq_as_line(&Geodesic::imaginary_axis(), 1e-10));
        assert!(h.x.abs() < 1e-10 && (h.y - 1.0).abs() < 1e-10);
        assert!(hp.x.abs() < 1e-10 && (hp.y - 2.0).abs() < 1e-10);
    }

    #[test]
    fn crossing_or_shared_endpoint_has_no_perpendicular() {
        let g1 = Geodesic::imaginary_axis();
        let crossing = Geodesic::new(Boundary::Finite(-1.0), Boundary::Finite(2.0));
        assert_eq!(common_perpendicular(&g1, &crossing), Err(HypError::NoPerpendicular));
        let shared = Geodesic::new(Boundary::Finite(0.0), Boundary::Finite(2.0));
        assert_eq!(common_perpendicular(&g1, &shared), Err(HypError::NoPerpendicular));
    }

    #[test]
    fn foot_on_imaginary_axis() {
        let f = foot(HPoint::new(1.0, 1.0), &Geodesic::imaginary_axis());
        assert!(f.x.abs() < 1e-12);
        assert!((f.y - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn signed_distance_antisymmetric_ln2() {
        let g = Geodesic::imaginary_axis();
        let i = HPoint::i();
        let j = HPoint::new(0.0, 2.0);
        let d = signed_distance_along(&g, i, j, 1e-8).unwrap();
        assert!((d - 2f64.ln()).abs() < 1e-12);
        let back = signed_distance_along(&g, j, i, 1e-8).unwrap();
        assert!((back + 2f64.ln()).abs() < 1e-12);
        assert_eq!(signed_distance_along(&g, i, i, 1e-8).unwrap(), 0.0);
        assert_eq!(
            signed_distance_along(&g, HPoint::new(0.5, 1.0), i, 1e-8),
            Err(HypError::OffGeodesic)
        );
    }

    #[test]
    fn geodesic_through_orients_toward_second_point() {
        let p = HPoint::new(-1.0, 1.0);
        let q = HPoint::new(1.0, 1.0);
        let g = geodesic_through(p, q).unwrap();
        // traveling from p to q increases x, so the attracting endpoint is right
        let (u, v) = (g.repelling.finite().unwrap(), g.attracting.finite().unwrap());
        assert!(v > u);
        let d = signed_distance_along(&g, p, q, 1e-8).unwrap();
        assert!(d > 0.0);
        assert!((d - distance(p, q)).abs() < 1e-12);
    }

    #[test]
    fn midpoint_is_equidistant() {
        let p = HPoint::new(-0.3, 0.8);
        let q = HPoint::new(1.7, 2.1);
        let m = midpoint(p, q).unwrap();
        assert!((distance(p, m) - distance(q, m)).abs() < 1e-12);
        assert!((distance(p, m) + distance(m, q) - distance(p, q)).abs() < 1e-12);
    }

    #[test]
    fn intersection_of_crossing_lines() {
        let g1 = Geodesic::imaginary_axis();
        let g2 = Geodesic::new(Boundary::Finite(-2.0), Boundary::Finite(2.0));
        let p = geodesic_intersection(&g1, &g2).unwrap();
        assert!(p.x.abs() < 1e-12 && (p.y - 2.0).abs() < 1e-12);
        let g3 = Geodesic::new(Boundary::Finite(1.0), Boundary::Finite(2.0));
        assert!(geodesic_intersection(&g1, &g3).is_none());
    }
}
