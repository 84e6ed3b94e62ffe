use super::error::HypError;
use super::geodesic::{geodesic_through, to_imaginary_axis, Geodesic};
use super::isometry::{compose, exp_y, mover_to, Isometry};
use super::point::{distance, Boundary, HPoint};
use super::Result;
use std::f64::consts::{FRAC_PI_2, PI};

/// Reduce an angle to [0, 2π).
pub(crate) fn mod_two_pi(a: f64) -> f64 {
    let mut a = a % (2.0 * PI);
    if a < 0.0 {
        a += 2.0 * PI;
    }
    // -0.0 and values rounded up to 2π both collapse to 0
    if a >= 2.0 * PI {
        a = 0.0;
    }
    a
}

/// Tangent direction (as an angle in the conformal tangent plane) at
/// `vertex` of the geodesic ray toward `target`.
pub fn tangent_toward(vertex: HPoint, target: HPoint) -> Result<f64> {
    if distance(vertex, target) < 1e-13 {
        return Err(HypError::DegenerateRay);
    }
    let g = geodesic_through(vertex, target)?;
    Ok(direction_along(&g, vertex))
}

/// Tangent direction at `vertex` of the geodesic ray toward a boundary point.
pub fn tangent_toward_boundary(vertex: HPoint, target: Boundary) -> Result<f64> {
    match target {
        Boundary::Infinity => Ok(FRAC_PI_2),
        Boundary::Finite(u) => {
            let dx = u - vertex.x;
            let scale = vertex.x.abs() + vertex.y.abs() + u.abs() + 1.0;
            if dx.abs() < 1e-14 * scale {
                return Ok(-FRAC_PI_2);
            }
            // circle through `vertex` with foot u: equate distances to the center
            let c = (u * u - vertex.x * vertex.x - vertex.y * vertex.y) / (2.0 * dx);
            Ok(if u < vertex.x {
                (vertex.x - c).atan2(-vertex.y)
            } else {
                (c - vertex.x).atan2(vertex.y)
            })
        }
    }
}

/// Tangent direction at a point `p` on `g`, pointing toward the attracting
/// endpoint.
pub fn direction_along(g: &Geodesic, p: HPoint) -> f64 {
    match (g.repelling, g.attracting) {
        (_, Boundary::Infinity) => FRAC_PI_2,
        (Boundary::Infinity, _) => -FRAC_PI_2,
        (Boundary::Finite(u), Boundary::Finite(v)) => {
            let c = 0.5 * (u + v);
            // velocity of the circle parametrization, oriented by x-monotonicity
            if v < u {
                (p.x - c).atan2(-p.y)
            } else {
                (c - p.x).atan2(p.y)
            }
        }
    }
}

/// Anticlockwise angle in [0, 2π) at `vertex` from the ray toward `ray1_to`
/// to the ray toward `ray2_to`, measured in the oriented tangent plane.
pub fn oriented_angle(vertex: HPoint, ray1_to: HPoint, ray2_to: HPoint) -> Result<f64> {
    let a1 = tangent_toward(vertex, ray1_to)?;
    let a2 = tangent_toward(vertex, ray2_to)?;
    Ok(mod_two_pi(a2 - a1))
}

/// The point at hyperbolic distance `dist` from `p` in tangent direction
/// `dir` (an angle; π/2 is "straight up" at any point over the frame map).
pub fn point_at(p: HPoint, dir: f64, dist: f64) -> HPoint {
    frame_at(p, dir).apply(HPoint::new(0.0, dist.exp()))
}

/// Geodesic walk: returns the endpoint together with the forward direction
/// there (the direction in which the same geodesic continues).
pub fn walk(p: HPoint, dir: f64, dist: f64) -> (HPoint, f64) {
    let f = frame_at(p, dir);
    let z = HPoint::new(0.0, dist.exp());
    (f.apply(z), f.tangent_angle(z, FRAC_PI_2))
}

/// An isometry taking i to `p` and the "up" direction at i to `dir` at `p`.
fn frame_at(p: HPoint, dir: f64) -> Isometry {
    // exp_y(t) rotates tangent directions at i clockwise by t
    compose(&mover_to(p), &exp_y(FRAC_PI_2 - dir))
}

/// Unoriented angle between two rays, in [0, π].
pub fn ray_angle(vertex: HPoint, ray1_to: HPoint, ray2_to: HPoint) -> Result<f64> {
    let a = oriented_angle(vertex, ray1_to, ray2_to)?;
    Ok(if a > PI { 2.0 * PI - a } else { a })
}
