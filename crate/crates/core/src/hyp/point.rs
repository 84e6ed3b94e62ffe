/// A point of the upper half-plane, y > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    pub fn new(x: f64, y: f64) -> Self {
        assert!(y > 0.0 && x.is_finite() && y.is_finite(), "point must satisfy y > 0");
        Self { x, y }
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Self { x: 0.0, y: 1.0 }
    }

    /// Euclidean modulus, used by frame maps onto the imaginary axis.
    pub(crate) fn abs(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

/// A boundary point of the half-plane: a real number or the point at
/// infinity. Infinity is a tagged value, never a large float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boundary {
    Finite(f64),
    Infinity,
}

impl Boundary {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Boundary::Infinity)
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Boundary::Finite(u) => Some(*u),
            Boundary::Infinity => None,
        }
    }

    /// Approximate equality of boundary points; infinity only equals itself.
    pub fn approx_eq(&self, other: &Boundary, eps: f64) -> bool {
        match (self, other) {
            (Boundary::Infinity, Boundary::Infinity) => true,
            (Boundary::Finite(u), Boundary::Finite(v)) => (u - v).abs() <= eps,
            _ => false,
        }
    }
}

/// Hyperbolic distance, cosh d = 1 + (Δx² + Δy²) / (2 y₁ y₂).
pub fn distance(p: HPoint, q: HPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let c = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    // roundoff can push the argument a hair under 1
    c.max(1.0).acosh()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Quadrature of ∫ |dz|/y along the straight segment from p to q. For
    /// points on a common vertical line this is the exact geodesic integral;
    /// it is the independent oracle for the distance formula.
    fn vertical_integral(p: HPoint, q: HPoint) -> f64 {
        assert_eq!(p.x, q.x);
        let n = 20_000;
        let mut acc = 0.0;
        for k in 0..n {
            let t0 = k as f64 / n as f64;
            let t1 = (k + 1) as f64 / n as f64;
            let y0 = p.y + t0 * (q.y - p.y);
            let y1 = p.y + t1 * (q.y - p.y);
            let ym = 0.5 * (y0 + y1);
            acc += (y1 - y0).abs() * (1.0 / y0 + 4.0 / ym + 1.0 / y1) / 6.0;
        }
        acc
    }

    #[test]
    fn distance_i_2i_is_ln2() {
        let d = distance(HPoint::i(), HPoint::new(0.0, 2.0));
        let oracle = vertical_integral(HPoint::i(), HPoint::new(0.0, 2.0));
        assert!((d - 2f64.ln()).abs() < 1e-12, "d = {d}");
        assert!((d - oracle).abs() < 1e-9, "quadrature oracle disagrees: {oracle}");
    }

    #[test]
    fn distance_symmetric_positive() {
        let p = HPoint::new(0.3, 0.7);
        let q = HPoint::new(-1.1, 2.4);
        assert_eq!(distance(p, q), distance(q, p));
        assert!(distance(p, q) > 0.0);
        assert_eq!(distance(p, p), 0.0);
    }
}
