use super::error::HypError;
use super::geodesic::{to_imaginary_axis, Geodesic};
use super::point::{Boundary, HPoint};
use super::Result;
use crate::tol::Tolerance;

/// An isometry of the upper half-plane.
///
/// The matrix `m` always has determinant 1 and acts by the Möbius map
/// z ↦ (az+b)/(cz+d). When `reversing` is set the reflection z ↦ −z̄ is
/// applied first, so the element is orientation-reversing. The stored
/// matrix is sign-normalized: the first nonzero entry of (m₁₁, m₁₂, m₂₁)
/// in row-major order is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    m: [[f64; 2]; 2],
    reversing: bool,
}

/// Conjugacy type of a non-reversing isometry.
#[derive(Debug, Clone, PartialEq)]
pub enum IsometryClass {
    Identity,
    /// `clockwise_angle` lies in (0, 2π).
    Elliptic { center: HPoint, clockwise_angle: f64 },
    Parabolic { fixed: Boundary },
    /// Axis oriented with the attracting endpoint second; length > 0.
    Hyperbolic { axis: Geodesic, length: f64 },
}

fn mat_mul(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn mat_det(m: &[[f64; 2]; 2]) -> f64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// Sign-normalize: first nonzero of (m₁₁, m₁₂, m₂₁) made positive.
fn sign_normalize(mut m: [[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let lead = if m[0][0] != 0.0 {
        m[0][0]
    } else if m[0][1] != 0.0 {
        m[0][1]
    } else {
        m[1][0]
    };
    if lead < 0.0 {
        for r in &mut m {
            for e in r {
                *e = -*e;
            }
        }
    }
    m
}

/// Distance between PSL representatives: entrywise, minimized over the
/// global sign.
pub(crate) fn psl_dist(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> f64 {
    let mut dp: f64 = 0.0;
    let mut dm: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            dp = dp.max((a[i][j] - b[i][j]).abs());
            dm = dm.max((a[i][j] + b[i][j]).abs());
        }
    }
    dp.min(dm)
}

impl Isometry {
    /// Builds an isometry from a matrix with determinant 1 within `det_tol`.
    /// The matrix is rescaled to determinant exactly 1 and sign-normalized.
    pub fn from_matrix(m: [[f64; 2]; 2], reversing: bool, det_tol: f64) -> Result<Self> {
        let d = mat_det(&m);
        if !d.is_finite() || (d - 1.0).abs() > det_tol {
            return Err(HypError::BadDeterminant(d));
        }
        Ok(Self::renormalized(m, reversing))
    }

    /// Internal constructor: rescales to determinant 1 (the determinant is
    /// assumed positive) and sign-normalizes.
    pub(crate) fn renormalized(m: [[f64; 2]; 2], reversing: bool) -> Self {
        let s = 1.0 / mat_det(&m).sqrt();
        let m = sign_normalize([
            [m[0][0] * s, m[0][1] * s],
            [m[1][0] * s, m[1][1] * s],
        ]);
        Self { m, reversing }
    }

    pub fn identity() -> Self {
        Self { m: [[1.0, 0.0], [0.0, 1.0]], reversing: false }
    }

    /// The reflection z ↦ −z̄ through the imaginary axis.
    pub fn conjugation_flip() -> Self {
        Self { m: [[1.0, 0.0], [0.0, 1.0]], reversing: true }
    }

    pub fn matrix(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn is_reversing(&self) -> bool {
        self.reversing
    }

    /// Trace of the stored determinant-1 representative. Only |trace| is
    /// meaningful in PSL; products of specific representatives are needed for
    /// commutator traces, which [`crate::torus::commutator_trace`] handles.
    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        let inv = [[d, -b], [-c, a]];
        if self.reversing {
            // (m ∘ ν)⁻¹ = ν ∘ m⁻¹ = (D m⁻¹ D) ∘ ν with D = diag(1, −1)
            Self::renormalized(conj_by_d(&inv), true)
        } else {
            Self::renormalized(inv, false)
        }
    }

    /// Image of an interior point.
    pub fn apply(&self, p: HPoint) -> HPoint {
        let (x, y) = if self.reversing { (-p.x, p.y) } else { (p.x, p.y) };
        let [[a, b], [c, d]] = self.m;
        let nx = a * x + b;
        let ny = a * y;
        let dx = c * x + d;
        let dy = c * y;
        let q = dx * dx + dy * dy;
        HPoint::new((nx * dx + ny * dy) / q, y / q)
    }

    /// Image of a boundary point.
    pub fn apply_boundary(&self, b: Boundary) -> Boundary {
        let [[ma, mb], [mc, md]] = self.m;
        let b = match (self.reversing, b) {
            (true, Boundary::Finite(u)) => Boundary::Finite(-u),
            (_, other) => other,
        };
        match b {
            Boundary::Infinity => {
                if mc == 0.0 {
                    Boundary::Infinity
                } else {
                    Boundary::Finite(ma / mc)
                }
            }
            Boundary::Finite(u) => {
                let den = mc * u + md;
                if den.abs() < 1e-280 {
                    Boundary::Infinity
                } else {
                    Boundary::Finite((ma * u + mb) / den)
                }
            }
        }
    }

    /// Image of a geodesic (endpoints map; the ordered pair is preserved).
    pub fn apply_geodesic(&self, g: &Geodesic) -> Geodesic {
        Geodesic::new(
            self.apply_boundary(g.repelling),
            self.apply_boundary(g.attracting),
        )
    }

    /// How a tangent direction at `z` turns under this isometry: a tangent
    /// vector of angle θ at z maps to one of angle `θ + turn` (or `π − θ +
    /// turn` composed with the flip when reversing) at the image point. For
    /// the non-reversing case this is arg g′(z) = −2 arg(cz + d).
    pub fn tangent_angle(&self, z: HPoint, theta: f64) -> f64 {
        let (x, y, th) = if self.reversing {
            // ν: z ↦ −z̄ sends a tangent of angle θ at z to one of angle π−θ
            (-z.x, z.y, std::f64::consts::PI - theta)
        } else {
            (z.x, z.y, theta)
        };
        let [[_, _], [c, d]] = self.m;
        let turn = -2.0 * (c * y).atan2(c * x + d);
        th + turn
    }

    /// Entrywise PSL distance between two isometries. Reversing flags must
    /// match for the result to be finite.
    pub fn dist(&self, other: &Isometry) -> f64 {
        if self.reversing != other.reversing {
            return f64::INFINITY;
        }
        psl_dist(&self.m, &other.m)
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        !self.reversing && psl_dist(&self.m, &[[1.0, 0.0], [0.0, 1.0]]) <= eps
    }
}

/// D m D with D = diag(1, −1): negates the off-diagonal entries.
pub(crate) fn conj_by_d(m: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [[m[0][0], -m[0][1]], [-m[1][0], m[1][1]]]
}

/// Composition f ∘ g (g acts first). The reversing flag is the XOR.
pub fn compose(f: &Isometry, g: &Isometry) -> Isometry {
    // (m_f ∘ ν^r) (m_g ∘ ν^s) = (m_f · ν^r m_g ν^r) ∘ ν^(r+s), and
    // ν M ν = D M D on matrices.
    let gm = if f.reversing { conj_by_d(&g.m) } else { g.m };
    Isometry::renormalized(mat_mul(&f.m, &gm), f.reversing ^ g.reversing)
}

/// diag(e^{t/2}, e^{−t/2}): hyperbolic translation of length |t| along the
/// imaginary axis, toward ∞ for t > 0.
pub fn exp_x(t: f64) -> Isometry {
    Isometry::renormalized([[(t / 2.0).exp(), 0.0], [0.0, (-t / 2.0).exp()]], false)
}

/// [[cos(t/2), −sin(t/2)], [sin(t/2), cos(t/2)]]: clockwise rotation of
/// angle t around the imaginary unit.
pub fn exp_y(t: f64) -> Isometry {
    let (s, c) = (t / 2.0).sin_cos();
    Isometry::renormalized([[c, -s], [s, c]], false)
}

/// Some isometry sending i to `p` (the upper-triangular representative).
pub fn mover_to(p: HPoint) -> Isometry {
    let r = p.y.sqrt();
    Isometry::renormalized([[r, p.x / r], [0.0, 1.0 / r]], false)
}

/// The elliptic involution fixing `p`: matrix (1/y)·[[−x, x²+y²], [−1, x]].
pub fn rotation_pi(p: HPoint) -> Isometry {
    Isometry::renormalized(
        [[-p.x / p.y, (p.x * p.x + p.y * p.y) / p.y], [-1.0 / p.y, p.x / p.y]],
        false,
    )
}

/// Orientation-reversing reflection through the geodesic line `g`.
pub fn reflect(g: &Geodesic) -> Isometry {
    let t = to_imaginary_axis(g);
    compose(&t.inverse(), &compose(&Isometry::conjugation_flip(), &t))
}

/// Hyperbolic translation along `g` by `len` toward the attracting endpoint
/// (negative `len` translates backward).
pub fn translation_along(g: &Geodesic, len: f64) -> Isometry {
    let t = to_imaginary_axis(g);
    compose(&t.inverse(), &compose(&exp_x(len), &t))
}

/// Fixed point of an elliptic matrix (|trace| < 2). The lower-left entry is
/// necessarily nonzero.
fn elliptic_center(m: &[[f64; 2]; 2]) -> HPoint {
    let [[a, _], [c, d]] = *m;
    let t = a + d;
    let y = (4.0 - t * t).max(0.0).sqrt() / (2.0 * c.abs());
    HPoint::new((a - d) / (2.0 * c), y)
}

/// Clockwise rotation angle in (0, 2π) of an elliptic element: arg((c·p+d)²)
/// where p is the fixed point and (c, d) the bottom row. Equals t for
/// `exp_y(t)` and is invariant under conjugation.
pub fn clockwise_angle(g: &Isometry) -> Result<f64> {
    if g.reversing {
        return Err(HypError::ReversingUnsupported);
    }
    let t = g.trace();
    if t.abs() >= 2.0 {
        return Err(HypError::NotElliptic);
    }
    let p = elliptic_center(&g.m);
    let [[_, _], [c, d]] = g.m;
    // w = c p + d as a complex number; angle = arg(w²) in (0, 2π)
    let wr = c * p.x + d;
    let wi = c * p.y;
    let re = wr * wr - wi * wi;
    let im = 2.0 * wr * wi;
    let mut a = im.atan2(re);
    if a <= 0.0 {
        a += 2.0 * std::f64::consts::PI;
    }
    Ok(a)
}

/// Boundary fixed points of a hyperbolic matrix, (repelling, attracting).
pub(crate) fn hyperbolic_fixed_points(m: &[[f64; 2]; 2]) -> (Boundary, Boundary) {
    let [[a, b], [c, d]] = *m;
    let t = a + d;
    if c.abs() < 1e-280 {
        // fixed points: ∞ and b/(d−a); ∞ attracts iff |a| > 1
        let u = Boundary::Finite(b / (d - a));
        if a.abs() > 1.0 {
            (u, Boundary::Infinity)
        } else {
            (Boundary::Infinity, u)
        }
    } else {
        let r = (t * t - 4.0).max(0.0).sqrt();
        let u1 = (a - d + r) / (2.0 * c);
        let u2 = (a - d - r) / (2.0 * c);
        // attracting fixed point u has |g'(u)| < 1, i.e. |c·u + d| > 1
        let attract_first = (c * u1 + d).abs() > (c * u2 + d).abs();
        if attract_first {
            (Boundary::Finite(u2), Boundary::Finite(u1))
        } else {
            (Boundary::Finite(u1), Boundary::Finite(u2))
        }
    }
}

/// Trace trichotomy of a non-reversing isometry.
///
/// Near-parabolic inputs (||trace|−2| ≤ `eps_class` on a non-identity
/// element) raise [`HypError::AmbiguousClass`] rather than guessing; the
/// constructions built on top of this kernel assume a strict trichotomy.
pub fn classify(g: &Isometry, tol: &Tolerance) -> Result<IsometryClass> {
    if g.reversing {
        return Err(HypError::ReversingUnsupported);
    }
    if g.is_identity(tol.eps_cmp) {
        return Ok(IsometryClass::Identity);
    }
    let t = g.trace().abs();
    if (t - 2.0).abs() <= tol.eps_class {
        return Err(HypError::AmbiguousClass);
    }
    if t < 2.0 {
        Ok(IsometryClass::Elliptic {
            center: elliptic_center(&g.m),
            clockwise_angle: clockwise_angle(g)?,
        })
    } else {
        let (rep, att) = hyperbolic_fixed_points(&g.m);
        Ok(IsometryClass::Hyperbolic {
            axis: Geodesic::new(rep, att),
            length: 2.0 * (t / 2.0).acosh(),
        })
    }
}
