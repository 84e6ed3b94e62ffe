use thiserror::Error;

/// Errors raised by the half-plane kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypError {
    /// Trace within `eps_class` of ±2 on a non-identity element: the strict
    /// trichotomy does not apply and callers must decide what they meant.
    #[error("near-parabolic input: |trace| within eps_class of 2 on a non-identity element")]
    AmbiguousClass,
    /// An operation that needs an elliptic element got something else.
    #[error("element is not elliptic")]
    NotElliptic,
    /// The two geodesics intersect or share an endpoint.
    #[error("geodesics admit no common perpendicular")]
    NoPerpendicular,
    /// A point expected on a geodesic is farther than `eps_cmp` from it.
    #[error("point does not lie on the geodesic")]
    OffGeodesic,
    /// A ray target coincides with its vertex.
    #[error("degenerate ray: target coincides with vertex")]
    DegenerateRay,
    /// Polygons need at least three vertices.
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    /// Classification data was requested for an orientation-reversing element.
    #[error("operation requires a non-reversing isometry")]
    ReversingUnsupported,
    /// A matrix whose determinant is not 1 within tolerance was supplied.
    #[error("matrix determinant {0} is not 1 within tolerance")]
    BadDeterminant(f64),
}
