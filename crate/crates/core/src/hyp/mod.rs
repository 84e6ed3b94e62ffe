//! Exact-formula kernel for the upper half-plane model.
//!
//! Points live in {x + iy : y > 0}, boundary points on ℝ ∪ {∞}. Geodesics
//! are ordered pairs of distinct boundary points; the orientation runs from
//! the first (repelling) to the second (attracting) endpoint. Isometries are
//! determinant-one 2×2 real matrices acting by Möbius transformations,
//! optionally pre-composed with the reflection z ↦ −z̄ (the `reversing`
//! flag). All types are immutable values and all operations are pure.

mod angles;
mod area;
mod error;
mod geodesic;
mod isometry;
mod point;

pub use angles::{oriented_angle, point_at, tangent_toward, tangent_toward_boundary, walk};
pub use area::{interior_angles, signed_area, signed_area_mixed, PolyVertex};
pub use error::HypError;
pub use geodesic::{
    common_perpendicular, dist_to_geodesic, foot, geodesic_intersection, geodesic_through,
    midpoint, signed_distance_along, to_imaginary_axis, Geodesic,
};
pub use isometry::{
    classify, clockwise_angle, compose, exp_x, exp_y, mover_to, reflect, rotation_pi,
    translation_along, Isometry, IsometryClass,
};
pub use point::{distance, Boundary, HPoint};

pub type Result<T> = std::result::Result<T, HypError>;
