//! Genus-2 surface-group representations into PSL(2,ℝ).
//!
//! The crate is organized bottom-up:
//!
//! - [`hyp`] — exact-formula kernel for the upper half-plane: points,
//!   geodesics, isometries, classification, angles and signed areas.
//! - [`torus`] — one-holed-torus representations, their polygonal model,
//!   Fenchel–Nielsen coordinates, Toledo number and the twist flow.
//! - [`genus2`] — words, relator-checked quadruples, restriction/gluing
//!   along the separating curve, twist flows, mapping-class generators,
//!   the hyperelliptic involution and Euler numbers.
//! - [`bowtie`] — the six-coordinate chart (ℓ₁,τ₁,β,γ,ℓ₂,τ₂) for
//!   representations with elliptic separating image and Euler number ±1.
//! - [`pentagon`] — pentagon representations: right-angled-pentagon
//!   constructions, the orbifold lift, component classification and the
//!   four-coordinate chart.
//! - [`geom`] — geometrization: slit-tori assemblies, octagon nets,
//!   kink/slit trigonometry and the boundary-crushing construction.
//! - [`json`] — serde schemas for the file formats used by the CLI.

pub mod bowtie;
pub mod genus2;
pub mod geom;
pub mod hyp;
pub mod json;
pub mod pentagon;
pub mod tol;
pub mod torus;

pub use tol::Tolerance;
