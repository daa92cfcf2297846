//! Tangential polygons from an ordered list of side lengths.
//!
//! A polygon whose sides all touch one circle is determined by its tangent
//! lengths `tj` (vertex to tangency point) and the circle radius. This crate
//! decides whether such a polygon exists for given sides, computes the
//! tangent lengths, finds every incircle radius (convex and star windings),
//! builds the polygon in the plane, and handles the bicentric quadrilateral.

pub mod bicentric;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod lengths;
pub mod pipeline;
pub mod radius;
pub mod symmetric;
pub mod tangents;
pub mod tolerance;

pub use error::{Error, Result};
pub use lengths::{cyclic_rotate, SideLengths, TangentLengths};
pub use symmetric::{elementary_symmetric, SymmetricFunctions};
pub use tolerance::Tolerance;
