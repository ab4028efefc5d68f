//! Isoptic curves of hypocycloids and epicycloids.
//!
//! The α-isoptic of a curve is the locus of points where two of its tangents
//! meet at the angle α. For the cycloid families the isoptic is computed here
//! by three routes that are checked against each other:
//!
//! * [`isoptic::isoptic_point`], a closed-form parametrization;
//! * [`isoptic::classify`], which names the isoptic as a hypo- or epitrochoid
//!   (or, in one degenerate configuration, a circle);
//! * [`support::isoptic_from_support`], which works from the quasi-support
//!   function of the cycloid.
//!
//! [`isoptic::isoptic_point_oracle`] intersects the two tangent lines
//! numerically and is the ground truth the three routes are validated against.
//!
//! # Conventions
//!
//! The rolling circle has radius `1/a = p/q` in lowest terms, the fixed circle
//! has radius 1. A curve with `a = q/p` closes after `2·p·π` and has `q` cusps
//! (the astroid is `p = 1, q = 4`).
//!
//! ```
//! use isoptica::{CycloidSpec, isoptic};
//! use std::f64::consts::PI;
//!
//! let astroid = CycloidSpec::hypocycloid(1, 4).unwrap();
//! let z = isoptic::isoptic_point(&astroid, PI / 2.0, 0.3).unwrap();
//! let oracle = isoptic::isoptic_point_oracle(&astroid, PI / 2.0, 0.3).unwrap();
//! assert!(z.distance(oracle) < 1e-12);
//! ```

pub mod angle;
pub mod curve;
mod error;
pub mod geometry;
pub mod isoptic;
pub mod render;
pub mod support;
pub mod tangent;
pub mod validate;

pub use curve::{CycloidKind, CycloidSpec, RationalShape, TrochoidKind, TrochoidSpec};
pub use error::{Error, Result};
pub use geometry::Point2;

/// Default absolute comparison tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
