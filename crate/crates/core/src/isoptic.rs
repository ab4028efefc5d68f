//! The α-isoptic of a cycloid by direct tangent intersection.
//!
//! The tangents at `t - φ` and `t + φ`, `φ = α/(a∓2)`, meet at the oriented
//! angle `α` for every `t`, so their intersection traces the isoptic as `t`
//! runs over one closure period. [`isoptic_point_oracle`] solves the 2×2
//! system numerically; [`isoptic_point`] is the closed form of the solution,
//! which is a hypotrochoid (hypocycloid case) or an epitrochoid (epicycloid
//! case) with
//!
//! ```text
//! A = (a∓2)·sin((a∓1)φ) / ((a∓1)·sin α),   B = A/a,   H = (a∓2)·sin φ / (a·sin α).
//! ```
//!
//! For a hypocycloid at `α = (a-2)π/(a-1)` the coefficient `A` vanishes and
//! the isoptic is a circle of radius `H = (a-2)/a` about the origin.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{CycloidKind, CycloidSpec, TrochoidSpec};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::tangent::{
    check_alpha, intersect_lines, phi_for_alpha, tangent_line, tangent_vector, Direction2,
    TangentLine,
};

/// `|α - α*|` within which the degenerate circle is reported.
pub const CIRCLE_ANGLE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Same,
    Reversed,
}

/// An isoptic classified as a trochoid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsopticResult {
    pub base: CycloidSpec,
    pub alpha: f64,
    pub trochoid: TrochoidSpec,
    /// Offset between the trochoid parameter and the closed-form parameter.
    pub param_shift: f64,
    pub orientation: Orientation,
}

/// The degenerate isoptic: a circle centred at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleResult {
    pub radius: f64,
    /// The closed form runs around the circle at angular rate `-(a-1)`.
    angular_rate: f64,
}

impl CircleResult {
    /// Point of the closed-form parametrization at `t` (the `A = B = 0` case).
    pub fn point(&self, t: f64) -> Point2 {
        let (s, c) = (self.angular_rate * t).sin_cos();
        Point2::new(self.radius * c, -self.radius * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum IsopticClass {
    Trochoid(IsopticResult),
    Circle(CircleResult),
}

impl IsopticClass {
    pub fn point(&self, t: f64) -> Point2 {
        match self {
            IsopticClass::Trochoid(r) => r.trochoid.point(t),
            IsopticClass::Circle(c) => c.point(t),
        }
    }
}

/// Coefficients `(R, H)` of the closed form: `R = A∓B` is the radius of the
/// slow rotation, `H` the pen offset.
fn coefficients(spec: &CycloidSpec, alpha: f64) -> Result<(f64, f64)> {
    let phi = phi_for_alpha(spec, alpha)?;
    let denom = spec.a() * alpha.sin();
    let m = spec.a_pm2();
    Ok((
        m * (spec.a_pm1() * phi).sin() / denom,
        m * phi.sin() / denom,
    ))
}

/// Closed-form point of the α-isoptic at parameter `t`.
pub fn isoptic_point(spec: &CycloidSpec, alpha: f64, t: f64) -> Result<Point2> {
    let (r, h) = coefficients(spec, alpha)?;
    let k = spec.a_pm1();
    let (s, c) = t.sin_cos();
    let (sk, ck) = (k * t).sin_cos();
    Ok(match spec.kind() {
        CycloidKind::Hypocycloid => Point2::new(r * c + h * ck, r * s - h * sk),
        CycloidKind::Epicycloid => Point2::new(r * c - h * ck, r * s - h * sk),
    })
}

/// The two tangents whose intersection is the isoptic point at `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentPair {
    /// Curve parameters `t - φ` and `t + φ`.
    pub params: [f64; 2],
    pub lines: [TangentLine; 2],
    pub directions: [Direction2; 2],
    pub point: Point2,
}

impl TangentPair {
    /// Angle between the oriented tangent vectors, in `[0, π]`.
    pub fn oriented_angle(&self) -> f64 {
        self.directions[0].dot(self.directions[1]).clamp(-1.0, 1.0).acos()
    }

    /// Angle between the two lines, in `[0, π/2]`.
    pub fn line_angle(&self) -> f64 {
        let cross = self.lines[0].normal().cross(self.lines[1].normal()).abs();
        let dot = self.lines[0].normal().dot(self.lines[1].normal()).abs();
        cross.atan2(dot)
    }
}

pub fn tangent_pair(spec: &CycloidSpec, alpha: f64, t: f64) -> Result<TangentPair> {
    let phi = phi_for_alpha(spec, alpha)?;
    let params = [t - phi, t + phi];
    let lines = params.map(|s| tangent_line(spec, s));
    let point = intersect_lines(&lines[0], &lines[1])?;
    Ok(TangentPair {
        params,
        lines,
        directions: params.map(|s| tangent_vector(spec, s)),
        point,
    })
}

/// Isoptic point found by intersecting the tangent lines at `t ∓ φ` numerically.
pub fn isoptic_point_oracle(spec: &CycloidSpec, alpha: f64, t: f64) -> Result<Point2> {
    tangent_pair(spec, alpha, t).map(|pair| pair.point)
}

/// `α* = (a-2)π/(a-1)`, at which a hypocycloid's isoptic is a circle.
/// `None` for epicycloids (`α* > π`) and for hypocycloids with `a < 2`.
pub fn degenerate_alpha(spec: &CycloidSpec) -> Option<f64> {
    match spec.kind() {
        CycloidKind::Hypocycloid => {
            let alpha = spec.a_pm2() * PI / spec.a_pm1();
            (alpha > 0.0 && alpha < PI).then_some(alpha)
        }
        CycloidKind::Epicycloid => None,
    }
}

/// The circle the isoptic collapses to when `α = (a-2)π/(a-1)`.
pub fn degenerate_circle(spec: &CycloidSpec, alpha: f64) -> Option<CircleResult> {
    let target = degenerate_alpha(spec)?;
    if (alpha - target).abs() > CIRCLE_ANGLE_TOLERANCE {
        return None;
    }
    let (_, radius) = coefficients(spec, alpha).ok()?;
    (radius.is_finite() && radius > 0.0).then_some(CircleResult {
        radius,
        angular_rate: spec.a_pm1(),
    })
}

/// Classifies the isoptic as a trochoid. Fails with
/// [`Error::DegenerateCircle`] when the isoptic is a circle.
pub fn isoptic_trochoid(spec: &CycloidSpec, alpha: f64) -> Result<IsopticResult> {
    check_alpha(alpha)?;
    if degenerate_circle(spec, alpha).is_some() {
        return Err(Error::DegenerateCircle { alpha });
    }
    let (r, h) = coefficients(spec, alpha)?;
    let a = spec.a();
    // r = A∓B = A·(a∓1)/a
    let fixed = r * a / spec.a_pm1();
    let trochoid = TrochoidSpec::new(spec.kind().trochoid(), fixed, fixed / a, h)?;
    Ok(IsopticResult {
        base: *spec,
        alpha,
        trochoid,
        param_shift: 0.0,
        orientation: Orientation::Same,
    })
}

/// Trochoid or circle, whichever the isoptic at `alpha` is.
pub fn classify(spec: &CycloidSpec, alpha: f64) -> Result<IsopticClass> {
    check_alpha(alpha)?;
    match degenerate_circle(spec, alpha) {
        Some(circle) => Ok(IsopticClass::Circle(circle)),
        None => isoptic_trochoid(spec, alpha).map(IsopticClass::Trochoid),
    }
}
