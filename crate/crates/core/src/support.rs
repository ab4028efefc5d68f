//! Quasi-support functions of cycloids and the isoptic built from them.
//!
//! Every tangent of a hypo- or epicycloid can be written in Hesse form
//! `x cos u + y sin u = p(u)` with
//!
//! ```text
//! p_H(u) = (a-2)/a · sin(a/(a-2) · (π/2 - u))
//! p_E(u) = (a+2)/a · sin(a/(a+2) · (π/2 - u))
//! ```
//!
//! The cycloids are not convex and `p` changes sign, so these are not
//! support functions in the convex-geometry sense; the name "quasi-support"
//! is kept for that reason. `u` lives on the whole real line: one normal
//! direction belongs to several tangents of a multi-cusped curve, and the
//! unrolled `u` keeps `p` single-valued and smooth.
//!
//! The line with normal angle `u` touches the hypocycloid at
//! `t = 2(π/2 - u)/(a-2)` and the epicycloid at `t = (2u - π)/(a+2)`; the
//! epicycloid's contact point is mirrored in the x axis relative to the plain
//! inverse substitution, which is why its alignment is [`Orientation::Reversed`].

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::curve::{CycloidKind, CycloidSpec};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::isoptic::Orientation;
use crate::tangent::{check_alpha, phi_for_alpha};

/// A support-like function `p(u)` with its derivative.
pub trait Support {
    fn value(&self, u: f64) -> f64;
    fn derivative(&self, u: f64) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportKind {
    Hypo,
    Epi,
}

/// The quasi-support function of a hypo- or epicycloid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupportFunction {
    kind: SupportKind,
    a: f64,
}

impl SupportFunction {
    pub fn kind(&self) -> SupportKind {
        self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    fn m(&self) -> f64 {
        match self.kind {
            SupportKind::Hypo => self.a - 2.0,
            SupportKind::Epi => self.a + 2.0,
        }
    }

    /// Curve parameter at which the line with normal angle `u` touches the cycloid.
    pub fn contact_parameter(&self, u: f64) -> f64 {
        match self.kind {
            SupportKind::Hypo => 2.0 * (PI / 2.0 - u) / self.m(),
            SupportKind::Epi => (2.0 * u - PI) / self.m(),
        }
    }
}

impl Support for SupportFunction {
    fn value(&self, u: f64) -> f64 {
        let m = self.m();
        m / self.a * (self.a / m * (PI / 2.0 - u)).sin()
    }

    fn derivative(&self, u: f64) -> f64 {
        -(self.a / self.m() * (PI / 2.0 - u)).cos()
    }
}

/// `p ≡ r`, the support function of a circle of radius `r` about the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantSupport(pub f64);

impl Support for ConstantSupport {
    fn value(&self, _u: f64) -> f64 {
        self.0
    }

    fn derivative(&self, _u: f64) -> f64 {
        0.0
    }
}

pub fn support_of(spec: &CycloidSpec) -> SupportFunction {
    let kind = match spec.kind() {
        CycloidKind::Hypocycloid => SupportKind::Hypo,
        CycloidKind::Epicycloid => SupportKind::Epi,
    };
    SupportFunction { kind, a: spec.a() }
}

/// Envelope point of the line family: `p(u)·e^{iu} + p'(u)·i·e^{iu}`.
pub fn reconstruct_curve<S: Support>(sf: &S, u: f64) -> Point2 {
    let e = Point2::polar(u);
    sf.value(u) * e + sf.derivative(u) * e.perp()
}

/// Isoptic point from a support function, `alpha` being the angle between
/// the oriented tangents (the same `α` as [`crate::isoptic::isoptic_point`]).
///
/// Intersects the support lines with normal angles `u` and `u + α`:
///
/// ```text
/// z(u) = p(u)·e^{iu} + (p(u + α) - p(u)·cos α)/sin α · i·e^{iu}
/// ```
pub fn isoptic_from_support<S: Support>(sf: &S, alpha: f64, u: f64) -> Result<Point2> {
    check_alpha(alpha)?;
    let sin = alpha.sin();
    if sin == 0.0 {
        return Err(Error::AngleOutOfRange(alpha));
    }
    let e = Point2::polar(u);
    let p = sf.value(u);
    let lateral = (sf.value(u + alpha) - p * alpha.cos()) / sin;
    Ok(p * e + lateral * e.perp())
}

/// Isoptic of a convex curve, `viewing_angle` being the angle under which the
/// curve is seen from the isoptic point:
///
/// ```text
/// z(u) = p(u)·e^{iu} + (-p(u)·cot(π-α) + p(u+π-α)/sin(π-α)) · i·e^{iu}
/// ```
///
/// Equals [`isoptic_from_support`] at `π - viewing_angle`. For a cycloid's
/// quasi-support function this gives the isoptic of oriented angle `π - α`.
pub fn convex_isoptic_from_support<S: Support>(sf: &S, viewing_angle: f64, u: f64) -> Result<Point2> {
    check_alpha(viewing_angle)?;
    let supplement = PI - viewing_angle;
    let sin = supplement.sin();
    if sin == 0.0 {
        return Err(Error::AngleOutOfRange(viewing_angle));
    }
    let e = Point2::polar(u);
    let p = sf.value(u);
    let lateral = -p * supplement.cos() / sin + sf.value(u + supplement) / sin;
    Ok(p * e + lateral * e.perp())
}

/// How the support-route parameter relates to the closed-form parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamAlignment {
    pub shift: f64,
    pub orientation: Orientation,
}

impl ParamAlignment {
    /// Support-route parameter `u` that lands on the closed-form point at `t`.
    ///
    /// The support route at `u = (π - s(a∓2))/2` equals the closed form at
    /// `s - shift` (hypocycloid) or `shift - s` (epicycloid).
    pub fn support_parameter(&self, spec: &CycloidSpec, t: f64) -> f64 {
        let s = match self.orientation {
            Orientation::Same => t + self.shift,
            Orientation::Reversed => self.shift - t,
        };
        (PI - s * spec.a_pm2()) / 2.0
    }
}

pub fn alignment(spec: &CycloidSpec, alpha: f64) -> Result<ParamAlignment> {
    let shift = phi_for_alpha(spec, alpha)?;
    let orientation = match spec.kind() {
        CycloidKind::Hypocycloid => Orientation::Same,
        CycloidKind::Epicycloid => Orientation::Reversed,
    };
    Ok(ParamAlignment { shift, orientation })
}

/// Isoptic point by the support route, indexed by the closed-form parameter.
pub fn aligned_support_point(spec: &CycloidSpec, alpha: f64, t: f64) -> Result<Point2> {
    let align = alignment(spec, alpha)?;
    isoptic_from_support(&support_of(spec), alpha, align.support_parameter(spec, t))
}
