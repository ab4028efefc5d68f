//! Tangent directions and tangent lines of hypo- and epicycloids.
//!
//! The velocity of either cycloid factors into a scalar `2(a∓1)sin(at/2)/a`
//! times a unit vector that depends on `(a∓2)t/2` only. That unit vector is
//! what [`tangent_vector`] returns: it is defined at cusps, flips orientation
//! relative to the velocity wherever the scalar is negative, and makes the
//! angle between the tangents at `t - φ` and `t + φ` independent of `t`.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::curve::{CycloidKind, CycloidSpec};
use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Tolerance on `|sin Δ|` below which two lines count as parallel.
pub const PARALLEL_TOLERANCE: f64 = 1e-12;

/// A unit direction vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction2 {
    pub ux: f64,
    pub uy: f64,
}

impl Direction2 {
    pub fn from_angle(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Direction2 { ux: c, uy: s }
    }

    pub fn dot(self, other: Direction2) -> f64 {
        self.ux * other.ux + self.uy * other.uy
    }

    pub fn as_point(self) -> Point2 {
        Point2::new(self.ux, self.uy)
    }
}

/// A line in Hesse normal form: `x·cos(normal_angle) + y·sin(normal_angle) = distance`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TangentLine {
    normal_angle: f64,
    distance: f64,
}

impl TangentLine {
    /// Builds the line; `normal_angle` is reduced to `[0, 2π)`.
    pub fn new(normal_angle: f64, distance: f64) -> Self {
        let mut reduced = normal_angle.rem_euclid(TAU);
        if reduced >= TAU {
            reduced = 0.0;
        }
        TangentLine {
            normal_angle: reduced,
            distance,
        }
    }

    pub fn normal_angle(&self) -> f64 {
        self.normal_angle
    }

    /// Signed distance from the origin along the normal.
    pub fn distance(&self) -> f64 {
        self.distance
    }

    pub fn normal(&self) -> Point2 {
        Point2::polar(self.normal_angle)
    }

    /// Direction along the line, the normal turned a quarter counterclockwise.
    pub fn direction(&self) -> Direction2 {
        Direction2::from_angle(self.normal_angle + PI / 2.0)
    }

    /// `x·cos u + y·sin u - d` at `point`.
    pub fn residual(&self, point: Point2) -> f64 {
        self.normal().dot(point) - self.distance
    }
}

/// Raw derivative of the cycloid parametrization.
pub fn velocity(spec: &CycloidSpec, t: f64) -> Point2 {
    let a = spec.a();
    let scale = 2.0 * spec.a_pm1() * (a * t / 2.0).sin() / a;
    tangent_vector(spec, t).as_point() * scale
}

/// Unit tangent direction, continuous through cusps.
pub fn tangent_vector(spec: &CycloidSpec, t: f64) -> Direction2 {
    let phase = spec.a_pm2() * t / 2.0;
    let (s, c) = phase.sin_cos();
    match spec.kind() {
        CycloidKind::Hypocycloid => Direction2 { ux: -c, uy: s },
        CycloidKind::Epicycloid => Direction2 { ux: c, uy: s },
    }
}

/// Hesse-form tangent line at parameter `t`.
///
/// Hypocycloid: normal `(sin θ, cos θ)` with `θ = (a-2)t/2`, so the normal
/// angle is `π/2 - θ`. Epicycloid: normal `(sin ψ, -cos ψ)` with
/// `ψ = (a+2)t/2`, normal angle `ψ - π/2`. Both have distance
/// `(a∓2)/a · sin(at/2)`.
pub fn tangent_line(spec: &CycloidSpec, t: f64) -> TangentLine {
    let a = spec.a();
    let phase = spec.a_pm2() * t / 2.0;
    let distance = spec.a_pm2() / a * (a * t / 2.0).sin();
    let normal_angle = match spec.kind() {
        CycloidKind::Hypocycloid => PI / 2.0 - phase,
        CycloidKind::Epicycloid => phase - PI / 2.0,
    };
    TangentLine::new(normal_angle, distance)
}

/// Cosine of the angle between the oriented tangents at `t - φ` and `t + φ`:
/// `cos((a∓2)φ)`, whatever `t` is.
pub fn inter_tangent_cos(spec: &CycloidSpec, phi: f64) -> f64 {
    (spec.a_pm2() * phi).cos()
}

/// Angle in `[0, π]` between the oriented tangents at `t - φ` and `t + φ`.
pub fn oriented_tangent_angle(spec: &CycloidSpec, phi: f64) -> f64 {
    inter_tangent_cos(spec, phi).clamp(-1.0, 1.0).acos()
}

/// Angle between two unoriented lines given the angle between direction vectors.
pub fn line_angle(oriented: f64) -> f64 {
    oriented.min(PI - oriented)
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha < PI {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(alpha))
    }
}

/// Half parameter gap `φ = α/(a∓2)` that makes the tangents at `t ± φ` meet at `α`.
pub fn phi_for_alpha(spec: &CycloidSpec, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(alpha / spec.a_pm2())
}

pub fn intersect_lines(l1: &TangentLine, l2: &TangentLine) -> Result<Point2> {
    let n1 = l1.normal();
    let n2 = l2.normal();
    let det = n1.cross(n2);
    if det.abs() <= PARALLEL_TOLERANCE {
        return Err(Error::ParallelLines {
            delta: l2.normal_angle - l1.normal_angle,
        });
    }
    let (d1, d2) = (l1.distance, l2.distance);
    Ok(Point2::new(
        (d1 * n2.y - d2 * n1.y) / det,
        (d2 * n1.x - d1 * n2.x) / det,
    ))
}
