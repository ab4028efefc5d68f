//! Centered trochoids: hypo- and epicycloids with a rational radius ratio,
//! and the general hypo- and epitrochoids their isoptics belong to.

use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Radius ratio of a cycloid. The rolling circle has radius `1/a = p/q`.
///
/// `p` and `q` are kept as integers so the closure period is exact; `a` is
/// only turned into a float at evaluation time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalShape {
    p: u32,
    q: u32,
}

impl RationalShape {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ZeroRatio { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotLowestTerms { p, q });
        }
        Ok(RationalShape { p, q })
    }

    /// Numerator of the rolling radius `p/q`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Denominator of the rolling radius `p/q`.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Ratio of fixed to rolling radius, `a = q/p`.
    pub fn a(&self) -> f64 {
        f64::from(self.q) / f64::from(self.p)
    }
}

impl fmt::Display for RationalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 1 {
            write!(f, "{}", self.q)
        } else {
            write!(f, "{}/{}", self.q, self.p)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CycloidKind {
    Hypocycloid,
    Epicycloid,
}

impl CycloidKind {
    /// `-1` for hypocycloids, `+1` for epicycloids; the `∓`/`±` of the formulas.
    #[inline]
    pub fn sign(self) -> f64 {
        match self {
            CycloidKind::Hypocycloid => -1.0,
            CycloidKind::Epicycloid => 1.0,
        }
    }

    pub fn trochoid(self) -> TrochoidKind {
        match self {
            CycloidKind::Hypocycloid => TrochoidKind::Hypotrochoid,
            CycloidKind::Epicycloid => TrochoidKind::Epitrochoid,
        }
    }
}

impl fmt::Display for CycloidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CycloidKind::Hypocycloid => "hypo",
            CycloidKind::Epicycloid => "epi",
        })
    }
}

/// A hypocycloid or epicycloid with fixed-circle radius 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycloidSpec {
    kind: CycloidKind,
    shape: RationalShape,
}

impl CycloidSpec {
    pub fn new(kind: CycloidKind, shape: RationalShape) -> Result<Self> {
        let (p, q) = (shape.p, shape.q);
        match kind {
            CycloidKind::Hypocycloid if p >= q => return Err(Error::HypocycloidRadius { p, q }),
            CycloidKind::Hypocycloid if 2 * u64::from(p) == u64::from(q) => {
                return Err(Error::SegmentHypocycloid)
            }
            CycloidKind::Epicycloid if p > q => return Err(Error::EpicycloidRadius { p, q }),
            _ => {}
        }
        Ok(CycloidSpec { kind, shape })
    }

    pub fn hypocycloid(p: u32, q: u32) -> Result<Self> {
        CycloidSpec::new(CycloidKind::Hypocycloid, RationalShape::new(p, q)?)
    }

    pub fn epicycloid(p: u32, q: u32) -> Result<Self> {
        CycloidSpec::new(CycloidKind::Epicycloid, RationalShape::new(p, q)?)
    }

    pub fn kind(&self) -> CycloidKind {
        self.kind
    }

    pub fn shape(&self) -> RationalShape {
        self.shape
    }

    pub fn a(&self) -> f64 {
        self.shape.a()
    }

    /// `a - 2` for hypocycloids, `a + 2` for epicycloids.
    #[inline]
    pub(crate) fn a_pm2(&self) -> f64 {
        self.a() + 2.0 * self.kind.sign()
    }

    /// `a - 1` for hypocycloids, `a + 1` for epicycloids.
    #[inline]
    pub(crate) fn a_pm1(&self) -> f64 {
        self.a() + self.kind.sign()
    }

    pub fn point(&self, t: f64) -> Point2 {
        match self.kind {
            CycloidKind::Hypocycloid => eval_hypocycloid(&self.shape, t),
            CycloidKind::Epicycloid => eval_epicycloid(&self.shape, t),
        }
    }

    /// Length of the parameter interval after which the curve closes: `2·p·π`.
    pub fn closure_period(&self) -> f64 {
        2.0 * PI * f64::from(self.shape.p)
    }

    /// Number of cusps over one closure period: `q`.
    pub fn cusp_count(&self) -> u32 {
        self.shape.q
    }

    /// Parameters in `[0, closure_period)` where the velocity vanishes
    /// (`sin(a·t/2) = 0`).
    pub fn cusp_parameters(&self) -> Vec<f64> {
        let (p, q) = (f64::from(self.shape.p), f64::from(self.shape.q));
        (0..self.shape.q)
            .map(|k| 2.0 * PI * f64::from(k) * p / q)
            .collect()
    }

    /// The same curve written as a trochoid with `A = 1`, `B = H = 1/a`.
    pub fn as_trochoid(&self) -> TrochoidSpec {
        let b = 1.0 / self.a();
        TrochoidSpec {
            kind: self.kind.trochoid(),
            fixed_radius: 1.0,
            rolling_radius: b,
            pen_offset: b,
        }
    }

    /// A note for configurations the closed forms were not stated for.
    pub fn caveat(&self) -> Option<&'static str> {
        match self.kind {
            CycloidKind::Epicycloid if self.shape.p == self.shape.q => Some(
                "cardioid (a = 1): isoptic formulas are checked numerically only for this case",
            ),
            CycloidKind::Hypocycloid if self.a() < 2.0 => {
                Some("hypocycloid with a < 2: phi = alpha/(a-2) is negative")
            }
            _ => None,
        }
    }
}

impl fmt::Display for CycloidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} a={}", self.kind, self.shape)
    }
}

pub fn eval_hypocycloid(shape: &RationalShape, t: f64) -> Point2 {
    let a = shape.a();
    let k = a - 1.0;
    let (s, c) = t.sin_cos();
    let (sk, ck) = (k * t).sin_cos();
    Point2::new((k * c + ck) / a, (k * s - sk) / a)
}

pub fn eval_epicycloid(shape: &RationalShape, t: f64) -> Point2 {
    let a = shape.a();
    let k = a + 1.0;
    let (s, c) = t.sin_cos();
    let (sk, ck) = (k * t).sin_cos();
    Point2::new((k * c - ck) / a, (k * s - sk) / a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrochoidKind {
    Hypotrochoid,
    Epitrochoid,
}

/// A centered trochoid: fixed radius `A`, rolling radius `B`, pen offset `H`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrochoidSpec {
    pub kind: TrochoidKind,
    #[serde(rename = "A")]
    pub fixed_radius: f64,
    #[serde(rename = "B")]
    pub rolling_radius: f64,
    #[serde(rename = "H")]
    pub pen_offset: f64,
}

impl TrochoidSpec {
    pub fn new(kind: TrochoidKind, fixed_radius: f64, rolling_radius: f64, pen_offset: f64) -> Result<Self> {
        if rolling_radius == 0.0 {
            return Err(Error::ZeroRollingRadius);
        }
        Ok(TrochoidSpec {
            kind,
            fixed_radius,
            rolling_radius,
            pen_offset,
        })
    }

    pub fn point(&self, t: f64) -> Point2 {
        match self.kind {
            TrochoidKind::Hypotrochoid => hypotrochoid_point(self, t),
            TrochoidKind::Epitrochoid => epitrochoid_point(self, t),
        }
    }
}

pub fn eval_hypotrochoid(spec: &TrochoidSpec, t: f64) -> Result<Point2> {
    if spec.rolling_radius == 0.0 {
        return Err(Error::ZeroRollingRadius);
    }
    Ok(hypotrochoid_point(spec, t))
}

pub fn eval_epitrochoid(spec: &TrochoidSpec, t: f64) -> Result<Point2> {
    if spec.rolling_radius == 0.0 {
        return Err(Error::ZeroRollingRadius);
    }
    Ok(epitrochoid_point(spec, t))
}

fn hypotrochoid_point(spec: &TrochoidSpec, t: f64) -> Point2 {
    let r = spec.fixed_radius - spec.rolling_radius;
    let ratio = r / spec.rolling_radius;
    let (s, c) = t.sin_cos();
    let (sk, ck) = (ratio * t).sin_cos();
    Point2::new(r * c + spec.pen_offset * ck, r * s - spec.pen_offset * sk)
}

fn epitrochoid_point(spec: &TrochoidSpec, t: f64) -> Point2 {
    let r = spec.fixed_radius + spec.rolling_radius;
    let ratio = r / spec.rolling_radius;
    let (s, c) = t.sin_cos();
    let (sk, ck) = (ratio * t).sin_cos();
    Point2::new(r * c - spec.pen_offset * ck, r * s - spec.pen_offset * sk)
}
