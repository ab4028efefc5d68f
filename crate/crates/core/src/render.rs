//! Sampling and output: SVG figures, `t,x,y` CSV and a JSON summary.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::curve::{CycloidKind, CycloidSpec, TrochoidSpec};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::isoptic::{classify, degenerate_circle, isoptic_point, IsopticClass, TangentPair};
use crate::support::{alignment, ParamAlignment};

pub const DEFAULT_SAMPLES: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CurveSelector {
    /// The cycloid alone.
    Base,
    /// The closed-form isoptic, drawn over the cycloid.
    Isoptic,
    /// The isoptic evaluated through its trochoid classification.
    Trochoid,
    /// The isoptic together with the degenerate circle, when there is one.
    CircleCheck,
}

impl CurveSelector {
    pub fn needs_alpha(self) -> bool {
        !matches!(self, CurveSelector::Base)
    }

    fn name(self) -> &'static str {
        match self {
            CurveSelector::Base => "base",
            CurveSelector::Isoptic => "isoptic",
            CurveSelector::Trochoid => "trochoid",
            CurveSelector::CircleCheck => "circle-check",
        }
    }
}

impl FromStr for CurveSelector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(CurveSelector::Base),
            "isoptic" => Ok(CurveSelector::Isoptic),
            "trochoid" => Ok(CurveSelector::Trochoid),
            "circle-check" => Ok(CurveSelector::CircleCheck),
            other => Err(Error::InvalidJob(format!("unknown curve {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Svg,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Format::Svg),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidJob(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderJob {
    pub curve: CurveSelector,
    pub spec: CycloidSpec,
    pub alpha: Option<Angle>,
    pub samples: usize,
    pub format: Format,
}

impl RenderJob {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 2 {
            return Err(Error::InvalidJob(format!(
                "samples must be at least 2 (got {})",
                self.samples
            )));
        }
        match (self.curve.needs_alpha(), self.alpha) {
            (true, None) => Err(Error::InvalidJob(format!(
                "curve {} needs --alpha",
                self.curve.name()
            ))),
            (false, Some(_)) => Err(Error::InvalidJob(
                "--alpha only applies to isoptic curves".into(),
            )),
            (true, Some(alpha)) => crate::tangent::phi_for_alpha(&self.spec, alpha.value()).map(|_| ()),
            (false, None) => Ok(()),
        }
    }
}

/// A parameter value and the curve point there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub point: Point2,
}

/// `samples` parameters evenly spaced over `[0, period]`, both ends included.
pub fn sample_times(period: f64, samples: usize) -> Vec<f64> {
    let last = (samples.max(2) - 1) as f64;
    (0..samples.max(2)).map(|i| period * i as f64 / last).collect()
}

pub fn sample_base(spec: &CycloidSpec, samples: usize) -> Vec<Sample> {
    sample_times(spec.closure_period(), samples)
        .into_iter()
        .map(|t| Sample { t, point: spec.point(t) })
        .collect()
}

/// Closed-form isoptic over one closure period of the base curve.
pub fn sample_isoptic(spec: &CycloidSpec, alpha: f64, samples: usize) -> Result<Vec<Sample>> {
    sample_times(spec.closure_period(), samples)
        .into_iter()
        .map(|t| isoptic_point(spec, alpha, t).map(|point| Sample { t, point }))
        .collect()
}

pub fn sample_class(spec: &CycloidSpec, class: &IsopticClass, samples: usize) -> Vec<Sample> {
    sample_times(spec.closure_period(), samples)
        .into_iter()
        .map(|t| Sample { t, point: class.point(t) })
        .collect()
}

pub fn write_csv(samples: &[Sample]) -> String {
    let mut out = String::with_capacity(64 * samples.len() + 8);
    out.push_str("t,x,y\n");
    for s in samples {
        let _ = writeln!(out, "{:.16e},{:.16e},{:.16e}", s.t, s.point.x, s.point.y);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LayerShape {
    Polyline,
    Segment,
    Dot,
}

#[derive(Debug, Clone)]
struct Layer {
    id: String,
    stroke: &'static str,
    shape: LayerShape,
    points: Vec<Point2>,
}

/// A static SVG figure in curve coordinates (y up).
#[derive(Debug, Clone, Default)]
pub struct Figure {
    layers: Vec<Layer>,
}

impl Figure {
    pub fn new() -> Self {
        Figure::default()
    }

    pub fn polyline(&mut self, id: &str, stroke: &'static str, points: Vec<Point2>) -> &mut Self {
        self.push(id, stroke, LayerShape::Polyline, points)
    }

    pub fn segment(&mut self, id: &str, stroke: &'static str, from: Point2, to: Point2) -> &mut Self {
        self.push(id, stroke, LayerShape::Segment, vec![from, to])
    }

    pub fn dot(&mut self, id: &str, stroke: &'static str, at: Point2) -> &mut Self {
        self.push(id, stroke, LayerShape::Dot, vec![at])
    }

    /// Draws the two tangents of `pair`, from each contact point through the
    /// isoptic point and a bit beyond.
    pub fn tangent_pair(&mut self, spec: &CycloidSpec, pair: &TangentPair) -> &mut Self {
        for (i, &s) in pair.params.iter().enumerate() {
            let contact = spec.point(s);
            let beyond = pair.point + (pair.point - contact) * 0.25;
            self.segment(&format!("tangent-{i}"), "#3a7d44", contact, beyond);
            self.dot(&format!("contact-{i}"), "#3a7d44", contact);
        }
        self.dot("isoptic-point", "#c0392b", pair.point)
    }

    fn push(&mut self, id: &str, stroke: &'static str, shape: LayerShape, points: Vec<Point2>) -> &mut Self {
        self.layers.push(Layer {
            id: id.to_string(),
            stroke,
            shape,
            points,
        });
        self
    }

    /// `(min_x, min_y, max_x, max_y)` of all finite points.
    pub fn bounds(&self) -> (f64, f64, f64, f64) {
        let mut b = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in self.layers.iter().flat_map(|l| &l.points).filter(|p| p.is_finite()) {
            b = (b.0.min(p.x), b.1.min(p.y), b.2.max(p.x), b.3.max(p.y));
        }
        if b.0 > b.2 {
            (-1.0, -1.0, 1.0, 1.0)
        } else {
            b
        }
    }

    pub fn to_svg(&self) -> String {
        let (x0, y0, x1, y1) = self.bounds();
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let margin = 0.08 * span;
        let (vx, vy) = (x0 - margin, -y1 - margin);
        let (vw, vh) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
        let dot_radius = 0.008 * span;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="640" height="{:.0}" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#,
            640.0 * vh / vw
        );
        let _ = writeln!(
            out,
            r#"<rect x="{vx:.6}" y="{vy:.6}" width="{vw:.6}" height="{vh:.6}" fill="white"/>"#
        );
        for layer in &self.layers {
            match layer.shape {
                LayerShape::Polyline => {
                    let pts: Vec<String> = layer
                        .points
                        .iter()
                        .filter(|p| p.is_finite())
                        .map(|p| format!("{:.6},{:.6}", p.x, -p.y))
                        .collect();
                    let _ = writeln!(
                        out,
                        r#"<polyline id="{}" fill="none" stroke="{}" stroke-width="1.5" vector-effect="non-scaling-stroke" stroke-linejoin="round" points="{}"/>"#,
                        layer.id,
                        layer.stroke,
                        pts.join(" ")
                    );
                }
                LayerShape::Segment => {
                    let (a, b) = (layer.points[0], layer.points[1]);
                    let _ = writeln!(
                        out,
                        r#"<line id="{}" stroke="{}" stroke-width="1" vector-effect="non-scaling-stroke" x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#,
                        layer.id, layer.stroke, a.x, -a.y, b.x, -b.y
                    );
                }
                LayerShape::Dot => {
                    let p = layer.points[0];
                    let _ = writeln!(
                        out,
                        r#"<circle id="{}" fill="{}" cx="{:.6}" cy="{:.6}" r="{dot_radius:.6}"/>"#,
                        layer.id, layer.stroke, p.x, -p.y
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

pub const BASE_STROKE: &str = "#1f3b73";
pub const ISOPTIC_STROKE: &str = "#c0392b";
pub const CIRCLE_STROKE: &str = "#999999";

/// Cycloid-plus-isoptic figure in the style of the reference plots.
pub fn isoptic_figure(spec: &CycloidSpec, alpha: f64, samples: usize) -> Result<Figure> {
    let isoptic = sample_isoptic(spec, alpha, samples)?;
    let mut fig = Figure::new();
    fig.polyline("base", BASE_STROKE, points(&sample_base(spec, samples)))
        .polyline("isoptic", ISOPTIC_STROKE, points(&isoptic));
    Ok(fig)
}

fn points(samples: &[Sample]) -> Vec<Point2> {
    samples.iter().map(|s| s.point).collect()
}

#[derive(Debug, Clone, Serialize)]
struct BaseInfo {
    kind: CycloidKind,
    p: u32,
    q: u32,
    a: f64,
}

#[derive(Debug, Clone, Serialize)]
struct CircleInfo {
    radius: f64,
}

#[derive(Debug, Clone, Serialize)]
struct RadiusStats {
    mean: f64,
    stddev: f64,
}

#[derive(Debug, Clone, Serialize)]
struct JsonDocument {
    base: BaseInfo,
    curve: &'static str,
    alpha: Option<f64>,
    alpha_text: Option<String>,
    closure_period: f64,
    trochoid: TrochoidSpec,
    circle: Option<CircleInfo>,
    alignment: Option<ParamAlignment>,
    #[serde(skip_serializing_if = "Option::is_none")]
    radius_stats: Option<RadiusStats>,
    points: Vec<[f64; 3]>,
}

fn radius_stats(samples: &[Sample]) -> RadiusStats {
    let n = samples.len() as f64;
    let mean = samples.iter().map(|s| s.point.norm()).sum::<f64>() / n;
    let var = samples.iter().map(|s| (s.point.norm() - mean).powi(2)).sum::<f64>() / n;
    RadiusStats {
        mean,
        stddev: var.sqrt(),
    }
}

fn circle_trochoid(spec: &CycloidSpec, radius: f64) -> TrochoidSpec {
    TrochoidSpec {
        kind: spec.kind().trochoid(),
        fixed_radius: 0.0,
        rolling_radius: 0.0,
        pen_offset: radius,
    }
}

/// Runs a job and returns the file contents it produces.
pub fn run(job: &RenderJob) -> Result<String> {
    job.validate()?;
    let spec = &job.spec;
    let base = sample_base(spec, job.samples);
    let alpha = job.alpha.map(|a| a.value());

    let (curve_samples, class) = match (job.curve, alpha) {
        (CurveSelector::Base, _) | (_, None) => (base.clone(), None),
        (CurveSelector::Trochoid, Some(alpha)) => {
            let class = classify(spec, alpha)?;
            (sample_class(spec, &class, job.samples), Some(class))
        }
        (_, Some(alpha)) => (sample_isoptic(spec, alpha, job.samples)?, Some(classify(spec, alpha)?)),
    };
    let circle = alpha.and_then(|a| degenerate_circle(spec, a));

    match job.format {
        Format::Csv => Ok(write_csv(&curve_samples)),
        Format::Svg => {
            let mut fig = Figure::new();
            fig.polyline("base", BASE_STROKE, points(&base));
            if job.curve != CurveSelector::Base {
                if let (CurveSelector::CircleCheck, Some(c)) = (job.curve, circle) {
                    let ring = sample_times(2.0 * PI, 721)
                        .into_iter()
                        .map(|s| Point2::polar(s) * c.radius)
                        .collect();
                    fig.polyline("circle", CIRCLE_STROKE, ring);
                }
                fig.polyline(job.curve.name(), ISOPTIC_STROKE, points(&curve_samples));
            }
            Ok(fig.to_svg())
        }
        Format::Json => {
            let trochoid = match class {
                Some(IsopticClass::Trochoid(r)) => r.trochoid,
                Some(IsopticClass::Circle(c)) => circle_trochoid(spec, c.radius),
                None => spec.as_trochoid(),
            };
            let doc = JsonDocument {
                base: BaseInfo {
                    kind: spec.kind(),
                    p: spec.shape().p(),
                    q: spec.shape().q(),
                    a: spec.a(),
                },
                curve: job.curve.name(),
                alpha,
                alpha_text: job.alpha.map(|a| a.to_string()),
                closure_period: spec.closure_period(),
                trochoid,
                circle: circle.map(|c| CircleInfo { radius: c.radius }),
                alignment: alpha.map(|a| alignment(spec, a)).transpose()?,
                radius_stats: (job.curve == CurveSelector::CircleCheck).then(|| radius_stats(&curve_samples)),
                points: curve_samples.iter().map(|s| [s.t, s.point.x, s.point.y]).collect(),
            };
            let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
            text.push('\n');
            Ok(text)
        }
    }
}

/// One panel of the reference figures.
#[derive(Debug, Clone, Copy)]
pub struct FigurePanel {
    pub name: &'static str,
    pub kind: CycloidKind,
    pub p: u32,
    pub q: u32,
    pub alpha: (i64, u64),
}

impl FigurePanel {
    pub fn spec(&self) -> CycloidSpec {
        let shape = crate::curve::RationalShape::new(self.p, self.q).expect("panel shape");
        CycloidSpec::new(self.kind, shape).expect("panel spec")
    }

    pub fn alpha(&self) -> Angle {
        Angle::pi_fraction(self.alpha.0, self.alpha.1)
    }
}

pub const FIGURE_PANELS: [FigurePanel; 5] = [
    FigurePanel { name: "fig1-left-hypo-a4-pi3", kind: CycloidKind::Hypocycloid, p: 1, q: 4, alpha: (1, 3) },
    FigurePanel { name: "fig1-right-hypo-a6-2pi3", kind: CycloidKind::Hypocycloid, p: 1, q: 6, alpha: (2, 3) },
    FigurePanel { name: "fig2-left-epi-a3-pi3", kind: CycloidKind::Epicycloid, p: 1, q: 3, alpha: (1, 3) },
    FigurePanel { name: "fig2-right-epi-a6-pi6", kind: CycloidKind::Epicycloid, p: 1, q: 6, alpha: (1, 6) },
    FigurePanel { name: "fig3-hypo-a5-3pi4-circle", kind: CycloidKind::Hypocycloid, p: 1, q: 5, alpha: (3, 4) },
];
