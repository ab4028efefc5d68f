//! Browser bindings for the interactive isoptic page in `www/`.
//!
//! Three operations are exported: an SVG of a cycloid with its isoptic (and
//! optionally the tangent pair through one isoptic point), a JSON summary of
//! the classification, and the raw tangent construction at a parameter.

use std::f64::consts::PI;

use isoptica::isoptic::{classify, degenerate_alpha, tangent_pair, IsopticClass};
use isoptica::render::{isoptic_figure, CIRCLE_STROKE};
use isoptica::support::alignment;
use isoptica::{CycloidKind, CycloidSpec, Point2, RationalShape};
use serde_json::json;
use wasm_bindgen::prelude::*;

const MAX_SAMPLES: usize = 20_000;

fn parse_spec(kind: &str, p: u32, q: u32) -> Result<CycloidSpec, String> {
    let kind = match kind {
        "hypo" => CycloidKind::Hypocycloid,
        "epi" => CycloidKind::Epicycloid,
        other => return Err(format!("unknown curve kind {other:?}")),
    };
    let shape = RationalShape::new(p, q).map_err(|e| e.to_string())?;
    CycloidSpec::new(kind, shape).map_err(|e| e.to_string())
}

/// SVG of the cycloid and its α-isoptic. With `tangent_t`, the two tangents
/// meeting at the isoptic point of that parameter are drawn too.
pub fn figure_svg(
    kind: &str,
    p: u32,
    q: u32,
    alpha: f64,
    samples: usize,
    tangent_t: Option<f64>,
) -> Result<String, String> {
    let spec = parse_spec(kind, p, q)?;
    let samples = samples.clamp(2, MAX_SAMPLES);
    let mut fig = isoptic_figure(&spec, alpha, samples).map_err(|e| e.to_string())?;
    if let Ok(IsopticClass::Circle(circle)) = classify(&spec, alpha) {
        let ring = (0..=360)
            .map(|i| Point2::polar(f64::from(i) * PI / 180.0) * circle.radius)
            .collect();
        fig.polyline("circle", CIRCLE_STROKE, ring);
    }
    if let Some(t) = tangent_t {
        let pair = tangent_pair(&spec, alpha, t).map_err(|e| e.to_string())?;
        fig.tangent_pair(&spec, &pair);
    }
    Ok(fig.to_svg())
}

/// Classification and alignment of the α-isoptic as a JSON object.
pub fn summary_json(kind: &str, p: u32, q: u32, alpha: f64) -> Result<String, String> {
    let spec = parse_spec(kind, p, q)?;
    let class = classify(&spec, alpha).map_err(|e| e.to_string())?;
    let align = alignment(&spec, alpha).map_err(|e| e.to_string())?;
    let value = json!({
        "base": { "kind": spec.kind(), "p": p, "q": q, "a": spec.a() },
        "alpha": alpha,
        "closure_period": spec.closure_period(),
        "cusps": spec.cusp_count(),
        "circle_alpha": degenerate_alpha(&spec),
        "isoptic": class,
        "alignment": align,
        "caveat": spec.caveat(),
    });
    Ok(value.to_string())
}

/// `[zx, zy, c0x, c0y, c1x, c1y, oriented_angle, line_angle]`: the isoptic
/// point, the two contact points and the angles between the tangents.
pub fn tangent_construction_values(kind: &str, p: u32, q: u32, alpha: f64, t: f64) -> Result<Vec<f64>, String> {
    let spec = parse_spec(kind, p, q)?;
    let pair = tangent_pair(&spec, alpha, t).map_err(|e| e.to_string())?;
    let [c0, c1] = pair.params.map(|s| spec.point(s));
    Ok(vec![
        pair.point.x,
        pair.point.y,
        c0.x,
        c0.y,
        c1.x,
        c1.y,
        pair.oriented_angle(),
        pair.line_angle(),
    ])
}

#[wasm_bindgen(js_name = isopticSvg)]
pub fn isoptic_svg(
    kind: &str,
    p: u32,
    q: u32,
    alpha: f64,
    samples: usize,
    tangent_t: Option<f64>,
) -> Result<String, JsValue> {
    figure_svg(kind, p, q, alpha, samples, tangent_t).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = isopticSummary)]
pub fn isoptic_summary(kind: &str, p: u32, q: u32, alpha: f64) -> Result<String, JsValue> {
    summary_json(kind, p, q, alpha).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = tangentConstruction)]
pub fn tangent_construction(kind: &str, p: u32, q: u32, alpha: f64, t: f64) -> Result<Vec<f64>, JsValue> {
    tangent_construction_values(kind, p, q, alpha, t).map_err(|e| JsValue::from_str(&e))
}
