//! Cross-validation grid: every route against the tangent-intersection oracle.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::curve::{CycloidKind, CycloidSpec, RationalShape};
use crate::error::Result;
use crate::isoptic::{classify, isoptic_point, tangent_pair};
use crate::support::aligned_support_point;
use crate::tangent::line_angle;

/// Grid of base curves, angles and parameter samples.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    /// Hypocycloids as `[p, q]` pairs (`a = q/p`).
    #[serde(default)]
    pub hypo: Vec<[u32; 2]>,
    /// Epicycloids as `[p, q]` pairs.
    #[serde(default)]
    pub epi: Vec<[u32; 2]>,
    pub alphas: Vec<Angle>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_samples() -> usize {
    100
}

fn default_seed() -> u64 {
    0x150_0971c
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            hypo: vec![[1, 3], [1, 4], [1, 5], [1, 6], [2, 5], [3, 7]],
            epi: vec![[1, 1], [1, 2], [1, 3], [1, 6], [2, 5]],
            alphas: vec![
                Angle::pi_fraction(1, 6),
                Angle::pi_fraction(1, 3),
                Angle::pi_fraction(1, 2),
                Angle::pi_fraction(2, 3),
                Angle::pi_fraction(3, 4),
            ],
            samples: default_samples(),
            seed: default_seed(),
        }
    }
}

impl GridConfig {
    pub fn single(spec: CycloidSpec, alpha: Angle) -> Self {
        let pq = [spec.shape().p(), spec.shape().q()];
        let (hypo, epi) = match spec.kind() {
            CycloidKind::Hypocycloid => (vec![pq], vec![]),
            CycloidKind::Epicycloid => (vec![], vec![pq]),
        };
        GridConfig {
            hypo,
            epi,
            alphas: vec![alpha],
            ..GridConfig::default()
        }
    }

    pub fn specs(&self) -> Result<Vec<CycloidSpec>> {
        let hypo = self.hypo.iter().map(|&[p, q]| (CycloidKind::Hypocycloid, p, q));
        let epi = self.epi.iter().map(|&[p, q]| (CycloidKind::Epicycloid, p, q));
        hypo.chain(epi)
            .map(|(kind, p, q)| CycloidSpec::new(kind, RationalShape::new(p, q)?))
            .collect()
    }
}

/// Maximum errors observed in one `(curve, α)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellReport {
    pub spec: CycloidSpec,
    pub alpha: Angle,
    pub samples: usize,
    /// `|closed form - oracle|`
    pub closed_form: f64,
    /// `|classification point - oracle|`
    pub classification: f64,
    /// `|aligned support route - oracle|`
    pub support: f64,
    /// `|line angle - min(α, π-α)|`
    pub line_angle: f64,
    /// `|oriented tangent angle - α|`
    pub oriented_angle: f64,
    /// Oracle evaluations that failed (parallel tangents).
    pub oracle_failures: usize,
    /// Set when a route could not be evaluated at all.
    pub error: Option<String>,
}

impl CellReport {
    pub fn id(&self) -> String {
        format!("{} alpha={}", self.spec, self.alpha)
    }

    pub fn max_error(&self) -> f64 {
        [
            self.closed_form,
            self.classification,
            self.support,
            self.line_angle,
            self.oriented_angle,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn passes(&self, tolerance: f64) -> bool {
        self.error.is_none() && self.oracle_failures == 0 && self.max_error() < tolerance
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub tolerance: f64,
    pub cells: Vec<CellReport>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(|c| c.passes(self.tolerance))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.passes(self.tolerance))
    }

    pub fn max_error(&self) -> f64 {
        self.cells.iter().map(CellReport::max_error).fold(0.0, f64::max)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<24} {:>10} {:>10} {:>10} {:>10} {:>10}  status",
            "cell", "closed", "trochoid", "support", "line-ang", "orient-ang"
        )?;
        for c in &self.cells {
            let status = if c.passes(self.tolerance) { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<24} {:>10.3e} {:>10.3e} {:>10.3e} {:>10.3e} {:>10.3e}  {status}",
                c.id(),
                c.closed_form,
                c.classification,
                c.support,
                c.line_angle,
                c.oriented_angle
            )?;
            if let Some(e) = &c.error {
                writeln!(f, "    error: {e}")?;
            }
            if c.oracle_failures > 0 {
                writeln!(f, "    oracle failures: {}", c.oracle_failures)?;
            }
        }
        let passing = self.cells.len() - self.failures().count();
        writeln!(
            f,
            "{passing}/{} cells within tolerance {:e}; max error {:.3e}",
            self.cells.len(),
            self.tolerance,
            self.max_error()
        )
    }
}

pub fn validate_cell(spec: &CycloidSpec, alpha: Angle, samples: usize, seed: u64) -> CellReport {
    let mut report = CellReport {
        spec: *spec,
        alpha,
        samples,
        closed_form: 0.0,
        classification: 0.0,
        support: 0.0,
        line_angle: 0.0,
        oriented_angle: 0.0,
        oracle_failures: 0,
        error: None,
    };
    let a = alpha.value();
    let class = match classify(spec, a) {
        Ok(c) => c,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let period = spec.closure_period();
    for _ in 0..samples {
        let t = rng.random_range(0.0..period);
        let pair = match tangent_pair(spec, a, t) {
            Ok(p) => p,
            Err(_) => {
                report.oracle_failures += 1;
                continue;
            }
        };
        let oracle = pair.point;
        let routes = isoptic_point(spec, a, t).and_then(|z| Ok((z, aligned_support_point(spec, a, t)?)));
        let (closed, support) = match routes {
            Ok(r) => r,
            Err(e) => {
                report.error = Some(e.to_string());
                return report;
            }
        };
        report.closed_form = report.closed_form.max(closed.distance(oracle));
        report.classification = report.classification.max(class.point(t).distance(oracle));
        report.support = report.support.max(support.distance(oracle));
        report.line_angle = report.line_angle.max((pair.line_angle() - line_angle(a)).abs());
        report.oriented_angle = report.oriented_angle.max((pair.oriented_angle() - a).abs());
    }
    report
}

/// Runs every cell of the grid. Each cell gets its own seed derived from
/// `config.seed` and its position, so results do not depend on grid order
/// of other cells.
pub fn validate(config: &GridConfig, tolerance: f64) -> Result<ValidationReport> {
    let specs = config.specs()?;
    let mut cells = Vec::with_capacity(specs.len() * config.alphas.len());
    for spec in &specs {
        for &alpha in &config.alphas {
            let seed = config.seed
                ^ (u64::from(spec.shape().p()) << 40)
                ^ (u64::from(spec.shape().q()) << 20)
                ^ alpha.value().to_bits().rotate_left(7)
                ^ matches!(spec.kind(), CycloidKind::Epicycloid) as u64;
            cells.push(validate_cell(spec, alpha, config.samples, seed));
        }
    }
    Ok(ValidationReport { tolerance, cells })
}
