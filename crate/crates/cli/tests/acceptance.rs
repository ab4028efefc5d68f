//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::Instant;

use isoptica::isoptic::{classify, degenerate_alpha, degenerate_circle, isoptic_point, tangent_pair};
use isoptica::render::FIGURE_PANELS;
use isoptica::support::{aligned_support_point, reconstruct_curve, support_of};
use isoptica::tangent::{inter_tangent_cos, line_angle, tangent_vector};
use isoptica::{CycloidKind, CycloidSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ROUTE_TOLERANCE: f64 = 1e-9;
const ANGLE_IDENTITY_TOLERANCE: f64 = 1e-12;
const ROUTE_RUNTIME_LIMIT_S: f64 = 10.0;
const KERNEL_RUNTIME_LIMIT_S: f64 = 5.0;

const ALPHAS: [(f64, &str); 5] = [
    (PI / 6.0, "pi/6"),
    (PI / 3.0, "pi/3"),
    (PI / 2.0, "pi/2"),
    (2.0 * PI / 3.0, "2pi/3"),
    (3.0 * PI / 4.0, "3pi/4"),
];

fn hypo(p: u32, q: u32) -> CycloidSpec {
    CycloidSpec::hypocycloid(p, q).unwrap()
}

fn epi(p: u32, q: u32) -> CycloidSpec {
    CycloidSpec::epicycloid(p, q).unwrap()
}

/// hypo a ∈ {3, 4, 5, 6, 5/2, 7/3}, epi a ∈ {2, 3, 6, 5/2}
fn route_grid() -> Vec<CycloidSpec> {
    vec![
        hypo(1, 3),
        hypo(1, 4),
        hypo(1, 5),
        hypo(1, 6),
        hypo(2, 5),
        hypo(3, 7),
        epi(1, 2),
        epi(1, 3),
        epi(1, 6),
        epi(2, 5),
    ]
}

fn t_samples(spec: &CycloidSpec, n: usize) -> Vec<f64> {
    let period = spec.closure_period();
    (0..n).map(|i| period * (i as f64 + 0.5) / n as f64).collect()
}

struct Outcome {
    passed: bool,
    detail: String,
    notes: Vec<String>,
}

fn criterion_route_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut closed, mut class) = (0.0f64, 0.0f64);
    let mut notes = Vec::new();
    for spec in route_grid() {
        for (alpha, label) in ALPHAS {
            let classification = classify(&spec, alpha).unwrap();
            if matches!(classification, isoptica::isoptic::IsopticClass::Circle(_)) {
                notes.push(format!("{spec} alpha={label}: classified as circle"));
            }
            for t in t_samples(&spec, 100) {
                let oracle = tangent_pair(&spec, alpha, t).unwrap().point;
                closed = closed.max(isoptic_point(&spec, alpha, t).unwrap().distance(oracle));
                class = class.max(classification.point(t).distance(oracle));
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        passed: closed < ROUTE_TOLERANCE && class < ROUTE_TOLERANCE && secs < ROUTE_RUNTIME_LIMIT_S,
        detail: format!("max |closed - oracle| = {closed:.2e}, max |trochoid - oracle| = {class:.2e}, {secs:.2} s"),
        notes,
    }
}

fn criterion_support_route() -> Outcome {
    let mut worst = 0.0f64;
    let mut notes = Vec::new();
    for spec in route_grid() {
        for (alpha, label) in ALPHAS {
            let cell = t_samples(&spec, 100)
                .into_iter()
                .map(|t| {
                    let oracle = tangent_pair(&spec, alpha, t).unwrap().point;
                    aligned_support_point(&spec, alpha, t).unwrap().distance(oracle)
                })
                .fold(0.0f64, f64::max);
            if cell >= ROUTE_TOLERANCE {
                notes.push(format!("failing cell {spec} alpha={label}: {cell:.3e}"));
            }
            worst = worst.max(cell);
        }
    }
    Outcome {
        passed: notes.is_empty(),
        detail: format!("max |support(aligned) - oracle| = {worst:.2e}, {} failing cells", notes.len()),
        notes,
    }
}

fn criterion_viewing_angle() -> Outcome {
    let mut worst = 0.0f64;
    let mut residual = 0.0f64;
    for spec in route_grid() {
        for (alpha, _) in ALPHAS {
            for t in t_samples(&spec, 100) {
                let pair = tangent_pair(&spec, alpha, t).unwrap();
                worst = worst.max((pair.line_angle() - line_angle(alpha)).abs());
                let z = isoptic_point(&spec, alpha, t).unwrap();
                for line in pair.lines {
                    residual = residual.max(line.residual(z).abs());
                }
            }
        }
    }
    Outcome {
        passed: worst < ROUTE_TOLERANCE && residual < ROUTE_TOLERANCE,
        detail: format!("max |line angle - min(a, pi-a)| = {worst:.2e}, max incidence residual = {residual:.2e}"),
        notes: vec![],
    }
}

fn criterion_angle_identity() -> Outcome {
    let specs = [hypo(1, 3), hypo(1, 4), hypo(1, 6), hypo(2, 5), epi(1, 3), epi(2, 5)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a_6e);
    let mut worst = 0.0f64;
    for spec in specs {
        let period = spec.closure_period();
        for _ in 0..2000 {
            let t = rng.random_range(0.0..period);
            let phi = rng.random_range(-PI..PI);
            let dot = tangent_vector(&spec, t - phi).dot(tangent_vector(&spec, t + phi));
            worst = worst.max((dot - inter_tangent_cos(&spec, phi)).abs());
        }
    }
    Outcome {
        passed: worst < ANGLE_IDENTITY_TOLERANCE,
        detail: format!("sup |dot - cos((a-+2)phi)| = {worst:.2e} over 6 x 2000 samples"),
        notes: vec![],
    }
}

fn criterion_degenerate_circle() -> Outcome {
    let mut passed = true;
    let mut notes = Vec::new();
    let mut worst = 0.0f64;
    for q in [3, 4, 5, 6] {
        let spec = hypo(1, q);
        let a = spec.a();
        let alpha = degenerate_alpha(&spec).unwrap();
        let radii: Vec<f64> = (0..1000)
            .map(|i| isoptic_point(&spec, alpha, spec.closure_period() * i as f64 / 1000.0).unwrap().norm())
            .collect();
        let mean = radii.iter().sum::<f64>() / 1000.0;
        let sd = (radii.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / 1000.0).sqrt();
        worst = worst.max(sd);
        let Some(circle) = degenerate_circle(&spec, alpha) else {
            passed = false;
            notes.push(format!("a={a}: degenerate circle not detected"));
            continue;
        };
        let printed = (a - 2.0) * (PI / (a - 1.0)).sin() / (a * ((a - 2.0) / (a - 1.0)).sin());
        let with_pi = (a - 2.0) * (PI / (a - 1.0)).sin() / (a * ((a - 2.0) * PI / (a - 1.0)).sin());
        let verdict = match ((mean - printed).abs() < 1e-9, (mean - with_pi).abs() < 1e-9) {
            (_, true) => "matches the formula with the pi factor restored",
            (true, false) => "matches the formula as printed",
            (false, false) => "matches neither formula",
        };
        passed &= sd < ROUTE_TOLERANCE && (circle.radius - mean).abs() < ROUTE_TOLERANCE;
        notes.push(format!(
            "a={a} alpha={alpha:.6}: radius {mean:.12} (stddev {sd:.1e}); printed {printed:.12}, with pi {with_pi:.12}: {verdict}"
        ));
    }
    Outcome {
        passed,
        detail: format!("max stddev of |z| = {worst:.2e}"),
        notes,
    }
}

fn criterion_reconstruction() -> Outcome {
    let specs = [
        hypo(1, 3),
        hypo(1, 4),
        hypo(1, 6),
        hypo(2, 5),
        epi(1, 2),
        epi(1, 3),
        epi(1, 6),
        epi(2, 5),
    ];
    let mut worst = 0.0f64;
    for spec in specs {
        let sf = support_of(&spec);
        // u range covering the whole closure period of the curve
        let span = spec.closure_period() * (spec.a() + 2.0 * spec.kind().sign()).abs() / 2.0;
        for i in 0..1000 {
            let u = -span / 2.0 + span * i as f64 / 1000.0;
            let z = reconstruct_curve(&sf, u);
            worst = worst.max(z.distance(spec.point(sf.contact_parameter(u))));
        }
    }
    Outcome {
        passed: worst < ROUTE_TOLERANCE,
        detail: format!("max |reconstructed - cycloid| = {worst:.2e} over 8 curves x 1000 samples"),
        notes: vec![],
    }
}

fn figure_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-figures");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn criterion_figures() -> Outcome {
    let dir = figure_dir();
    let mut notes = Vec::new();
    let mut passed = true;
    for panel in FIGURE_PANELS {
        let path = dir.join(format!("{}.svg", panel.name));
        let kind = match panel.kind {
            CycloidKind::Hypocycloid => "hypo",
            CycloidKind::Epicycloid => "epi",
        };
        let status = Command::new(env!("CARGO_BIN_EXE_isoptica"))
            .args(["render", "--kind", kind])
            .args(["--p", &panel.p.to_string(), "--q", &panel.q.to_string()])
            .args(["--alpha", &panel.alpha().to_string(), "--samples", "2000", "--format", "svg"])
            .arg("--out")
            .arg(&path)
            .status()
            .expect("cli runs");
        let text = std::fs::read_to_string(&path).unwrap_or_default();
        let ok = status.success()
            && match roxmltree::Document::parse(&text) {
                Ok(doc) => ["base", "isoptic"].iter().all(|id| {
                    doc.descendants().any(|n| {
                        n.tag_name().name() == "polyline"
                            && n.attribute("id") == Some(id)
                            && n.attribute("points").is_some_and(|p| p.split(' ').count() == 2000)
                    })
                }),
                Err(_) => false,
            };
        passed &= ok;
        notes.push(format!("{} {}", if ok { "ok  " } else { "FAIL" }, path.display()));
    }
    Outcome {
        passed,
        detail: "five panels rendered by `isoptica render`, parsed as XML, each with base and isoptic curves".into(),
        notes,
    }
}

fn criterion_kernel_invariants() -> Outcome {
    let start = Instant::now();
    let mut specs = route_grid();
    specs.extend([epi(1, 1), hypo(2, 3)]);
    let mut failures = Vec::new();
    for spec in &specs {
        let a = spec.a();
        let period = spec.closure_period();
        let (mut periodic, mut mirror, mut annulus, mut special, mut cusp) = (0.0f64, 0.0f64, true, 0.0f64, 0.0f64);
        for i in 0..100 {
            let t = -period + 2.0 * period * i as f64 / 100.0 + 0.01;
            let z = spec.point(t);
            periodic = periodic.max(spec.point(t + period).distance(z));
            mirror = mirror.max(spec.point(-t).distance(z.mirror()));
            let r = z.norm();
            annulus &= match spec.kind() {
                CycloidKind::Hypocycloid => r <= 1.0 + 1e-12 && r >= (a - 2.0).abs() / a - 1e-12,
                CycloidKind::Epicycloid => r >= 1.0 - 1e-12 && r <= (a + 2.0) / a + 1e-12,
            };
            special = special.max(spec.as_trochoid().point(t).distance(z));
        }
        for t in spec.cusp_parameters() {
            cusp = cusp.max((spec.point(t).norm() - 1.0).abs());
        }
        if periodic >= 1e-9 || mirror >= 1e-9 || !annulus || special >= 1e-12 || cusp >= 1e-12 {
            failures.push(format!(
                "{spec}: periodic {periodic:.1e} mirror {mirror:.1e} annulus {annulus} trochoid {special:.1e} cusp {cusp:.1e}"
            ));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome {
        passed: failures.is_empty() && secs < KERNEL_RUNTIME_LIMIT_S,
        detail: format!("periodicity, mirror symmetry, annulus, trochoid specialization, cusps on {} curves, {secs:.3} s", specs.len()),
        notes: failures,
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 route equivalence (closed form, trochoid vs oracle)", criterion_route_equivalence),
        ("2 support route after alignment", criterion_support_route),
        ("3 viewing angle at isoptic points", criterion_viewing_angle),
        ("4 inter-tangent angle identity", criterion_angle_identity),
        ("5 degenerate circle", criterion_degenerate_circle),
        ("6 curve reconstruction from quasi-support", criterion_reconstruction),
        ("7 figure reproduction", criterion_figures),
        ("8 curve kernel periodicity/symmetry", criterion_kernel_invariants),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let outcome = run();
        all &= outcome.passed;
        println!("[{}] {name}: {}", if outcome.passed { "PASS" } else { "FAIL" }, outcome.detail);
        for note in outcome.notes {
            println!("       {note}");
        }
    }
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
