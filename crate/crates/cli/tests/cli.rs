use std::f64::consts::PI;
use std::process::{Command, Output};

use isoptica::isoptic::isoptic_point;
use isoptica::{CycloidSpec, Point2};

fn isoptica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isoptica"))
        .args(args)
        .env_remove("ISOPTICA_TOLERANCE")
        .output()
        .expect("binary runs")
}

#[test]
fn csv_rows_match_library() {
    let out = isoptica(&[
        "render", "--kind", "epi", "--p", "1", "--q", "6", "--alpha", "pi/6", "--format", "csv", "--samples", "10",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x,y"));
    let spec = CycloidSpec::epicycloid(1, 6).unwrap();
    let mut rows = 0;
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        let z = isoptic_point(&spec, PI / 6.0, v[0]).unwrap();
        assert!(z.distance(Point2::new(v[1], v[2])) < 1e-9);
        rows += 1;
    }
    assert_eq!(rows, 10);
}

#[test]
fn json_reports_circle_for_figure_three() {
    let out = isoptica(&["render", "--kind", "hypo", "--p", "1", "--q", "5", "--alpha", "3pi/4", "--format", "json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"circle\": {"));
    assert!(text.contains("\"radius\": 0.6"));
    assert!(text.contains("\"alignment\""));
}

#[test]
fn writes_to_out_path_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let path = path.to_str().unwrap();
    let args = ["render", "--kind", "hypo", "--p", "2", "--q", "5", "--alpha", "0.9", "--format", "json", "--samples", "64", "--out", path];
    assert!(isoptica(&args).status.success());
    let first = std::fs::read(path).unwrap();
    assert!(isoptica(&args).status.success());
    assert_eq!(first, std::fs::read(path).unwrap());
}

#[test]
fn invalid_parameters_fail_with_diagnostic() {
    for args in [
        &["render", "--kind", "hypo", "--p", "1", "--q", "2", "--alpha", "pi/3"][..],
        &["render", "--kind", "hypo", "--p", "2", "--q", "8"][..],
        &["render", "--kind", "hypo", "--p", "1", "--q", "4", "--alpha", "pi"][..],
        &["render", "--kind", "hypo", "--p", "1", "--q", "4", "--alpha", "nonsense"][..],
        &["render", "--kind", "hypo", "--p", "1", "--q", "4", "--samples", "1"][..],
        &["render", "--kind", "hypo", "--p", "1", "--q", "4", "--curve", "isoptic"][..],
    ] {
        let out = isoptica(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_path_fails() {
    let out = isoptica(&["render", "--kind", "hypo", "--p", "1", "--q", "4", "--out", "/nonexistent-dir/x.svg"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn validate_default_grid_passes() {
    let out = isoptica(&["validate"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("55/55 cells"));
}

#[test]
fn validate_below_precision_floor_fails() {
    let out = isoptica(&["validate", "--tolerance", "1e-15"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cell over tolerance"));
    let env = Command::new(env!("CARGO_BIN_EXE_isoptica"))
        .arg("validate")
        .env("ISOPTICA_TOLERANCE", "1e-15")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(1));
}

#[test]
fn validate_single_cell() {
    let out = isoptica(&["validate", "--kind", "hypo", "--p", "1", "--q", "4", "--alpha", "pi/2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("hypo a=4 alpha=pi/2"));
    assert!(text.contains("1/1 cells"));
}

#[test]
fn validate_grid_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.toml");
    std::fs::write(&path, "hypo = [[1, 4], [2, 5]]\nepi = [[1, 3]]\nalphas = [\"pi/3\", 1.2]\nsamples = 20\nseed = 5\n").unwrap();
    let out = isoptica(&["validate", "--grid", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("6/6 cells"));

    std::fs::write(&path, "hypo = [[1, 4]]\nalphas = [\"pi/3\"]\nbogus = 1\n").unwrap();
    let out = isoptica(&["validate", "--grid", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figures_subcommand_writes_five_panels() {
    let dir = tempfile::tempdir().unwrap();
    let out = isoptica(&["figures", "--out-dir", dir.path().to_str().unwrap(), "--samples", "200"]);
    assert!(out.status.success());
    let count = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(count, 5);
}
