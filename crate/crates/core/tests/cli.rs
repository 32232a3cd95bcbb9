use std::path::Path;
use std::process::{Command, Output};

fn revsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revsurf")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&revsurf(&["validate", "--preset", "sphere"])), 0);
    let o = revsurf(&["validate", "--profile", "s", "--length", "1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("a(L)=0"));
    let o = revsurf(&["validate", "--profile", "sin(s", "--length", "pi"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("offset 5"), "{}", stderr(&o));
}

#[test]
fn validate_json_reports_residuals() {
    let o = revsurf(&["validate", "--profile", "s", "--length", "1", "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    let c = v["conditions"].as_array().unwrap().iter().find(|c| c["name"] == "a(L)=0").unwrap();
    assert_eq!(c["residual"], 1.0);
}

#[test]
fn check_verdicts() {
    assert_eq!(code(&revsurf(&["check", "--preset", "sphere"])), 0);
    assert_eq!(code(&revsurf(&["check", "--preset", "dumbbell:0.25"])), 0);
    let o = revsurf(&["check", "--preset", "bump:0.5", "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "not_embeddable");
    assert!((v["sup_a_prime"]["value"].as_f64().unwrap() - 1.2423).abs() < 1e-4);
    for key in ["criteria", "pole_curvature", "grid_n", "tol"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn check_output_is_deterministic() {
    let args = ["check", "--profile", "sin(s)*(1+0.3*sin(s)^2-0.2*sin(s)^4)", "--length", "pi", "--json"];
    let (a, b) = (revsurf(&args), revsurf(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
}

#[test]
fn check_refuses_invalid_profile() {
    assert_eq!(code(&revsurf(&["check", "--profile", "s*(pi-s)", "--length", "pi"])), 2);
}

#[test]
fn curvature_dump() {
    let o = revsurf(&["curvature", "--preset", "sphere", "--samples", "5"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,a,a_prime,K"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| (r[3] - 1.0).abs() < 1e-9));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.csv");
    let o = revsurf(&["curvature", "--preset", "bump:0.5", "--samples", "9", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let first: Vec<f64> = text.lines().nth(1).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first[0], 0.0);
    assert!((first[3] + 2.0).abs() < 1e-6);

    assert_eq!(code(&revsurf(&["curvature", "--preset", "sphere", "--samples", "1"])), 2);
    let missing = dir.path().join("no/such/dir/k.csv");
    assert_eq!(code(&revsurf(&["curvature", "--preset", "sphere", "--out", missing.to_str().unwrap()])), 2);
}

fn obj_counts(path: &Path) -> (usize, usize) {
    let text = std::fs::read_to_string(path).unwrap();
    (text.lines().filter(|l| l.starts_with("v ")).count(), text.lines().filter(|l| l.starts_with("f ")).count())
}

#[test]
fn embed_writes_meshes() {
    let dir = tempfile::tempdir().unwrap();
    let obj = dir.path().join("s.obj");
    let o = revsurf(&["embed", "--preset", "sphere", "--ns", "64", "--ntheta", "64", "--out", obj.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(obj_counts(&obj), (63 * 64 + 2, 2 * 64 * 63));
    assert!(stdout(&o).contains("induced metric"));

    let stl = dir.path().join("d.stl");
    let o = revsurf(&["embed", "--preset", "dumbbell:0.25", "--c", "1.5", "--out", stl.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::metadata(&stl).unwrap().len() as usize, 84 + 50 * 2 * 64 * 127);
}

#[test]
fn embed_refusals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.obj");
    let o = revsurf(&["embed", "--preset", "bump:0.5", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("1.24225"), "{}", stderr(&o));
    assert!(!out.exists());
    let o = revsurf(&["embed", "--preset", "sphere", "--out", dir.path().join("x.ply").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn samples_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.csv");
    let mut text = String::from("s,a\n");
    for i in 0..200 {
        let s = std::f64::consts::PI * i as f64 / 199.0;
        text.push_str(&format!("{s},{}\n", s.sin()));
    }
    std::fs::write(&path, text).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&revsurf(&["check", "--csv", p, "--tol", "1e-4"])), 0);
    assert_eq!(code(&revsurf(&["check", "--csv", dir.path().join("missing.csv").to_str().unwrap()])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&revsurf(&[])), 2);
    assert_eq!(code(&revsurf(&["check", "--preset", "sphere", "--profile", "s", "--length", "1"])), 2);
    assert_eq!(code(&revsurf(&["check", "--preset", "teapot"])), 2);
    assert_eq!(code(&revsurf(&["validate", "--profile", "sin(s)", "--length", "tau"])), 2);
    assert_eq!(code(&revsurf(&["check", "--preset", "sphere", "--grid", "8"])), 2);
}

#[test]
fn presets_and_lengths() {
    let o = revsurf(&["presets"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("dumbbell"));
    assert_eq!(code(&revsurf(&["validate", "--profile", "sin(s/2)*2", "--length", "2pi"])), 0);
    assert_eq!(code(&revsurf(&["validate", "--profile", "sin(s)", "--length", "3.141592653589793"])), 0);
}
