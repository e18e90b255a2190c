use std::process::{Command, Output};

use serde_json::Value;

fn pyquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pyquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    pyquad(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = pyquad(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn fib_values() {
    assert_eq!(stdout(&pyquad(&["fib", "--n", "4"])).trim(), "3");
    assert_eq!(stdout(&pyquad(&["fib", "--n", "0"])).trim(), "0");
    assert_eq!(stdout(&pyquad(&["fib", "--n", "4000", "--mod", "3"])).trim(), "0");
    let v = json(&["fib", "--n", "100", "--format", "json"]);
    assert_eq!(v["value"], "354224848179261915075");
}

#[test]
fn fib_rejects_bad_input() {
    assert_eq!(code(&["fib", "--n", "-1"]), 2);
    assert_eq!(code(&["fib", "--n", "5", "--mod", "1"]), 2);
}

#[test]
fn triples_rows() {
    let v = json(&["triples", "--from", "1", "--to", "3", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["leg_a"], "3");
    assert_eq!(rows[0]["leg_b"], "4");
    assert_eq!(rows[0]["hyp"], "5");
    assert_eq!(rows[0]["primitive"], true);
    assert_eq!(rows[2]["leg_a"], "16");
    assert_eq!(rows[2]["hyp"], "34");
    assert_eq!(rows[2]["gcd"], "2");
    assert_eq!(rows[2]["primitive"], false);

    let csv = stdout(&pyquad(&["triples", "--from", "1", "--to", "1", "--scale", "2", "--format", "csv"]));
    let lines: Vec<_> = csv.lines().collect();
    assert_eq!(lines[0], "i,leg_a,leg_b,hyp,gcd,primitive");
    assert_eq!(lines[1], "1,6,8,10,2,false");
}

#[test]
fn triples_rejects_bad_range() {
    assert_eq!(code(&["triples", "--from", "0", "--to", "3"]), 2);
    assert_eq!(code(&["triples", "--from", "4", "--to", "3"]), 2);
    assert_eq!(code(&["triples", "--from", "1", "--to", "3", "--scale", "0"]), 2);
}

#[test]
fn quad_build_both_orientations() {
    let v = json(&["quad", "build", "--leg", "3", "--hyp", "5", "--format", "json"]);
    assert_eq!(v["poly"]["a"], "3");
    assert_eq!(v["poly"]["b"], "30");
    assert_eq!(v["poly"]["c"], "27");
    assert_eq!(v["roots"]["x1"], "-1/1");
    assert_eq!(v["roots"]["x2"], "-9/1");
    assert_eq!(v["vertex_y"], "-48/1");
    assert_eq!(v["integral_signed"], "-256/1");

    let v = json(&["quad", "build", "--leg", "3", "--hyp", "5", "--neg", "--format", "json"]);
    assert_eq!(v["poly"]["a"], "-3");
    assert_eq!(v["poly"]["c"], "-27");
    assert_eq!(v["vertex_x"], "5/1");
    assert_eq!(v["vertex_y"], "48/1");
    assert_eq!(v["integral_abs"], "256/1");
}

#[test]
fn quad_analyze_negative_coefficients() {
    let v = json(&["quad", "analyze", "--a", "-1", "--b", "10", "--c", "-9", "--format", "json"]);
    assert_eq!(v["roots"]["kind"], "two-distinct");
    assert_eq!(v["integral_abs"], "256/3");

    let v = json(&["quad", "analyze", "--a", "1", "--b", "0", "--c", "1", "--format", "json"]);
    assert_eq!(v["roots"]["kind"], "irrational-or-complex");
    assert!(v.get("integral_signed").is_none());
}

#[test]
fn quad_rejects_bad_input() {
    assert_eq!(code(&["quad", "build", "--leg", "3", "--hyp", "6"]), 2);
    assert_eq!(code(&["quad", "build", "--leg", "5", "--hyp", "5"]), 2);
    assert_eq!(code(&["quad", "analyze", "--a", "0", "--b", "1", "--c", "1"]), 2);
}

#[test]
fn family_table() {
    let csv = stdout(&pyquad(&["family", "--n-max", "10", "--format", "csv"]));
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,a,b,c,x1,x2,vx,vy,integral_abs,flavor,closed_form,match"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r[11] == "true"));
    let n2f = rows.iter().find(|r| r[0] == "2" && r[9] == "f").unwrap();
    assert_eq!(n2f[8], "20736");

    let v = json(&["family", "--n-max", "3", "--flavor", "g", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[0]["integral_abs"], "144/1");
}

#[test]
fn verify_passes() {
    assert_eq!(code(&["verify", "mod3"]), 0);
    assert_eq!(code(&["verify", "theorem3", "--max", "30"]), 0);
    let v = json(&["verify", "all", "--max", "20", "--format", "json"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_fault_exits_one_with_counterexamples() {
    let out = pyquad(&["verify", "theorem3", "--max", "5", "--fault", "f:3:b:1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ce = v[0]["counterexamples"].as_array().unwrap();
    assert!(!ce.is_empty());
    assert!(ce.iter().all(|c| c["i"] == "3" && c["flavor"] == "f"));
}

#[test]
fn verify_rejects_unknown_claim() {
    assert_eq!(code(&["verify", "nonsense"]), 2);
    assert_eq!(code(&["verify", "mod3", "--fault", "x:1:a:1"]), 2);
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.svg");
    let out = pyquad(&["plot", "--leg", "3", "--hyp", "5", "--neg", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(svg.contains("<polyline"));
    assert!(svg.contains("<polygon"));
    assert_eq!(svg.matches("class=\"root-label\"").count(), 2);
}

#[test]
fn plot_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("f.svg");
    assert_eq!(code(&["plot", "--leg", "3", "--hyp", "5", "--out", path.to_str().unwrap()]), 2);
    let ok = dir.path().join("f.svg");
    assert_eq!(code(&["plot", "--leg", "2", "--hyp", "5", "--out", ok.to_str().unwrap()]), 2);
    assert!(!ok.exists());
}
