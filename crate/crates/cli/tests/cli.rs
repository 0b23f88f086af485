use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphsign")).args(args).output().expect("binary runs")
}

fn graph_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_loop() {
    let f = graph_file("# one loop\nv 1\ne 0 0\n");
    let out = run(&["compute", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0], "0\tP_V=()\tsign(P_V)=+1\tsign(|P_E|)=+1\teps=[+1]\ttheta_K=+1\ttheta_S=+1\tagree=true");
    assert_eq!(rows[1], "1\tP_V=()\tsign(P_V)=+1\tsign(|P_E|)=+1\teps=[-1]\ttheta_K=-1\ttheta_S=-1\tagree=true");
}

#[test]
fn compute_diagnostics() {
    let f = graph_file("v 1\ne 0 0\n");
    let text = stdout(&run(&["compute", "--diagnostics", f.path().to_str().unwrap()]));
    assert!(text.contains("\tdet_C1=-1\tdet_C0=1\tdet_H1=-1\tcomponent_sign=+1\trelation=true"));
}

#[test]
fn compute_disconnected_needs_extended() {
    let f = graph_file("v 4\ne 0 1\ne 2 3\n");
    let path = f.path().to_str().unwrap();
    let out = run(&["compute", path]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("extended"));

    let out = run(&["compute", "--extended", path]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("P_V=(0 2)(1 3)"));
    assert!(text.lines().filter(|l| !l.starts_with('#')).all(|l| l.ends_with("agree=true")));
}

#[test]
fn compute_reports_parse_errors() {
    let f = graph_file("v 2\ne 0 5\n");
    let out = run(&["compute", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn verify_text_and_json() {
    let args = ["verify", "--max-vertices", "3", "--max-edges", "3", "--max-multiplicity", "2", "--loops"];
    let out = run(&args);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("failures=0\n"));
    assert!(text.starts_with("graphs_checked="));
    // deterministic payload; timing only on stderr
    assert_eq!(text, stdout(&run(&args)));
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed="));

    let mut json_args = args.to_vec();
    json_args.push("--json");
    let out = run(&json_args);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["graphs_checked"].as_u64().unwrap() > 0);
}

#[test]
fn verify_minimal() {
    let out = run(&["verify", "--max-vertices", "1", "--max-edges", "0", "--max-multiplicity", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("graphs_checked=1\nautomorphisms_checked=1\n"));
}

#[test]
fn census_output() {
    let out = run(&["census", "--max-vertices", "3", "--max-edges", "3", "--loops", "--connected-only"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v 1;e 0 0\ttrue\n"));
    assert!(text.contains("v 3;e 0 1;e 0 2;e 1 2\tfalse\n"));
    assert!(text.contains("v 2;e 0 1\tfalse\n"));
    assert!(text.contains("# graphs="));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| l.starts_with("ok\t")));
}
