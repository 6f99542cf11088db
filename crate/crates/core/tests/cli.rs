//! End-to-end runs of the `mahler` binary: outputs and exit codes.

use std::fs;
use std::process::{Command, Output};

use mahler::reduction::DescentTrace;
use mahler::SymPolygon;

fn mahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mahler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_writes_a_reproducible_polygon() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = mahler(&[
            "gen",
            "--n",
            "6",
            "--seed",
            "11",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(SymPolygon::from_json(&text).unwrap().len(), 12);
}

#[test]
fn gen_rejects_bad_spec_with_usage_code() {
    assert_eq!(code(&mahler(&["gen", "--n", "1"])), 2);
    assert_eq!(code(&mahler(&["gen", "--n", "50", "--bound", "2"])), 2);
    assert_eq!(code(&mahler(&["gen"])), 2);
}

#[test]
fn volume_of_named_hexagon() {
    let out = mahler(&["volume", "named:hex6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("vertices:  6"));
    assert!(text.contains("mahler:    9 (9.000000)"));
}

#[test]
fn unknown_name_and_missing_file_are_usage_errors() {
    assert_eq!(code(&mahler(&["volume", "named:heptagon"])), 2);
    assert_eq!(code(&mahler(&["volume", "/nonexistent/poly.json"])), 2);
}

#[test]
fn malformed_json_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, r#"{"vertices": [["1", "x"]]}"#).unwrap();
    assert_eq!(code(&mahler(&["volume", path.to_str().unwrap()])), 2);
    fs::write(&path, "not json").unwrap();
    assert_eq!(code(&mahler(&["verify", path.to_str().unwrap()])), 2);
}

#[test]
fn asymmetric_polygon_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("asym.json");
    fs::write(
        &path,
        r#"{"vertices": [["-1","-1"],["2","-1"],["1","1"],["-1","1"]]}"#,
    )
    .unwrap();
    let p = path.to_str().unwrap();
    for cmd in ["volume", "verify", "descend", "render"] {
        assert_eq!(code(&mahler(&[cmd, p])), 1, "{cmd}");
    }
}

#[test]
fn verify_passes_on_named_polygons() {
    for name in ["named:square", "named:hex6b", "named:oct8"] {
        let out = mahler(&["verify", name]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        assert!(stdout(&out).contains(" pass "));
        assert!(!stdout(&out).contains(" fail "));
    }
}

#[test]
fn descend_hexagon_writes_one_step_trace_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let trace_path = dir.path().join("trace.json");
    let svg_path = dir.path().join("trace.svg");
    let out = mahler(&[
        "descend",
        "named:hex6b",
        "--trace-out",
        trace_path.to_str().unwrap(),
        "--svg-out",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let trace = DescentTrace::from_json(&fs::read_to_string(&trace_path).unwrap()).unwrap();
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].mahler, mahler::rational::int(9));
    assert_eq!(trace.final_mahler, mahler::rational::int(8));
    assert!(trace.recorded_values_match());
    assert!(fs::read_to_string(&svg_path).unwrap().contains("<svg"));
}

#[test]
fn render_prints_svg() {
    let out = mahler(&["render", "named:oct8"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("<svg"));
}
