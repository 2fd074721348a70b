use std::io::Write;
use std::process::{Command, Output};

const CONNECTED5: &str = include_str!("../../core/tests/data/connected5.g6");

fn specbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specbounds")).args(args).output().expect("binary runs")
}

fn corpus_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn family_prints_graph6() {
    let out = specbounds(&["family", "complete:3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Bw\n");
    assert_eq!(specbounds(&["family", "wheel:5"]).status.code(), Some(2));
    assert_eq!(specbounds(&["family", "complete:63"]).status.code(), Some(2));
}

#[test]
fn batch_over_connected_graphs_on_five_vertices() {
    let f = corpus_file(CONNECTED5);
    let out = specbounds(&["batch", "--input", path(&f), "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(
        header[..14],
        [
            "graph6",
            "n",
            "m",
            "lambda",
            "eta",
            "iota",
            "explicit",
            "nik_r",
            "nik",
            "chain_ok",
            "eta_sharp",
            "iota_sharp",
            "explicit_sharp",
            "comparison_ok"
        ]
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 21);
    for (row, g6) in rows.iter().zip(CONNECTED5.lines()) {
        assert_eq!(row[0], g6);
        assert_eq!(row[9], "true");
        assert_eq!(row.len(), header.len());
    }
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("rows=21") && summary.contains("chain_failures=0"), "{summary}");
}

#[test]
fn triangle_row() {
    let f = corpus_file("Bw\n");
    let out = specbounds(&["batch", "--input", path(&f), "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = &json["rows"][0];
    assert_eq!(row["status"], "ok");
    assert_eq!(row["eta"]["value"], 1.0);
    assert!((row["lambda"].as_f64().unwrap() + 1.0).abs() < 1e-9);
    assert_eq!(row["eta_sharp"], true);
    assert_eq!(json["summary"]["rows"], 1);
}

#[test]
fn malformed_line_is_a_parse_error() {
    let f = corpus_file("Bw\nCF\nB!\n");
    let out = specbounds(&["batch", "--input", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn batch_is_deterministic_and_rows_recompute() {
    let f = corpus_file(CONNECTED5);
    let a = specbounds(&["batch", "--input", path(&f), "--format", "json"]);
    let b = specbounds(&["batch", "--input", path(&f), "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let full: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for (i, g6) in CONNECTED5.lines().enumerate().step_by(5) {
        let single = corpus_file(&format!("{g6}\n"));
        let out = specbounds(&["batch", "--input", path(&single), "--format", "json"]);
        let one: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(one["rows"][0], full["rows"][i]);
    }
}

#[test]
fn oversize_graphs_skip_unless_strict() {
    let f = corpus_file("@\nBw\n");
    let out = specbounds(&["batch", "--input", path(&f)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), format!("@,1,0{}", ",".repeat(19)));
    let strict = specbounds(&["batch", "--input", path(&f), "--strict"]);
    assert!(!strict.status.success());
}

#[test]
fn env_ceiling_applies() {
    let f = corpus_file("Bw\nCF\n");
    let out = Command::new(env!("CARGO_BIN_EXE_specbounds"))
        .args(["batch", "--input", path(&f), "--format", "json"])
        .env("SPECBOUNDS_MAX_N", "3")
        .output()
        .unwrap();
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["summary"]["rows"], 1);
    assert_eq!(json["summary"]["skipped"], 1);
}

#[test]
fn invariants_and_bounds() {
    let out = specbounds(&["invariants", "Bw"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((json["alpha"].as_u64(), json["chi"].as_u64()), (Some(1), Some(3)));

    let out = specbounds(&["bounds", "Bw", "--nikiforov-r", "4"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["nikiforov"]["r"], 4);

    let f = corpus_file("Bw\nCF\n");
    let out = specbounds(&["bounds", "--file", path(&f)]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);

    assert_eq!(specbounds(&["bounds", "Bw", "--nikiforov-r", "1"]).status.code(), Some(2));
    assert_eq!(specbounds(&["invariants", "B!"]).status.code(), Some(2));
    assert_eq!(specbounds(&["invariants"]).status.code(), Some(2));
}

#[test]
fn verify_paper_selected_claims() {
    let out = specbounds(&["verify-paper", "--claims", "sec-3.3,ex-3.4", "--max-s", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 16 + 3);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains(r#""k":3,"t":2"#));
    assert_eq!(specbounds(&["verify-paper", "--claims", "thm-9.9"]).status.code(), Some(2));
}

#[test]
fn verify_paper_full_suite() {
    let out = specbounds(&["verify-paper", "--json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let results = json.as_array().unwrap();
    assert!(results.iter().all(|r| r["status"] != "fail"));
    let vacuous: Vec<_> = results.iter().filter(|r| r["status"] == "vacuous").collect();
    assert!(vacuous.iter().all(|r| r["parameters"]["factors"].to_string().contains("K23")));
}
