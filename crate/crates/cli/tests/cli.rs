use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_charbound"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (code, serde_json::from_str(&out).expect("json output"))
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("theta_n2_t2_reduced.json", &["theta", "--n", "2", "--t-lo", "2", "--reduced", "--format", "json"]),
    ("symrank_m2_n4_d2_strict.json", &["symrank", "--m", "2", "--n", "4", "--d", "2", "--convention", "strict"]),
    ("interp_n8.json", &["interp", "--n", "8"]),
    ("scan_theta_8_16.json", &["scan", "--task", "theta", "--n-min", "8", "--n-max", "16"]),
    ("kwise_n2_k1.json", &["kwise", "--n", "2", "--k", "1"]),
];

#[test]
fn golden_files_match() {
    for (name, args) in GOLDEN {
        let (code, out, _) = run(args);
        assert_eq!(code, 0, "{name}");
        assert_eq!(out, golden(name), "{name}");
    }
}

#[test]
fn golden_values_are_the_expected_ones() {
    let (_, t) = json(GOLDEN[0].1);
    assert_eq!(t["theta"], "2/1");
    assert_eq!(t["method"], "reduced");
    assert_eq!(t["exact"], true);
    assert_eq!(t["config"]["convention"], "literal");
    let (_, s) = json(GOLDEN[1].1);
    assert_eq!(s["formula"], "4");
    assert_eq!(s["witness_dim"], 4);
    assert_eq!(s["dlsz_floor"], "4");
    assert_eq!(s["graph"]["convention"], "strict");
    let (_, i) = json(GOLDEN[2].1);
    assert_eq!(i["set"], serde_json::json!([2, 3, 5, 6]));
    assert_eq!(i["paper_cap"], "35/16");
    assert_eq!(i["bound"], "15/56");
    let (_, k) = json(GOLDEN[4].1);
    assert_eq!(k["value"], "1/2");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["verify", "--suite", "bochner", "--seed", "7", "--trials", "30"][..],
        &["scan", "--task", "interp", "--n-max", "64", "--format", "csv"][..],
        &["interp", "--n", "16", "--trials", "50", "--seed", "3"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["theta"]).0, 1);
    assert_eq!(run(&["theta", "--n", "3", "--d", "1", "--t-lo", "2"]).0, 1);
    assert_eq!(run(&["nonsense"]).0, 1);
    assert_eq!(run(&["interp", "--n", "12"]).0, 1);
    let (code, err) = json(&["theta", "--n", "20", "--t-lo", "3", "--dense"]);
    assert_eq!(code, 2);
    assert_eq!(err["kind"], "guard");
    assert_eq!(err["code"], 2);
    // The literal reading puts weight-d differences in the graph, where the witness is not orthogonal.
    let (code, e) = json(&["embed", "--m", "2", "--n", "3", "--d", "1", "--convention", "literal"]);
    assert_eq!(code, 3);
    assert_eq!(e["embedding"]["orthogonal_edges"], false);
    let (code, e) = json(&["embed", "--m", "3", "--n", "2", "--d", "2", "--convention", "strict"]);
    assert_eq!(code, 0);
    assert_eq!(e["dim"], 3);
}

#[test]
fn text_errors_go_to_stderr() {
    let (code, out, err) = run(&["theta", "--m", "3", "--n", "2", "--t-lo", "2", "--format", "text"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("--scalar float"));
}

#[test]
fn float_theta_for_three() {
    let (code, t) = json(&["theta", "--m", "3", "--n", "2", "--t-lo", "3", "--scalar", "float"]);
    assert_eq!(code, 0);
    assert_eq!(t["exact"], false);
    assert_eq!(t["method"], "dense");
    assert!(t["theta"].as_str().unwrap().parse::<f64>().unwrap() > 1.0);
}

#[test]
fn empty_scan_is_header_only() {
    let (code, out, _) = run(&["scan", "--n-min", "16", "--n-max", "8", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("n,d,theta,"));
    let (_, v) = json(&["scan", "--task", "interp", "--n-min", "16", "--n-max", "8"]);
    assert_eq!(v["rows"], serde_json::json!([]));
}

#[test]
fn theta_scan_rows_clear_the_comparison_line() {
    let (_, v) = json(GOLDEN[3].1);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    for r in rows {
        assert!(r["log2_complement_lower"].as_f64().unwrap() >= r["paper_lower"].as_f64().unwrap());
    }
}

#[test]
fn interp_scan_bound_below_cap() {
    let (_, v) = json(&["scan", "--task", "interp"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 16);
    assert!(rows.iter().all(|r| r["cap_holds"] == true));
}

#[test]
fn out_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("charbound-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("theta.json");
    let (code, out, _) = run(&["theta", "--n", "4", "--d", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["out"], path.to_str().unwrap());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn csv_reports_flatten_to_one_row() {
    let (code, out, _) = run(&["theta", "--n", "3", "--t-lo", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let rows: Vec<_> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 1);
    let col = headers.iter().position(|h| h == "theta").unwrap();
    // Complement of the cube: 8 / θ(Q_3) = 2.
    assert_eq!(&rows[0][col], "2/1");
}
