use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algcomb"))
        .args(args)
        .env_remove("ALGCOMB_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 5] = [
        (&["lr", "--mu", "2,1", "--nu", "2,1", "--lambda", "3,2,1"], "lr_21_21_321.json"),
        (&["diag", "--n", "2"], "diag_2.json"),
        (&["saturation", "--bound", "3", "--m-max", "2"], "saturation_3.json"),
        (&["horn", "--n", "2"], "horn_2.json"),
        (&["lis", "uk", "--k", "2", "--max-n", "8"], "uk_2_8.json"),
    ];
    for (args, file) in cases {
        let out = run(args);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file), "{args:?}");
    }
}

#[test]
fn quoted_values() {
    assert_eq!(json(&["lr", "--mu", "1", "--nu", "1", "--lambda", "2"])["c"], 1);
    assert_eq!(json(&["nfact", "--mu", "3,2"])["dim"], 120);
    assert_eq!(json(&["diag", "--n", "2"])["total"], 3);
    assert_eq!(json(&["diag", "--n", "3"])["gamma_total"], 5);
    let hall = json(&["hall", "--lambda", "1,1", "--mu", "1", "--nu", "1", "--primes", "2,3,5"]);
    assert_eq!(hall["held_out"], serde_json::json!([5]));
    assert_eq!(json(&["lis", "shape", "--perm", "274163958"])["is"], 4);
    let g = json(&["lis", "shape", "--perm", "247951368"]);
    assert_eq!(g["shape"], serde_json::json!([5, 3, 1]));
    assert_eq!(g["greene_sums"][1], 8);
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["tw", "gue", "--n", "30", "--samples", "40", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["lis", "sample", "--n", "50", "--samples", "200", "--seed", "3"];
    let a = run(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_algcomb")).args(args).env("ALGCOMB_THREADS", "1").output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["lr", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--threads", "0", "lr", "--mu", "1", "--nu", "1", "--lambda", "2"]).status.code(), Some(2));
    assert_eq!(run(&["lr", "--mu", "1,x", "--nu", "1", "--lambda", "2"]).status.code(), Some(2));
    assert_eq!(run(&["diag", "--n", "5"]).status.code(), Some(3));
    assert_eq!(run(&["verify-all", "--criterion", "99"]).status.code(), Some(1));
}

#[test]
fn csv_output_and_round_trip() {
    let dir = std::env::temp_dir().join(format!("algcomb-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("chi.csv");
    let out = run(&["--out", "csv", "--output", csv.to_str().unwrap(), "lis", "sample", "--n", "200", "--samples", "300"]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("# meta {"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 301);

    let cmp = json(&["tw", "compare", "--lis-csv", csv.to_str().unwrap()]);
    let ks = cmp["ks"].as_f64().unwrap();
    assert!(ks > 0.0 && ks < 1.0, "{cmp}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_reports_every_requested_criterion() {
    let out = run(&["verify-all", "--quick", "--criterion", "2", "--criterion", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 2);
    for c in criteria {
        assert_eq!(c["passed"], true);
        assert!(c["checks"].as_array().unwrap().iter().all(|k| k["name"].is_string()));
    }
    assert_eq!(run(&["verify-all", "--quick", "--criterion", "2"]).stdout, run(&["verify-all", "--quick", "--criterion", "2"]).stdout);
}
