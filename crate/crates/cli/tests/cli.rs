use std::process::{Command, Output};

use evenzeta_cli::report::RunReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evenzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&run(&full))).unwrap()
}

#[test]
fn bernoulli_rows() {
    let out = run(&["bernoulli", "--max", "2"]);
    assert_eq!(code(&out), 0);
    let values: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values, ["1", "-1/2", "1/6"]);

    let out = stdout(&run(&["bernoulli", "--max", "4"]));
    assert!(out.lines().last().unwrap().ends_with("-1/30"));

    let out = stdout(&run(&["bernoulli", "--max", "0"]));
    assert_eq!(out.lines().count(), 2);
    assert!(out.lines().nth(1).unwrap().trim().ends_with(" 1"));
}

#[test]
fn bernoulli_negative_max_is_usage_error() {
    assert_eq!(code(&run(&["bernoulli", "--max", "-1"])), 2);
}

#[test]
fn zeta_modes() {
    let out = run(&["zeta", "--k", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "zeta(2) = 1/6 * pi^2");
    assert!(stdout(&run(&["zeta", "--k", "2"])).contains("zeta(4) = 1/90 * pi^4"));

    let both = stdout(&run(&["zeta", "--k", "2", "--mode", "both"]));
    assert!(both.contains("zeta(4) = 1/90 * pi^4"));
    assert!(both.contains("zeta(4) = 1.082323233711138191516003696541 ± "));
    assert!(both.contains("inductive == closed-form: PASS"));

    let dec = stdout(&run(&["zeta", "--k", "1", "--mode", "decimal", "--digits", "10"]));
    assert!(dec.starts_with("zeta(2) = 1.6449340668 ± "), "{dec}");
}

#[test]
fn zeta_k_zero_is_usage_error() {
    assert_eq!(code(&run(&["zeta", "--k", "0"])), 2);
}

#[test]
fn fourier_examples() {
    assert!(stdout(&run(&["fourier", "--k", "1", "--n", "3"])).contains("a = 0, b = 2/3"));
    assert!(stdout(&run(&["fourier", "--k", "2", "--n", "1"])).contains("a = -4, b = 0"));
    let out = stdout(&run(&["fourier", "--k", "3", "--n", "1"]));
    assert!(out.contains("b = 2*pi^2 - 12"));
    assert!(out.contains("7.7392088021787172376"));
    assert!(out.contains("path: sine from cosine"));
    assert_eq!(code(&run(&["fourier", "--k", "1", "--n", "0"])), 2);
}

#[test]
fn parseval_examples() {
    let out = run(&["parseval", "--k", "1", "--terms", "100000"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("PASS"));
    let gap: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("gap:"))
        .unwrap()
        .trim()
        .parse()
        .unwrap();
    assert!((gap - 4e-5).abs() < 1e-7, "gap {gap}");

    assert_eq!(code(&run(&["parseval", "--k", "3", "--terms", "1000"])), 0);
    assert_eq!(code(&run(&["parseval", "--k", "1", "--terms", "0"])), 2);
}

#[test]
fn verify_full_sweep_passes() {
    let out = run(&["verify", "--kmax", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.trim_end().ends_with("failed: 0"));
}

#[test]
fn verify_kmax_zero_is_usage_error() {
    assert_eq!(code(&run(&["verify", "--kmax", "0"])), 2);
    assert_eq!(code(&run(&["verify"])), 2);
    assert_eq!(code(&run(&["verify", "--kmax", "2", "--which", "bogus"])), 2);
}

#[test]
fn verify_zeta_sweep_lists_each_k() {
    let out = run(&["verify", "--kmax", "50", "--which", "zeta"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<_> = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("PASS zeta_cross_check"))
        .map(String::from)
        .collect();
    assert_eq!(lines.len(), 50);
}

#[test]
fn verify_which_subsets() {
    let report = json(&["verify", "--kmax", "2", "--which", "fourier,parseval"]);
    let names: std::collections::BTreeSet<_> = report["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        names.into_iter().collect::<Vec<_>>(),
        ["fourier_quadrature", "fourier_recurrence_vs_closed", "parseval"]
    );
}

#[test]
fn injected_fault_is_detected() {
    let out = run(&["verify", "--kmax", "3", "--inject-fault"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("FAIL bernoulli_recurrence"));
    assert!(text.contains("FAIL zeta_cross_check(k=1)"));

    let report = json(&["verify", "--kmax", "3", "--which", "zeta", "--inject-fault"]);
    // only B_2 moves, so only zeta(2) disagrees
    assert_eq!(report["summary"]["failed"], 1);
}

#[test]
fn json_report_shape_and_summary() {
    let report = json(&["verify", "--kmax", "3"]);
    for key in ["version", "command", "results", "summary", "duration_ms"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    assert_eq!(report["command"], "evenzeta --format json verify --kmax 3");
    let results = report["results"].as_array().unwrap();
    let passed = results.iter().filter(|r| r["pass"] == true).count();
    assert_eq!(report["summary"]["passed"], passed);
    assert_eq!(report["summary"]["failed"], results.len() - passed);
    for r in results {
        for key in ["name", "params", "lhs", "rhs", "pass"] {
            assert!(r.get(key).is_some());
        }
    }
}

#[test]
fn json_round_trip_is_byte_identical() {
    for args in [
        &["--format", "json", "verify", "--kmax", "4"][..],
        &["--format", "json", "zeta", "--k", "7", "--mode", "both"],
        &["--format", "json", "bernoulli", "--max", "12"],
    ] {
        let raw = stdout(&run(args));
        let report: RunReport = serde_json::from_str(&raw).unwrap();
        assert_eq!(raw, report.to_json());
    }
}

#[test]
fn output_is_deterministic_apart_from_duration() {
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    let a = strip(json(&["verify", "--kmax", "3"]));
    let b = strip(json(&["verify", "--kmax", "3"]));
    assert_eq!(a, b);
}

#[test]
fn csv_output() {
    let out = stdout(&run(&["--format", "csv", "bernoulli", "--max", "2"]));
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers, vec!["name", "params", "lhs", "rhs", "pass", "detail"]);
    let rhs: Vec<String> = reader
        .records()
        .map(|r| r.unwrap()[3].to_string())
        .collect();
    assert_eq!(rhs, ["1", "-1/2", "1/6"]);
}
