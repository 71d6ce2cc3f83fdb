use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncgrowth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gb_a_degree_eight_has_fifteen_leading_words() {
    let out = run(&["gb", "--input", &fixture("A.pres"), "--max-degree", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["num_leading_words"], 15);
    assert_eq!(v["payload"]["leading_words"][0], "y*z");
    assert_eq!(v["metadata"]["order"], "deglex x > y > z");
    assert_eq!(v["metadata"]["field"], "Q");
}

#[test]
fn paper_a_mod_five_passes_with_m_four() {
    let out = run(&["paper", "--algebra", "A", "--char", "5", "--max-degree", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["summary"]["pass"], true);
    let claims = v["payload"]["claims"].as_array().unwrap();
    assert!(claims.iter().any(|c| c["statement"].as_str().unwrap().contains("m = 4")));
    assert!(claims.iter().all(|c| c["pass"] == true));
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["gb", "--input", "missing.pres", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gb", "--input", &fixture("A.pres")][..],
        &["gb", "--input", &fixture("A.pres"), "--max-degree", "x"],
        &["frobnicate"],
        &["paper", "--algebra", "D", "--max-degree", "12"],
        &["verify", "--input", &fixture("A.pres"), "--max-degree", "5"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_fixtures_exit_two() {
    for (file, ch) in [("malformed.pres", None), ("inhomogeneous.pres", None), ("A.pres", Some("4")), ("C.pres", Some("1"))] {
        let f = fixture(file);
        let mut args = vec!["hilbert", "--input", &f, "--max-degree", "5"];
        if let Some(c) = ch {
            args.extend(["--char", c]);
        }
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{file} {ch:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = run(&["paper", "--algebra", "A", "--char", "3", "--max-degree", "12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn permuted_relations_give_identical_bytes() {
    for cmd in ["gb", "hilbert", "growth"] {
        let a = run(&[cmd, "--input", &fixture("A.pres"), "--max-degree", "20", "--char", "7"]);
        let b = run(&[cmd, "--input", &fixture("A_permuted.pres"), "--max-degree", "20", "--char", "7"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["paper", "--algebra", "B", "--char", "3", "--max-degree", "14", "--format", "text"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn hilbert_of_complete_basis_reports_series() {
    let out = run(&["hilbert", "--input", &fixture("B.pres"), "--char", "2", "--max-degree", "12"]);
    let v = json(&out);
    assert_eq!(v["payload"]["complete"], true);
    let a: Vec<&str> = v["payload"]["a"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(&a[..5], ["1", "2", "4", "6", "9"]);
    assert!(v["payload"]["series"]["text"].is_string());
}

#[test]
fn growth_classifies_char_zero_and_mod_p() {
    let a = json(&run(&["growth", "--input", &fixture("A.pres"), "--max-degree", "25"]));
    assert_eq!(a["payload"]["classification"], "polynomial");
    let gk = a["payload"]["gk_estimate"].as_f64().unwrap();
    assert!((gk - 3.0).abs() <= 0.2, "{gk}");
    let b = json(&run(&["growth", "--input", &fixture("B.pres"), "--char", "3", "--max-degree", "20"]));
    assert_eq!(b["payload"]["classification"], "exponential");
    assert_eq!(b["payload"]["valid_to"], 120);
}

#[test]
fn automaton_counts_fibonacci() {
    let out = run(&["automaton", "--patterns", &fixture("fib.patterns"), "--alphabet", "x y", "--max-degree", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let a: Vec<&str> = v["payload"]["a"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(a, ["1", "2", "3", "5", "8", "13", "21", "34", "55", "89", "144"]);
    assert_eq!(v["payload"]["series"]["denominator"], serde_json::json!(["1", "-1", "-1"]));
}

#[test]
fn verify_builtin_and_file_families() {
    let ok = run(&["verify", "--input", &fixture("A.pres"), "--builtin", "exa1(b=-3)", "--max-degree", "10"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["payload"]["members_in_ideal"], true);

    let c = run(&["verify", "--input", &fixture("C.pres"), "--builtin", "rgbC", "--max-degree", "10"]);
    assert_eq!(c.status.code(), Some(0));

    let bad = run(&["verify", "--input", &fixture("A.pres"), "--char", "5", "--family", &fixture("A_mod5.family"), "--max-degree", "8"]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    assert_eq!(v["summary"]["pass"], false);
    assert_eq!(v["payload"]["first_discrepancy"]["word"], "z^4*y");
}

#[test]
fn text_format_is_line_oriented() {
    let out = run(&["gb", "--input", &fixture("B.pres"), "--max-degree", "6", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: gb\n"));
    assert!(text.contains("payload.leading_words: [y^3, x^2*y, y^2*x*y^2]\n"));
}
