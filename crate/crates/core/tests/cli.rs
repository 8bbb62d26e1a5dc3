//! End-to-end checks of the command-line contract: JSON schema, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

use cychad::report::Report;
use serde_json::Value;

fn cychad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cychad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let out = cychad(args);
    assert!(
        out.status.success(),
        "expected success, got {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

#[test]
fn ds_verify_reports_parameters() {
    let r = report(&["ds", "verify", "--v", "7", "--set", "0,1,2,5"]);
    assert_eq!(r.command, "ds verify");
    assert_eq!(r.results["certified"], Value::Bool(true));
    assert_eq!(r.results["params"]["v"], 7);
    assert_eq!(r.results["params"]["k"], 4);
    assert_eq!(r.results["params"]["lambda"], 2);
    assert_eq!(r.results["params"]["n"], 2);
    assert!(r.discrepancies.is_empty());
}

#[test]
fn ds_complement_round_trips() {
    let r = report(&["ds", "complement", "--v", "4", "--set", "3"]);
    assert_eq!(r.results["complement_set"], serde_json::json!([0, 1, 2]));
    assert_eq!(r.results["params"]["k"], 3);
}

#[test]
fn ds_theta_prints_canonical_text() {
    let r = report(&["ds", "theta", "--v", "7", "--set", "0,1,2,5"]);
    assert_eq!(r.results["theta"], "X^5 + X^2 + X + 1");
}

#[test]
fn ds_congruence_commands() {
    let r = report(&["ds", "lemma5", "--v", "7", "--set", "0,1,2,5"]);
    assert_eq!(r.results["all_hold"], Value::Bool(true));
    let r = report(&[
        "ds", "lemma6", "--params", "7,4,2,2", "--counts", "1,1,1,0,0,1,0", "--w", "7",
    ]);
    assert_eq!(r.results["holds"], Value::Bool(true));
    // inclusive-bound flag
    assert_eq!(r.discrepancies.len(), 1);
    assert_eq!(r.discrepancies[0].paper_location, "Lemma 6");
}

#[test]
fn barker_check_and_search() {
    let r = report(&["barker", "check", "--seq", "1,1,1,-1,1"]);
    assert_eq!(r.results["is_barker"], Value::Bool(true));

    let r = report(&["barker", "search", "--max-len", "7"]);
    assert_eq!(
        r.results["lengths_with_barker"],
        serde_json::json!([1, 2, 3, 4, 5, 7])
    );
    // the audited table rows up to length 7 all pass
    for entry in r.results["table_audit"].as_array().unwrap() {
        assert_eq!(entry["is_barker"], Value::Bool(true));
    }
}

#[test]
fn barker_search_flags_failing_table_row() {
    let r = report(&["barker", "search", "--max-len", "13"]);
    assert_eq!(
        r.results["lengths_with_barker"],
        serde_json::json!([1, 2, 3, 4, 5, 7, 11, 13])
    );
    let audit = r.results["table_audit"].as_array().unwrap();
    let thirteen = audit.iter().find(|e| e["v"] == 13).unwrap();
    assert_eq!(thirteen["is_barker"], Value::Bool(false));
    assert!(thirteen["nearest_barker"].is_array());
    assert!(r
        .discrepancies
        .iter()
        .any(|d| d.paper_location.contains("v = 13")));
}

#[test]
fn menon_commands() {
    let r = report(&["menon", "system"]);
    let polys = r.results["polynomials"].as_array().unwrap();
    assert_eq!(polys.len(), 9);
    assert_eq!(polys[0]["text"], "x0 + x1 + x2 + x3 - 2*u^2 + u");
    // duplicate-polynomial finding
    assert!(!r.discrepancies.is_empty());

    let r = report(&["menon", "params", "--u", "1", "--sign", "minus"]);
    assert_eq!(r.results["params"]["k"], 1);
    let r = report(&["menon", "params", "--u", "1", "--sign", "+"]);
    assert_eq!(r.results["params"]["k"], 3);

    let r = report(&["menon", "enumerate", "--u-min", "0", "--u-max", "2"]);
    assert_eq!(r.results["count"], 5);

    let r = report(&["menon", "lemma7"]);
    assert_eq!(r.results["all_match"], Value::Bool(true));
    assert!(r
        .discrepancies
        .iter()
        .any(|d| d.paper_location == "Lemma 7 (iii)"));
}

#[test]
fn groebner_commands() {
    let r = report(&[
        "groebner", "basis", "--gen", "x^2 - 1", "--gen", "x - 1", "--vars", "x",
    ]);
    assert_eq!(r.results["basis"], serde_json::json!(["x - 1"]));

    let r = report(&[
        "groebner", "nf", "--poly", "x^2", "--gen", "x - 1", "--vars", "x",
    ]);
    assert_eq!(r.results["remainder"], "1");

    let r = report(&[
        "groebner", "member", "--poly", "y^2 - x", "--gen", "x^2 + y", "--gen", "x*y + 1",
        "--vars", "x,y", "--order", "grevlex",
    ]);
    assert_eq!(r.results["member"], Value::Bool(true));

    let r = report(&["groebner", "verify-claim"]);
    assert_eq!(r.results["membership_lex"], Value::Bool(true));
    assert_eq!(r.results["membership_grevlex"], Value::Bool(true));
    assert_eq!(
        r.results["reduced_basis_lex"][0],
        Value::String("u^4 - u^3".into())
    );
}

#[test]
fn hadamard_commands() {
    let r = report(&["hadamard", "check", "--row", "1,1,1,-1"]);
    assert_eq!(r.results["is_hadamard"], Value::Bool(true));
    assert_eq!(r.results["gram_route"], Value::Bool(true));

    let r = report(&["hadamard", "search", "--max-order", "8"]);
    assert_eq!(r.results["orders_with_solutions"], serde_json::json!([1, 4]));

    let r = report(&["hadamard", "detbound", "--row", "1,1,1,-1"]);
    assert_eq!(r.results["det_abs"], "16");
    assert_eq!(r.results["attains_bound"], Value::Bool(true));
    // the printed-inequality note is always attached
    assert_eq!(r.discrepancies[0].paper_location, "Eq. (1)");
}

#[test]
fn text_format_renders() {
    let out = cychad(&["ds", "verify", "--v", "7", "--set", "0,1,2,5", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command: ds verify"));
    assert!(text.contains("discrepancies: none"));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(cychad(&["ds", "verify", "--v", "5", "--set", "9"]).status.code(), Some(2));
    assert_eq!(cychad(&["ds", "verify", "--v", "5", "--set", "1,1"]).status.code(), Some(2));
    assert_eq!(cychad(&["barker", "check", "--seq", "0,1"]).status.code(), Some(2));
    assert_eq!(cychad(&["unknown"]).status.code(), Some(2));
    assert_eq!(cychad(&["groebner", "nf", "--poly", "x@", "--gen", "x", "--vars", "x"]).status.code(), Some(2));
    // resource budgets
    assert_eq!(
        cychad(&["barker", "search", "--max-len", "30", "--max-work", "1024"]).status.code(),
        Some(3)
    );
    assert_eq!(
        cychad(&["hadamard", "search", "--max-order", "25", "--max-work", "1024"]).status.code(),
        Some(3)
    );
    assert_eq!(
        cychad(&["menon", "enumerate", "--u-max", "9", "--max-work", "100"]).status.code(),
        Some(3)
    );
    // success even when findings are recorded
    assert_eq!(cychad(&["barker", "search", "--max-len", "13"]).status.code(), Some(0));
    // help goes to stdout with exit 0
    let help = cychad(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("Usage"));
}

#[test]
fn json_is_deterministic_apart_from_timing() {
    let scrub = |bytes: &[u8]| {
        let mut v: Value = serde_json::from_slice(bytes).unwrap();
        v["elapsed_ms"] = Value::from(0);
        serde_json::to_string_pretty(&v).unwrap()
    };
    for args in [
        vec!["menon", "system"],
        vec!["barker", "search", "--max-len", "13"],
        vec!["hadamard", "search", "--max-order", "10"],
        vec!["groebner", "verify-claim"],
        vec!["barker", "search", "--max-len", "13", "--threads", "1"],
        vec!["barker", "search", "--max-len", "13", "--threads", "4"],
    ] {
        let a = scrub(&cychad(&args).stdout);
        let b = scrub(&cychad(&args).stdout);
        assert_eq!(a, b, "output differs across runs for {args:?}");
    }
    // thread count does not change results
    let one = scrub(&cychad(&["hadamard", "search", "--max-order", "18", "--threads", "1"]).stdout);
    let many = scrub(&cychad(&["hadamard", "search", "--max-order", "18", "--threads", "8"]).stdout);
    assert_eq!(one, many);
}

#[test]
fn reports_parse_back_into_the_schema() {
    for args in [
        vec!["ds", "verify", "--v", "7", "--set", "0,1,2,5"],
        vec!["menon", "lemma7"],
        vec!["hadamard", "detbound", "--row", "1,1"],
    ] {
        let out = cychad(&args);
        let r: Report = serde_json::from_slice(&out.stdout).expect("parses as Report");
        let again: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(again, r);
    }
}
