//! End-to-end runs of the `hecke` binary, one or more per verb.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hecke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Runs, expects `status`, parses stdout as JSON.
fn json(args: &[&str], status: i32) -> Value {
    let o = hecke(args);
    assert_eq!(code(&o), status, "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

fn usage_error(args: &[&str], needle: &str) {
    let o = hecke(args);
    assert_eq!(code(&o), 2, "{args:?}: {}", stdout(&o));
    assert!(stderr(&o).contains(needle), "{args:?}: `{}` lacks `{needle}`", stderr(&o));
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn table1_csv_and_json() {
    let o = hecke(&["table1", "--csv"]);
    assert_eq!(code(&o), 0);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(&rows[9], &csv::StringRecord::from(vec!["B_2", "3", "3", "1"]));
    assert_eq!(&rows[1], &csv::StringRecord::from(vec!["B_n", "{1,2}", "Z>0", "Z>=0"]));
    let v = json(&["table1"], 0);
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert_eq!(v[0]["lambda_star_short"], "=lambda");
}

#[test]
fn match_labels() {
    let v = json(&["match-labels", "--type", "B", "--rank", "3", "--labels", "2,3,1"], 0);
    assert_eq!(v["conforms"], true);
    assert_eq!(v["components"][0]["matched"]["row"], 1);
    assert_eq!(v["q_params"][1]["q_alpha"], "q^2");
    assert_eq!(v["q_params"][1]["q_star"], "q");
    let v = json(&["match-labels", "--type", "G2", "--labels", "2,1"], 1);
    assert_eq!(v["conforms"], false);
    // rescaled base: labels 2 against q^(1/2) give q_alpha = q
    let v = json(&["match-labels", "--type", "A1", "--labels", "2", "--base-exp", "1/2"], 0);
    assert_eq!(v["q_params"][0]["q_alpha"], "q");
    let f = temp_file("labels.json", r#"{"type": "G2", "labels": "9,1"}"#);
    let v = json(&["match-labels", "--json", f.to_str().unwrap()], 0);
    assert_eq!(v["components"][0]["matched"]["row"], 8);
    usage_error(&["match-labels", "--type", "Q3", "--labels", "1"], "--type");
    usage_error(&["match-labels", "--type", "B3", "--labels", "1"], "--labels");
    let bad = temp_file("labels_bad.json", r#"{"type": "G2", "lables": "9,1"}"#);
    usage_error(&["match-labels", "--json", bad.to_str().unwrap()], "lables");
    let bad = temp_file("labels_type.json", r#"{"type": 7, "labels": "9,1"}"#);
    usage_error(&["match-labels", "--json", bad.to_str().unwrap()], "field `type`");
}

#[test]
fn classical() {
    let v = json(
        &["classical", "--case", "b", "--f", "1", "--t", "1", "--a", "3", "--a-minus", "1", "--rank", "2"],
        0,
    );
    assert_eq!(v["labels"]["at_qf"], serde_json::json!(["3", "1"]));
    assert_eq!(v["component"]["type"], "B2");
    assert_eq!(v["component"]["conforms"], true);
    let v = json(&["classical", "--case", "a", "--f", "2", "--t", "3", "--a-plus", "2"], 0);
    assert_eq!(v["labels"]["at_qf"], serde_json::json!(["12", "12"]));
    usage_error(&["classical", "--case", "b", "--f", "1", "--t", "1", "--a", "3"], "--a-minus");
    usage_error(&["classical", "--case", "a", "--f", "3", "--t", "1", "--a-plus", "1"], "family");
}

#[test]
fn bound() {
    let base = ["bound", "--case", "b", "--f", "1", "--t", "1"];
    let run = |a: &str, am: &str, n: &str, status: i32| {
        let mut args = base.to_vec();
        args.extend(["--a", a, "--a-minus", am, "--n-dual", n, "--d-rho", "1"]);
        json(&args, status)
    };
    let v = run("5", "-1", "8", 1);
    assert_eq!(v["bound"]["lhs"], 9);
    assert_eq!(v["bound"]["pass"], false);
    let v = run("3", "1", "6", 0);
    assert_eq!(v["bound"]["slack"], "1");
    let v = json(&["bound", "--inner-form", "4,1,1,1,2,2"], 0);
    assert_eq!(v["check"]["f"], 4);
    usage_error(&["bound", "--inner-form", "4,1,1,2,1,2"], "--inner-form");
    usage_error(&["bound", "--case", "c", "--f", "1", "--t", "1", "--n-dual", "4"], "--n-dual");
}

#[test]
fn parity() {
    let v = json(&["parity", "--group", "unramified-su", "--t", "2", "--a", "3", "--a-minus", "0"], 0);
    assert_eq!(v["rule"], "different");
    json(&["parity", "--group", "unramified-su", "--t", "2", "--a", "3", "--a-minus", "1"], 1);
    let v = json(&["parity", "--group", "sp", "--t", "3"], 0);
    assert_eq!(v["rule"], "same");
    usage_error(&["parity", "--group", "sp", "--t", "2", "--a", "3"], "--a-minus");
}

#[test]
fn unitary_ps() {
    let v = json(&["unitary-ps", "--n", "5"], 0);
    assert_eq!(v["conforms"], true);
    let sigs: Vec<&str> = v["signatures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["signature"].as_str().unwrap())
        .collect();
    assert!(sigs.contains(&"st:2") && sigs.contains(&"ns:1,n0:1"));
    let o = hecke(&["unitary-ps", "--n", "3", "--ramified", "--csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("signature,class,size,type,labels"));
    assert!(text.contains("sn:1,sn,1,C1,1,false,,0"));
    usage_error(&["unitary-ps", "--n", "4", "--signature", "sn:2"], "--signature");
    usage_error(&["unitary-ps", "--n", "4", "--signature", "ns:3"], "--signature");
}

#[test]
fn ps_q() {
    let v = json(&["ps-q", "--wf", "4", "--if", "2", "--u3"], 0);
    assert_eq!(v["q_alpha"], "q^2");
    assert_eq!(v["u3_outcomes"][2]["q_alpha_star"], 1);
    usage_error(&["ps-q", "--wf", "3", "--if", "2"], "--if");
}

#[test]
fn case_lookup_and_sweep() {
    let v = json(&["case", "--group", "G2", "--levi", "empty"], 0);
    let choices = &v["cases"][0]["record"]["orbits"][0]["params"]["choices"];
    assert_eq!(choices[0]["q_alpha"], "1");
    assert_eq!(choices[0]["q_alpha_star"], "0");
    let v = json(&["case", "--group", "3D4", "--levi", "{}"], 0);
    assert_eq!(v["cases"][0]["conformance"]["status"], "checked");
    let v = json(&["case", "--group", "E7^(2)", "--levi", "{2,3}"], 0);
    assert_eq!(v["cases"][0]["open"], true);
    let v = json(&["case", "--all"], 0);
    assert_eq!(v["passed"], true);
    usage_error(&["case", "--group", "E9", "--levi", "{1}"], "--group");
    usage_error(&["case", "--group", "F4"], "--levi");
    let bad = temp_file("cases_bad.json", r#"{"version": 1, "records": [{"group": "G2"}]}"#);
    usage_error(&["case", "--all", "--json", bad.to_str().unwrap()], "records[0]");
    let one = temp_file(
        "cases_one.json",
        r#"{"version": 1, "records": [{"group": "G2", "levi": [], "relative_system": "G2",
            "dual_system": "G2", "citation": "test", "orbits": [
            {"rel_length": "long", "dual_orbit": 1, "params": {"kind": "fixed", "choices": [{"q_alpha": "2", "q_alpha_star": "0"}]}},
            {"rel_length": "short", "dual_orbit": 0, "params": {"kind": "fixed", "choices": [{"q_alpha": "1", "q_alpha_star": "0"}]}}]}]}"#,
    );
    // (2, 1) on G2 fits no row, so the check fails
    let v = json(&["case", "--group", "G2", "--levi", "empty", "--json", one.to_str().unwrap()], 1);
    assert_eq!(v["passed"], false);
}

#[test]
fn transfer() {
    let v = json(&["transfer", "--type", "C", "--rank", "2", "--labels", "1,2", "--case", "ii"], 0);
    assert_eq!(v["after"]["type"], "B2");
    assert_eq!(v["after"]["long"], "2");
    assert_eq!(v["after"]["short"], "1");
    assert_eq!(v["after"]["star"], "0");
    assert_eq!(v["roundtrip"], true);
    assert_eq!(v["class"]["preserved"], true);
    let v = json(&["transfer", "--type", "C1", "--labels", "1", "--case", "ii"], 0);
    assert_eq!(v["after"]["type"], "B1");
    let v = json(
        &["transfer", "--type", "B1", "--labels", "1,0", "--case", "ii", "--direction", "to-cover"],
        0,
    );
    assert_eq!(v["after"]["type"], "C1");
    let v = json(&["transfer", "--type", "G2", "--labels", "1,3"], 0);
    assert_eq!(v["after"], v["before"]);
    usage_error(&["transfer", "--type", "G2", "--labels", "1,3", "--case", "ii"], "--case");
    usage_error(&["transfer", "--type", "B2", "--labels", "1,3,1", "--case", "iii"], "--case");
}

#[test]
fn mu() {
    let o = hecke(&["mu", "--qa", "2", "--qs", "1", "recover"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), r#"{"q_alpha":"q^2","q_star":"q"}"#);
    let v = json(&["mu", "--qa", "1/2", "--qs", "1/2", "recover"], 0);
    assert_eq!(v["q_star"], "q^(1/2)");
    let v = json(&["mu", "--qa", "1", "poles"], 0);
    assert_eq!(v["poles"].as_array().unwrap().len(), 2);
    let v = json(&["mu", "--qa", "0", "factor"], 0);
    assert_eq!(v["constant"], true);
    let v = json(&["mu", "sigma", "--type", "B2", "--params", "0,0;2,1"], 0);
    assert_eq!(v["system"], "B1xB1");
    assert_eq!(v["conforms"], true);
    usage_error(&["mu", "--qa", "1", "--qs", "2", "recover"], "--qa");
    usage_error(&["mu", "--qa", "1/3", "factor"], "--qa");
    usage_error(&["mu", "sigma", "--type", "B2", "--params", "1,0"], "--params");
}

#[test]
fn jmatrix_and_scalar() {
    let v = json(&["jmatrix"], 0);
    assert_eq!(v["composite_is_scalar"], true);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 2);
    let v = json(&["jmatrix", "--direction", "backward"], 0);
    assert_eq!(v["matrices"][0]["poles_only_at_one"], true);
    usage_error(&["jmatrix", "--direction", "sideways"], "--direction");
    let v = json(&["scalar", "--q", "4"], 0);
    assert_eq!(v["pole_at_z_1"], true);
    assert_eq!(v["reducibility_points"]["q_alpha"], "1");
    assert_eq!(v["reducibility_points"]["q_alpha_star"], "0");
    assert_eq!(v["numeric_zeros"], serde_json::json!([0.25, 4.0]));
}

#[test]
fn charsum() {
    for (p, k) in [("3", "1"), ("7", "2")] {
        let v = json(&["charsum", "--p", p, "--k", k], 0);
        assert_eq!(v["passed"], true);
    }
    let v = json(&["charsum", "--modulus", "9"], 0);
    assert_eq!(v["characters"].as_array().unwrap().len(), 6);
    assert_eq!(v["characters"][0]["sum"]["value"], "6");
    let f = temp_file("chi.json", r#"{"modulus": 5, "m": 4, "values": {"1": 0, "2": 1, "4": 2, "3": 3}}"#);
    let v = json(&["charsum", "--json", f.to_str().unwrap()], 0);
    assert_eq!(v["characters"][0]["vanishes"], true);
    usage_error(&["charsum", "--modulus", "8"], "--modulus");
    let bad = temp_file("chi_bad.json", r#"{"modulus": 5, "m": 4, "values": {"1": "zero"}}"#);
    usage_error(&["charsum", "--json", bad.to_str().unwrap()], "values");
}

#[test]
fn mul_and_normal_form() {
    // T_s T_s = (q - 1) T_s + q with q = v^2
    let v = json(&["mul", "--type", "A", "--rank", "1", "--labels", "1", "--a", "T0", "--b", "T0"], 0);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["coeff"], "(v^2)/(1)");
    assert_eq!(terms[1]["coeff"], "(v^2-1)/(1)");
    let v = json(&["mul", "--type", "A1", "--labels", "1", "--a", "X(1)", "--b", "X(-1)"], 0);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["terms"][0]["x"], serde_json::json!([0]));
    let f = temp_file(
        "elements.json",
        r#"{"a": {"terms": [{"x": [1], "w": [], "coeff": "1"}]}, "b": {"terms": [{"x": [0], "w": [0], "coeff": "v"}]}}"#,
    );
    let v = json(&["mul", "--type", "A1", "--labels", "1", "--elements", f.to_str().unwrap()], 0);
    assert_eq!(v["terms"][0]["x"], serde_json::json!([1]));
    let v = json(&["normal-form", "--type", "A2", "--labels", "2", "--word", "T0 T1 T0"], 0);
    assert_eq!(v["terms"][0]["w"], serde_json::json!([0, 1, 0]));
    let v = json(&["normal-form", "--type", "A1", "--labels", "1", "--datum", "gl", "--word", "X(1,0) X(0,1)"], 0);
    assert_eq!(v["terms"][0]["x"], serde_json::json!([1, 1]));
    usage_error(&["normal-form", "--type", "A1", "--labels", "1", "--word", "T7"], "--word");
    usage_error(&["mul", "--type", "A1", "--labels", "1", "--a", "T0"], "--elements");
    let bad = temp_file(
        "elements_bad.json",
        r#"{"a": {"terms": [{"x": [1, 2], "w": [], "coeff": "1"}]}, "b": {"terms": []}}"#,
    );
    usage_error(&["mul", "--type", "A1", "--labels", "1", "--elements", bad.to_str().unwrap()], "terms[0].x");
}

#[test]
fn check_relations() {
    let v = json(
        &["check-relations", "--type", "B", "--rank", "2", "--labels", "3,3,1", "--samples", "50"],
        0,
    );
    assert_eq!(v["passed"], true);
    assert_eq!(v["samples"], 50);
    let v = json(&["check-relations", "--type", "A1", "--labels", "1", "--datum", "sc", "--samples", "5", "--seed", "7"], 0);
    assert_eq!(v["seed"], 7);
    let f = temp_file(
        "datum.json",
        r#"{"datum": {"components": "A1", "lattice_rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]}, "labels": "2"}"#,
    );
    json(&["check-relations", "--json", f.to_str().unwrap(), "--samples", "5"], 0);
    let bad = temp_file(
        "datum_bad.json",
        r#"{"datum": {"components": "A1", "lattice_rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, 1]]}, "labels": "2"}"#,
    );
    usage_error(&["check-relations", "--json", bad.to_str().unwrap()], "datum");
    let bad = temp_file("datum_missing.json", r#"{"datum": {"components": "A1"}, "labels": "2"}"#);
    usage_error(&["check-relations", "--json", bad.to_str().unwrap()], "datum");
    usage_error(&["check-relations", "--type", "A1", "--labels", "1", "--datum", "weird"], "--datum");
}

#[test]
fn decompose() {
    let v = json(&["decompose", "--type", "A2", "--labels", "1", "--matrix", "0,1;1,0"], 0);
    assert_eq!(v["decomposition"]["w"], serde_json::json!([]));
    let v = json(&["decompose", "--type", "B2", "--labels", "1,1", "--matrix", "-1,0;0,-1"], 0);
    assert_eq!(v["decomposition"]["w"].as_array().unwrap().len(), 4);
    usage_error(&["decompose", "--type", "A2", "--labels", "1", "--matrix", "2,0;0,1"], "--matrix");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&hecke(&["no-such-verb"])), 2);
    assert_eq!(code(&hecke(&["table1", "--bogus"])), 2);
}

#[test]
fn output_is_stable() {
    for args in [
        &["check-relations", "--type", "A2", "--labels", "2", "--samples", "10", "--seed", "3"][..],
        &["unitary-ps", "--n", "6", "--ramified"][..],
        &["case", "--all"][..],
    ] {
        assert_eq!(hecke(args).stdout, hecke(args).stdout, "{args:?}");
    }
}
