use std::process::{Command, Output};

use hurwitz::record::OutputRecord;
use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = hurwitz(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{args:?}: {e}; stderr {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), v)
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/output_record.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

fn multiplicities(v: &Value) -> Vec<(String, i64)> {
    v["decomposition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["label"].as_str().unwrap().to_string(),
                e["multiplicity"].as_i64().unwrap(),
            )
        })
        .collect()
}

#[test]
fn every_command_matches_schema_and_round_trips() {
    let validator = schema();
    let cases: &[&[&str]] = &[
        &["classify", "13"],
        &["classify", "8"],
        &["classify", "125"],
        &["ld", "13", "0", "0", "0", "1"],
        &["ld", "29", "--fast", "1", "1", "2", "6"],
        &["ld", "13", "--unsafe", "-2", "1", "2", "6"],
        &["canonical", "29"],
        &["gamma", "43"],
        &["degeq", "13", "-1", "3", "0", "5"],
        &["chartable", "13"],
        &["chartable", "125", "--trace-periods"],
        &["induced", "41", "7", "3", "--oracle"],
        &["verify", "13", "--deep"],
    ];
    for args in cases {
        let (code, v) = json(args);
        assert!(
            code == 0 || (args[0] == "classify" && code == 2),
            "{args:?} exited {code}"
        );
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        let rec: OutputRecord = serde_json::from_value(v.clone()).unwrap();
        rec.check_dimension().unwrap();
        assert_eq!(
            serde_json::to_value(&rec).unwrap(),
            v,
            "{args:?} does not round-trip"
        );
    }
}

#[test]
fn classify_exit_codes() {
    let (code, v) = json(&["classify", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["scalars"]["genus"], 14);
    assert_eq!(v["scalars"]["group_order"], 1092);
    for q in ["7", "8", "11", "27", "343"] {
        let (code, v) = json(&["classify", q]);
        assert_eq!(code, 2, "q = {q}");
        assert_eq!(v["admissible"], false);
        assert!(v["reason"].as_str().unwrap().len() > 5);
    }
}

#[test]
fn ld_d7_vector() {
    let (code, v) = json(&["ld", "13", "0", "0", "0", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["scalars"]["dim"], 143);
    assert_eq!(v["scalars"]["degree"], 156);
    let want = [
        ("Triv", 1),
        ("V", 2),
        ("W'", 1),
        ("W''", 1),
        ("X(2)", 1),
        ("X(4)", 2),
        ("X(6)", 2),
        ("W(2)", 1),
        ("W(4)", 2),
    ];
    let want: Vec<(String, i64)> = want.iter().map(|&(l, m)| (l.to_string(), m)).collect();
    assert_eq!(multiplicities(&v), want);
}

#[test]
fn ld_rejects_nonpositive_degree() {
    assert_eq!(
        hurwitz(&["ld", "13", "0", "0", "0", "0"]).status.code(),
        Some(3)
    );
    assert_eq!(
        hurwitz(&["ld", "13", "-1", "0", "0", "6"]).status.code(),
        Some(3)
    );
    assert_eq!(
        hurwitz(&["ld", "13", "--fast", "0", "0", "0", "1"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        hurwitz(&["ld", "11", "1", "0", "0", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn fast_ld_matches_assembly() {
    for d in [
        ["0", "0", "0", "3"],
        ["1", "1", "2", "6"],
        ["0", "1", "1", "0"],
    ] {
        let mut a = vec!["ld", "13"];
        a.extend(d);
        let mut b = vec!["ld", "13", "--fast"];
        b.extend(d);
        let (_, slow) = json(&a);
        let (_, fast) = json(&b);
        assert_eq!(
            slow["decomposition"].to_string(),
            fast["decomposition"].to_string()
        );
        assert_eq!(slow["scalars"].to_string(), fast["scalars"].to_string());
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["gamma", "29"][..],
        &["ld", "41", "1", "0", "2", "3"],
        &["verify", "29"],
    ] {
        let a = hurwitz(args);
        let b = hurwitz(args);
        // verify reports timings, so compare everything else
        let strip = |o: &Output| {
            let v: Vec<u8> = o.stdout.clone();
            String::from_utf8(v)
                .unwrap()
                .lines()
                .map(|l| l.split(" (").next().unwrap().to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b), "{args:?}");
    }
}

#[test]
fn canonical_and_gamma_records() {
    let (_, v) = json(&["canonical", "13"]);
    assert_eq!(v["scalars"]["dim"], 14);
    let nonzero: Vec<_> = multiplicities(&v)
        .into_iter()
        .filter(|x| x.1 != 0)
        .collect();
    assert_eq!(nonzero, vec![("W(2)".to_string(), 1)]);
    let h1: i64 = v["parts"]["h1"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_i64().unwrap() * e["dimension"].as_i64().unwrap())
        .sum();
    assert_eq!(h1, 28);
    assert_eq!(v["discrepancies"][0]["status"], "EXPECTED");

    let (_, v) = json(&["gamma", "13"]);
    assert_eq!(v["scalars"]["dim"], 1105);
    let parts: Vec<&String> = v["parts"].as_object().unwrap().keys().collect();
    assert_eq!(parts, ["h2", "h3", "h7"]);
}

#[test]
fn chartable_entries_parse_back() {
    let (_, v) = json(&["chartable", "13"]);
    let t = &v["table"];
    assert_eq!(t["orthogonality"], true);
    assert_eq!(t["rows"].as_array().unwrap().len(), 9);
    for row in t["rows"].as_array().unwrap() {
        let vals = row["values"].as_array().unwrap();
        assert_eq!(vals.len(), 9);
        let first = hurwitz::record::parse_entry(vals[0].as_str().unwrap()).unwrap();
        assert_eq!(first.to_i64(), row["dimension"].as_i64());
        for x in vals {
            let s = x.as_str().unwrap();
            assert_eq!(
                hurwitz::chartab::format_entry(&hurwitz::record::parse_entry(s).unwrap()),
                s
            );
        }
    }
    assert_eq!(hurwitz(&["chartable", "125"]).status.code(), Some(4));
}

#[test]
fn verify_reports_expected_table_divergence() {
    let (code, v) = json(&["verify", "13", "--deep"]);
    assert_eq!(code, 0);
    for s in v["suites"].as_array().unwrap() {
        assert_eq!(s["status"], "pass", "{s}");
    }
    let details: Vec<&str> = v["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["detail"].as_str().unwrap())
        .collect();
    assert!(
        details.contains(&"D = (0, 1, 0, 0): W' table 7/2 vs assembled 4"),
        "{details:?}"
    );
}

#[test]
fn verify_skips_enumeration_above_cap() {
    let (code, v) = json(&["verify", "97"]);
    assert_eq!(code, 0);
    let brute = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "induced-brute-force")
        .unwrap();
    assert_eq!(brute["status"], "skipped");
    assert!(brute["detail"].as_str().unwrap().contains("cap"));
    assert_eq!(hurwitz(&["verify", "97", "--deep"]).status.code(), Some(4));
}

#[test]
fn enumeration_cap_is_configurable() {
    let out = Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(["verify", "13", "--deep"])
        .env("HURWITZ_ENUM_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("closed-form"));
}

#[test]
fn malformed_arguments() {
    assert_eq!(
        hurwitz(&["ld", "13", "x", "0", "0", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(hurwitz(&["induced", "13", "5", "1"]).status.code(), Some(3));
    assert_eq!(hurwitz(&["induced", "13", "7", "7"]).status.code(), Some(3));
}
