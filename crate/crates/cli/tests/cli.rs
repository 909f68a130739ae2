//! Dispatch, payloads and exit-code semantics.

use hookline_cli::{dispatch, CommandResult, Status};
use hookline_groups::classical::{build_group, Family};
use hookline_groups::dixon::character_table;
use serde_json::{json, Value};
use std::io::Write;

fn run(args: &[&str]) -> CommandResult {
    dispatch(std::iter::once("hookline").chain(args.iter().copied()))
}

#[test]
fn documented_examples() {
    let r = run(&["symbol", "rank", "{1|0}"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload, json!({ "rank": 1, "defect": 0 }));
    assert_eq!(r.payload.to_string(), r#"{"rank":1,"defect":0}"#);

    let r = run(&["young", "kostka", "--lambda", "2,1", "--mu", "1,1,1"]);
    assert_eq!(r.payload, json!(2));

    let r = run(&["asai", "verify", "--max-entry", "4", "--max-rank", "4"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["failures"], json!([]));
    assert!(r.payload["checked"].as_u64().unwrap() > 0);
}

#[test]
fn degrees_and_flags() {
    let r = run(&["degree", "eval", "--kind", "C", "--q", "3", "--symbol", "{0,1,2|}"]);
    assert_eq!(r.status, Status::Ok);
    // the cuspidal unipotent character of Sp₄(q) has degree q(q − 1)²/2
    assert_eq!(r.payload["degree"], "6");

    let r = run(&["degree", "eval", "--kind", "A", "--q", "2", "--lambda", "2,1"]);
    assert_eq!(r.payload["degree"], "6");

    let r = run(&["degree", "count", "--kind", "A", "--rank", "8", "--q", "2", "--max", "4096"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["labels"], 30);

    let r = run(&["degree", "enumerate", "--kind", "odd", "--rank", "2", "--q", "2"]);
    assert_eq!(r.payload.as_array().unwrap().len(), 6);

    let r = run(&["flags", "count", "--a", "1,2", "--N", "40", "--q", "2"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["dimension"], 77);

    let r = run(&["flags", "stable", "--a", "1", "--q", "3", "--eig", "1:5,c:1", "--brute"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["brute"], r.payload["report"]["stable"]);

    let r = run(&["young", "stable", "--a", "1,2", "--q", "2", "--eig", "J2+J2", "--N", "40"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["report"]["support"], 2);

    let r = run(&["young", "lowa", "--lambda", "38,2", "--q", "2", "--eig", "C2"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["degree_matches"], true);

    let r = run(&["young", "inverse", "--lambda", "5,1"]);
    assert_eq!(r.payload, json!([{ "mu": "(5,1)", "coefficient": "1" }, { "mu": "(6)", "coefficient": "-1" }]));
}

#[test]
fn weyl_and_groups() {
    let r = run(&["weyl", "classes", "--n", "2"]);
    assert_eq!(r.payload["count"], 5);

    let r = run(&["weyl", "char", "--n", "2", "--defect", "1", "--csv"]);
    let csv = r.payload.as_str().unwrap();
    assert_eq!(csv.lines().count(), 6);

    let r = run(&["weyl", "audit", "--n", "3"]);
    assert_eq!(r.status, Status::Ok);

    let r = run(&["group", "table", "--family", "SL", "--n", "2", "--q", "3"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["degrees"].as_array().unwrap().len(), 7);
    assert!(r.payload["values"][1][1]["coordinates"].is_array());

    let r = run(&["group", "frobenius", "--family", "SL", "--n", "2", "--q", "3"]);
    assert_eq!(r.status, Status::Ok);
    let r = run(&["group", "frobenius", "--family", "GL", "--n", "3", "--q", "2", "--classes", "1,1,0"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["frobenius"], r.payload["convolution"].to_string());

    let r = run(&["group", "thompson", "--family", "SL", "--n", "3", "--q", "2", "--torus"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["cross_validated"], true);

    let r = run(&["group", "cancel", "--p", "3", "--q", "2"]);
    assert_eq!(r.payload["terms"][0]["lhs"], "-9");
}

#[test]
fn support_of_a_matrix_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 2\n1 1 0\n0 1 0\n0 0 1").unwrap();
    let path = f.path().to_str().unwrap();
    let r = run(&["group", "support", "--matrix", path, "--seed", "7"]);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.payload["support"], 1);
    let again = run(&["group", "support", "--matrix", path, "--seed", "7"]);
    assert_eq!(r.payload, again.payload);
}

#[test]
fn bad_input_is_an_error() {
    for args in [
        vec!["bogus"],
        vec!["symbol", "rank", "{1,1|0}"],
        vec!["young", "kostka", "--lambda", "2,1", "--mu", "2"],
        vec!["flags", "stable", "--a", "1", "--q", "2", "--eig", "1:39,c:1"],
        vec!["degree", "eval", "--kind", "D", "--q", "2", "--symbol", "{0,1,2|}"],
        vec!["group", "build", "--family", "GL", "--n", "2", "--q", "6"],
    ] {
        let r = run(&args);
        assert_eq!(r.status, Status::Error, "{args:?}");
        assert_eq!(r.status.exit_code(), 2);
        assert!(r.payload["error"].is_string());
    }
    let r = run(&["bogus"]);
    assert!(r.payload["usage"].as_str().unwrap().contains("Usage"));
}

#[test]
fn corrupted_table_fails() {
    let g = build_group(Family::SL, 2, 3).unwrap();
    let mut table = character_table(&g).unwrap();
    let row = table.values.iter().position(|r| !r[1].terms.is_empty()).unwrap();
    table.values[row][1] = table.values[row][1].mul(&hookline_groups::cyclo::RootSum::integer(table.exponent, -1));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(serde_json::to_string(&table).unwrap().as_bytes()).unwrap();
    let r = run(&["audit", "table", f.path().to_str().unwrap()]);
    assert_eq!(r.status, Status::Failed);
    assert_eq!(r.status.exit_code(), 1);
    let failure = r.payload["validation"]["failure"].as_str().unwrap();
    assert!(failure.contains("orthogonality"), "{failure}");

    // the untouched table passes the same command
    let table = character_table(&g).unwrap();
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(serde_json::to_string(&table).unwrap().as_bytes()).unwrap();
    assert_eq!(run(&["audit", "table", f.path().to_str().unwrap()]).status, Status::Ok);
}

#[test]
fn trivial_caps_run_fewer_checks() {
    let caps = json!({
        "asai_max_entry": 2, "asai_max_union": 2, "asai_d_max": 2,
        "weyl_max_n": 2, "induced_max_n": 1, "type_d_max_n": 2, "centralizer_max_n": 2,
        "sym_centralizer_max_n": 3, "degree_max_n": 2, "degree_qs": [2], "partition_count_max_n": 3,
        "count_max_rank": 2, "count_qs": [2], "borel_qs": [], "kostka_max_n": 3, "stability_max_n": 4,
        "stability_max_tail": 1, "brute_flag_max_n": 2, "flag_max_n": 6, "flag_qs": [2],
        "desk_n": 12, "group_max_order": 200
    });
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(caps.to_string().as_bytes()).unwrap();
    let r = run(&["audit", "all", "--caps", f.path().to_str().unwrap()]);
    let criteria = r.payload["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 13);
    let failed: Vec<&Value> = criteria.iter().filter(|c| c["passed"] != true).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert_eq!(r.status, Status::Ok);
    // only the order-≤-200 groups remain
    assert!(criteria[9]["checks"].as_u64().unwrap() < 14);

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    bad.write_all(br#"{"no_such_cap": 1}"#).unwrap();
    assert_eq!(run(&["audit", "all", "--caps", bad.path().to_str().unwrap()]).status, Status::Error);
}
