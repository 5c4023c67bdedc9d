use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_tableau-lab"));
    c.env_remove("TABLEAU_LAB_MAX_M");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn counting_commands_print_one_integer() {
    let cases: &[(&[&str], &str)] = &[
        (&["kostka", "--width", "2", "--height", "3", "--k", "0"], "5"),
        (&["kostka", "--width", "3", "--height", "2", "--k", "1"], "3"),
        (&["kostka", "--width", "3", "--height", "3", "--k", "-1"], "3"),
        (&["kostka", "--width", "3", "--height", "3", "--k=-1", "--a", "2"], "3"),
        (&["count-perms", "--class", "lis-prefix", "--m", "4", "--w", "2"], "5"),
        (&["count-perms", "--class", "lis-at-most", "--m", "4", "--w", "3"], "23"),
        (&["count-perms", "--class", "block-head", "--m", "4", "--w", "2", "--k", "2"], "4"),
        (&["nc2", "--n", "3", "--colors", "1"], "5"),
        (&["nc2", "--n", "2", "--colors", "2"], "3"),
        (&["catalan-rect", "--n", "3", "--m", "2"], "5"),
        (&["catalan-rect", "--n", "2", "--m", "3"], "5"),
    ];
    for (args, expected) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), format!("{expected}\n"), "{args:?}");
    }
}

#[test]
fn emit_tableaux_streams_canonical_order() {
    let o = run(&["kostka", "--width", "3", "--height", "2", "--k", "1", "--emit-tableaux"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[3], "3");
    let tops: Vec<Value> = lines[..3]
        .iter()
        .map(|l| {
            let t: Value = serde_json::from_str(l).unwrap();
            assert_eq!(t["width"], 3);
            let cols = t["columns"].as_array().unwrap().clone();
            Value::from(cols.iter().map(|c| c[0].clone()).collect::<Vec<_>>())
        })
        .collect();
    assert_eq!(tops, vec![serde_json::json!([1, 1, 4]), serde_json::json!([1, 1, 3]), serde_json::json!([1, 1, 2])]);
}

#[test]
fn biject_forward_and_inverse() {
    let r = json_file(r#"{"width":2,"columns":[[1,2,3],[4,5,6]]}"#);
    let path = r.path().to_str().unwrap();
    let o = run(&["biject", "forward", "--params", "2,3,0", "--input", path]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let fwd: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(fwd["P"]["columns"].is_array() && fwd["Q"]["columns"].is_array());
    let sigma: Vec<String> = fwd["sigma"].as_array().unwrap().iter().map(|v| v.to_string()).collect();

    let o = run(&["biject", "inverse", "--params", "2,3,0", "--perm", &sigma.join(" ")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let inv: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(inv["R"]["columns"], serde_json::json!([[1, 2, 3], [4, 5, 6]]));
    assert_eq!(inv["M"], Value::Null);

    let o = run(&["biject", "inverse", "--params", "2,2,1", "--perm", "1 3 2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let inv: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(inv["M"]["columns"], serde_json::json!([[1], [2]]));
    let r = json_file(&inv["R"].to_string());
    let o = run(&["biject", "forward", "--params", "2,2,1", "--input", r.path().to_str().unwrap(), "--m-index", "0"]);
    let fwd: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(fwd["sigma"], serde_json::json!([1, 3, 2]));
}

#[test]
fn zero_skew_ignores_block_index_with_note() {
    let r = json_file(r#"{"width":2,"columns":[[1,2,3],[4,5,6]]}"#);
    let o = run(&["biject", "forward", "--params", "2,3,0", "--input", r.path().to_str().unwrap(), "--m-index", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("base bijection"));
}

#[test]
fn membership_errors_exit_2() {
    let o = run(&["biject", "inverse", "--params", "2,2,1", "--perm", "2 1 3"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    let o = run(&["biject", "inverse", "--params", "2,3,0", "--perm", "1 2 3"]);
    assert_eq!(o.status.code(), Some(2), "lis 3 > w 2: {}", stderr(&o));
    let wrong_content = json_file(r#"{"width":2,"columns":[[1,2],[1,2]]}"#);
    let o = run(&["biject", "forward", "--params", "2,2,1", "--input", wrong_content.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn data_errors_exit_65() {
    let bad_rows = json_file(r#"{"width":2,"columns":[[1,4],[2,3]]}"#);
    let o = run(&["biject", "forward", "--params", "2,2,0", "--input", bad_rows.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(65));
    assert!(stderr(&o).contains("(column 0, row 1) and (column 1, row 1)"), "{}", stderr(&o));
    let garbage = json_file("{\"width\":2");
    let o = run(&["biject", "forward", "--params", "2,2,0", "--input", garbage.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(65));
    let o = run(&["biject", "forward", "--params", "2,2,0", "--input", "/nonexistent/r.json"]);
    assert_eq!(o.status.code(), Some(65));
    let o = run(&["biject", "inverse", "--params", "2,2,1", "--perm", "1 1 2"]);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["verify", "--claim", "thm9.9"][..],
        &["frobnicate"],
        &["kostka", "--width", "2"],
        &["kostka", "--width", "2", "--height", "2", "--k", "5"],
        &["count-perms", "--class", "block-head", "--m", "4", "--w", "2"],
        &["count-perms", "--class", "nope", "--m", "4", "--w", "2"],
        &["count-perms", "--class", "lis-prefix", "--m", "10", "--w", "2"],
        &["biject", "inverse", "--params", "1,2,0", "--perm", "1"],
        &["biject", "inverse", "--params", "2,2", "--perm", "1 2"],
        &["catalan-rect", "--n", "0", "--m", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(64), "{args:?}");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn cap_from_environment_and_flag() {
    let o = bin()
        .args(["count-perms", "--class", "lis-prefix", "--m", "5", "--w", "2"])
        .env("TABLEAU_LAB_MAX_M", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
    assert!(stderr(&o).contains("TABLEAU_LAB_MAX_M"));
    let o = run(&["count-perms", "--class", "lis-prefix", "--m", "10", "--w", "10", "--cap", "10"]);
    assert_eq!(stdout(&o), "1\n");

    let o = bin()
        .args(["verify", "--claim", "conj2.6", "--w", "2", "--max-m", "6", "--no-timing"])
        .env("TABLEAU_LAB_MAX_M", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("conj2.6,w=2;m=6,,,skipped,\n"), "{}", stdout(&o));
}

#[test]
fn verify_csv_is_reproducible() {
    let args = ["verify", "--claim", "thm2.2", "--no-timing"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("claim,params,lhs,rhs,match,elapsed_ms\n"));
    assert!(text.contains("\nthm2.2,w=2;n=3;k=1;m=4,5,5,true,\n"));

    let timed = stdout(&run(&["verify", "--claim", "eq1", "--max-n", "2"]));
    let row = timed.lines().nth(1).unwrap();
    assert!(row.starts_with("eq1,n=1;form=catalan,1,1,true,"));
    assert!(row.rsplit(',').next().unwrap().parse::<f64>().is_ok());
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "--claim", "eq1", "--max-n", "6", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\neq1,n=3;form=catalan,5,5,true,\n"));

    let o = run(&["verify", "--claim", "cor2.3", "--w", "3", "--max-m", "7", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\ncor2.3,w=3;n=2;m=4,3,3,true,\n"));
    assert!(stderr(&o).contains("S_{n+w-1}"));

    let o = run(&["verify", "--claim", "conj2.6", "--w", "2", "--max-m", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m4 = rows.as_array().unwrap().iter().find(|r| r["params"] == "w=2;m=4").unwrap();
    assert_eq!((&m4["lhs"], &m4["rhs"], &m4["match"]), (&Value::from("5"), &Value::from("5"), &Value::from(true)));
    assert_eq!(m4["kind"], "conjecture");
    assert!(m4["note"].as_str().unwrap().contains("candidate NC_2 model"));
    assert!(m4["elapsed_ms"].is_number());
}

#[test]
fn conjecture_mismatch_exits_3() {
    let o = run(&["verify", "--claim", "conj2.6", "--w", "4", "--max-m", "7", "--no-timing"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("\nconj2.6,w=4;m=7,104,106,false,\n"));
}
