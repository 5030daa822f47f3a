use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn wittkit(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wittkit"))
        .args(args)
        .env_remove("WITTKIT_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wittkit");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn one() -> Value {
    json!([{"d": 1, "re": "1"}])
}

#[test]
fn verify_table1_passes() {
    let o = wittkit(&["verify", "--suite", "table1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("16 pass, 0 fail, 0 conflict"), "{}", stdout(&o));
}

#[test]
fn verify_json_report() {
    let o = wittkit(&["verify", "--suite", "negative-g12", "--format", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "negative-g12");
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let args = ["verify", "--suite", "pauli", "--samples", "5", "--format", "json"];
    let a = stdout(&wittkit(&[&args[..], &["--seed", "7"]].concat(), None));
    let b = stdout(&wittkit(&[&args[..], &["--seed", "7"]].concat(), None));
    assert_eq!(a, b);

    let env = Command::new(env!("CARGO_BIN_EXE_wittkit"))
        .args(args)
        .env("WITTKIT_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env.stdout).unwrap(), a);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(wittkit(&["verify", "--suite", "nonsense"], None).status.code(), Some(2));
    assert_eq!(wittkit(&["generate", "frame-map", "--k", "4"], None).status.code(), Some(2));
    assert_eq!(wittkit(&["generate", "omega", "--format", "table"], None).status.code(), Some(2));
    assert_eq!(wittkit(&["generate", "omega", "--k", "3", "--variant", "complex-plain"], None).status.code(), Some(2));
    assert_eq!(wittkit(&["bogus"], None).status.code(), Some(2));
    let o = wittkit(&["convert", "--direction", "mv2mat", "--algebra", "g11"], Some("{not json"));
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn g3_extraction_exits_3() {
    let x = json!({"signature": [1, 1, 1], "terms": [{"blade": [], "coeff": one()}]});
    let o = wittkit(&["convert", "--direction", "mv2mat", "--algebra", "g3"], Some(&x.to_string()));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn convert_identity_and_gamma0() {
    let o = wittkit(
        &["convert", "--direction", "mat2mv", "--algebra", "g11"],
        Some(r#"{"dim": 2, "entries": [[[{"d":1,"re":"1"}], []], [[], [{"d":1,"re":"1"}]]]}"#),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v, json!({"signature": [1, -1], "terms": [{"blade": [], "coeff": one()}]}));

    // [γ0] from the standard Dirac matrices converts back to γ0.
    let dirac: Value = serde_json::from_str(&stdout(&wittkit(&["generate", "dirac-standard"], None))).unwrap();
    let g0 = dirac["matrices"]["gamma0"].to_string();
    let o = wittkit(&["convert", "--direction", "mat2mv", "--algebra", "g13"], Some(&g0));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v, json!({"signature": [1, -1, -1, -1], "terms": [{"blade": [0], "coeff": one()}]}));
}

#[test]
fn convert_round_trip_stream() {
    let w: Value = serde_json::from_str(&stdout(&wittkit(&["generate", "global-witt", "--algebra", "g22"], None))).unwrap();
    let input: Vec<String> = ["a_1", "a_2", "b_1", "b_2"].iter().map(|k| w[k].to_string()).collect();
    let mats = wittkit(&["convert", "--direction", "mv2mat", "--algebra", "g22"], Some(&input.join("\n")));
    assert_eq!(mats.status.code(), Some(0));
    let back = wittkit(&["convert", "--direction", "mat2mv", "--algebra", "g22"], Some(&stdout(&mats)));
    assert_eq!(back.status.code(), Some(0));
    let out: Vec<Value> = stdout(&back).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let want: Vec<Value> = input.iter().map(|s| serde_json::from_str(s).unwrap()).collect();
    assert_eq!(out, want);
}

#[test]
fn generate_formats() {
    let csv = stdout(&wittkit(&["generate", "omega", "--k", "2", "--format", "csv"], None));
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().all(|l| l.split(',').count() == 4));

    let o: Value = serde_json::from_str(&stdout(&wittkit(&["generate", "omega", "--k", "3", "--variant", "minus"], None))).unwrap();
    assert_eq!(o["k"], 3);
    assert_eq!(o["variant"], "minus");
    assert_eq!(o["matrix"]["dim"], 8);

    let latex = stdout(&wittkit(&["generate", "frame-map", "--variant", "complex", "--format", "latex"], None));
    assert!(latex.contains(r"\sqrt{6}\, e_{1} = c_{1} + c_{2} + c_{3} + c_{4}"), "{latex}");

    let table = wittkit(&["generate", "c8-table", "--format", "table"], None);
    assert_eq!(table.status.code(), Some(0));
    assert!(stdout(&table).contains("f4"));

    let c8: Value = serde_json::from_str(&stdout(&wittkit(&["generate", "c8-table"], None))).unwrap();
    let mismatched: Vec<&Value> = c8["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["matches_printed"] == false)
        .map(|e| &e["label"])
        .collect();
    assert_eq!(mismatched, vec!["f4"]);

    for object in ["local-witt", "spectral", "dirac-new", "pauli"] {
        for format in ["json", "latex", "csv"] {
            let o = wittkit(&["generate", object, "--format", format], None);
            assert_eq!(o.status.code(), Some(0), "{object} {format}");
            assert!(!o.stdout.is_empty());
        }
    }
}
