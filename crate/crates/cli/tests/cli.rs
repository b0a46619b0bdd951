use std::process::{Command, Output};

use serde_json::Value;

fn milnor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_milnor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = milnor(&all);
    (
        serde_json::from_str(&stdout(&o)).unwrap(),
        o.status.code().unwrap(),
    )
}

/// Every leaf of a JSON value, as `path: value` lines.
fn leaves(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) if m.is_empty() => out.push(format!("{path}: {{}}")),
        Value::Array(a) if a.is_empty() => out.push(format!("{path}: []")),
        Value::Object(m) => {
            for (k, c) in m {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                leaves(c, &p, out);
            }
        }
        Value::Array(a) => {
            for (i, c) in a.iter().enumerate() {
                leaves(c, &format!("{path}[{i}]"), out);
            }
        }
        Value::Null => out.push(format!("{path}: n/a")),
        Value::String(s) => out.push(format!("{path}: {s}")),
        other => out.push(format!("{path}: {other}")),
    }
}

#[test]
fn analyze_reports_extremal_quartic() {
    let (v, code) = json(&["analyze", "--poly", "x*(y^3-x^2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["milnor"], 7);
    assert_eq!(v["degree"], 4);
    assert_eq!(v["order"], 3);
    assert_eq!(v["bounds"]["thm11"], 7);
    assert_eq!(v["flags"]["extremal"], true);
    for key in ["bezout", "thm11", "lemma25", "gz", "am"] {
        assert!(v["bounds"].get(key).is_some(), "missing bounds.{key}");
        assert!(v["applicable"].get(key).is_some());
        assert!(v["satisfied"].get(key).is_some());
    }
}

#[test]
fn analyze_homogeneous_and_infinite() {
    let (v, code) = json(&["analyze", "--poly", "x^3+y^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["flags"]["homogeneous"], true);
    assert_eq!(v["milnor"], 4);
    let (v, code) = json(&["analyze", "--poly", "x^2*y"]);
    assert_eq!(code, 0);
    assert_eq!(v["milnor"], "infinity");
}

#[test]
fn text_and_json_agree() {
    for poly in ["x*(y^3-x^2)", "y^2-x^5", "x^2*y"] {
        let (v, _) = json(&["analyze", "--poly", poly, "--assume-unibranch"]);
        let mut expected = Vec::new();
        leaves(&v, "", &mut expected);
        let text = stdout(&milnor(&["analyze", "--poly", poly, "--assume-unibranch"]));
        assert_eq!(text.lines().collect::<Vec<_>>(), expected);
    }
}

#[test]
fn json_has_no_floats() {
    let (v, _) = json(&["verify", "lemmas", "--factor", "x", "--factor", "x+x^2+y^2"]);
    let mut all = Vec::new();
    leaves(&v, "", &mut all);
    assert!(!all.is_empty());
    fn check(v: &Value) {
        match v {
            Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "float {n}"),
            Value::Array(a) => a.iter().for_each(check),
            Value::Object(m) => m.values().for_each(check),
            _ => {}
        }
    }
    check(&v);
}

#[test]
fn input_errors_exit_2() {
    let o = milnor(&["analyze", "--poly", "x+1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("curve does not pass through origin"));
    let o = milnor(&["analyze", "--poly", "x+*y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 2"));
    let o = milnor(&["verify", "lemma2.1", "--factor", "x", "--factor", "2*x+x*y"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("non-isolated singularity"));
    let o = milnor(&["generate", "--family", "extremal", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = milnor(&["verify", "lemma4.1", "--factor", "y^2-x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = milnor(&["verify", "thm1.4", "--poly", "x", "--factor", "y"]);
    assert_eq!(o.status.code(), Some(2));
    let o = milnor(&["fuzz", "--trials", "1", "--seed", "1", "--coeff-bound", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_thm14() {
    let (v, code) = json(&[
        "verify",
        "thm1.4",
        "--factor",
        "x+x^2+y^2",
        "--factor",
        "x+2*x^2+y^2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["i_holds"], true);
    assert_eq!(v["details"]["ii_holds"], true);
    let (v, code) = json(&["verify", "thm1.4", "--factor", "x", "--factor", "y^3-x^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["i_holds"], true);
    assert_eq!(v["details"]["ii_holds"], false);
    assert_eq!(v["details"]["d4_exception"], true);
}

#[test]
fn verify_other_checks() {
    let (v, code) = json(&["verify", "lemma2.1", "--factor", "x", "--factor", "y"]);
    assert_eq!((code, &v["holds"]), (0, &Value::Bool(true)));
    let (v, code) = json(&[
        "verify",
        "lemma4.1",
        "--factor",
        "y^3-x^2",
        "--factor",
        "x+x^2+y^2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["intersection"], 3);
    let (v, code) = json(&["verify", "thm1.1", "--poly", "x*(y^3-x^2)"]);
    assert_eq!((code, &v["holds"]), (0, &Value::Bool(true)));
    let (v, code) = json(&[
        "verify",
        "lemmas",
        "--factor",
        "x",
        "--factor",
        "x+x^2+y^2",
        "--factor",
        "x+2*x^2+y^2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["lemma27_holds"], true);
}

#[test]
fn generate_families() {
    let o = milnor(&["generate", "--family", "extremal", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x\nx+x^2+y^2\nx+2*x^2+y^2\nmilnor: 14\nbound: 14\n"
    );
    let o = milnor(&["generate", "--family", "irreducible-max", "--degree", "5"]);
    assert_eq!(stdout(&o), "x^4+y^5\nmilnor: 12\nbound: 12\n");
    let (v, _) = json(&["generate", "--family", "extremal", "--degree", "4"]);
    assert_eq!(
        v["factors"],
        serde_json::json!(["x+x^2+y^2", "x+2*x^2+y^2"])
    );
    assert_eq!(v["milnor"], 7);
}

#[test]
fn generated_output_parses_back() {
    let o = milnor(&["generate", "--family", "extremal", "--degree", "7"]);
    let text = stdout(&o);
    let factors: Vec<&str> = text.lines().filter(|l| !l.contains(':')).collect();
    let mut args = vec!["verify", "thm1.4"];
    for f in &factors {
        args.extend(["--factor", f]);
    }
    let (v, code) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["ii_holds"], true);
}

#[test]
fn fuzz_is_deterministic_and_clean() {
    let args = [
        "fuzz",
        "--trials",
        "10",
        "--seed",
        "42",
        "--oracle-subsample",
        "3",
    ];
    let a = milnor(&args);
    let b = milnor(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let (v, code) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(v["trials_run"], 10);
    assert_eq!(v["violations"], serde_json::json!([]));
}

#[test]
fn empty_fuzz() {
    let (v, code) = json(&["fuzz", "--trials", "0", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["trials_run"], 0);
}
