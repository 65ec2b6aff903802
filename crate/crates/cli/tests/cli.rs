use std::path::Path;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lrs(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lrs")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn ok(args: &[&str]) -> String {
    let r = lrs(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

#[test]
fn irs_goldens() {
    assert_eq!(ok(&["irs", "--coeffs", "1,1", "--count", "8"]), golden("irs_fibonacci.txt"));
    assert_eq!(ok(&["irs", "--coeffs", "1,1,1", "--count", "10"]), golden("irs_tribonacci.txt"));
}

#[test]
fn stirling_golden() {
    assert_eq!(ok(&["stirling"]), golden("stirling_triangle.txt"));
    assert_eq!(ok(&["stirling", "--k", "3", "--count", "6"]), "0 0 1 6 25 90\n");
}

#[test]
fn wythoff_goldens() {
    assert_eq!(ok(&["wythoff"]), golden("wythoff_fibonacci.txt"));
    assert_eq!(ok(&["wythoff", "--variant", "pell", "--rows", "5"]), golden("wythoff_pell.txt"));
}

#[test]
fn toeplitz_solution_and_singular_case() {
    assert_eq!(
        ok(&["toeplitz", "--coeffs", "1,1,1", "--initials", "2,1,1"]),
        "F~_n = (6/19)a[n+1] - (4/19)a[n] - (1/19)a[n-1]\n"
    );
    let r = lrs(&["toeplitz", "--coeffs", "1,3,1", "--initials", "1,0,1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error[singular-system]: "));
    assert!(r.stderr.contains("determinant 0"));
}

#[test]
fn verify_counts_and_exit_codes() {
    let pass = ok(&[
        "verify",
        "--suite",
        "nonlinear",
        "--coeffs",
        "1,2",
        "--m",
        "1..5",
        "--n",
        "0..6",
        "--r",
        "-10..10",
    ]);
    assert_eq!(pass, "PASS (735 cases)\n");
    let r = lrs(&["verify", "--suite", "congruence", "--coeffs", "1,1"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, "FAIL at m=3, n=0, r=1 [mod 2]: lhs=1 rhs=2\n");
    let r = lrs(&["verify", "--suite", "named:jacobsthal-mixed-sum-printed"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("FAIL at m=0, n=1"));
    assert_eq!(ok(&["verify", "--suite", "named:carlitz", "--n", "0..20"]), "PASS (21 cases)\n");
}

#[test]
fn errors_are_one_line_with_code() {
    for (args, code) in [
        (&["eval", "--coeffs", "1,1/0"][..], "parse-rational"),
        (&["eval", "--coeffs", "1,0"][..], "zero-leading-coefficient"),
        (&["eval", "--coeffs", "1,1", "--initials", "1"][..], "initials-length"),
        (&["eval", "--coeffs", "1,1", "--n", "-2"][..], "index-below-floor"),
        (&["verify", "--suite", "bogus", "--coeffs", "1,1"][..], "usage"),
        (&["verify", "--suite", "named:nope"][..], "unknown-identity"),
        (&["wythoff", "--variant", "lucas"][..], "usage"),
        (&["frobnicate"][..], "usage"),
        (&["eval"][..], "usage"),
    ] {
        let r = lrs(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert_eq!(r.stderr.lines().count(), 1, "{args:?}: {}", r.stderr);
        assert!(r.stderr.starts_with(&format!("error[{code}]: ")), "{args:?}: {}", r.stderr);
    }
}

#[test]
fn json_round_trips_through_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let json = ok(&[
        "eval",
        "--coeffs",
        "1,1,1",
        "--initials",
        "2,1,1",
        "--from",
        "0",
        "--to",
        "6",
        "--format",
        "json",
    ]);
    std::fs::write(&first, &json).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(v["terms"], serde_json::json!(["2", "1", "1", "4", "6", "11", "21"]));

    let again = ok(&["toeplitz", "--spec", first.to_str().unwrap(), "--format", "json"]);
    let second = dir.path().join("second.json");
    std::fs::write(&second, &again).unwrap();
    assert_eq!(
        ok(&["eval", "--spec", second.to_str().unwrap(), "--from", "0", "--to", "6"]),
        "2 1 1 4 6 11 21\n"
    );
    let t: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(t["terms"][0], serde_json::json!({"delta": 1, "c": "6/19"}));
}

#[test]
fn spec_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"coefficients\": ").unwrap();
    let r = lrs(&["eval", "--spec", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error[spec-file]: "));
    let r = lrs(&["eval", "--spec", dir.path().join("missing.json").to_str().unwrap()]);
    assert!(r.stderr.starts_with("error[io]: "));
}

#[test]
fn rational_specs_and_negative_indices() {
    assert_eq!(
        ok(&["eval", "--coeffs", "1/2,1/2", "--initials", "0,1", "--from", "-1", "--to", "4"]),
        "2 0 1 1/2 3/4 5/8\n"
    );
    assert_eq!(ok(&["eval", "--coeffs", "1,1", "--n", "10"]), "55\n");
}

#[test]
fn closed_form_reports_roots_and_agreement() {
    let out = ok(&["closed-form", "--coeffs", "1,1", "--n", "10", "--digits", "12"]);
    assert!(out.contains("1.618033988750"), "{out}");
    assert!(out.contains("-0.618033988750"), "{out}");
    let last: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(last, ["10", "55.000000000000", "55", "yes"]);
    let json = ok(&["closed-form", "--coeffs", "2,-1", "--from", "0", "--to", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["roots"].as_array().unwrap().len(), 1);
    assert_eq!(v["roots"][0]["mult"], 2);
    assert!(v["values"].as_array().unwrap().iter().all(|x| x["agrees"] == true));
}

#[test]
fn representation_and_generating_function() {
    let out = ok(&["represent", "--coeffs", "1,1,1", "--initials", "2,1,1", "--n", "7"]);
    assert!(out.starts_with("a_n = (1)*F~_n + (3)*F~_(n-1) + (1)*F~_(n-2)\n"), "{out}");
    assert!(out.trim_end().ends_with("7        38      38"), "{out}");
    assert_eq!(ok(&["genfunc", "--coeffs", "1,1,1"]), "t^2/(1 - t - t^2 - t^3)\n");
}

#[test]
fn boustrophedon_outputs() {
    let out = ok(&["boustrophedon", "--values", "1,1,1,1"]);
    assert!(out.ends_with("b = 1 2 4 9\n"), "{out}");
    let csv = ok(&["boustrophedon", "--values", "1,0,0,0,0,0", "--format", "csv"]);
    let b: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(b, ["1", "1", "1", "2", "5", "16"]);
}

#[test]
fn csv_sequences() {
    assert_eq!(
        ok(&["irs", "--coeffs", "2,1", "--count", "3", "--format", "csv"]),
        "n,value\n0,0\n1,1\n2,2\n"
    );
}
