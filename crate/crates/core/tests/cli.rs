use std::process::{Command, Output};

fn oddjm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddjm"))
        .args(args)
        .env_remove("ODDJM_BRUTE_FORCE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn average_as_polynomial() {
    let o = oddjm(&["avg", "--alpha", "2", "--mu", "1", "--F", "h[3]", "--poly"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-7 + 3*n + 1*n^2");
}

#[test]
fn series_prints_signed_coefficients() {
    let o = oddjm(&["wg", "series", "--n", "2", "--coset", "0", "--order", "6"]);
    assert!(o.status.success());
    let coefs: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(coefs, ["1", "0", "2", "-2", "6", "-10", "22"]);
    assert!(stdout(&o).starts_with("N^-2\t1\n"));
}

#[test]
fn exact_integral() {
    let o = oddjm(&["wg", "integrate", "--i", "1,1,2,2", "--j", "1,1,2,2", "--N", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4/189");
}

#[test]
fn odd_degree_integral_is_zero() {
    let o = oddjm(&["wg", "integrate", "--i", "1,2,3", "--j", "1,2,3", "--N", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "0");
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd"));
}

#[test]
fn expansion_of_complete_function() {
    let o = oddjm(&["expand", "--F", "h[3]", "--n", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    for want in ["(0)\t12", "1\t21", "2\t6", "1,1\t2", "3\t5"] {
        assert!(rows.contains(&want), "missing {want:?} in {rows:?}");
    }
}

#[test]
fn conjecture_suite_passes() {
    let o = oddjm(&["verify", "conjectures", "--max-k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| !l.contains("\tFAIL\t")));
    assert!(out.contains("\tNOTE\t"));
    assert!(out.contains("562"));
}

#[test]
fn json_output_parses() {
    let o = oddjm(&["--format", "json", "jack", "measure", "--n", "3", "--alpha", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);

    let o = oddjm(&["--format", "json", "verify", "tables-9-2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "tables-9-2");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(oddjm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(oddjm(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(oddjm(&["avg", "--alpha", "0", "--mu", "1", "--F", "h[1]", "--n", "3"]).status.code(), Some(2));
    assert_eq!(oddjm(&["expand", "--F", "h[[", "--n", "2"]).status.code(), Some(2));
}
