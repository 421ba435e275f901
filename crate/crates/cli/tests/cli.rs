use std::process::{Command, Output};

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = hankel(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn restricted_cubic_terms() {
    let o = hankel(&["seq", "--family", "restricted", "-m", "3", "-a", "1", "-b", "1", "-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,1,1,2,4,7,13,26");
}

#[test]
fn catalan_second_shift() {
    let o = hankel(&["det", "--name", "catalan", "-k", "2", "--n-range", "1..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2,3,4,5,6");
    let o = hankel(&["det", "--name", "catalan", "-k", "2", "--n-range", "1..=5"]);
    assert_eq!(stdout(&o).trim(), "2,3,4,5,6");
}

#[test]
fn symbolic_verify_passes() {
    let o = hankel(&["verify", "--id", "thm6.4", "--mode", "symbolic", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("mismatches=0"));
}

#[test]
fn json_shape() {
    let v = json(&["det", "--name", "motzkin", "-k", "1", "--n-range", "0..6"]);
    assert_eq!(v["command"], "det");
    assert_eq!(v["config"]["name"], "motzkin");
    let cells = v["cells"].as_array().unwrap();
    let computed: Vec<&str> = cells.iter().map(|c| c["computed"].as_str().unwrap()).collect();
    assert_eq!(computed, ["1", "1", "0", "-1", "-1", "0", "1"]);
    assert_eq!(cells[3]["params"]["size"], "3");
    for key in ["params", "predicted", "computed", "verdict"] {
        assert!(cells[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["summary"]["cells"], 7);
}

#[test]
fn exact_values_are_strings() {
    // 2^(n-1) b^binom(n,2) outgrows 64 bits quickly.
    let v = json(&["det", "--family", "unrestricted", "-m", "2", "-a", "1", "-b", "1000", "-n", "12"]);
    let s = v["cells"][0]["computed"].as_str().unwrap();
    assert_eq!(s, format!("2048{}", "0".repeat(198)));
}

#[test]
fn rational_and_symbolic_parameters() {
    let o = hankel(&["seq", "--family", "restricted", "-m", "2", "-a", "1/2", "-b", "-3", "-n", "4"]);
    // 1, a, a^2 + b, a^3 + 3ab
    assert_eq!(stdout(&o).trim(), "1,1/2,-11/4,-35/8");
    let o = hankel(&["seq", "--family", "shifted", "-m", "2", "--symbolic", "-n", "3"]);
    assert_eq!(stdout(&o).trim(), "1,a + t,a^2 + 2*a*t + b + t^2");
}

#[test]
fn sequence_check_against_closed_sum() {
    let v = json(&["seq", "--family", "unrestricted", "-m", "3", "-a", "2", "-b", "-1/3", "-n", "9", "--check"]);
    assert_eq!(v["summary"]["mismatches"], 0);
    assert_eq!(v["summary"]["matches"], 9);
}

#[test]
fn csv_rows() {
    let o = hankel(&["closed", "--id", "thm6.4", "-a", "2", "-b", "1/2", "--n-range", "0..3", "--check", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,k,size,predicted,computed,verdict,note"));
    assert_eq!(lines.next(), Some("thm6.4,2,0,1,1,match,"));
    assert_eq!(lines.nth(1), Some("thm6.4,2,2,15/4,15/4,match,"));
}

#[test]
fn favard_from_terms() {
    let o = hankel(&["favard", "--terms", "1,1,2,5,14,42"]);
    assert_eq!(stdout(&o).trim(), "1,2,2,1,1");
    let v = json(&["favard", "--name", "catalan", "--count", "3"]);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells[0]["params"]["coefficient"], "s(0)");
    // Named catalan is the shifted tuple, so s(0) = a + t = 1.
    assert_eq!(cells[0]["computed"], "1");
    assert_eq!(cells[1]["computed"], "2");
}

#[test]
fn oracle_marks_large_systems_inapplicable() {
    let v = json(&["oracle", "--family", "restricted", "-m", "3", "-n", "5", "-k", "1", "--cap", "3"]);
    assert_eq!(v["summary"]["mismatches"], 0);
    assert_eq!(v["summary"]["inapplicable"], 2);
}

#[test]
fn conjecture_reports_do_not_fail() {
    let v = json(&["conjecture", "--id", "C7.7", "--mode", "points", "--max-size", "6", "--m-max", "3"]);
    assert!(v["summary"]["mismatches"].as_u64().unwrap() > 0);
    assert_eq!(v["summary"]["by_id"]["C7.7-dd"]["theorem_mismatches"], 0);
    assert!(v["summary"]["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("reading")));
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["seq", "--family", "nope", "-n", "3"][..],
        &["seq", "--family", "restricted", "-a", "0.5", "-n", "3"],
        &["seq", "-n", "3"],
        &["det", "--name", "catalan", "--n-range", "5..1"],
        &["closed", "--id", "thm6.4", "-m", "2", "-n", "3"],
        &["closed", "--id", "thm5.6", "-m", "3", "-a", "1", "-n", "3"],
        &["verify", "--id", "thm99"],
        &["det", "--family", "restricted", "--symbolic", "-n", "40"],
        &["bogus"],
    ] {
        assert_eq!(hankel(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_hankel"))
        .args(["verify", "--id", "thm6.4", "--max-n", "9"])
        .env("HF_MAX_CELLS", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn deterministic_output_and_file() {
    let args = ["verify", "--id", "A", "--mode", "points", "--max-n", "4", "--format", "json", "--seed", "11"];
    assert_eq!(hankel(&args).stdout, hankel(&args).stdout);
    let other = hankel(&["verify", "--id", "A", "--mode", "points", "--max-n", "4", "--format", "json", "--seed", "12"]);
    assert_ne!(hankel(&args).stdout, other.stdout);
    let path = std::env::temp_dir().join(format!("hankel-cli-{}.json", std::process::id()));
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let o = hankel(&with_out);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), hankel(&args).stdout);
    std::fs::remove_file(path).ok();
}
