use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_coxeter-euler"));
    c.env_remove("COXETER_CACHE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn compute_e6() {
    let o = run(&["compute", "E6", "--method", "recursion"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("K(E6) = 82\n"), "{out}");
    assert!(out.contains("1/2 K(A1xA2xA2) = 15"));
}

#[test]
fn compute_all_agrees() {
    let o = run(&["compute", "A3", "--method", "all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("recursion:  2"));
    assert!(out.contains("bruteforce: 2"));
    assert!(out.contains("closed:     2"));
    assert!(out.contains("agreement: OK"));
}

#[test]
fn compute_all_skips_unsupported_brute_force() {
    let o = run(&["compute", "E7", "--method", "all", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"]["recursion"]["value"], "768");
    assert_eq!(v["results"]["closed"]["value"], "768");
    assert!(v["skipped"]["bruteforce"].as_str().unwrap().contains("recursion"));
    assert_eq!(v["agreement"], true);
}

#[test]
fn unsupported_brute_force_exits_3() {
    let o = run(&["compute", "E7", "--method", "bruteforce"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("recursion"));
}

#[test]
fn parse_errors_exit_2() {
    for spec in ["Q3", "I2(2)", "A", "A3y"] {
        let o = run(&["compute", spec]);
        assert_eq!(o.status.code(), Some(2), "{spec}");
    }
    assert_eq!(run(&["compute", "A3", "--workers", "0"]).status.code(), Some(2));
}

#[test]
fn json_and_csv_output() {
    let o = run(&["compute", "E6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["group"], "E6");
    let r = &v["results"]["recursion"];
    assert_eq!(r["value"], "82");
    assert_eq!(r["method"], "summ2");
    assert_eq!(r["terms"].as_array().unwrap().len(), 4);

    let o = run(&["compute", "B3xA1", "--method", "all", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "group,method,value\nA1xB3,recursion,20\nA1xB3,bruteforce,20\nA1xB3,closed,20\n"
    );
}

#[test]
fn table_rows() {
    let o = run(&["table", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("family,rank_or_m,method,value\n"));
    let row = |family: &str, range: std::ops::RangeInclusive<u32>| -> Vec<String> {
        range
            .map(|n| {
                let prefix = format!("{family},{n},recursion,");
                let line = out.lines().find(|l| l.starts_with(&prefix)).unwrap_or_else(|| panic!("{prefix}"));
                line[prefix.len()..].to_string()
            })
            .collect()
    };
    assert_eq!(row("D", 2..=8), ["2", "2", "12", "26", "178", "594", "4792"]);
    assert_eq!(row("barD", 2..=8), ["1", "2", "7", "26", "117", "594", "3407"]);
    assert_eq!(row("A", 0..=7), ["1", "1", "1", "2", "5", "16", "61", "272"]);
    assert_eq!(row("E", 6..=8), ["82", "768", "4056"]);
    assert_eq!(stdout(&run(&["table", "--format", "csv"])), out);
}

#[test]
fn verify_passes() {
    let o = run(&["verify"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

fn corrupt(path: &Path, group: &str, value: &str) {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let entry = v["entries"].as_array_mut().unwrap().iter_mut().find(|e| e["group"] == group).unwrap();
    entry["value"] = serde_json::Value::String(value.into());
    std::fs::write(path, serde_json::to_string(&v).unwrap()).unwrap();
}

#[test]
fn corrupted_cache_is_caught_by_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let c = cache.to_str().unwrap();
    assert!(run(&["compute", "E6", "--cache", c]).status.success());
    corrupt(&cache, "E6", "83");
    let o = run(&["verify", "--cache", c]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("E6"), "{}", stderr(&o));
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("cache.json");
    let c = cache.to_str().unwrap();
    let cold = run(&["compute", "E8", "--format", "json"]);
    let first = run(&["compute", "E8", "--format", "json", "--cache", c]);
    assert!(cache.exists());
    let warm = run(&["compute", "E8", "--format", "json", "--cache", c]);
    assert_eq!(stdout(&cold), stdout(&first));
    assert_eq!(stdout(&cold), stdout(&warm));
}

#[test]
fn cache_env_overrides_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("env.json");
    let flag_path = dir.path().join("flag.json");
    let o = bin()
        .args(["compute", "D6", "--cache", flag_path.to_str().unwrap()])
        .env("COXETER_CACHE", &env_path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(env_path.exists());
    assert!(!flag_path.exists());
}

#[test]
fn malformed_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    std::fs::write(&cache, "not json").unwrap();
    let o = run(&["compute", "D5", "--cache", cache.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("K(D5) = 26"));
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn lattice_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("a2.json");
    let o = run(&["compute", "A2", "--method", "bruteforce", "--dump-lattice", dump.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(v["rank_sizes"], serde_json::json!([1, 3, 1]));

    let o = run(&["export-lattice", "H3", "--with-model"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank_sizes"], serde_json::json!([1, 15, 31, 1]));
    assert_eq!(v["model"]["root_count"], 15);
    assert_eq!(run(&["export-lattice", "E8"]).status.code(), Some(3));
}
