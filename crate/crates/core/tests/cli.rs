use std::path::Path;
use std::process::{Command, Output};

fn tnt(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tnt"))
        .env("TNT_CACHE_DIR", cache)
        .args(["--workers", "2"])
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = tnt(dir.path(), &["count", "--g6", "C~", "--pattern", "1,1,1"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "4"));
    let spec = r#"{"family":"complete_bipartite","params":[2,6]}"#;
    let o = tnt(dir.path(), &["count", "--construct", spec, "--pattern", "1,2"]);
    assert_eq!(stdout(&o).trim(), "36");
    let o = tnt(dir.path(), &["--output", "json", "count", "--g6", "C~", "--pattern", "2,2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 3);
    assert!(v["canonical_form"].is_string());

    let file = dir.path().join("g.txt");
    std::fs::write(&file, "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = tnt(dir.path(), &["count", "--file", file.to_str().unwrap(), "--pattern", "2,2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn parse_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = tnt(dir.path(), &["count", "--g6", "??", "--pattern", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph6"));
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "3 2\n0 1\n1 x\n").unwrap();
    let o = tnt(dir.path(), &["count", "--file", file.to_str().unwrap(), "--pattern", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(tnt(dir.path(), &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn search_prints_and_caches_results() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["search", "--n", "8", "--pattern", "2,2", "--forbid", "1,3", "--engine", "exhaustive"];
    let o = tnt(dir.path(), &args);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let again: serde_json::Value = serde_json::from_str(&stdout(&tnt(dir.path(), &args))).unwrap();
    assert_eq!(again["certificates"], v["certificates"]);
}

#[test]
fn heuristic_search_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args =
        ["--no-cache", "search", "--n", "20", "--pattern", "1,2", "--forbid", "2,2", "--engine", "heuristic", "--budget", "10000", "--seed", "7"];
    let value = |o: Output| serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap()["value"].clone();
    assert_eq!(value(tnt(dir.path(), &args)), value(tnt(dir.path(), &args)));
}

#[test]
fn exhaustive_cap_needs_force() {
    let dir = tempfile::tempdir().unwrap();
    let o = tnt(dir.path(), &["search", "--n", "15", "--pattern", "1,1", "--forbid", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tnt(dir.path(), &["search", "--n", "17", "--pattern", "1,1", "--forbid", "1,2", "--force"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cache_dir_flag_beats_env() {
    let (env_dir, flag_dir) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let o = tnt(
        env_dir.path(),
        &["--cache-dir", flag_dir.path().to_str().unwrap(), "search", "--n", "5", "--pattern", "1,1", "--forbid", "1,2"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 0);
}

#[test]
fn verify_commands() {
    let dir = tempfile::tempdir().unwrap();
    let o = tnt(dir.path(), &["verify", "--filter", "star-turan", "--n-max", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let headers = rows.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["claim_id", "params", "n", "value", "reference_value", "status"]);
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    // t = 2, 3, 4 over n = 2..=9.
    assert_eq!(records.len(), 24);
    assert!(records.iter().all(|r| &r[5] == "verified"));

    let o = tnt(dir.path(), &["verify", "--filter", "none-matching"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);

    let report = dir.path().join("r.json");
    let o = tnt(
        dir.path(),
        &["--output", "plain", "verify", "--filter", "thm-vii*", "--n-max", "7", "--json-report", report.to_str().unwrap()],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("thm-vii-stars"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
}

#[test]
fn hyper_commands() {
    let dir = tempfile::tempdir().unwrap();
    let fano = dir.path().join("fano.hg");
    std::fs::write(&fano, "3 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n").unwrap();
    let f = fano.to_str().unwrap();
    assert_eq!(stdout(&tnt(dir.path(), &["hyper", "girth", "--file", f])).trim(), "3");
    assert_eq!(stdout(&tnt(dir.path(), &["hyper", "berge", "--file", f, "--pattern", "1,1,1"])).trim(), "true");

    let o = tnt(dir.path(), &["--seed", "3", "hyper", "gen", "--n", "30", "--r", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let h = dir.path().join("h.hg");
    std::fs::write(&h, stdout(&o)).unwrap();
    let hs = h.to_str().unwrap();
    let girth = stdout(&tnt(dir.path(), &["hyper", "girth", "--file", hs]));
    assert!(girth.trim() == "acyclic" || girth.trim().parse::<usize>().unwrap() >= 5);
    let o = tnt(dir.path(), &["hyper", "place", "--file", hs, "--a", "2", "--b", "3", "--rule", "lowest_lex"]);
    let g = tnt::graph6::decode(stdout(&o).trim()).unwrap();
    assert_eq!(g.order(), 30);
    let o = tnt(dir.path(), &["hyper", "place", "--file", hs, "--a", "2", "--b", "2"]);
    assert_eq!(o.status.code(), Some(2));
}
