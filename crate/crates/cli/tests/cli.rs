use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], cache: &Path, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eigenone"));
    cmd.args(args)
        .env("EIGENONE_CACHE_DIR", cache)
        .env_remove("RUST_LOG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn exit_codes_follow_overall() {
    let dir = tempfile::tempdir().unwrap();
    let ok = run(&["e1", "C2"], dir.path(), &[]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json(&ok);
    assert_eq!(
        (v["format"].as_u64(), v["overall"].as_str()),
        (Some(1), Some("holds"))
    );

    let bad = run(
        &["e1", "ES32+", "--pairs-even-ok", "--char", "4"],
        dir.path(),
        &[],
    );
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json(&bad)["overall"], "fails");
    assert_eq!(json(&bad)["characters"][0]["degree"], 4);
}

#[test]
fn errors_are_machine_readable() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["e1", "PSL(2,7)"], dir.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    let v = json(&o);
    assert_eq!(v["error"]["kind"], "unknown_preset");
    assert!(v["error"]["suggestions"]
        .as_array()
        .unwrap()
        .iter()
        .any(|s| s == "PSL2(7)"));

    let o = run(&["chartab", "(1,2)(3,x)"], dir.path(), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["position"], 8);

    let o = run(&["e1", "S6"], dir.path(), &[("EIGENONE_MAX_ORDER", "100")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["error"]["kind"], "computation");

    let o = run(
        &["bounds", "prop5a", "--d", "5", "--f", "2", "--chi1", "8^10"],
        dir.path(),
        &[],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(json(&o)["error"]["message"]
        .as_str()
        .unwrap()
        .contains("q > 4"));
}

#[test]
fn second_run_hits_the_cache() {
    let dir = tempfile::tempdir().unwrap();
    let env = [("RUST_LOG", "info")];
    let first = run(&["chartab", "A5"], dir.path(), &env);
    let second = run(&["chartab", "A5"], dir.path(), &env);
    assert!(!String::from_utf8_lossy(&first.stderr).contains("cache hit"));
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    assert_eq!(first.stdout, second.stdout);
    let bypass = run(&["--no-cache", "chartab", "A5"], dir.path(), &env);
    assert!(!String::from_utf8_lossy(&bypass.stderr).contains("cache hit"));
}

#[test]
fn reports_replay_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        &[
            "e1",
            "D12",
            "--pairs-even-ok",
            "--mode",
            "validate",
            "--seed",
            "3",
        ],
        dir.path(),
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let path = dir.path().join("report.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let p = path.to_str().unwrap();
    let check = run(&["verify-report", p], dir.path(), &[]);
    assert_eq!(
        check.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&check.stdout)
    );
    let summary = json(&check);
    assert!(summary["witnesses_checked"].as_u64().unwrap() > 0);

    // replace every witness with the identity, which cannot serve for sign -1
    let mut report: Value = serde_json::from_slice(&o.stdout).unwrap();
    for c in report["characters"].as_array_mut().unwrap() {
        for t in c["nu_classes"].as_array_mut().unwrap() {
            if t.get("witness").is_some() {
                t["witness"]["element"] = 0.into();
            }
        }
    }
    std::fs::write(&path, serde_json::to_vec(&report).unwrap()).unwrap();
    let check = run(&["verify-report", p], dir.path(), &[]);
    assert_eq!(check.status.code(), Some(1));
    assert_eq!(json(&check)["ok"], false);
}

#[test]
fn failures_replay_too() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        &["e1", "ES32+", "--pairs-even-ok", "--char", "4"],
        dir.path(),
        &[],
    );
    let path = dir.path().join("es.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let check = run(&["verify-report", path.to_str().unwrap()], dir.path(), &[]);
    assert_eq!(check.status.code(), Some(0));
    assert!(json(&check)["failures_rescanned"].as_u64().unwrap() > 0);
}

#[test]
fn bounds_and_pretty_output() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["bounds", "g2", "--f", "1..5"], dir.path(), &[]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["rows"][0]["details"]["group_order"], "4245696");

    let o = run(
        &[
            "bounds", "prop5b", "--f", "5", "--chi1", "32^28", "--pretty",
        ],
        dir.path(),
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("prop5b"));

    let o = run(&["--pretty", "e1", "A5"], dir.path(), &[]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.starts_with("group A5 (order 60): holds"), "{text}");
}

#[test]
fn same_seed_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "e1",
        "S4",
        "--pairs-even-ok",
        "--mode",
        "validate",
        "--seed",
        "11",
        "--jobs",
        "3",
    ];
    let a = run(&args, dir.path(), &[]);
    let b = run(&args, dir.path(), &[]);
    assert_eq!(a.stdout, b.stdout);
}
