use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbowtri"))
        .env_remove("RAINBOWTRI_OUT")
        .arg("--out-dir")
        .arg(out)
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(o: &Output) -> Value {
    let stdout = String::from_utf8_lossy(&o.stdout);
    let line = stdout.lines().rev().find(|l| l.starts_with('{')).expect("a report line");
    serde_json::from_str(line).unwrap()
}

#[test]
fn gen_writes_one_line_per_class() {
    let dir = scratch("gen");
    let o = run(&dir, &["gen", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("triangulations-n6.g6")).unwrap();
    assert_eq!(text.lines().count(), 2);

    run(&dir, &["gen", "--n", "4"]);
    assert_eq!(std::fs::read_to_string(dir.join("triangulations-n4.g6")).unwrap(), "C~\n");
    assert_eq!(run(&dir, &["gen", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn rb_reports_the_value_and_witness() {
    let dir = scratch("rb");
    let o = run(&dir, &["rb", "--n", "7", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["value"], 8);
    assert_eq!(r["exhausted"], true);
    assert_eq!(r["seed"], 1);
    let col = std::fs::read_to_string(dir.join("rb-n7-t3.col")).unwrap();
    assert!(col.starts_with("colors 7\n"));
}

#[test]
fn construct_and_ar_round_trip() {
    let dir = scratch("construct");
    let o = run(&dir, &["construct", "--n", "9", "--t", "4", "--kind", "turan"]);
    assert_eq!(o.status.code(), Some(0));
    let g6 = std::fs::read_to_string(dir.join("construct-turan-n9-t4.g6")).unwrap();
    let g = rainbowtri_core::parse_graph6(g6.trim()).unwrap();
    assert_eq!(g.m(), 17);

    let k4 = dir.join("k4.g6");
    std::fs::write(&k4, "C~\n").unwrap();
    let o = run(&dir, &["ar", "--graph", k4.to_str().unwrap(), "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(report(&o)["value"], 3);
}

#[test]
fn decompose_star() {
    let dir = scratch("decompose");
    let star = dir.join("star.g6");
    std::fs::write(&star, "Cs\n").unwrap();
    let o = run(&dir, &["decompose", "--graph", star.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    assert_eq!(r["details"]["s_size"], 1);
    assert_eq!(r["details"]["q"], 3);
    assert_eq!(r["details"]["d"], 1);
}

#[test]
fn exit_codes() {
    let dir = scratch("exit");
    assert_eq!(run(&dir, &["rb", "--n", "6", "--t", "1"]).status.code(), Some(2));
    assert_eq!(run(&dir, &["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&dir, &["bogus"]).status.code(), Some(2));
    assert_eq!(run(&dir, &["--budget-secs", "0", "gen", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&dir, &["--workers", "0", "gen", "--n", "5"]).status.code(), Some(2));
    let missing = dir.join("missing.g6");
    assert_eq!(run(&dir, &["decompose", "--graph", missing.to_str().unwrap()]).status.code(), Some(2));
    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "C\u{7f}\n").unwrap();
    assert_eq!(run(&dir, &["decompose", "--graph", bad.to_str().unwrap()]).status.code(), Some(2));

    // too little time to exhaust: bracketed, but still reported
    let o = run(&dir, &["--budget-secs", "0.05", "rb", "--n", "8", "--t", "4"]);
    assert_eq!(o.status.code(), Some(3));
    let r = report(&o);
    assert_eq!(r["exhausted"], false);
    assert!(r["value"].as_u64().unwrap() <= r["upper"].as_u64().unwrap());
}

#[test]
fn reports_append_and_env_overrides_flag() {
    let dir = scratch("env");
    let flagged = scratch("env-flag");
    let o = Command::new(env!("CARGO_BIN_EXE_rainbowtri"))
        .env("RAINBOWTRI_OUT", &dir)
        .arg("--out-dir")
        .arg(&flagged)
        .args(["gen", "--n", "5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(dir.join("triangulations-n5.g6").exists());
    assert!(!flagged.join("reports.jsonl").exists());

    run(&dir, &["gen", "--n", "6"]);
    let log = std::fs::read_to_string(dir.join("reports.jsonl")).unwrap();
    let commands: Vec<String> = log
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["params"]["n"].to_string())
        .collect();
    assert_eq!(commands, ["5", "6"]);
}

#[test]
fn reruns_reproduce_witness_files() {
    let a = scratch("repro-a");
    let b = scratch("repro-b");
    for dir in [&a, &b] {
        assert_eq!(run(dir, &["rb", "--n", "8", "--t", "3"]).status.code(), Some(0));
        assert_eq!(run(dir, &["turan", "--n", "9", "--t", "4"]).status.code(), Some(0));
        assert_eq!(run(dir, &["--workers", "2", "rb", "--n", "7", "--t", "3"]).status.code(), Some(0));
    }
    for file in ["rb-n8-t3.g6", "rb-n8-t3.col", "turan-n9-t4.g6", "rb-n7-t3.col"] {
        assert_eq!(std::fs::read(a.join(file)).unwrap(), std::fs::read(b.join(file)).unwrap(), "{file}");
    }
    let strip = |dir: &Path| -> Vec<Value> {
        std::fs::read_to_string(dir.join("reports.jsonl"))
            .unwrap()
            .lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("wall_secs");
                v
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn verify_suites_pass() {
    let dir = scratch("verify");
    for suite in ["matching-oracle", "constructions", "lower-bound-colorings", "core-invariants"] {
        let o = run(&dir, &["verify", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&o.stdout));
        let r = report(&o);
        assert_eq!(r["passed"], true);
        assert!(r["details"]["checks"].as_array().is_some_and(|c| !c.is_empty()));
    }
}
