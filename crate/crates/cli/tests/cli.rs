use std::path::PathBuf;
use std::process::{Command, Output};

use schur_cli::{run_campaign, CampaignOptions, VerificationReport};
use serde_json::Value;

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .env_remove("SCHUR_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_json(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("schur-cli-{tag}-{}.json", std::process::id()))
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .map(str::trim)
        .unwrap_or_else(|| panic!("no `{key}` line in\n{text}"))
}

#[test]
fn info_reports_attaining_group() {
    let o = schur(&["info", "g3@3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(field(&s, "|M(G)|"), "3^8");
    assert_eq!(field(&s, "attains"), "yes");
}

#[test]
fn info_on_abelian_and_extraspecial_groups() {
    let s = stdout(&schur(&["info", "elemab@5,rank=3"]));
    assert_eq!(field(&s, "|M(G)|"), "5^3");
    assert_eq!(field(&s, "bound"), "n/a (abelian)");
    let s = stdout(&schur(&["info", "es@7"]));
    assert_eq!(field(&s, "M(G)"), "Z7 x Z7");
    assert_eq!(field(&s, "attains"), "yes");
}

#[test]
fn scan_lists_central_lines() {
    let rows = |spec: &str| {
        let s = stdout(&schur(&["scan", spec]));
        s.lines().filter(|l| l.starts_with('<')).map(String::from).collect::<Vec<_>>()
    };
    let g2 = rows("g2@3");
    assert_eq!(g2.len(), 4);
    assert!(g2.iter().all(|r| r.contains("yes") && r.contains("ok")));
    assert_eq!(rows("h37").len(), 1);
    let ab = rows("elemab@3,rank=2");
    assert_eq!(ab.len(), 4);
    assert!(ab.iter().all(|r| r.contains("n/a")));
}

#[test]
fn oracle_agrees_on_small_groups() {
    for spec in ["d8", "q8", "es@3"] {
        let o = schur(&["oracle", spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}");
        assert_eq!(field(&stdout(&o), "match"), "true", "{spec}");
    }
}

#[test]
fn oracle_refuses_groups_above_the_cap() {
    assert_eq!(schur(&["oracle", "h37"]).status.code(), Some(4));
    assert_eq!(schur(&["oracle", "d8", "--oracle-cap", "100000"]).status.code(), Some(2));
}

#[test]
fn bounds_command() {
    let o = schur(&["bounds", "7", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(field(&s, "general bound"), "log|M| <= 21");
    assert_eq!(field(&s, "non-abelian bound"), "log|M| <= 10");
    assert_eq!(field(&s, "class >= 3, p != 3"), "log|M| <= 9");
    assert_eq!(schur(&["bounds", "3", "3"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(schur(&["info", "bogus@3"]).status.code(), Some(2));
    assert_eq!(schur(&["info", "es@4"]).status.code(), Some(2));
    assert_eq!(schur(&["verify-paper", "--primes", "9"]).status.code(), Some(2));
}

#[test]
fn info_json_has_schema_keys() {
    let path = temp_json("info");
    let o = schur(&["info", "g1@3,n=4", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    for key in ["group", "invariants", "bounds", "conditions", "checks"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for key in ["spec", "p", "n", "k", "class", "d"] {
        assert!(v["group"].get(key).is_some(), "missing group.{key}");
    }
    for key in ["gab", "center", "multiplier"] {
        assert!(v["invariants"][key].is_array(), "missing invariants.{key}");
    }
    for key in ["i", "ii", "iii", "exempt_g1"] {
        assert!(v["conditions"][key].is_boolean(), "missing conditions.{key}");
    }
    assert_eq!(v["bounds"]["attains"], Value::Bool(true));
}

#[test]
fn scan_json_has_schema_keys() {
    let path = temp_json("scan");
    let o = schur(&["scan", "h37", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let q = v["quotients"].as_array().unwrap();
    assert_eq!(q.len(), 1);
    assert_eq!(q[0]["divisibility"]["holds"], Value::Bool(true));
    assert!(q[0]["kernel"].is_array());
}

#[test]
fn fast_campaign_passes_and_round_trips() {
    let path = temp_json("verify");
    let o = schur(&["verify-paper", "--fast", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.all_passed());
    assert_eq!(report.primes, vec![3, 5, 7]);
    assert_eq!(report.summary.pass + report.summary.fail + report.summary.alarm, report.checks.len());
    let again: VerificationReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn campaign_is_deterministic_apart_from_runtimes() {
    let opts = CampaignOptions {
        primes: vec![3, 5],
        oracle_cap: 32,
    };
    let mut a = run_campaign(&opts);
    let mut b = run_campaign(&opts);
    a.runtimes.clear();
    b.runtimes.clear();
    assert_eq!(a, b);
    let ids: Vec<&str> = a.checks.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(ids, sorted);
}
