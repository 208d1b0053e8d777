use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_treegroups"));
    c.env_remove("TREEGROUPS_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn group_results(args: &[&str]) -> Value {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let mut all = vec!["group"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--json", out.to_str().unwrap()]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    json(&out)["results"].clone()
}

#[test]
fn group_structures() {
    for (args, rank, torsion) in [
        (&["--kind", "T", "--order", "1", "--labels", "1"][..], 0, vec![2]),
        (&["--kind", "Lq", "--order", "2", "--labels", "2"][..], 1, vec![2, 2]),
        (&["--kind", "T", "--order", "0", "--labels", "2"][..], 3, vec![]),
        (&["--kind", "Tinf", "--order", "3", "--labels", "2"][..], 0, vec![2, 2]),
        (&["--kind", "Dq", "--order", "2", "--labels", "3"][..], 6, vec![]),
    ] {
        let r = group_results(args);
        assert_eq!(r["free_rank"], rank, "{args:?}");
        assert_eq!(r["torsion"], serde_json::json!(torsion), "{args:?}");
    }
}

#[test]
fn maps_print_normal_forms() {
    let o = run(&["map", "--map", "eta", "--labels", "3", "<1,2,3>"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "eta(<1,2,3>) = 1⊗(2,3) - 2⊗(1,3) + 3⊗(1,2)\n");
    let o = run(&["map", "--map", "bracket", "--labels", "3", "1⊗(2,3) - 2⊗(1,3) + 3⊗(1,2)"]);
    assert!(String::from_utf8(o.stdout).unwrap().ends_with("= 0\n"));
    let o = run(&["map", "--map", "sl", "--labels", "2", "1@(2,(1,2)) + 2@((1,2),1)"]);
    assert!(String::from_utf8(o.stdout).unwrap().contains("= (1,2) (mod 2)"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["group", "--kind", "Tquot", "--order", "2", "--labels", "2"]).status.code(), Some(2));
    assert_eq!(run(&["map", "--map", "eta", "--labels", "2", "<1,2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(
        run(&["group", "--kind", "T", "--order", "3", "--labels", "3", "--tree-cap", "10"]).status.code(),
        Some(3)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"strands": 3, "class": 4, "longitudes": ["[x2,x3]", "1", "1"]}"#).unwrap();
    let o = run(&["artin", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stdout).unwrap().contains("X1 X2 X3"));
}

#[test]
fn borromean_artin_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("b.json");
    let out = dir.path().join("r.json");
    fs::write(&input, r#"{"strands": 3, "class": 4, "longitudes": ["[x2,x3]", "[x3,x1]", "[x1,x2]"]}"#).unwrap();
    let o = run(&["artin", input.to_str().unwrap(), "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&out)["results"].clone();
    assert_eq!(r["validated"], true);
    assert_eq!(r["johnson_order"]["exact"], 1);
    assert_eq!(r["milnor"]["in_d"], true);
    assert_eq!(r["milnor"]["tensor"], "1⊗(2,3) - 2⊗(1,3) + 3⊗(1,2)");
}

#[test]
fn replay_reproduces_results() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v.json");
    let o = run(&["verify", "--suite", "clasper", "--suite", "witt", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["replay", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stdout).unwrap().contains("results identical"));

    let mut tampered = json(&out);
    tampered["results"][0]["checks"][0]["detail"] = "edited".into();
    fs::write(&out, serde_json::to_string(&tampered).unwrap()).unwrap();
    let o = run(&["replay", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn cache_matches_fresh_runs() {
    let cache = tempfile::tempdir().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("1.json");
    let second = dir.path().join("2.json");
    for p in [&first, &second] {
        let o = bin()
            .env("TREEGROUPS_CACHE_DIR", cache.path())
            .args(["group", "--kind", "T", "--order", "3", "--labels", "2", "--json", p.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
    }
    let (a, b) = (json(&first), json(&second));
    assert_eq!(a["cached"], false);
    assert_eq!(b["cached"], true);
    assert_eq!(a["results"], b["results"]);

    // Verdicts are recomputed unless the cache is trusted.
    for (trust, cached) in [(false, false), (false, false), (true, true)] {
        let p = dir.path().join("w.json");
        let mut c = bin();
        c.env("TREEGROUPS_CACHE_DIR", cache.path())
            .args(["verify", "--suite", "witt", "--json", p.to_str().unwrap()]);
        if trust {
            c.arg("--trust-cache");
        }
        assert_eq!(c.output().unwrap().status.code(), Some(0));
        assert_eq!(json(&p)["cached"], cached);
    }
}

#[test]
fn clasper_figures() {
    let o = run(&["clasper", "(1,(2,3))", "--labels", "3", "--word", "x1", "--word", "x2", "--word", "x3"]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("sign -1") && s.contains("gamma = -(1,(2,3)) in G_3/G_4"), "{s}");
    let o = run(&[
        "clasper", "(1,2)", "--labels", "3", "--word", "x1", "--word", "x2", "--word", "x3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}
