use std::path::PathBuf;
use std::process::{Command, Output};

use beyondcr::json::verdict_value;
use beyondcr::{check, compute_crossings, standard_drawing, Concept, LayoutVariant};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beyondcr")).args(args).output().unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("beyondcr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ic_witness_checks() {
    let o = run(&["check", "--concept", "ic", "--in", &fixture("witness_ic_l2.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"holds\": true"));
}

#[test]
fn fig5_is_not_nnic() {
    let o = run(&["check", "--concept", "nnic", "--in", &fixture("fig5.json")]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"]["kind"], "shared_vertices");
    assert_eq!(v["witness"]["shared"].as_array().unwrap().len(), 3);
}

#[test]
fn kplanar_witness_is_covered() {
    let o = run(&["coverage", "--concept", "kpl", "--ell", "3", "--k", "2", "--variant", "witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("fully covered: true\n"));
}

#[test]
fn tiny_budget_is_an_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_beyondcr"))
        .args(["coverage", "--concept", "kgap", "--ell", "2", "--k", "2", "--variant", "upper"])
        .env("BEYONDCR_BUDGET", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn usage_and_format_errors_exit_2() {
    assert_eq!(run(&["layout", "--concept", "nope", "--ell", "2"]).status.code(), Some(2));
    assert_eq!(run(&["layout", "--concept", "kpl", "--ell", "0"]).status.code(), Some(2));
    assert_eq!(run(&["layout", "--concept", "fc", "--ell", "2", "--rectilinear"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--concept", "ic", "--in", "/no/such/file.json"]).status.code(), Some(2));
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\n  \"graph\": {\"vertices\": [\"a\"],\n").unwrap();
    let o = run(&["check", "--concept", "ic", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn file_round_trip_keeps_verdicts() {
    for (c, ell, k) in [(Concept::KPlanar, 3, 2), (Concept::Nic, 4, 1), (Concept::KGapPlanar, 2, 2)] {
        for variant in LayoutVariant::BOTH {
            let path = scratch(&format!("{c}_{variant}.json"));
            let o = run(&[
                "layout",
                "--concept",
                c.short_name(),
                "--ell",
                &ell.to_string(),
                "--k",
                &k.to_string(),
                "--variant",
                variant.name(),
                "--out",
                path.to_str().unwrap(),
            ]);
            assert_eq!(o.status.code(), Some(0));
            let o = run(&["check", "--concept", c.short_name(), "--k", &k.to_string(), "--in", path.to_str().unwrap()]);
            let d = standard_drawing(c, ell, k, variant).unwrap();
            let v = check(c, k, &d, &compute_crossings(&d).unwrap());
            let from_cli: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
            assert_eq!(from_cli, verdict_value(&v), "{c} {variant}");
            assert_eq!(o.status.code(), Some(if v.holds { 0 } else { 1 }));
        }
    }
}

#[test]
fn seeded_generation_is_deterministic() {
    let a = run(&["gen", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&["gen", "--seed", "11"]).stdout);
    assert_ne!(a.stdout, run(&["gen", "--seed", "12"]).stdout);
}

#[test]
fn bound_and_report_print() {
    let o = run(&["bound", "--concept", "ic", "--ell", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counting lower bound: 9"));
    let o = run(&["report", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), Concept::ALL.len());
}

#[test]
fn svg_renders() {
    let o = run(&["svg", "--in", &fixture("fig5.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
}
