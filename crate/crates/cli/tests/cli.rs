use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crossed-hopf"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

#[test]
fn clean_group_algebra_passes() {
    let out = run(&["verify-hopf", fixture("z2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
}

#[test]
fn corrupted_antipode_names_the_basis() {
    let out = run(&["verify-hopf", fixture("corrupted.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out.stderr).contains("antipode axiom at basis 'g'"), "{}", text(&out.stderr));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"dim\": 2").unwrap();
    assert_eq!(run(&["verify-hopf", p.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&p, "{\"dim\": 2, \"mult\": []}").unwrap();
    assert_eq!(run(&["verify-hopf", p.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["check", "turaev", "--group", "Q8"]).status.code(), Some(2));
    assert_eq!(run(&["check", "oracle", "--hopf", "sweedler"]).status.code(), Some(2));
    assert_eq!(run(&["check", "yd", "--group", "Z3", "--field", "GF(4)"]).status.code(), Some(2));
}

#[test]
fn built_codouble_reloads_as_a_coalgebra() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.json");
    let out = run(&["build", "codouble", "--group", "Z3", "-o", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let check = run(&["verify-hopf", out_path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{}", text(&check.stdout));
    assert!(text(&check.stdout).contains("PASS coassociativity"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["dim"], 9);
    assert_eq!(v["basis_order"], "H* major");
}

#[test]
fn built_components_reload() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, extra) in [("crossed-coproduct", ["--pair-index", "3"]), ("ct-component", ["--pair-index", "2"])] {
        let p = dir.path().join(format!("{kind}.json"));
        let mut args = vec!["build", kind, "--group", "S3", "-o", p.to_str().unwrap()];
        args.extend(extra);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", text(&out.stderr));
        assert_eq!(run(&["verify-hopf", p.to_str().unwrap()]).status.code(), Some(0), "{kind}");
    }
    let p = dir.path().join("sw.json");
    let out = run(&["build", "crossed-coproduct", "--hopf", "sweedler", "--pair-index", "1", "-o", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert_eq!(run(&["verify-hopf", p.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn oracle_group_files_feed_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["oracle-group", "S3", "-o", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let auts: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("automorphisms.json")).unwrap()).unwrap();
    assert_eq!(auts.as_array().unwrap().len(), 6);
    let hopf = dir.path().join("hopf.json");
    assert_eq!(run(&["verify-hopf", hopf.to_str().unwrap()]).status.code(), Some(0));

    // a generator file built from two automorphisms closes to the full 36-element set
    let a = &auts[1]["matrix"];
    let b = &auts[3]["matrix"];
    let id = &auts[0]["matrix"];
    let gens = serde_json::json!([{ "alpha": a, "beta": id }, { "alpha": id, "beta": b }, { "alpha": b, "beta": a }]);
    let gens_path = dir.path().join("gens.json");
    std::fs::write(&gens_path, gens.to_string()).unwrap();
    let group = dir.path().join("group.json");
    let out = run(&["check", "tct", "--group", group.to_str().unwrap(), "--pairs", gens_path.to_str().unwrap(), "--sample", "2", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("# pair_set: 36"), "{}", text(&out.stdout));
}

#[test]
fn every_check_kind_passes_on_z3() {
    for kind in ["yd", "braiding", "rigidity", "correspondence", "turaev", "tct", "oracle"] {
        let out = run(&["check", kind, "--group", "Z3", "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", text(&out.stderr));
    }
}

#[test]
fn json_lines_reports_are_byte_identical_across_runs_and_job_counts() {
    let a = run(&["check", "braiding", "--group", "Z3", "--format", "json-lines"]);
    let b = run(&["check", "braiding", "--group", "Z3", "--format", "json-lines", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    for line in text(&a.stdout).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("header").is_some() || (v.get("axiom").is_some() && v.get("status").is_some()), "{line}");
    }
    let s1 = run(&["check", "tct", "--group", "S3", "--sample", "5", "--seed", "9", "--format", "json-lines"]);
    let s2 = run(&["check", "tct", "--group", "S3", "--sample", "5", "--seed", "9", "--format", "json-lines"]);
    assert_eq!(s1.status.code(), Some(0), "{}", text(&s1.stderr));
    assert_eq!(s1.stdout, s2.stdout);
    assert!(text(&s1.stdout).contains("\"sample_seed\":\"9\""));
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.txt");
    let a = run(&["check", "rigidity", "--group", "Z3"]);
    let b = run(&["check", "rigidity", "--group", "Z3", "--report", p.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    assert!(b.stdout.is_empty());
    assert_eq!(std::fs::read(&p).unwrap(), a.stdout);
}

#[test]
fn sweedler_pair_closure_is_capped_and_recorded() {
    let out = run(&["check", "rigidity", "--hopf", "sweedler", "--cap", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stderr).contains("truncated"));
    assert!(text(&out.stdout).contains("# pair_set_truncated: cap 10"));
}

#[test]
fn exhaustive_s3_turaev_suite_passes() {
    let out = run(&["check", "turaev", "--group", "S3", "--pairs", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let report = text(&out.stdout);
    assert!(!report.contains("sample"), "{report}");
    for axiom in ["associativity", "antipode-left", "antipode-right", "crossing-multiplicative", "tct1", "tct2", "tct3", "tct4", "sigma-invertible"] {
        assert!(report.contains(&format!("PASS {axiom} [36 pairs]")), "{axiom}");
    }
}
