use std::path::Path;
use std::process::Command;

use polyuni::cli::main_with;
use polyuni::sweep::SweepReport;
use polyuni_core::graph6;
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["polyuni", "--no-cache"];
    argv.extend_from_slice(args);
    let code = main_with(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn run_cached(dir: &Path, args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["polyuni", "--cache-dir", dir.to_str().unwrap()];
    argv.extend_from_slice(args);
    let code = main_with(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn check_exit_codes() {
    let r = run(&["check", "5,5,5,4,4,4,3"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.out)["polyhedral_necessary"], true);

    let r = run(&["check", "2,2,2,1,1"]);
    assert_eq!(r.code, 1);
    assert!(json(&r.out)["violated_conditions"].as_array().unwrap().contains(&"min-degree-3".into()));

    let r = run(&["check", "8,8,5,4^6,3"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.out)["p"], 10);

    assert_eq!(run(&["check", "5,x"]).code, 2);
    assert_eq!(run(&["check", "4^0"]).code, 2);
}

#[test]
fn enumerate_streams_graph6() {
    let r = run(&["enumerate", "3,3,3,3"]);
    assert_eq!((r.code, r.out.as_str()), (0, "C~\n"));
    assert_eq!(json(&r.err)["count"], 1);

    assert!(run(&["enumerate", "6,6,5,5,4,4,3,3"]).out.lines().count() >= 2);
    assert_eq!(run(&["enumerate", "5,5,4,4,4,4,4"]).out.lines().count(), 1);

    let generic = run(&["enumerate", "6,6,5,5,4,4,3,3", "--method", "generic"]);
    let apex = run(&["enumerate", "6,6,5,5,4,4,3,3", "--method", "apex"]);
    assert_eq!(generic.out, apex.out);

    // Apex needs a largest degree of p-2.
    assert_eq!(run(&["enumerate", "3,3,3,3,3,3", "--method", "apex"]).code, 2);
}

#[test]
fn enumerate_to_file_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.g6");
    let dot = dir.path().join("g.dot");
    let r = run(&[
        "enumerate",
        "6,6,5,5,4,4,3,3",
        "--limit",
        "1",
        "--out",
        out.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    let summary = json(&r.out);
    assert_eq!(summary["count"], 1);
    assert_eq!(summary["truncated"], true);
    let lines = std::fs::read_to_string(&out).unwrap();
    let g = graph6::decode(lines.trim_end().as_bytes()).unwrap();
    assert_eq!(g.order(), 8);
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(dot.matches(" -- ").count(), g.size());
}

#[test]
fn unigraphic_verdicts() {
    for (text, code, verdict) in [
        ("6,5^3,4^3,3", 0, "UNIGRAPHIC"),
        ("8,8,6,5,5,4,3,3,3,3", 0, "UNIGRAPHIC"),
        ("7,7,5,5,5,4,3,3,3", 0, "UNIGRAPHIC"),
        ("6,6,5,5,4,4,3,3", 1, "NOT_UNIGRAPHIC"),
        ("3,3,3", 1, "NOT_POLYHEDRAL"),
    ] {
        let r = run(&["unigraphic", text]);
        assert_eq!(r.code, code, "{text}");
        assert_eq!(json(&r.out)["verdict"], verdict, "{text}");
    }
    let r = run(&["unigraphic", "6,6,5,5,4,4,3,3", "--limit", "1"]);
    assert_eq!((r.code, json(&r.out)["verdict"].as_str().unwrap()), (1, "TRUNCATED"));
    let r = run(&["unigraphic", "6,6,5,5,4,4,3,3", "--limit", "0"]);
    assert_eq!(json(&r.out)["realization_count"], 2);
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let strip = |r: Run| {
        let mut v = json(&r.out);
        v["elapsed_us"] = 0.into();
        v
    };
    let one = strip(run(&["--jobs", "1", "unigraphic", "8,8,5,5,4,4,4,3,3,3", "--limit", "0"]));
    let four = strip(run(&["--jobs", "4", "unigraphic", "8,8,5,5,4,4,4,3,3,3", "--limit", "0"]));
    assert_eq!(one, four);
}

#[test]
fn family_output() {
    assert_eq!(run(&["family", "beta:p=6"]).out, "4,4,4,4,4,4\n");
    assert_eq!(run(&["family", "nu:p=15,m=3", "--emit", "sequence"]).out, "13,9,9,7,4^7,3^4\n");
    let r = run(&["family", "mu:p=16", "--emit", "graph"]);
    let g = graph6::decode(r.out.trim_end().as_bytes()).unwrap();
    assert_eq!((g.order(), g.size()), (16, 42));
    let r = run(&["family", "alpha:p=9", "--emit", "both"]);
    assert_eq!(r.out.lines().count(), 2);
    assert_eq!(run(&["family", "nu:p=11"]).code, 2);
    assert_eq!(run(&["family", "zeta:p=11"]).code, 2);
}

#[test]
fn witness_pairs() {
    for (target, recipe) in
        [("sigma7:p=8", "SIGMA_IJ_MOVE"), ("lambda1:p=12", "STAR_SPLIT"), ("lambda2:p=13", "TRIANGLE_K_DROP")]
    {
        let r = run(&["witness", target, recipe]);
        assert_eq!(r.code, 0, "{target}: {}", r.err);
        let lines: Vec<&str> = r.out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_ne!(lines[0], lines[1]);
        let report = json(lines[2]);
        assert_eq!(report["isomorphic"], false);
        assert_eq!(report["both_polyhedral"], true);
    }
    assert_eq!(run(&["witness", "5,5,5,4,4,4,3", "STAR_SPLIT"]).code, 1);
    assert_eq!(run(&["witness", "5,5,5,4,4,4,3", "NO_SUCH"]).code, 2);
}

#[test]
fn table1_cold_and_warm_cache_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cold = run_cached(dir.path(), &["table1", "--p-min", "6", "--p-max", "8"]);
    let warm = run_cached(dir.path(), &["table1", "--p-min", "6", "--p-max", "8"]);
    assert_eq!(cold.code, 0);
    assert_eq!(cold.out, warm.out);
    assert!(cold.err.contains("cache hits: 0"));
    assert!(!warm.err.contains("cache hits: 0"));
    let report: SweepReport = serde_json::from_str(&cold.out).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", cold.out);
    assert_eq!(report.unigraphic_at(6).len(), 3);
    assert_eq!(report.unigraphic_at(8).len(), 4);
}

#[test]
fn budgets_need_force() {
    assert_eq!(run(&["table1", "--p-max", "12"]).code, 2);
    assert_eq!(run(&["table2", "--p", "13"]).code, 2);
    assert_eq!(run(&["table2", "--p", "6"]).code, 2);
}

#[test]
fn table2_membership() {
    let r = run(&["table2", "--p", "8"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.out)["closed"], true);
    let r = run(&["table2", "--p", "7", "--any-max-degree"]);
    assert_eq!(r.code, 1);
}

#[test]
fn binary_reads_cache_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_polyuni"))
        .args(["unigraphic", "5,5,4^5"])
        .env("POLYUNI_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(dir.path().join(polyuni::cache::FILE_NAME).exists());

    let status = Command::new(env!("CARGO_BIN_EXE_polyuni")).args(["check", "1,1"]).output().unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(env!("CARGO_BIN_EXE_polyuni")).args(["bogus"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}
