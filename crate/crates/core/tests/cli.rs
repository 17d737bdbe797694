use std::process::{Command, Output};

use ramseylab::format::parse_coloring;

fn ramseylab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramseylab"))
        .args(args)
        .env_remove("RAMSEYLAB_MAX_EDGES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn construct_emits_readable_coloring() {
    let o = ramseylab(&["construct", "--n", "5", "--m", "3", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let c = parse_coloring(&stdout(&o)).unwrap();
    assert_eq!(c.order(), 9);
    assert_eq!(c.red_edges().count(), 12);
}

#[test]
fn construct_json_has_blocks() {
    let o = ramseylab(&["--format", "json", "construct", "--n", "3", "--m", "2", "--t", "3", "--hm-red", "0-1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["blocks"], serde_json::json!([[0, 1], [2, 3]]));
    assert_eq!(v["coloring"]["red"], serde_json::json!([[0, 1], [2, 3]]));
}

#[test]
fn ramsey_brute_prints_four() {
    let o = ramseylab(&["ramsey", "--tree", "P3", "--t", "2", "--m", "2", "--brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn enumerate_critical_checks_family() {
    let o = ramseylab(&["enumerate-critical", "--n", "4", "--m", "3", "--t", "1", "--check-family"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.trim_end().ends_with("true")));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn disagreement_exits_with_finding_and_avoider() {
    let o = ramseylab(&["ramsey", "--tree", "P2", "--t", "2", "--m", "2", "--brute"]);
    assert_eq!(o.status.code(), Some(3));
    let err = stderr(&o);
    assert!(err.contains("brute-force r = 4"));
    let avoider = err.split("host:\n").nth(1).unwrap();
    let c = parse_coloring(avoider).unwrap();
    assert_eq!(c.order(), 3);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(ramseylab(&["ramsey", "--tree", "P3"]).status.code(), Some(1));
    assert_eq!(ramseylab(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(ramseylab(&["trees", "--n", "4", "--bogus"]).status.code(), Some(1));
    assert_eq!(ramseylab(&["--max-edges", "0", "trees", "--n", "4"]).status.code(), Some(1));
    assert_eq!(ramseylab(&["construct", "--n", "0", "--m", "2", "--t", "1"]).status.code(), Some(1));
    let help = ramseylab(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("enumerate-critical"));
}

#[test]
fn resource_cap_exits_two() {
    let o = ramseylab(&["arrows", "--host", "K9", "--tree", "P3", "--t", "1", "--m", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cap is 28"));
    let o = ramseylab(&["--max-edges", "36", "arrows", "--host", "K9", "--tree", "P3", "--t", "1", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "arrows\n");
}

#[test]
fn env_var_sets_cap_and_flag_wins() {
    let run = |env: &str, extra: &[&str]| {
        let mut args = extra.to_vec();
        args.extend(["arrows", "--host", "K8", "--tree", "P3", "--t", "1", "--m", "3"]);
        Command::new(env!("CARGO_BIN_EXE_ramseylab"))
            .args(&args)
            .env("RAMSEYLAB_MAX_EDGES", env)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("10", &[]), Some(2));
    assert_eq!(run("28", &[]), Some(0));
    assert_eq!(run("10", &["--max-edges", "28"]), Some(0));
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let args = ["--format", "csv", "sweep", "--n", "4", "--t", "1", "--m", "2"];
    let a = ramseylab(&args);
    let b = ramseylab(&["--workers", "1"].iter().chain(&args).copied().collect::<Vec<_>>());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("tree_g6,n,m,t,r_formula,r_brute,rstar_formula,rstar_brute,agree_r,agree_rstar,runtime_ms\n"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trees.json");
    let o = ramseylab(&["--format", "json", "--out", path.to_str().unwrap(), "trees", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
}

#[test]
fn checkers_emit_witness_fields() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("k22.2col");
    std::fs::write(&col, "n=4\nhost=edges\nedge: 0 2\nedge: 0 3\nedge: 1 2\nedge: 1 3\nred: 0 2\nred: 1 2\n").unwrap();
    let o = ramseylab(&["--format", "json", "hall", "--coloring", col.to_str().unwrap(), "--x", "0,1", "--y", "2,3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "blue_biclique");
    assert_eq!(v["witness"]["y_prime"], serde_json::json!([3]));

    let o = ramseylab(&["--format", "json", "trichotomy", "--tree", "S100", "--alpha", "4", "--beta", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "talon");
    assert_eq!(v["witness"]["leaves"].as_array().unwrap().len(), 99);

    let o = ramseylab(&["--format", "json", "equitable", "--graph", "5:0-1,1-2,2-3,3-4,0-4", "--l", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([2, 2, 1]));
    assert!(v["witness"].is_array());

    let k4 = dir.path().join("k4.2col");
    std::fs::write(&k4, "n=4\nhost=complete\nred: 0 1\nred: 1 2\nred: 0 2\n").unwrap();
    let o = ramseylab(&["--format", "json", "lemma35", "--coloring", k4.to_str().unwrap(), "--x", "0,1,2", "--y", "3", "--c", "3", "--d", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "blue_dominating_xs");
    assert_eq!(v["witness"], serde_json::json!([0]));
    assert!(v["interpretation"].is_string());
}

#[test]
fn avoid_check_and_membership_on_constructed_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.2col");
    let built = ramseylab(&["--out", path.to_str().unwrap(), "construct", "--n", "4", "--m", "3", "--t", "2"]);
    assert_eq!(built.status.code(), Some(0));
    let p = path.to_str().unwrap();
    let o = ramseylab(&["avoid-check", "--coloring", p, "--tree", "S4", "--t", "2", "--m", "3"]);
    assert_eq!(stdout(&o), "avoids\n");
    let o = ramseylab(&["membership", "--n", "4", "--m", "3", "--t", "2", "--coloring", p]);
    assert!(stdout(&o).starts_with("member\n"));
    let o = ramseylab(&["--format", "json", "star-lower-bound", "--n", "4", "--m", "3", "--t", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 4);
}
