use std::io::Write;
use std::process::{Command, Output, Stdio};

fn packlab(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_packlab"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("PACKLAB_NODE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = packlab(args, None, &[]);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn piped(args: &[&str], input: &str) -> (i32, String) {
    let out = packlab(args, Some(input), &[]);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn graph6(family: &str, params: &[&str]) -> String {
    let mut args = vec!["construct", family];
    args.extend_from_slice(params);
    let (code, out) = run(&args);
    assert_eq!(code, 0, "construct {family} {params:?}");
    out
}

#[test]
fn threshold_values() {
    assert_eq!(run(&["threshold", "f", "--n", "12", "--r", "3", "--D", "4"]), (0, "f = 10\nbranch: first\nterms: 10 25\n".into()));
    let (code, out) = run(&["threshold", "g", "--n", "24", "--r", "3", "--D", "2", "--output", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 254);
    assert_eq!(v["branch"], "second");
    assert_eq!(run(&["threshold", "f2", "--n", "6", "--d", "1"]).0, 0);
    assert_eq!(run(&["threshold", "turan", "--m", "7", "--s", "3"]).1.lines().next(), Some("turan = 16"));
}

#[test]
fn out_of_range_parameters_are_usage_errors() {
    assert_eq!(run(&["threshold", "f", "--n", "12", "--r", "3", "--D", "10"]).0, 2);
    assert_eq!(run(&["threshold", "g", "--n", "13", "--r", "3", "--D", "2"]).0, 2);
    assert_eq!(run(&["construct", "G2", "--n", "12", "--r", "3", "--D", "11"]).0, 2);
    assert_eq!(run(&["construct", "square_cx", "--n", "24", "--C", "1", "--K", "4"]).0, 2);
    assert_eq!(run(&["threshold", "nonsense"]).0, 2);
}

#[test]
fn construct_formats_round_trip() {
    assert_eq!(graph6("G1", &["--n", "6", "--r", "3"]), "Ew??\n");
    let (code, list) = run(&["construct", "H", "--n", "6", "--d", "2", "--format", "edge-list"]);
    assert_eq!(code, 0);
    assert_eq!(list.lines().next(), Some("n=6"));
    assert_eq!(list.lines().count(), 1 + 9);
    let (code, json) = run(&["construct", "G1", "--n", "6", "--r", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
    // edge lists are accepted wherever graph6 is
    assert_eq!(piped(&["solve", "matching", "-"], &list).0, 1);
}

#[test]
fn construct_audit_exit_codes() {
    assert_eq!(run(&["construct", "H", "--n", "6", "--d", "2", "--audit"]).0, 0);
    assert_eq!(run(&["construct", "t_star", "--n", "9", "--r", "3", "--audit"]).0, 0);
    assert_eq!(run(&["construct", "square_cx", "--n", "69", "--C", "1", "--K", "5", "--audit"]).0, 0);
    let out = packlab(&["construct", "square_cx", "--n", "24", "--C", "1", "--K", "4", "--unchecked", "--audit"], None, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[0]"));
}

#[test]
fn solvers_answer_yes_and_no() {
    let t_star = graph6("t_star", &["--n", "6", "--r", "3"]);
    assert_eq!(piped(&["solve", "pack", "--r", "3", "-"], &t_star).0, 1);
    let g1 = graph6("G1", &["--n", "6", "--r", "3"]);
    assert_eq!(piped(&["solve", "colour", "--k", "2", "-"], &g1).0, 1);

    let turan = "n=6\n0 1\n0 2\n0 4\n0 5\n1 2\n1 3\n1 5\n2 3\n2 4\n3 4\n3 5\n4 5\n";
    let (code, out) = piped(&["solve", "turan-partition", "--r", "3", "-"], turan);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("class")).count(), 3);
    let (code, out) = piped(&["solve", "pack", "--r", "2", "-"], turan);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("block")).count(), 3);

    let (code, out) = piped(&["solve", "matching", "--output", "json", "-"], "n=4\n0 1\n2 3\n");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decision"], true);
}

#[test]
fn krfree_reports_hypothesis_violations() {
    let t_star = graph6("t_star", &["--n", "6", "--r", "3"]);
    let out = packlab(&["solve", "krfree", "--r", "3", "-"], Some(&t_star), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("hypothesis"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(piped(&["solve", "matching", "-"], "zz\n").0, 2);
    assert_eq!(piped(&["solve", "matching", "-"], "n=3\n0 7\n").0, 2);
    assert_eq!(piped(&["solve", "pack", "--r", "0", "-"], "Ew??\n").0, 2);
    // r not dividing n is a plain no
    assert_eq!(piped(&["solve", "pack", "--r", "4", "-"], "Ew??\n").0, 1);
}

#[test]
fn node_cap_from_env_and_flag() {
    let t_star = graph6("t_star", &["--n", "12", "--r", "3"]);
    let env = packlab(&["solve", "pack", "--r", "3", "-"], Some(&t_star), &[("PACKLAB_NODE_CAP", "1")]);
    assert_eq!(env.status.code(), Some(3));
    let flag = packlab(&["--node-cap", "1", "solve", "pack", "--r", "3", "-"], Some(&t_star), &[]);
    assert_eq!(flag.status.code(), Some(3));
    // the flag wins over the environment
    let both = packlab(&["--node-cap", "1000000", "solve", "pack", "--r", "3", "-"], Some(&t_star), &[("PACKLAB_NODE_CAP", "1")]);
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let (code, out) = run(&["verify", "matching", "--n", "4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v.get("elapsed_ms").is_none());

    let (code, out) = run(&["verify", "matching", "--n", "4", "--timing"]);
    assert_eq!(code, 0);
    assert!(out.contains("elapsed_ms"));

    assert_eq!(run(&["--node-cap", "1", "verify", "t1", "--n", "6", "--r", "3"]).0, 3);
    assert_eq!(run(&["verify", "conj1", "--n", "9", "--r", "3", "--mode", "sampled"]).0, 2);
    assert_eq!(run(&["verify", "matching", "--n", "12"]).0, 2);
    assert_eq!(run(&["verify", "audit", "--n", "24"]).0, 0);
}

#[test]
fn sampled_reports_are_reproducible() {
    let args = ["verify", "question1", "--n", "9", "--r", "3", "--mode", "sampled", "--samples", "2000", "--seed", "5"];
    let with_workers = |w: &'static str| {
        let mut a = args.to_vec();
        a.extend(["--workers", w]);
        run(&a)
    };
    let one = with_workers("1");
    assert_eq!(one.0, 0);
    assert_eq!(one, with_workers("4"));
}
