use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn sbv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

#[test]
fn eval_of_a_full_twist_squared() {
    let o = sbv(&["eval", "-n", "2", "-g", "1", "-N", "1", "s[1]^-1 s[1]^-1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["N"], 1);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["chords"].as_array().unwrap().len(), 0);
    assert_eq!(terms[0]["coeff"], 1);
    assert_eq!(terms[1]["coeff"], -1);
    assert_eq!(terms[1]["chords"][0], serde_json::json!({"i": 1, "j": 2, "gamma": ""}));
    for t in terms {
        assert_eq!(t["h"]["perm"], serde_json::json!([1, 2]));
    }
}

#[test]
fn eval_of_the_empty_word_is_one() {
    let o = sbv(&["eval", "-n", "2", "-N", "0", "--format", "text", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1) (x) ((1, 1), [1, 2])");
}

#[test]
fn eval_carries_the_surface_label() {
    let o = sbv(&["eval", "-N", "1", "--format", "text", "a[1,1] s[1] s[1] a[1,1]^-1"]);
    assert_eq!(stdout(&o).trim(), "(1 + t[1,2,w1]) (x) ((1, 1), [1, 2])");
}

#[test]
fn eval_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sbv"))
        .args(["eval", "-N", "1", "--format", "text", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a[1,1] s[1] s[1] a[1,1]^-1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), "(1 + t[1,2,w1]) (x) ((1, 1), [1, 2])");
}

#[test]
fn output_is_byte_stable() {
    let args = ["eval", "-n", "3", "-g", "2", "-N", "2", "a[2,3] s[1] x[2] a[1,4]^-1 s[2]"];
    assert_eq!(sbv(&args).stdout, sbv(&args).stdout);
}

#[test]
fn compare_verdicts() {
    let o = sbv(&["compare", "-N", "1", "--format", "text", "t[1,2]", ""]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "distinguished at degree 1"));
    let o = sbv(&["compare", "-N", "1", "a[1,1] t[1,2] a[1,1]^-1", "t[1,2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["degree"], 1);
    let o = sbv(&["compare", "-N", "1", "s[1]", "s[1]^-1"]);
    assert_eq!(json(&o)["degree"], 1);
    let o = sbv(&["compare", "-N", "2", "--format", "text", "s[1] a[2,2]", "s[1] a[2,2]"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(1), "indistinguishable up to 2"));
}

#[test]
fn resolve_lists_signed_resolutions() {
    let o = sbv(&["resolve", "--format", "text", "x[1]"]);
    assert_eq!(stdout(&o), "+1 s[1]\n-1 s[1]^-1\n");
    let o = sbv(&["resolve", "--format", "text", "s[1] a[1,2]"]);
    assert_eq!(stdout(&o), "+1 s[1] a[1,2]\n");
    let o = sbv(&["resolve", "x[1] x[1]"]);
    let v = json(&o);
    assert_eq!(v["resolutions"].as_array().unwrap().len(), 4);
    assert!(v.get("u").is_none());
}

#[test]
fn resolve_with_degree_obeys_the_degree_law() {
    let o = sbv(&["resolve", "-N", "2", "x[1] x[1]"]);
    let v = json(&o);
    let terms = v["u"]["terms"].as_array().unwrap();
    assert!(!terms.is_empty());
    for t in terms {
        assert_eq!(t["chords"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn selfcheck_passes_and_catches_a_corrupted_table() {
    let o = sbv(&["selfcheck"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = sbv(&["selfcheck", "-n", "3", "-g", "2", "-N", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.ends_with(" 0 failed")));
    let o = sbv(&["selfcheck", "--corrupt-table"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| !l.ends_with(" 0 failed")));
}

#[test]
fn errors_go_to_stderr_with_their_codes() {
    for (args, code) in [
        (vec!["eval", "q[1]"], 2),
        (vec!["eval", "s[2]"], 2),
        (vec!["eval", "-N", "9", ""], 2),
        (vec!["compare", "s[1]", "a[1,5]"], 2),
        (vec!["eval", "-n", "1", "-g", "2", "--fuel", "1", "a[1,1] a[1,2] a[1,3] a[1,4] a[1,1] a[1,2] a[1,3] a[1,4]"], 3),
    ] {
        let o = sbv(&args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}
