use std::io::Write;
use std::process::{Command, Output, Stdio};

use cyclic_hyper::cli::DecisionDocument;
use cyclic_hyper::verify_witness;

fn chd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chd")).args(args).output().unwrap()
}

fn chd_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decisions_drive_exit_codes() {
    assert_eq!(code(&chd(&["recognize", "--degrees", "1,1,1"])), 0);
    assert_eq!(code(&chd(&["recognize", "--degrees", "4,1,1,1"])), 1);
    assert_eq!(code(&chd(&["recognize", "--degrees", "0,2"])), 1);
    assert_eq!(code(&chd(&["recognize", "--degrees", "5,0,0"])), 1);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["recognize", "--degrees", "1,-1"][..],
        &["recognize", "--degrees", ""],
        &["recognize", "--degrees", "1,,2"],
        &["ranges", "--n", "3", "--i", "4", "--N", "3"],
        &["ranges", "--n", "3", "--i", "1", "--N", "9"],
        &["ranges", "--n", "3", "--i", "1", "--N", "0"],
        &["count", "--n", "1"],
        &["frobnicate"],
        &["recognize", "--bogus"],
    ] {
        let o = chd(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_token_is_named() {
    let o = chd(&["witness", "--degrees", "3,abc,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("abc"));
}

#[test]
fn capacity_errors_exit_three() {
    assert_eq!(code(&chd(&["enumerate", "--n", "5"])), 3);
    assert_eq!(code(&chd(&["count", "--n", "5", "--exact"])), 3);
    assert_eq!(code(&chd(&["verify", "--n", "25"])), 3);
}

#[test]
fn formatting_flags_do_not_change_exit_codes() {
    for degrees in ["1,1,1", "4,1,1,1", "3,2,4,2", "0,0", "2,0"] {
        let plain = code(&chd(&["recognize", "--degrees", degrees]));
        let json = code(&chd(&["recognize", "--degrees", degrees, "--json"]));
        let wit = code(&chd(&["witness", "--degrees", degrees, "--json", "--edges"]));
        let tiny = code(&chd(&["witness", "--degrees", degrees, "--edges", "--max-edges", "0"]));
        assert!(plain == json && json == wit && wit == tiny, "{degrees}");
    }
}

#[test]
fn witness_json_round_trips() {
    for degrees in ["1,1,1", "3,2,4,2", "0,0,0,0", "8,8,8,8,8", "2,3,1,4,2", "1,0"] {
        let o = chd(&["witness", "--degrees", degrees, "--json", "--edges"]);
        assert_eq!(code(&o), 0, "{degrees}");
        let doc: DecisionDocument = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(doc.is_cyclic_hyper_degree);
        let (w, wit) = doc.to_witness().unwrap();
        assert_eq!(w.to_string(), degrees);
        assert!(verify_witness(&w, &wit), "{degrees}");

        let edges = doc.edges.as_ref().unwrap();
        assert_eq!(edges.len().to_string(), *doc.window.as_ref().unwrap());
        for (v, d) in w.entries().iter().enumerate() {
            let deg = edges.iter().filter(|e| e.contains(&(v + 1))).count();
            assert_eq!(d.to_string(), deg.to_string());
        }
        assert_eq!(doc.contains_empty_edge, Some(edges.iter().any(Vec::is_empty)));
    }
}

#[test]
fn large_witness_omits_edges() {
    let degrees = ["64"; 8].join(",");
    let o = chd(&["witness", "--degrees", &degrees, "--json", "--edges", "--max-edges", "16"]);
    assert_eq!(code(&o), 0);
    let doc: DecisionDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.edges_omitted, Some(true));
    assert!(doc.edges.is_none());
    let (w, wit) = doc.to_witness().unwrap();
    assert!(verify_witness(&w, &wit));
}

#[test]
fn rejected_document_has_no_certificate() {
    let o = chd(&["recognize", "--degrees", "4,1,1,1", "--json"]);
    let doc: DecisionDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!doc.is_cyclic_hyper_degree);
    assert!(doc.window.is_none() && doc.permutation.is_none());
    assert!(doc.to_witness().is_err());
}

#[test]
fn degrees_from_stdin() {
    assert_eq!(code(&chd_stdin(&["recognize"], "3,2,4,2\n")), 0);
    assert_eq!(code(&chd_stdin(&["recognize"], "4,1,1,1")), 1);
    assert_eq!(code(&chd_stdin(&["recognize"], "")), 2);
}

#[test]
fn enumerate_lists_sorted_lines() {
    let o = chd(&["enumerate", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0,0\n0,1\n1,0\n1,1\n1,2\n2,1\n2,2\n");
    let o = chd(&["enumerate", "--n", "3"]);
    assert_eq!(stdout(&o).lines().count(), 59);
}

#[test]
fn ranges_and_count_output() {
    let o = chd(&["ranges", "--n", "3", "--i", "3", "--N", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[1, 4]"), "{}", stdout(&o));

    let o = chd(&["count", "--n", "4", "--exact", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["M"], "5");
    assert_eq!(v["product"], "96");
    assert_eq!(v["exact_count"], "1297");
}

#[test]
fn verify_reports_all_suites() {
    let o = chd(&["verify", "--n", "4", "--samples", "50"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 5, "{text}");
    assert!(!text.contains("FAIL"));
}
