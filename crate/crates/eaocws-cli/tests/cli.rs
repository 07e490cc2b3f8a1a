//! End-to-end tests of the compiled binary: each subcommand, each exit
//! code, and the certificate round trip through the filesystem.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eaocws"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn cert_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn trivial_search_fills_the_register() {
    let out = run(&["search", "--n", "3", "--c", "0", "--r", "0", "--d", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("K=8"), "{text}");
    assert!(text.contains("[[3,3,0,1;0]]"), "{text}");
}

#[test]
fn detect_search_writes_a_passing_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("detect.json");
    let out = run(&[
        "search", "--n", "6", "--c", "3", "--r", "1", "--d", "3", "--verify", "both", "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let json = cert_json(&cert);
    assert_eq!(json["schema"], 1);
    assert_eq!(json["parameters"]["K"], 2);
    assert_eq!(json["verification"]["status"], "passed");
    assert_eq!(json["verification"]["runs"].as_array().unwrap().len(), 2);

    // Re-verifying the written certificate appends runs and stays green.
    let out = run(&["verify", cert.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("status passed"), "{}", stdout(&out));
    let json = cert_json(&cert);
    assert_eq!(json["verification"]["runs"].as_array().unwrap().len(), 4);
}

#[test]
fn correct_single_alias_reaches_k4_but_fails_strict_verification() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("correct.json");
    let out = run(&[
        "search", "--n", "6", "--c", "3", "--r", "1", "--d", "3", "--mode", "correct-single",
        "--verify", "symplectic", "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 4, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("K=4"), "{text}");
    assert!(text.contains("FAIL"), "{text}");
    // The certificate is still written, with the failing run recorded.
    let json = cert_json(&cert);
    assert_eq!(json["parameters"]["K"], 4);
    assert_eq!(json["verification"]["status"], "failed");
    assert!(json["verification"]["runs"][0]["witness"].is_object());
}

#[test]
fn distance_bump_flips_the_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let out = run(&[
        "search", "--n", "6", "--c", "3", "--r", "1", "--d", "3", "--verify", "symplectic",
        "--out", cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let mut json = cert_json(&cert);
    json["parameters"]["distance"] = 4.into();
    json["search"]["distance"] = 4.into();
    std::fs::write(&cert, serde_json::to_string_pretty(&json).unwrap()).unwrap();

    let out = run(&["verify", cert.to_str().unwrap(), "--both"]);
    assert_eq!(code(&out), 4, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("d=4: FAIL"), "{text}");
    let json = cert_json(&cert);
    assert_eq!(json["verification"]["status"], "failed");
}

#[test]
fn min_k_miss_exits_three_with_certificate_written() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("partial.json");
    let out = run(&[
        "search", "--n", "6", "--c", "3", "--r", "1", "--d", "3", "--min-k", "4", "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 3, "{}", stderr(&out));
    assert_eq!(cert_json(&cert)["parameters"]["K"], 2);
}

#[test]
fn adjacency_file_matches_builtin_ring() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("ring5.txt");
    std::fs::write(&graph, "5\n1 2\n2 3\n3 4\n4 5\n5 1 # closing edge\n").unwrap();
    let base = ["search", "--n", "5", "--c", "1", "--r", "1", "--d", "2"];
    let from_file = {
        let mut args = base.to_vec();
        args.extend(["--graph", graph.to_str().unwrap()]);
        run(&args)
    };
    let builtin = run(&base);
    assert_eq!(code(&from_file), 0, "{}", stderr(&from_file));
    let line = |out: &Output| {
        stdout(out)
            .lines()
            .find(|l| l.starts_with("codewords:"))
            .expect("codeword line")
            .to_string()
    };
    assert_eq!(line(&from_file), line(&builtin));
}

#[test]
fn unreadable_certificates_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    let out = run(&["verify", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("missing.json"), "{}", stderr(&out));

    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let out = run(&["verify", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("parsing"), "{}", stderr(&out));
}

#[test]
fn reproduce_example_matches_bundled_data() {
    let out = run(&["reproduce", "--example"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("all intermediate lists match"), "{}", stdout(&out));

    let out = run(&["reproduce", "--example", "--json"]);
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["all_match"], true);
    assert_eq!(json["sections"].as_array().unwrap().len(), 5);
}

#[test]
fn reproduce_table_reports_selected_cells() {
    let out = run(&["reproduce", "--table", "1", "--cells", "5,2,1", "--budget", "2"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("[[5,2,1,3;2]]"), "{text}");
    assert!(text.contains("Detect K=2"), "{text}");
    assert!(text.contains("Correct K=4"), "{text}");

    let out = run(&["reproduce", "--table", "2", "--cells", "7,4,1", "--budget", "2", "--json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cell = &json["cells"][0];
    assert_eq!(cell["label"], "[[7,2,1,5;4]]");
    assert_eq!(cell["reached"], false);
    // Strict detection at d=5 proves the register cannot hold a larger code.
    assert_eq!(cell["modes"][0]["found_k"], 1);
    assert_eq!(cell["modes"][0]["optimal"], true);

    // One of --example/--table is required.
    let out = run(&["reproduce"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn identical_config_yields_identical_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let out = run(&[
            "search", "--n", "5", "--c", "2", "--r", "1", "--d", "3", "--seed", "9", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}
