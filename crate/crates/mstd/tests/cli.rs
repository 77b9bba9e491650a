//! End-to-end checks on the compiled binary: exit codes, output shapes in
//! every format, configuration echoing, and byte-level reproducibility
//! across worker counts.

use std::path::Path;
use std::process::{Command, Output};

fn mstd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mstd"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn verify_exit_codes_follow_the_classification() {
    assert_eq!(mstd(&["verify", "{0, 2, 3, 4, 7, 11, 12, 14}"]).status.code(), Some(0));
    assert_eq!(mstd(&["verify", "{0, 1, 2}"]).status.code(), Some(1));
    assert_eq!(mstd(&["verify", "{0, 1, 3}"]).status.code(), Some(1));
    assert_eq!(mstd(&["verify", "{}"]).status.code(), Some(1));

    let bad = mstd(&["verify", "{0, 1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).starts_with("error:"), "stderr: {}", stderr(&bad));
}

#[test]
fn verify_json_is_flat_with_pinned_keys() {
    let out = mstd(&["--format", "json", "verify", "{0,2,3,4,7,11,12,14}"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.starts_with(
            "{\"elements\":[0,2,3,4,7,11,12,14],\"n\":8,\
             \"sum_cardinality\":26,\"diff_cardinality\":25,\"label\":\"MSTD\","
        ),
        "unexpected layout: {text}"
    );
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let object = value.as_object().unwrap();
    assert_eq!(object.len(), 10);
    assert_eq!(object["additions"], 36);
    assert_eq!(object["subtractions"], 56);
    assert_eq!(object["comparisons"], 92);
    assert_eq!(object["bit_cost_paper"], 64);
    assert_eq!(object["bit_cost_practical"], 368);
}

#[test]
fn verify_text_format_is_the_default() {
    let out = mstd(&["verify", "{0,2,3,4,7,11,12,14}"]);
    let text = stdout(&out);
    assert!(text.contains("sum_cardinality: 26"));
    assert!(text.contains("diff_cardinality: 25"));
    assert!(text.contains("label: MSTD"));
}

#[test]
fn verify_reads_set_files_and_warns_about_duplicates() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(dir).unwrap();
    let path = dir.join("conway.txt");
    std::fs::write(&path, "{0, 2, 3, 4, 7, 11, 12, 14}\n").unwrap();
    let from_file = mstd(&["verify", path.to_str().unwrap()]);
    assert_eq!(from_file.status.code(), Some(0));

    let with_duplicates = mstd(&["verify", "{1, 1, 2}"]);
    assert_eq!(with_duplicates.status.code(), Some(1));
    assert!(
        stderr(&with_duplicates).contains("duplicate"),
        "stderr: {}",
        stderr(&with_duplicates)
    );
}

#[test]
fn enumerate_envelope_echoes_the_configuration() {
    let out = mstd(&["--format", "json", "--seed", "9", "enumerate", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["config"]["command"], "enumerate");
    assert_eq!(value["config"]["format"], "json");
    assert_eq!(value["config"]["seed"], 9);
    assert_eq!(value["config"]["trials"], 100_000);
    assert_eq!(value["config"]["exact_cap"], 30);
    assert_eq!(value["config"]["node_budget"], 1_000_000_000u64);
    assert_eq!(value["result"]["N"], 10);
    assert_eq!(value["result"]["total_subsets"], 1024);
    assert_eq!(value["result"]["mstd_count"], 0);
}

#[test]
fn enumeration_past_the_cap_is_a_clean_error() {
    let out = mstd(&["enumerate", "31"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error:") && err.contains("30"), "stderr: {err}");
}

#[test]
fn largest_reports_witness_or_absence() {
    let hit = mstd(&["--format", "json", "largest", "15"]);
    assert_eq!(hit.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&hit)).unwrap();
    assert_eq!(value["result"]["max_cardinality"], 9);
    assert_eq!(value["result"]["witness"], serde_json::json!([0, 1, 2, 4, 5, 9, 12, 13, 14]));

    let miss = mstd(&["--format", "json", "largest", "14"]);
    assert_eq!(miss.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&miss)).unwrap();
    assert_eq!(value["result"]["N"], 14);
    assert!(value["result"].get("max_cardinality").is_none());
    assert!(value["result"].get("witness").is_none());
}

#[test]
fn monte_carlo_is_reproducible_through_the_cli() {
    let args = ["--format", "json", "--trials", "20000", "--seed", "42", "prob", "16"];
    let first = mstd(&args);
    let second = mstd(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(value["result"]["rng"], "chacha8");
    assert_eq!(value["result"]["seed"], 42);
    assert_eq!(value["result"]["trials"], 20000);
}

#[test]
fn series_csv_is_byte_identical_across_worker_counts() {
    let base = ["--format", "csv", "--trials", "2000", "--seed", "7", "--exact-cap", "15", "series", "14", "16"];
    let mut with_one = vec!["--workers", "1"];
    with_one.extend_from_slice(&base);
    let mut with_four = vec!["--workers", "4"];
    with_four.extend_from_slice(&base);

    let first = mstd(&with_one);
    let second = mstd(&with_four);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout, "output depends on worker count");

    let text = stdout(&first);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("# command=series format=csv seed=7 trials=2000"));
    assert_eq!(lines[1], "N,method,estimate,std_error");
    assert!(lines[2].starts_with("14,exact,"));
    assert!(lines[3].starts_with("15,exact,"));
    assert!(lines[4].starts_with("16,monte-carlo,"));
}

#[test]
fn corpus_renders_in_json_and_csv() {
    let json = mstd(&["--format", "json", "corpus"]);
    assert_eq!(json.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let findings = value["result"].as_array().unwrap();
    assert_eq!(findings.len(), 14);
    for finding in findings {
        assert_eq!(finding["classification"]["label"], "MSTD");
    }

    let csv = mstd(&["--format", "csv", "corpus"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = stdout(&csv);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 16);
    assert_eq!(
        lines[1],
        "id,actual_cardinality,cardinality_matches,duplicates_in_print,\
         sum_cardinality,diff_cardinality,label"
    );
    assert!(text.contains("large-60,60,true,71,192,191,MSTD"));
}

#[test]
fn help_lists_every_subcommand() {
    let out = mstd(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for name in ["verify", "enumerate", "largest", "prob", "series", "corpus"] {
        assert!(text.contains(name), "missing {name} in help");
    }
}
