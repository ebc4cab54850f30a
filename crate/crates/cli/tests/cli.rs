//! End-to-end checks of the command-line surface: exact output bytes for the
//! documented formats, exit codes, and determinism across runs.

use std::process::{Command, Output};

fn slopestat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slopestat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = slopestat(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn stats_prints_the_flat_bundle() {
    assert_eq!(
        stdout_of(&["stats", "--partition", "8,8,6,6,2,2", "--pq", "3,2"]),
        "{\"c_plus\":1,\"c_minus\":1,\"ctot\":2,\"midd\":20,\"h_plus\":21,\"h_minus\":21}\n"
    );
    assert_eq!(
        stdout_of(&["stats", "--partition", "1", "--pq", "2,3"]),
        "{\"c_plus\":0,\"c_minus\":0,\"ctot\":0,\"midd\":1,\"h_plus\":1,\"h_minus\":1,\"h\":1}\n"
    );
    // explicit K feeds the built-in graph cross-check
    assert_eq!(
        stdout_of(&["stats", "--partition", "1", "--pq", "2,3", "--K", "3"]),
        "{\"c_plus\":0,\"c_minus\":0,\"ctot\":0,\"midd\":1,\"h_plus\":1,\"h_minus\":1,\"h\":1}\n"
    );
}

#[test]
fn graph_json_matches_the_schema() {
    assert_eq!(
        stdout_of(&["graph", "--partition", "1", "--pq", "3,2"]),
        concat!(
            "{\"vertices\":[0,1,2,3,4],",
            "\"w_in\":{\"2\":1,\"3\":1,\"4\":1},",
            "\"n_in\":{\"0\":1,\"1\":1},",
            "\"tour\":[{\"dir\":\"W\",\"from\":0,\"to\":2},{\"dir\":\"W\",\"from\":2,\"to\":4},",
            "{\"dir\":\"N\",\"from\":4,\"to\":1},{\"dir\":\"W\",\"from\":1,\"to\":3},",
            "{\"dir\":\"N\",\"from\":3,\"to\":0}]}\n"
        )
    );
}

#[test]
fn graph_dot_styles_edges_by_direction() {
    let dot = stdout_of(&[
        "graph",
        "--partition",
        "1",
        "--pq",
        "3,2",
        "--format",
        "dot",
    ]);
    let expected = "digraph boundary_graph {\n  rankdir=LR;\n  \"0\";\n  \"1\";\n  \"2\";\n  \
                    \"3\";\n  \"4\";\n  \"0\" -> \"2\" [style=solid];\n  \"2\" -> \"4\" \
                    [style=solid];\n  \"4\" -> \"1\" [style=dashed];\n  \"1\" -> \"3\" \
                    [style=solid];\n  \"3\" -> \"0\" [style=dashed];\n}\n";
    assert_eq!(dot, expected);
}

#[test]
fn census_reports_the_matching() {
    let out = stdout_of(&["census", "--partition", "1", "--arm", "0", "--leg", "0"]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["inside_count"], 1);
    assert_eq!(report["complement_count"], 2);
    assert_eq!(report["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn rect_census_reports_the_case_split() {
    let out = stdout_of(&[
        "census",
        "--partition",
        "7,7,7,7,3,3,3,3,3",
        "--arm",
        "4",
        "--leg",
        "4",
        "--rect",
        "--pq",
        "3,2",
        "--K",
        "6",
    ]);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["case"], 2);
    assert_eq!(report["inside_count"], 0);
    assert_eq!(report["complement_count"], 1);
    assert_eq!(report["complement_cells"][0]["x"], 7);
    assert_eq!(report["complement_cells"][0]["y"], 4);
}

#[test]
fn tables_in_json_and_tsv() {
    assert_eq!(
        stdout_of(&["table", "--n", "4", "--pq", "4,1"]),
        "{\"1\":1,\"2\":2,\"3\":1,\"4\":1}\n"
    );
    assert_eq!(
        stdout_of(&["table", "--n", "4", "--pq", "4,1", "--format", "tsv"]),
        "value\tcount\n1\t1\n2\t2\n3\t1\n4\t1\n"
    );
    assert_eq!(
        stdout_of(&["table", "--n", "4", "--pq", "4,1", "--dims"]),
        "{\"5\":1,\"6\":2,\"7\":1,\"8\":1}\n"
    );
    assert_eq!(
        stdout_of(&["table", "--n", "0", "--pq", "1,1"]),
        "{\"0\":1}\n"
    );
}

#[test]
fn enumerate_lists_partitions_in_order() {
    assert_eq!(
        stdout_of(&["enumerate", "--n", "4"]),
        "{\"n\":4,\"count\":5,\"partitions\":[\"4\",\"3,1\",\"2,2\",\"2,1,1\",\"1,1,1,1\"]}\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "--n", "0"]),
        "{\"n\":0,\"count\":1,\"partitions\":[\"-\"]}\n"
    );
}

#[test]
fn verify_reports_and_exits_zero_on_success() {
    let out = slopestat(&["verify", "--suite", "hooks", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report["suite"], "hooks");
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert!(report["instances"].as_u64().unwrap() > 0);
}

#[test]
fn verify_accepts_every_documented_suite() {
    for suite in [
        "hooks",
        "rectangle",
        "lw-formulas",
        "series",
        "component",
        "equidistribution",
    ] {
        let out = slopestat(&["verify", "--suite", suite, "--max-n", "3"]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
    }
}

#[test]
fn usage_and_validation_errors_exit_two() {
    // unknown suite
    assert_eq!(
        slopestat(&["verify", "--suite", "nonsense", "--max-n", "3"])
            .status
            .code(),
        Some(2)
    );
    // malformed partition
    assert_eq!(
        slopestat(&["stats", "--partition", "3,4", "--pq", "3,2"])
            .status
            .code(),
        Some(2)
    );
    // non-coprime slope
    assert_eq!(
        slopestat(&["stats", "--partition", "1", "--pq", "4,2"])
            .status
            .code(),
        Some(2)
    );
    // slope too small for the table
    assert_eq!(
        slopestat(&["table", "--n", "4", "--pq", "2,1"])
            .status
            .code(),
        Some(2)
    );
    // --rect without --pq
    assert_eq!(
        slopestat(&[
            "census",
            "--partition",
            "1",
            "--arm",
            "0",
            "--leg",
            "0",
            "--rect"
        ])
        .status
        .code(),
        Some(2)
    );
    // diagram does not fit at the requested K
    assert_eq!(
        slopestat(&["graph", "--partition", "2,1", "--pq", "3,2", "--K", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_bytes_are_deterministic() {
    for args in [
        vec!["stats", "--partition", "8,8,6,6,2,2", "--pq", "3,2"],
        vec!["graph", "--partition", "8,8,6,6,2,2", "--pq", "3,2"],
        vec![
            "graph",
            "--partition",
            "8,8,6,6,2,2",
            "--pq",
            "3,2",
            "--format",
            "dot",
        ],
        vec!["table", "--n", "6", "--pq", "6,1"],
        vec!["enumerate", "--n", "7"],
        vec!["census", "--partition", "3,2", "--arm", "1", "--leg", "1"],
    ] {
        assert_eq!(stdout_of(&args), stdout_of(&args), "{args:?}");
    }
}
