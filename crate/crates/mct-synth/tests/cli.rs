//! End-to-end checks of the command-line surface: output formats, file
//! round-trips, and exit codes (0 success, 1 usage/IO, 2 failed verification).

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mct-synth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn synth_prints_the_summary_line() {
    let out =
        run(&["synth", "--size", "6", "--garbage", "3", "--strategy", "lemma72-peres", "--expand"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "cost=48 garbage=3 lines=9 strategy=lemma72-peres");
}

#[test]
fn synth_auto_reports_the_winning_split() {
    let out = run(&["synth", "--size", "9", "--garbage", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "cost=154 garbage=1 lines=10 strategy=split(4:lemma71;5:lemma72-peres)"
    );
}

#[test]
fn cost_table_csv_matches_published_values() {
    let out = run(&["cost-table", "--max-size", "10", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "size,garbage,cost,strategy");
    assert_eq!(lines.len(), 21, "header plus 20 data rows");
    let expected: [(usize, usize, u64); 20] = [
        (1, 0, 1),
        (2, 0, 1),
        (3, 0, 5),
        (4, 0, 13),
        (5, 0, 29),
        (6, 0, 61),
        (6, 1, 52),
        (6, 3, 48),
        (7, 0, 125),
        (7, 1, 84),
        (7, 4, 64),
        (8, 0, 253),
        (8, 1, 116),
        (8, 5, 80),
        (9, 0, 509),
        (9, 1, 154),
        (9, 6, 96),
        (10, 0, 1021),
        (10, 1, 192),
        (10, 7, 112),
    ];
    for (line, (size, garbage, cost)) in lines[1..].iter().zip(expected) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4, "line {line}");
        assert_eq!(fields[0], size.to_string());
        assert_eq!(fields[1], garbage.to_string());
        assert_eq!(fields[2], cost.to_string());
    }
}

#[test]
fn every_synth_output_passes_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(usize, Vec<&str>)> = vec![
        (4, vec!["--strategy", "lemma71"]),
        (5, vec!["--strategy", "lemma72"]),
        (6, vec!["--strategy", "lemma72-peres", "--expand"]),
        (7, vec!["--strategy", "cor74"]),
        (7, vec!["--strategy", "cor74-peres", "--expand"]),
        (6, vec!["--garbage", "1"]),
        (8, vec!["--garbage", "5"]),
        (3, vec![]),
        (1, vec![]),
    ];
    for (i, (size, extra_args)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("case{i}.circ"));
        let size_str = size.to_string();
        let mut args = vec!["synth", "--size", &size_str, "--out", path.to_str().unwrap()];
        args.extend(extra_args.iter().copied());
        let out = run(&args);
        assert!(out.status.success(), "synth failed for case {i}: {}", stdout(&out));
        let summary = stdout(&out);
        let lines_field: usize = summary
            .split_whitespace()
            .find_map(|f| f.strip_prefix("lines="))
            .unwrap()
            .parse()
            .unwrap();

        // Verify with the roles the synthesizer declared: controls are
        // 0..size-1, target size-1, extras everything above.
        let controls: Vec<String> = (0..size - 1).map(|c| c.to_string()).collect();
        let extra: Vec<String> = (*size..lines_field).map(|l| l.to_string()).collect();
        let target = (size - 1).to_string();
        let mut vargs: Vec<String> =
            vec!["verify".into(), path.to_str().unwrap().into(), "--target".into(), target];
        if !controls.is_empty() {
            vargs.push("--controls".into());
            vargs.push(controls.join(","));
        }
        if !extra.is_empty() {
            vargs.push("--extra".into());
            vargs.push(extra.join(","));
        }
        let vout = bin().args(&vargs).output().unwrap();
        let report = stdout(&vout);
        assert!(vout.status.success(), "verify failed for case {i}: {report}");
        assert!(report.contains("verdict=exact_unitary") || report.contains("verdict=mainline_ok"));
    }
}

#[test]
fn verify_rejects_wrong_circuits_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wrong.circ");
    std::fs::write(&path, ".lines 2\nx 1\n.end\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "--controls", "0", "--target", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("verdict=fail"));
}

#[test]
fn optimize_cancels_pairs_in_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.circ");
    let output = dir.path().join("out.circ");
    std::fs::write(&input, ".lines 4\ncx 0 1\nccx 2 3 1\ncx 0 1\n.end\n").unwrap();
    let out = run(&["optimize", input.to_str().unwrap(), "--out", output.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&output).unwrap(), ".lines 4\nccx 2 3 1\n.end\n");
}

#[test]
fn expand_replaces_macros_in_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.circ");
    let output = dir.path().join("out.circ");
    std::fs::write(&input, ".lines 3\nperes 0 1 2\n.end\n").unwrap();
    let out = run(&["expand", input.to_str().unwrap(), "--out", output.to_str().unwrap()]);
    assert!(out.status.success());
    let expanded = std::fs::read_to_string(&output).unwrap();
    assert_eq!(expanded, ".lines 3\ncv 0 2\ncv 1 2\ncx 0 1\ncv+ 1 2\n.end\n");
}

#[test]
fn usage_and_io_errors_exit_1() {
    let out = run(&["synth", "--size", "not-a-number"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "/nonexistent/missing.circ", "--target", "0"]);
    assert_eq!(out.status.code(), Some(1));

    // A module error (size too small for the strategy) also exits 1.
    let out = run(&["synth", "--size", "3", "--strategy", "cor74"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_circuit_file_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path: &Path = &dir.path().join("bad.circ");
    std::fs::write(path, ".lines 2\nfoo 0 1\n.end\n").unwrap();
    let out = run(&["optimize", path.to_str().unwrap(), "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "stderr was: {err}");
}
