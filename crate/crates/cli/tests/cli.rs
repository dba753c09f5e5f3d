//! End-to-end tests of the binary: flags, formats, exit codes.

use std::process::{Command, Output};

use bkron::bernoulli::Method;
use bkron::rational::{frac_string, parse_frac};

fn bkron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bkron"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn compute_kronecker_known_value() {
    let out = bkron(&["compute", "--m", "4", "--method", "kronecker"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "B_4 = -1/30\n");
}

#[test]
fn compute_generalized_with_parameters() {
    let out = bkron(&[
        "compute",
        "--m",
        "2",
        "--method",
        "generalized",
        "--a",
        "1",
        "--n",
        "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "B_2 = 1/6\n");
}

#[test]
fn compute_rejects_m_below_the_formula_range() {
    let out = bkron(&["compute", "--m", "1", "--method", "kronecker"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("requires 2 <= m"), "stderr was {stderr:?}");
}

#[test]
fn compute_rejects_violated_parameter_inequality() {
    let out = bkron(&[
        "compute",
        "--m",
        "4",
        "--method",
        "generalized",
        "--a",
        "5",
        "--n",
        "6",
    ]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("requires a <= m"), "stderr was {stderr:?}");
}

#[test]
fn compute_value_round_trips_through_the_text_format() {
    for m in [0u64, 1, 2, 7, 12, 30] {
        let out = bkron(&["compute", "--m", &m.to_string(), "--method", "recurrence"]);
        assert_eq!(exit_code(&out), 0);
        let text = stdout_of(&out);
        let rendered = text
            .trim()
            .strip_prefix(&format!("B_{m} = "))
            .expect("line shape");
        assert_eq!(
            parse_frac(rendered).unwrap(),
            Method::Recurrence.compute(m).unwrap(),
        );
    }
}

#[test]
fn compute_json_record() {
    let out = bkron(&["compute", "--m", "4", "--method", "kronecker", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.starts_with("[{"), "not a JSON array: {text:?}");
    assert!(text.contains("\"method\":\"kronecker\""));
    assert!(text.contains("\"m\":4"));
    assert!(text.contains("\"value\":\"-1/30\""));
    assert!(text.contains("\"elapsed_ns\":"));
}

#[test]
fn compute_decimal_is_labeled_approximate() {
    let out = bkron(&[
        "compute",
        "--m",
        "4",
        "--method",
        "recurrence",
        "--decimal",
        "5",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("B_4 = -1/30\n"), "exact line missing");
    assert!(
        text.contains("-0.03333"),
        "rounded decimal missing: {text:?}"
    );
    assert!(text.contains("approximate"), "approximation label missing");
}

#[test]
fn expand_phi_exact_term_lines() {
    let out = bkron(&["expand", "--object", "phi", "--trunc", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "0 0 1/1\n1 0 1/2\n0 1 -1/2\n2 0 1/12\n1 1 -1/6\n0 2 1/12\n"
    );
}

#[test]
fn expand_g_below_its_leading_degree_is_empty() {
    let out = bkron(&["expand", "--object", "g", "--n", "2", "--trunc", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn expand_zero_branch_is_empty() {
    let out = bkron(&["expand", "--object", "muhat-zk", "--k", "0", "--trunc", "5"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn expand_log_image_matches_negated_phi() {
    // the image of log z is -phi, so the term lines differ only in sign
    let out = bkron(&["expand", "--object", "muhat-Zk", "--k", "1", "--trunc", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout_of(&out),
        "0 0 -1/1\n1 0 -1/2\n0 1 1/2\n2 0 -1/12\n1 1 1/6\n0 2 -1/12\n"
    );
}

#[test]
fn expand_rejects_unknown_object() {
    let out = bkron(&["expand", "--object", "nope", "--trunc", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn expand_rejects_missing_parameter() {
    let out = bkron(&["expand", "--object", "f", "--trunc", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_lemma_suite_passes() {
    let out = bkron(&["verify", "--suite", "lemma", "--max-n", "30"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(
        text.contains("suite lemma: 496/496 checks passed"),
        "{text:?}"
    );
    assert!(text.trim_end().ends_with("pass"));
}

#[test]
fn verify_muhat_suite_passes_at_small_cases() {
    let out = bkron(&[
        "verify", "--suite", "muhat", "--trunc", "6", "--cases", "20",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).trim_end().ends_with("pass"));
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = bkron(&["verify", "--suite", "everything"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bench_rows_are_value_consistent() {
    let out = bkron(&["bench", "--m-list", "10,12", "--reps", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("method,m,a,n,nanos,value"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4 * 2 * 2, "4 methods x 2 m x 2 reps");
    for m in ["10", "12"] {
        let values: Vec<&str> = rows
            .iter()
            .filter(|r| r.split(',').nth(1) == Some(m))
            .map(|r| r.split(',').nth(5).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]), "m = {m}");
    }
}

#[test]
fn bench_respects_method_preconditions() {
    let out = bkron(&["bench", "--m-list", "1", "--methods", "kronecker"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bench_json_records_parse_back() {
    let out = bkron(&[
        "bench",
        "--m-list",
        "10",
        "--reps",
        "1",
        "--methods",
        "recurrence,kronecker",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let expected = frac_string(&Method::Recurrence.compute(10).unwrap());
    assert!(
        text.contains(&format!("\"value\":\"{expected}\"")),
        "{text:?}"
    );
}

#[test]
fn out_flag_duplicates_stdout() {
    let dir = std::env::temp_dir().join(format!("bkron-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("phi.txt");
    let out = bkron(&[
        "expand",
        "--object",
        "phi",
        "--trunc",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, stdout_of(&out));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_command_is_a_usage_error() {
    let out = bkron(&[]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn closed_pipe_is_not_an_error() {
    use std::io::Read;
    // enough output to overflow the pipe buffer after the reader is gone
    let mut child = Command::new(env!("CARGO_BIN_EXE_bkron"))
        .args(["expand", "--object", "phi", "--trunc", "60"])
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    let mut first = [0u8; 64];
    child
        .stdout
        .as_mut()
        .unwrap()
        .read_exact(&mut first)
        .unwrap();
    drop(child.stdout.take());
    let status = child.wait().unwrap();
    assert_eq!(status.code(), Some(0), "writer must exit cleanly on EPIPE");
}

#[test]
fn help_exits_cleanly() {
    for args in [
        vec!["help"],
        vec!["compute", "--help"],
        vec!["verify", "--help"],
        vec!["expand", "--help"],
        vec!["bench", "--help"],
    ] {
        let out = bkron(&args);
        assert_eq!(exit_code(&out), 0, "args {args:?}");
        assert!(!stdout_of(&out).is_empty());
    }
}
