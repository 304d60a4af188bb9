use std::path::PathBuf;
use std::process::{Command, Output};

use gorenstein_core::circulant::SurveyRow;
use gorenstein_core::Verdict;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorenstein"))
        .args(args)
        .env_remove("GORENSTEIN_FORMAT")
        .env_remove("GORENSTEIN_CHAR")
        .env_remove("GORENSTEIN_CAP")
        .env_remove("GORENSTEIN_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn classify_json(args: &[&str]) -> Verdict {
    let mut all = vec!["classify", "--format", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_examples() {
    let v = classify_json(&["--circulant", "13:1,5"]);
    assert!(v.gorenstein);
    let v = classify_json(&["--circulant", "8:1,2"]);
    assert!(v.w2 && !v.gorenstein);
    let v = classify_json(&["--edges", &data("k2.txt")]);
    assert!(v.gorenstein);
    let v = classify_json(&["--g6", "Dhc"]);
    assert!(v.gorenstein && v.n == 5);
}

#[test]
fn json_output_round_trips() {
    let o = run(&["classify", "--format", "json", "--circulant", "12:2,3"]);
    let text = stdout(&o);
    let v: Verdict = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text);
}

#[test]
fn human_output_names_path_and_witness() {
    let o = run(&["classify", "--circulant", "7:1"]);
    let text = stdout(&o);
    assert!(text.contains("gorenstein: false"));
    assert!(text.contains("path triangle-free"));
    assert!(text.contains("witness:"));
}

#[test]
fn csv_classify_has_header_and_row() {
    let o = run(&["classify", "--format", "csv", "--edges", &data("c5.txt")]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,edges,wellCovered,w2,cm,eulerOk,linkOk,gorenstein");
    assert!(lines[1].starts_with("5,5,true,true,"));
    assert!(lines[1].ends_with(",true"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--edges", &data("malformed.txt")]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--circulant", "8:5"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--circulant", "8-1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--edges", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--g6", "Dhc", "--circulant", "5:1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--char", "4", "--g6", "Dhc"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--circulant", "30:1,2"]).status.code(), Some(3));
    assert_eq!(run(&["classify", "--cap", "4", "--g6", "Dhc"]).status.code(), Some(3));
}

#[test]
fn survey_csv_all_match() {
    let o = run(&["survey", "--family", "quartic", "--max-n", "14", "--format", "csv", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,a,b,prediction,wellCovered,w2,cm,eulerOk,linkOk,gorenstein,match,millis");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 70);
    assert!(rows.iter().all(|r| r[10] == "true" && r[11].is_empty()));
    assert!(rows.iter().any(|r| r[..3] == ["13", "1", "5"] && r[9] == "true"));
}

#[test]
fn survey_json_lines_and_skips() {
    let o = run(&["survey", "--family", "band", "--max-n", "10", "--cap", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<SurveyRow> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), (3..=10).map(|n| n / 2).sum::<usize>());
    assert!(rows.iter().filter(|r| r.spec.n() > 8).all(SurveyRow::is_skipped));
    assert!(rows.iter().filter(|r| r.spec.n() <= 8).all(|r| r.matched == Some(true)));
}

#[test]
fn surveys_are_deterministic_across_job_counts() {
    let one = run(&["survey", "--family", "cubic", "--format", "csv", "--jobs", "1"]);
    let again = run(&["survey", "--family", "cubic", "--format", "csv", "--jobs", "1"]);
    let four = run(&["survey", "--family", "cubic", "--format", "csv", "--jobs", "4"]);
    assert_eq!(one.stdout, again.stdout);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.status.code(), Some(0));
}

#[test]
fn sqc_examples() {
    let o = run(&["sqc", "--edges", &data("c5.txt")]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(text.contains("SQC (walk reading): m=0 t=1 r=0"));
    assert!(text.contains("sqc gorenstein: true"));
    assert!(text.contains("cross-check: agree"));

    let o = run(&["sqc", "--edges", &data("p4.txt")]);
    let text = stdout(&o);
    assert!(text.contains("m=2 t=0 r=0"));
    assert!(text.contains("sqc gorenstein: false"));

    let o = run(&["sqc", "--edges", &data("c7.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not SQC"));
}

#[test]
fn sqc_json_report() {
    let o = run(&["sqc", "--format", "json", "--g6", "Dhc"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sqc"], true);
    assert_eq!(v["partition"]["fiveCycles"], serde_json::json!([[0, 1, 2, 3, 4]]));
    assert_eq!(v["agree"], true);
}

#[test]
fn environment_overrides_flags() {
    let o = Command::new(env!("CARGO_BIN_EXE_gorenstein"))
        .args(["classify", "--circulant", "13:1,5"])
        .env("GORENSTEIN_FORMAT", "json")
        .env("GORENSTEIN_CHAR", "2")
        .output()
        .unwrap();
    let v: Verdict = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.characteristic.to_string(), "2");
}
