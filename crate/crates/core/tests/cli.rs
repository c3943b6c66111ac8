use std::process::{Command, Output};

fn subres(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subres")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_reports_membership_through_exit_codes() {
    let ok = subres(&["check", "--fixture", "M", "--class", "srlbs"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let no = subres(&["check", "--fixture", "B2", "--class", "srs"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("SR4"));
    let expected = subres(&["check", "--fixture", "two-elt-collapse", "--class", "sha", "--expect-fail"]);
    assert_eq!(expected.status.code(), Some(0));
}

#[test]
fn json_output_parses() {
    let o = subres(&["--json", "check", "--fixture", "N", "--class", "srl"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn countermodel_and_entailment() {
    let o = subres(&["countermodel", "--formula", "p -> (q -> p)", "--class", "srl", "--shrink"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = subres(&["entails", "--hyp", "p", "--goal", "p", "--class", "srl", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(subres(&["check", "--fixture", "nope", "--class", "srl"]).status.code(), Some(2));
    assert_eq!(subres(&["countermodel", "--formula", "p ->", "--class", "srl"]).status.code(), Some(2));
    assert_eq!(subres(&["--max-size", "9", "enumerate", "--class", "srl", "--size", "9"]).status.code(), Some(2));
}

#[test]
fn suite_passes() {
    let o = subres(&["paper-suite"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 8);
}

#[test]
fn fixtures_listing() {
    let o = subres(&["fixtures", "list"]);
    assert_eq!(o.status.code(), Some(0));
    for name in ["M", "N", "B2", "boole2"] {
        assert!(stdout(&o).lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
