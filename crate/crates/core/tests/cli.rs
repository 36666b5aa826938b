use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twisted-minors")).args(args).output().expect("binary runs")
}

fn json_line(out: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().find(|l| l.starts_with('{') || l.starts_with('[')).expect("json output");
    serde_json::from_str(line).expect("valid json")
}

#[test]
fn leaf_sl3_longest() {
    let out = run(&["leaf", "--type", "A2", "--u", "1,2,1", "--v", "2,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_line(&out);
    assert_eq!(v["dimension"], 6);
    assert_eq!(v["components"], 1);
}

#[test]
fn bracket_table_a1() {
    let out = run(&["bracket-table", "--type", "A1", "--word", "1,1b"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_line(&out);
    assert_eq!(v[0]["lhs"], "1/1");
    assert_eq!(v[2]["rhs"], "-1/1");
}

#[test]
fn oracle_and_eval_pass() {
    for args in [
        vec!["oracle", "--n", "3", "--word", "1,2b,2,1b", "--samples", "2"],
        vec!["eval", "--n", "3", "--word", "1,2b,2,1b", "--seed", "4"],
        vec!["integrable", "--type", "B2", "--word", "1,2,1,2"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json_line(&out)["pass"], true);
    }
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(run(&["leaf", "--type", "E9", "--u", "1", "--v", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bracket-table", "--type", "A2", "--word", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["bracket-table", "--type", "A2", "--word", "4"]).status.code(), Some(2));
}

#[test]
fn seeded_output_is_reproducible() {
    let args = ["eval", "--n", "3", "--word", "2b,1,2", "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
