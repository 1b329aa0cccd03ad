#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub fn qtails(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtails"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

fn tests_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub struct GoldenCase {
    pub name: String,
    pub order: String,
    pub expr: String,
}

pub fn golden_cases() -> Vec<GoldenCase> {
    let text = std::fs::read_to_string(tests_dir().join("golden/cases.tsv")).expect("cases.tsv");
    text.lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let mut f = l.splitn(3, '\t');
            GoldenCase {
                name: f.next().unwrap().to_string(),
                order: f.next().unwrap().to_string(),
                expr: f.next().expect("three tab-separated fields").to_string(),
            }
        })
        .collect()
}

pub fn golden_output(name: &str) -> String {
    std::fs::read_to_string(tests_dir().join(format!("golden/{name}.out"))).expect("golden file")
}

/// Returns the first golden case whose expansion differs, if any.
pub fn first_golden_difference() -> Option<String> {
    golden_cases().into_iter().find_map(|c| {
        let o = qtails(&["expand", &c.expr, "--order", &c.order]);
        (!o.status.success() || stdout(&o) != golden_output(&c.name)).then_some(c.name)
    })
}

pub fn malformed_inputs() -> Vec<String> {
    let text = std::fs::read_to_string(tests_dir().join("malformed.txt")).expect("malformed.txt");
    text.lines().map(str::to_string).collect()
}

/// Exit 2 and a diagnostic naming a byte offset.
pub fn rejects_with_position(input: &str) -> bool {
    let o = qtails(&["expand", input, "--order", "10"]);
    o.status.code() == Some(2) && o.stdout.is_empty() && stderr(&o).contains("at byte ")
}
