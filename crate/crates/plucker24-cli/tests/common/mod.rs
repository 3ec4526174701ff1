//! Helpers for driving the built binary.
#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_plucker24")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

pub fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

pub fn write_fixture(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

pub const MATRIX_1234: &str = "{\"matrix\": [[1,2,3,4],[5,6,7,8]]}\n";
pub const MATRIX_SWAPPED: &str = "{\"matrix\": [[5,6,7,8],[1,2,3,4]]}\n";
pub const MATRIX_RANK1: &str = "{\"matrix\": [[1,2,3,4],[2,4,6,8]]}\n";
pub const MATRIX_E12: &str = "{\"matrix\": [[1,0,0,0],[0,1,0,0]]}\n";
pub const MATRIX_E13: &str = "{\"matrix\": [[1,0,0,0],[0,0,1,0]]}\n";
pub const MATRIX_HUGE: &str = "{\"matrix\": [[1e300,1,1,1],[1,1e300,1,1]]}\n";
pub const MATRIX_BAD_SHAPE: &str = "{\"matrix\": [[1,2,3],[4,5,6]]}\n";
pub const MINORS_CONSISTENT: &str =
    "{\"minors\": {\"m12\":2,\"m13\":3,\"m14\":5,\"m23\":7,\"m24\":11,\"m34\":-1}}\n";
pub const MINORS_OFF_QUADRIC: &str =
    "{\"minors\": {\"m12\":2,\"m13\":3,\"m14\":5,\"m23\":7,\"m24\":11,\"m34\":17}}\n";
pub const MINORS_ONES: &str =
    "{\"minors\": {\"m12\":1,\"m13\":1,\"m14\":1,\"m23\":1,\"m24\":1,\"m34\":1}}\n";
pub const MINORS_HAND: &str =
    "{\"minors\": {\"m12\":2,\"m13\":0,\"m14\":0,\"m23\":0,\"m24\":0,\"m34\":1}}\n";
pub const MINORS_DEGENERATE: &str =
    "{\"minors\": {\"m12\":1,\"m13\":0,\"m14\":0,\"m23\":0,\"m24\":0,\"m34\":1}}\n";
pub const MINORS_ZEROS: &str =
    "{\"minors\": {\"m12\":0,\"m13\":0,\"m14\":0,\"m23\":0,\"m24\":0,\"m34\":0}}\n";
