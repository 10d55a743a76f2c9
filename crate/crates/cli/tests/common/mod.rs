#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cliquehole(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_cliquehole"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Generates an instance file from a profile via the binary.
pub fn gen_profile(dir: &Path, name: &str, profile: &str) -> PathBuf {
    let m = profile.split(',').count().to_string();
    let path = dir.join(name);
    let out = cliquehole(&[
        "gen",
        "--m",
        &m,
        "--profile",
        profile,
        "--out",
        path_str(&path),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    path
}

pub fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}
