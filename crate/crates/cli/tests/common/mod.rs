#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const BIN: &str = env!("CARGO_BIN_EXE_qedvac");

/// Every invocation the suites exercise. Each is run with `--no-banner`
/// appended where the determinism check needs it.
pub const INVOCATIONS: &[&[&str]] = &[
    &["sum-charges"],
    &["sum-charges", "--alpha-inverse", "137.035999"],
    &["sum-charges", "--options", "1,3,4,5"],
    &["running", "--k", "100GeV/c"],
    &["running", "--k", "0GeV"],
    &["running", "--k", "5e15m^-1", "--mode", "paper-literal"],
    &["running", "--sweep", "1MeV/c:1000GeV/c:7,log"],
    &[
        "running",
        "--sweep",
        "1GeV/c:5GeV/c:5,lin",
        "--set",
        "SM-fermions",
    ],
    &["landau"],
    &["landau", "--mode", "paper-literal"],
    &["landau", "--planck-nu", "1"],
    &["vacuum", "--option", "1"],
    &["vacuum", "--option", "3"],
    &["vacuum", "--option", "4"],
    &["vacuum", "--option", "5", "--show", "alpha"],
    &[
        "vacuum",
        "--option",
        "4",
        "--show",
        "c",
        "--set",
        "SM-fermions",
    ],
    &["schwinger"],
    &["schwinger", "--variant", "sauter-bohr", "--intensity"],
    &["schwinger", "--particle", "mu-"],
    &["focal", "--volume", "1um3", "--p", "1e-20"],
    &[
        "focal",
        "--volume",
        "2e-18m3",
        "--p",
        "0.5",
        "--particle",
        "mu-",
    ],
    &["blackbody", "--T", "300", "--nu", "1e13"],
    &["blackbody", "--law", "rj", "--T", "300", "--nu", "1e13"],
    &[
        "blackbody",
        "--law",
        "planck2",
        "--T",
        "3",
        "--sweep",
        "1e9:1e13:5,log",
    ],
    &[
        "blackbody",
        "--T",
        "1000",
        "--integrate",
        "--nu-max",
        "2.0836619e15",
    ],
    &[
        "blackbody",
        "--law",
        "rj",
        "--T",
        "1000",
        "--integrate",
        "--nu-max",
        "1e13",
    ],
    &["particles"],
    &["particles", "--set", "SM-fermions"],
];

pub const FORMATS: [&str; 3] = ["table", "json", "csv"];

pub fn bundled_constants_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/codata-2018.constants")
}

/// Runs the built binary with the constants variable cleared unless `env`
/// sets it.
pub fn run_bin(args: &[&str], env: Option<&str>) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("QEDVAC_CONSTANTS");
    if let Some(v) = env {
        cmd.env("QEDVAC_CONSTANTS", v);
    }
    cmd.output().expect("qedvac binary runs")
}

pub fn with_flags<'a>(args: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = args.to_vec();
    v.extend_from_slice(extra);
    v
}
