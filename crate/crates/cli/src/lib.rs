//! Library side of the `qedvac` binary, exposed so tests can drive the
//! front end in-process.

pub mod args;
pub mod commands;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::args::Cli;
use crate::commands::{execute, CONSTANTS_ENV};

pub const BANNER: &str = concat!("# qedvac ", env!("CARGO_PKG_VERSION"));

/// Runs the front end on `argv` (including the program name) and returns the
/// process exit code: 0 on success, 2 for usage and validation errors, 3 for
/// numeric failures.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(argv, std::env::var(CONSTANTS_ENV).ok(), out, err)
}

/// As [`run`], with the constants-path environment value passed explicitly.
pub fn run_with_env<I, T>(
    argv: I,
    constants_env: Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return e.exit_code();
        }
    };
    let format = cli.global.format;
    let banner = !cli.global.no_banner;
    match execute(cli.command, cli.global, constants_env) {
        Ok(report) => {
            if banner {
                let _ = writeln!(out, "{BANNER}");
            }
            match report.render(format, out, err) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: writing output: {e}");
                    2
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
