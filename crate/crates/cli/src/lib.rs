//! Command-line front end for `hankel-exact`.
//!
//! Exit codes: 0 success, 2 a closed-form hypothesis is violated (the report
//! is still printed), 3 the quadrature oracle did not converge, 64 usage error.

pub mod args;
pub mod commands;
pub mod json;
pub mod lambda;
pub mod report;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_RESTRICTION: i32 = 2;
pub const EXIT_NO_CONVERGENCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable holding the sweep worker count.
pub const THREADS_ENV: &str = "HANKEL_EXACT_THREADS";

/// What a command produced: text for stdout and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            stdout: String::new(),
            stderr,
            code: EXIT_USAGE,
        }
    }
}

/// Parses `argv` and runs the selected command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: EXIT_OK,
                },
                _ => Outcome::usage(rendered),
            };
        }
    };
    commands::dispatch(cli.command)
}
