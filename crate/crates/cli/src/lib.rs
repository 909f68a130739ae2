//! Command-line front end: argument parsing, dispatch to the library crates,
//! JSON payloads with exit-code semantics, and the acceptance audit.

pub mod args;
pub mod audit;
pub mod caps;
pub mod commands;
pub mod render;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;
use std::time::Instant;

/// Outcome class of a command; the process exit code is derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every check held.
    Ok,
    /// A mathematical check produced a counterexample.
    Failed,
    /// The invocation or its input was malformed.
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: u64,
}

/// What a command handler returns before timing is attached.
pub struct Outcome {
    pub status: Status,
    pub payload: Value,
}

impl Outcome {
    pub fn ok(payload: impl Serialize) -> anyhow::Result<Outcome> {
        Ok(Outcome { status: Status::Ok, payload: serde_json::to_value(payload)? })
    }

    /// `Ok` when `passed`, `Failed` otherwise.
    pub fn checked(passed: bool, payload: impl Serialize) -> anyhow::Result<Outcome> {
        let status = if passed { Status::Ok } else { Status::Failed };
        Ok(Outcome { status, payload: serde_json::to_value(payload)? })
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let finish = |status, payload| CommandResult { status, payload, elapsed_ms: start.elapsed().as_millis() as u64 };
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => finish(Status::Ok, Value::String(text)),
                _ => finish(Status::Error, serde_json::json!({ "error": e.kind().to_string(), "usage": text })),
            };
        }
    };
    match commands::run(&cli) {
        Ok(o) => finish(o.status, o.payload),
        Err(e) => finish(Status::Error, serde_json::json!({ "error": format!("{e:#}") })),
    }
}

/// Parses `argv` only far enough to read the global output flag.
pub fn wants_json<T: AsRef<str>>(argv: &[T]) -> bool {
    argv.iter().any(|a| a.as_ref() == "--json")
}

/// The book chapters, compiled as doctests so that their examples stay current.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    mod symbols {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/hyperoctahedral.md")]
    mod hyperoctahedral {}
    #[doc = include_str!("../../../book/src/degrees.md")]
    mod degrees {}
    #[doc = include_str!("../../../book/src/flags.md")]
    mod flags {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
