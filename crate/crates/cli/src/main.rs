use hookline_cli::{dispatch, render, wants_json};
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let json = wants_json(&argv);
    let result = dispatch(&argv);
    let out = if json { result.payload.to_string() + "\n" } else { render::text(&result.payload) };
    // the payload is byte-deterministic; status and timing go to stderr
    print!("{out}");
    eprintln!("status: {:?}, {} ms", result.status, result.elapsed_ms);
    ExitCode::from(result.status.exit_code() as u8)
}
