use std::io::Write;
use std::process::ExitCode;

use brandt_cli::{config_from_env, run_command, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match config_from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    let out = run_command(std::env::args_os(), &config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
