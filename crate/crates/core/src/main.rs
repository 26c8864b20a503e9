use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = cm_gaudin::cli::run_args(std::env::args_os());
    let wrote_file = outcome.code != 2 && std::env::args().any(|a| a == "--out" || a.starts_with("--out="));
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else if !wrote_file {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    ExitCode::from(outcome.code as u8)
}
