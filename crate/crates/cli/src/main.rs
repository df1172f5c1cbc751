use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = solenoid_cli::run(std::env::args().skip(1));
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(outcome.code as u8)
}
