use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(srone::cli::run())
}
