use std::process::ExitCode;

fn main() -> ExitCode {
    bfdeg_cli::run()
}
