use std::process::ExitCode;

fn main() -> ExitCode {
    progdisc_cli::run(std::env::args_os())
}
