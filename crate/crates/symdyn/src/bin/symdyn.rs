use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(symdyn::cli::main_with_exit_code() as u8)
}
