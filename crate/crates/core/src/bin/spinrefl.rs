use std::process::ExitCode;

fn main() -> ExitCode {
    spinrefl::cli::main()
}
