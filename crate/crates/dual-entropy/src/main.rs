use std::process::ExitCode;

fn main() -> ExitCode {
    dual_entropy::cli::main_entry()
}
