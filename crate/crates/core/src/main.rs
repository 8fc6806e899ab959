use std::process::ExitCode;

fn main() -> ExitCode {
    snow_leopard::cli::main()
}
