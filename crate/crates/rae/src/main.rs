use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = rae::cli::run(std::env::args_os(), &rae::cli::Hooks::default(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
