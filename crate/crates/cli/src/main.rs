use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = match tenfold_cli::parse_args(std::env::args_os()) {
        Ok(cfg) => tenfold_cli::execute(&cfg, &mut std::io::stdout().lock(), &mut std::io::stderr().lock()),
        Err(tenfold_cli::CliError::Clap(e)) => {
            let _ = e.print();
            if e.use_stderr() {
                tenfold_cli::EXIT_USAGE
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(std::io::stderr(), "error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
