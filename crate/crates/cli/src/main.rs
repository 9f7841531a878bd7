use clap::Parser;
use xyselect_cli::{run, Cli, CliError};

fn main() {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = run(cli, &mut stdout) {
        if !matches!(e, CliError::Mismatch) {
            eprintln!("error: {e}");
        }
        std::process::exit(e.exit_code());
    }
}
