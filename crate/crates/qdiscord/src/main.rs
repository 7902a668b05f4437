use clap::Parser;

use qdiscord::cli::{execute, write_output, Cli};

fn main() {
    let cli = Cli::parse();
    let result = execute(&cli.command, &cli.common)
        .and_then(|sections| write_output(&sections, &cli.common.out));
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(1);
    }
}
