use std::process::ExitCode;

use clap::Parser;
use hubbard::cli::{run, Cli};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = Cli::parse_from(&args);
    match run(cli, args.into_iter().skip(1).collect()) {
        Ok(manifest) => {
            for a in &manifest.artifacts {
                eprintln!("wrote {} ({} bytes)", a.file, a.bytes);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
