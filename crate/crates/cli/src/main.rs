use std::process::ExitCode;

use clap::Parser;

use evsym_cli::{app, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore failure: the global pool can only be configured once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match app::run(cli) {
        Ok(output) => {
            print!("{}", output.stdout);
            ExitCode::from(output.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(app::exit_code_for(&e))
        }
    }
}
