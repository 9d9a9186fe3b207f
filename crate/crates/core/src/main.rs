use clap::Parser;

use interval_coloring::cli::{self, RunConfig, EXIT_USAGE};

fn main() {
    let code = match RunConfig::try_parse() {
        Ok(config) => cli::run(&config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            code
        }
    };
    std::process::exit(code);
}
