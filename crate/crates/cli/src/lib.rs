//! Command-line front end for the `mdclique` library.

pub mod args;
pub mod bench;
pub mod commands;
pub mod error;
pub mod record;
pub mod verify;

use std::io::Write;

pub use args::Cli;
use args::Command;
pub use error::CliError;
pub use record::BenchRecord;

/// Sizes the global worker pool used by matrix products. Call once, before
/// [`run`]; later calls are rejected.
pub fn init_threads(threads: usize) -> Result<(), CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

/// Executes a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = cli.engine.config();
    match &cli.command {
        Command::Gen(a) => commands::gen(a, out, err),
        Command::Count(a) => commands::count_cmd(a, &cfg, out),
        Command::Detect(a) => commands::detect(a, &cfg, out),
        Command::Find(a) => commands::find_cmd(a, &cfg, out),
        Command::Verify(a) => verify::run(a, &cfg, out, None),
        Command::Bench(a) => bench::run(a, &cfg, out),
    }
}
