use std::process::ExitCode;

use bidegree_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the input-error code; help and version succeed
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    ExitCode::from(run(cli) as u8)
}
