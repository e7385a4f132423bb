use std::process::ExitCode;

use clap::Parser;
use delta2d_cli::{emit, run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let result = run(&cfg).and_then(|report| emit(&cfg, &report).map(|()| report.exit_code));
    match result {
        Ok(code) => {
            if code != 0 {
                eprintln!("error: limit did not converge (last two samples differ by more than the tolerance)");
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
