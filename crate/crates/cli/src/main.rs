use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use ckq::config::check_budget_env;
use ckq::{emit, exit_code, run_suite, Cli, Command, RunConfig, RunReport, REPORT_FILE};

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

#[cfg(feature = "parallel")]
fn run_with_jobs(cfg: &RunConfig) -> anyhow::Result<RunReport> {
    if cfg.jobs == 0 {
        return Ok(run_suite(cfg));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    Ok(pool.install(|| run_suite(cfg)))
}

#[cfg(not(feature = "parallel"))]
fn run_with_jobs(cfg: &RunConfig) -> anyhow::Result<RunReport> {
    Ok(run_suite(cfg))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Verify(args) => {
            let cfg = match RunConfig::from_args(&args) {
                Ok(c) => c,
                Err(e) => return usage_error(e),
            };
            if let Err(e) = check_budget_env() {
                return usage_error(e);
            }
            let result = run_with_jobs(&cfg).and_then(|r| {
                r.save(Path::new(REPORT_FILE)).with_context(|| format!("writing {REPORT_FILE}"))?;
                Ok(r)
            });
            match result {
                Ok(r) => {
                    print!("{}", emit(&r, cfg.format));
                    ExitCode::from(exit_code(&r) as u8)
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Report { format } => match RunReport::load(Path::new(REPORT_FILE)) {
            Ok(r) => {
                print!("{}", emit(&r, format));
                ExitCode::from(exit_code(&r) as u8)
            }
            Err(e) => usage_error(format!("cannot read {REPORT_FILE}: {e:#}")),
        },
    }
}
