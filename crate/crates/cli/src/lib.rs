//! The `charbound` command line.
//!
//! [`run`] parses argv, dispatches and renders; `main` only prints the
//! [`Outcome`]. Keeping the process boundary thin lets tests drive the same
//! path in-process.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod scan;
pub mod verify;

use std::ffi::OsString;

use clap::Parser;

use crate::config::{Cli, Command, Format, RunConfig};
use crate::error::{CliError, EXIT_OK};
use crate::report::{json_string, Report};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn dispatch(cfg: &RunConfig, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Symrank => commands::symrank(cfg),
        Command::Embed => commands::embed(cfg),
        Command::Theta => commands::theta_cmd(cfg),
        Command::Kwise => commands::kwise(cfg),
        Command::Interp => commands::interp(cfg),
        Command::Scan(_) => scan::scan(cfg),
        Command::Verify(_) => verify::verify(cfg),
    }
}

/// Looks for `--format json` before parsing so usage errors can be reported
/// in the requested shape.
fn wants_json(argv: &[OsString]) -> bool {
    let args: Vec<String> = argv.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    let explicit = args.iter().enumerate().find_map(|(i, a)| {
        if let Some(v) = a.strip_prefix("--format=") {
            Some(v.to_string())
        } else if a == "--format" {
            args.get(i + 1).cloned()
        } else {
            None
        }
    });
    explicit.is_none_or(|v| v == "json")
}

fn failure(e: CliError, json: bool) -> Outcome {
    let code = e.code;
    if json {
        let body = serde_json::to_value(&e).expect("error serializes");
        Outcome {
            code,
            stdout: json_string(&body),
            stderr: String::new(),
        }
    } else {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("{e}\n"),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json = wants_json(&argv);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let msg = e.render().to_string();
            return failure(CliError::usage(msg.trim_end()), json);
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => return failure(e, json),
    };
    let json = cfg.format == Format::Json;
    let report = match dispatch(&cfg, &cli.command) {
        Ok(r) => r,
        Err(e) => return failure(e, json),
    };
    let text = match report.render(cfg.format) {
        Ok(t) => t,
        Err(e) => return failure(e, json),
    };
    let code = report.exit_code();
    match &cli.opts.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => failure(CliError::io(format!("{}: {e}", path.display())), json),
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::EXIT_USAGE;

    #[test]
    fn usage_errors_exit_one() {
        let o = run(["charbound", "theta"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stdout.contains("\"kind\": \"usage\""));
        let o = run(["charbound", "bogus", "--format", "text"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stdout.is_empty() && !o.stderr.is_empty());
    }

    #[test]
    fn exact_theta_rejects_larger_m() {
        let o = run(["charbound", "theta", "--m", "3", "--n", "2", "--t-lo", "2"]);
        assert_eq!(o.code, EXIT_USAGE);
        assert!(o.stdout.contains("--scalar float"));
    }
}
