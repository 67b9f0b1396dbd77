//! Argument grammar and the validated run configuration echoed in every report.

use std::path::PathBuf;

use charbound::cayley::ConventionKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "charbound", version, about = "Exact bounds for weight-threshold Cayley graphs on C_m^n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Symmetric orthogonal rank: formula, witness, DLSZ floor and oracle.
    Symrank,
    /// Build the witness embedding and check it against the graph.
    Embed,
    /// Lovász theta of a weight band.
    Theta,
    /// Largest P(0) over k-wise independent distributions.
    Kwise,
    /// Lagrange-interpolation bound for n a multiple of 8.
    Interp,
    /// One row per n over a grid.
    Scan(ScanArgs),
    /// Randomized and exhaustive check suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ScanArgs {
    #[arg(long, value_enum, default_value_t = ScanTask::Theta)]
    pub task: ScanTask,
    #[arg(long, default_value_t = 8)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub step: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub d: Option<usize>,
    #[arg(long = "t-lo", global = true)]
    pub t_lo: Option<usize>,
    #[arg(long = "t-hi", global = true)]
    pub t_hi: Option<usize>,
    #[arg(long, value_enum, global = true)]
    pub convention: Option<ConventionArg>,
    #[arg(long, global = true, conflicts_with = "reduced")]
    pub dense: bool,
    #[arg(long, global = true)]
    pub reduced: bool,
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, global = true, default_value_t = Scalar::Exact)]
    pub scalar: Scalar,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConventionArg {
    Literal,
    Strict,
}

impl From<ConventionArg> for ConventionKind {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Literal => ConventionKind::Literal,
            ConventionArg::Strict => ConventionKind::Strict,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scalar {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanTask {
    Theta,
    Interp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Bochner,
    Dlsz,
    Hyper,
    Interp,
    Witness,
    Theta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    Dense,
    Reduced,
}

/// Everything a run depends on. Serialized verbatim at the top of each report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    pub m: usize,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub t_lo: Option<usize>,
    pub t_hi: Option<usize>,
    pub convention: ConventionArg,
    pub method: Option<MethodArg>,
    pub k: Option<usize>,
    pub scalar: Scalar,
    pub tolerance: f64,
    pub format: Format,
    pub out: Option<String>,
    pub seed: u64,
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanConfig {
    pub task: ScanTask,
    pub n_min: usize,
    pub n_max: usize,
    pub step: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let o = &cli.opts;
        let command = match cli.command {
            Command::Symrank => "symrank",
            Command::Embed => "embed",
            Command::Theta => "theta",
            Command::Kwise => "kwise",
            Command::Interp => "interp",
            Command::Scan(_) => "scan",
            Command::Verify(_) => "verify",
        };
        let m = o.m.unwrap_or(2);
        if m < 2 {
            return Err(CliError::usage(format!("--m must be at least 2, got {m}")));
        }
        if !(o.tol.is_finite() && o.tol > 0.0) {
            return Err(CliError::usage(format!("--tol must be positive, got {}", o.tol)));
        }
        if o.d.is_some() && (o.t_lo.is_some() || o.t_hi.is_some()) {
            return Err(CliError::usage("give either --d or --t-lo/--t-hi, not both"));
        }
        let method = match (o.dense, o.reduced) {
            (true, _) => Some(MethodArg::Dense),
            (_, true) => Some(MethodArg::Reduced),
            _ => None,
        };
        let needs_n = !matches!(cli.command, Command::Scan(_) | Command::Verify(_));
        if needs_n && o.n.is_none() {
            return Err(CliError::usage(format!("{command} needs --n")));
        }
        if matches!(cli.command, Command::Symrank | Command::Embed) && o.d.is_none() {
            return Err(CliError::usage(format!("{command} needs --d")));
        }
        if matches!(cli.command, Command::Kwise) && o.k.is_none() {
            return Err(CliError::usage("kwise needs --k"));
        }
        if matches!(cli.command, Command::Theta) {
            if o.d.is_none() && o.t_lo.is_none() {
                return Err(CliError::usage("theta needs --d or --t-lo"));
            }
            if m > 2 && o.scalar == Scalar::Exact {
                return Err(CliError::usage(
                    "exact theta is available only for m = 2; pass --scalar float for m > 2",
                ));
            }
            if m > 2 && method == Some(MethodArg::Reduced) {
                return Err(CliError::usage("the reduced LP needs m = 2; use --dense"));
            }
        }
        let scan = match &cli.command {
            Command::Scan(s) => {
                if s.step == 0 {
                    return Err(CliError::usage("--step must be positive"));
                }
                let n_max = s.n_max.unwrap_or(match s.task {
                    ScanTask::Theta => 64,
                    ScanTask::Interp => 128,
                });
                Some(ScanConfig {
                    task: s.task,
                    n_min: s.n_min,
                    n_max,
                    step: s.step,
                })
            }
            _ => None,
        };
        let suite = match &cli.command {
            Command::Verify(v) => Some(v.suite),
            _ => None,
        };
        Ok(Self {
            command,
            m,
            n: o.n,
            d: o.d,
            t_lo: o.t_lo,
            t_hi: o.t_hi,
            convention: o.convention.unwrap_or(ConventionArg::Literal),
            method,
            k: o.k,
            scalar: o.scalar,
            tolerance: o.tol,
            format: o.format,
            out: o.out.as_ref().map(|p| p.display().to_string()),
            seed: o.seed,
            trials: o.trials,
            scan,
            suite,
        })
    }

    pub fn n(&self) -> usize {
        self.n.expect("validated")
    }
}
