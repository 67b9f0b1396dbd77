//! Grid scans over n.

use charbound::group_core::binary_entropy;
use charbound::interp::{rate_report, line_offset, LINE_RATE};
use charbound::ratlp::log2_rational;
use charbound::theta::{theta, GraphParams, Method};
use charbound::cayley::Convention;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::commands::q;
use crate::config::{RunConfig, ScanTask};
use crate::error::CliError;
use crate::report::{Report, Table};

/// Slope of the comparison line `0.19·n`.
pub const SAMORODNITSKY_RATE: f64 = 0.19;

pub const THETA_COLUMNS: [&str; 14] = [
    "n",
    "d",
    "theta",
    "log2_theta",
    "complement_lower",
    "log2_complement_lower",
    "paper_lower",
    "samorodnitsky",
    "entropy_line",
    "symork_cap",
    "above_lower_line",
    "below_symork_cap",
    "rate",
    "certificate_ok",
];

pub const INTERP_COLUMNS: [&str; 11] = [
    "n",
    "k",
    "bound",
    "log2_bound",
    "cap",
    "log2_cap",
    "cap_holds",
    "eps_emp",
    "log2_theta_upper",
    "line_holds",
    "chain_rate_holds",
];

#[derive(Debug, Clone, Serialize)]
pub struct ThetaRow {
    pub n: usize,
    pub d: usize,
    pub theta: String,
    pub log2_theta: f64,
    pub complement_lower: String,
    pub log2_complement_lower: f64,
    pub paper_lower: f64,
    pub samorodnitsky: f64,
    pub entropy_line: f64,
    pub symork_cap: f64,
    pub above_lower_line: bool,
    pub below_symork_cap: bool,
    /// `log2_complement_lower / n`.
    pub rate: f64,
    pub certificate_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InterpRow {
    pub n: usize,
    pub k: usize,
    pub bound: String,
    pub log2_bound: f64,
    pub cap: String,
    pub log2_cap: f64,
    pub cap_holds: bool,
    pub eps_emp: f64,
    pub log2_theta_upper: f64,
    pub line_holds: bool,
    pub chain_rate_holds: bool,
}

/// Row for `H_2^n(n/2)` read literally: θ(G) from the reduced LP, and the
/// complement bound `2^n/θ(G)` against the comparison lines.
pub fn theta_row(n: usize) -> Result<ThetaRow, CliError> {
    if n < 2 {
        return Err(CliError::usage(format!("theta scan needs n >= 2, got {n}")));
    }
    let d = n / 2;
    let graph = GraphParams {
        convention: Convention::Literal(d),
        ..GraphParams::band(2, n, d, n)?
    };
    let r = theta(&graph, Method::Reduced)?;
    let lower = r.complement_lower.clone().expect("reduced runs are exact");
    let log2_lower = log2_rational(&lower);
    let nf = n as f64;
    let paper_lower = LINE_RATE * nf - line_offset();
    let cap = nf / 2.0;
    Ok(ThetaRow {
        n,
        d,
        theta: q(r.theta.exact().expect("exact")),
        log2_theta: r.log2_theta,
        complement_lower: q(&lower),
        log2_complement_lower: log2_lower,
        paper_lower,
        samorodnitsky: SAMORODNITSKY_RATE * nf,
        entropy_line: (1.0 - binary_entropy(0.25)?) * nf,
        symork_cap: cap,
        above_lower_line: log2_lower >= paper_lower,
        below_symork_cap: log2_lower <= cap,
        rate: log2_lower / nf,
        certificate_ok: r.certificate_ok,
    })
}

pub fn interp_row(n: usize) -> Result<InterpRow, CliError> {
    let r = rate_report(n)?;
    Ok(InterpRow {
        n,
        k: r.k,
        bound: q(&r.bound),
        log2_bound: log2_rational(&r.bound),
        log2_cap: log2_rational(&r.paper_cap),
        cap: q(&r.paper_cap),
        cap_holds: r.cap_holds,
        eps_emp: r.eps_emp,
        log2_theta_upper: r.log2_theta_upper,
        line_holds: r.line_holds,
        chain_rate_holds: r.chain_rate_holds,
    })
}

fn grid(n_min: usize, n_max: usize, step: usize) -> Vec<usize> {
    if n_min > n_max {
        return Vec::new();
    }
    (n_min..=n_max).step_by(step).collect()
}

fn table(columns: &[&str], rows: &[Value]) -> Table {
    let cell = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    Table {
        headers: columns.iter().map(|c| c.to_string()).collect(),
        rows: rows
            .iter()
            .map(|r| columns.iter().map(|c| cell(&r[*c])).collect())
            .collect(),
    }
}

pub fn scan(cfg: &RunConfig) -> Result<Report, CliError> {
    let s = cfg.scan.as_ref().expect("validated");
    let ns = grid(s.n_min, s.n_max, s.step);
    let (columns, rows, ok): (&[&str], Vec<Value>, bool) = match s.task {
        ScanTask::Theta => {
            let rows = ns.par_iter().map(|&n| theta_row(n)).collect::<Result<Vec<_>, _>>()?;
            let ok = rows.iter().all(|r| r.certificate_ok);
            (&THETA_COLUMNS, to_values(&rows), ok)
        }
        ScanTask::Interp => {
            let rows = ns.par_iter().map(|&n| interp_row(n)).collect::<Result<Vec<_>, _>>()?;
            let ok = rows.iter().all(|r| r.cap_holds);
            (&INTERP_COLUMNS, to_values(&rows), ok)
        }
    };
    #[derive(Serialize)]
    struct Out<'a> {
        columns: &'a [&'a str],
        rows: &'a [Value],
    }
    let t = table(columns, &rows);
    Ok(Report::new(cfg, Out { columns, rows: &rows }, ok).with_table(t))
}

fn to_values<T: Serialize>(rows: &[T]) -> Vec<Value> {
    rows.iter()
        .map(|r| serde_json::to_value(r).expect("row serializes"))
        .collect()
}
