use std::fmt;

use charbound::Error;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Machine-readable failure: exit code, a short kind tag and the message.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            kind: "io",
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} error: {}", self.kind, self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::GuardExceeded { .. } => (EXIT_GUARD, "guard"),
            Error::LpStatus(_) => (EXIT_GUARD, "infeasible"),
            Error::InvalidParameter(_)
            | Error::IndexOutOfRange { .. }
            | Error::SpecMismatch { .. }
            | Error::DegreeTooHigh { .. } => (EXIT_USAGE, "invalid-parameter"),
            Error::Unsupported(_) => (EXIT_USAGE, "unsupported"),
            Error::NotPsd(_) | Error::NotADistribution(_) | Error::ZeroFunction => {
                (EXIT_VERIFY, "verification")
            }
        };
        Self {
            code,
            kind,
            message: e.to_string(),
        }
    }
}
