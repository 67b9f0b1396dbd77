//! Size guards for the dense algorithms.
//!
//! Every dense routine checks its input size against a fixed limit. Setting
//! `CHARBOUND_GUARD_OVERRIDE` to an integer raises each limit to at least that
//! value; it never lowers one.

use crate::{Error, Result};

pub const OVERRIDE_ENV: &str = "CHARBOUND_GUARD_OVERRIDE";

/// Largest group order `m^n` a [`GroupSpec`](crate::group_core::GroupSpec) may have.
pub const GROUP_ORDER: u128 = 1 << 26;
/// Largest group order for which the full Gram matrix is built.
pub const DENSE_GRAM: u128 = 1 << 12;
/// Largest `rows + cols` accepted by the simplex solver.
pub const LP_SIZE: u128 = 4096;
/// Largest group order for the exact dense theta LP.
pub const THETA_DENSE_EXACT: u128 = 1024;
/// Largest group order for the floating-point dense theta LP (m > 2).
pub const THETA_DENSE_FLOAT: u128 = 729;
/// Largest `n` for the Krawtchouk-reduced theta LP.
pub const THETA_REDUCED_N: u128 = 4096;
/// Largest `n` for the dense k-wise LP.
pub const KWISE_N: u128 = 10;
/// Largest number of candidate supports `2^{m^n}` the minimal-support oracle enumerates.
pub const ORACLE_SUBSETS: u128 = 512;
/// Pair-times-dimension budget under which embeddings are checked on every pair.
pub const EMBED_EXHAUSTIVE: u128 = 1 << 24;

pub fn limit(default: u128) -> u128 {
    match std::env::var(OVERRIDE_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
    {
        Some(raised) => raised.max(default),
        None => default,
    }
}

pub fn check(what: &'static str, size: u128, default: u128) -> Result<()> {
    let limit = limit(default);
    if size > limit {
        return Err(Error::GuardExceeded { what, size, limit });
    }
    Ok(())
}
