//! Size ceilings for the exponential-time solvers.
//!
//! Every ceiling can be overridden at once through the `SPECBOUNDS_MAX_N`
//! environment variable; overrides are clamped to the 64-vertex bitset width.

use crate::{Error, Result};

pub const ENV_MAX_N: &str = "SPECBOUNDS_MAX_N";

pub const INDEPENDENCE_LIMIT: usize = 40;
pub const CHROMATIC_LIMIT: usize = 30;
pub const SUBSET_LIMIT: usize = 24;
pub const PLANAR_LIMIT: usize = 10;

fn override_value() -> Option<usize> {
    std::env::var(ENV_MAX_N)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.min(crate::graph::MAX_VERTICES))
}

/// Effective ceiling for a solver whose built-in limit is `default`.
pub fn ceiling(default: usize) -> usize {
    override_value().unwrap_or(default)
}

pub(crate) fn check(what: &'static str, n: usize, default: usize) -> Result<()> {
    let limit = ceiling(default);
    if n > limit {
        return Err(Error::SizeLimit { what, n, limit });
    }
    Ok(())
}
