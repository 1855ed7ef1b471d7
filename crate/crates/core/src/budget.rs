//! Work budgets, overridable through `LIELAB_BUDGET`.

pub const ENV_VAR: &str = "LIELAB_BUDGET";

/// Elements enumerated or states visited by exhaustive searches.
pub const ENUMERATION: u128 = 1_000_000;

/// Ambient dimension allowed for tower levels.
pub const TOWER_SIZE: usize = 200;

/// The integer in `LIELAB_BUDGET`, if set and well formed.
pub fn from_env() -> Option<u128> {
    std::env::var(ENV_VAR).ok()?.trim().parse().ok()
}

pub fn enumeration() -> u128 {
    from_env().unwrap_or(ENUMERATION)
}

pub fn tower_size() -> usize {
    from_env().and_then(|b| usize::try_from(b).ok()).unwrap_or(TOWER_SIZE)
}
