use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_states`].
pub const MAX_STATES_ENV: &str = "DIRICHLET_MAX_STATES";

/// Caps on the exhaustive enumerations used as oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on `colors^n` states visited by brute-force precoloring counts.
    pub max_states: u128,
    /// Cap on the vertex count for connected-partition enumeration.
    pub max_partition_vertices: usize,
    /// Cap on the edge count for orientation enumeration.
    pub max_orientation_edges: usize,
    /// Cap on the edge count for spanning-tree enumeration.
    pub max_tree_edges: usize,
    /// Cap on the interior count for chamber adjacency.
    pub max_adjacency_interior: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_states: 100_000_000,
            max_partition_vertices: 10,
            max_orientation_edges: 20,
            max_tree_edges: 12,
            max_adjacency_interior: 6,
        }
    }
}

impl Limits {
    /// Defaults, with `max_states` taken from `DIRICHLET_MAX_STATES` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_STATES_ENV) {
            limits.max_states = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_STATES_ENV}={raw} is not an integer")))?;
        }
        Ok(limits)
    }

    pub(crate) fn check(what: &'static str, size: u128, cap: u128) -> Result<()> {
        if size > cap {
            Err(Error::InstanceTooLarge { what, size, cap })
        } else {
            Ok(())
        }
    }
}
