//! Searching for large regular intersecting families.

mod certificate;
mod clique;
mod cyclic;
mod dfs;

use std::fmt;
use std::time::Duration;

use crate::family::KSetFamily;

pub use certificate::{verify_certificate, verify_family, CertificateReport, Check};
pub use cyclic::{cyclic_orbit_search, cyclic_orbits, Orbit};
pub use dfs::{auto_targets, dfs_search, dfs_search_with_limit, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    CyclicOrbit,
    Dfs,
}

/// What an exhaustive result is exhaustive over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchScope {
    /// Unions of orbits under the cyclic shift.
    CyclicFamilies,
    AllFamilies,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::CyclicOrbit => "cyclic",
            Strategy::Dfs => "dfs",
        })
    }
}

impl fmt::Display for SearchScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchScope::CyclicFamilies => "cyclic families",
            SearchScope::AllFamilies => "all families",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub time_limit: Option<Duration>,
    /// Recorded with the result. Both strategies are deterministic.
    pub seed: u64,
    /// Worker threads for the DFS; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Largest `n` accepted by the cyclic search.
    pub cyclic_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            time_limit: None,
            seed: 0,
            threads: None,
            cyclic_limit: 30,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub family: Option<KSetFamily>,
    pub size: usize,
    pub delta: Option<u64>,
    pub strategy: Strategy,
    pub scope: SearchScope,
    /// The whole of `scope` was explored: a found family is a largest one
    /// there, and an absent family means none exists there.
    pub exhaustive: bool,
    pub timed_out: bool,
    pub seed: u64,
    pub elapsed: Duration,
    pub explored_nodes: u64,
    /// Sizes the DFS attempted, in order.
    pub targets_tried: Vec<u64>,
}

impl SearchResult {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        family: Option<KSetFamily>,
        strategy: Strategy,
        scope: SearchScope,
        exhaustive: bool,
        timed_out: bool,
        seed: u64,
        elapsed: Duration,
        explored_nodes: u64,
    ) -> Self {
        let size = family.as_ref().map_or(0, KSetFamily::len);
        let delta = family.as_ref().and_then(|f| f.is_regular().ok().flatten());
        SearchResult {
            family,
            size,
            delta,
            strategy,
            scope,
            exhaustive,
            timed_out,
            seed,
            elapsed,
            explored_nodes,
            targets_tried: Vec::new(),
        }
    }

    /// Exhaustive over every family, not just a restricted class.
    pub fn is_optimal(&self) -> bool {
        self.exhaustive && self.scope == SearchScope::AllFamilies
    }
}
