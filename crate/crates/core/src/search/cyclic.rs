//! Families that are unions of orbits of `x -> x + 1 (mod n)`.
//!
//! The cyclic group acts transitively on `[n]`, so every union of whole
//! orbits is regular. The search keeps orbits that are intersecting on their
//! own, joins two of them when they cross-intersect, and takes a heaviest
//! clique with orbit sizes as weights.

use std::collections::HashSet;
use std::time::Instant;

use itertools::Itertools;

use super::clique::WeightedGraph;
use super::{SearchOptions, SearchResult, SearchScope, Strategy};
use crate::construct::SizeCap;
use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::kset::KSet;
use crate::math::binomial;

/// One orbit; `members[0]` is its lexicographically least set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<KSet>,
}

impl Orbit {
    pub fn representative(&self) -> &KSet {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn rotate(mask: u64, n: usize) -> u64 {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((mask << 1) | (mask >> (n - 1))) & full
}

fn to_kset(mask: u64) -> KSet {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

fn orbit_masks(n: usize, k: usize) -> Vec<Vec<u64>> {
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for combo in (0..n).combinations(k) {
        let start = combo.iter().fold(0u64, |m, &x| m | 1 << x);
        if seen.contains(&start) {
            continue;
        }
        let mut members = vec![start];
        let mut m = rotate(start, n);
        while m != start {
            members.push(m);
            m = rotate(m, n);
        }
        seen.extend(members.iter().copied());
        orbits.push(members);
    }
    orbits
}

/// All orbits of `k`-subsets of `[n]`, ordered by representative.
pub fn cyclic_orbits(n: usize, k: usize) -> Result<Vec<Orbit>> {
    check(n, k, 64)?;
    Ok(orbit_masks(n, k)
        .into_iter()
        .map(|ms| {
            let mut members: Vec<KSet> = ms.into_iter().map(to_kset).collect();
            members.sort();
            Orbit { members }
        })
        .collect())
}

fn check(n: usize, k: usize, limit: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and n >= 2k, got n = {n}, k = {k}"
        )));
    }
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    SizeCap::current().check(binomial(n as i64, k as i64))
}

fn cross_intersecting(a: &[u64], b: &[u64]) -> bool {
    // transitivity: one member of `a` against all of `b` suffices
    b.iter().all(|&y| a[0] & y != 0)
}

fn orbit_is_regular(members: &[u64], n: usize) -> bool {
    let mut deg = vec![0usize; n];
    for &m in members {
        for (x, d) in deg.iter_mut().enumerate() {
            *d += (m >> x & 1) as usize;
        }
    }
    deg.iter().all_equal()
}

pub fn cyclic_orbit_search(n: usize, k: usize, options: &SearchOptions) -> Result<SearchResult> {
    let started = Instant::now();
    check(n, k, options.cyclic_limit)?;
    let orbits: Vec<Vec<u64>> = orbit_masks(n, k)
        .into_iter()
        .filter(|o| cross_intersecting(o, o))
        .collect();
    for o in &orbits {
        if !orbit_is_regular(o, n) {
            return Err(Error::InvariantViolation(format!(
                "orbit of {:?} is not regular",
                to_kset(o[0])
            )));
        }
    }
    let m = orbits.len();
    let mut adjacent = vec![vec![false; m]; m];
    for (a, b) in (0..m).tuple_combinations() {
        let e = cross_intersecting(&orbits[a], &orbits[b]);
        adjacent[a][b] = e;
        adjacent[b][a] = e;
    }
    let weights = orbits.iter().map(|o| o.len() as u64).collect();
    let deadline = options.time_limit.map(|t| started + t);
    let clique = WeightedGraph::new(weights, adjacent).max_weight_clique(deadline);
    let sets: Vec<KSet> = clique
        .vertices
        .iter()
        .flat_map(|&v| orbits[v].iter().map(|&m| to_kset(m)))
        .collect();
    let family = if sets.is_empty() {
        None
    } else {
        Some(KSetFamily::from_ksets(n, k, sets)?)
    };
    Ok(SearchResult::new(
        family,
        Strategy::CyclicOrbit,
        SearchScope::CyclicFamilies,
        clique.complete,
        !clique.complete,
        options.seed,
        started.elapsed(),
        clique.nodes,
    ))
}
