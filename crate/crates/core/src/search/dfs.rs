//! Exhaustive depth-first search for regular intersecting families of a
//! given size.
//!
//! Every member must meet every member already chosen. With target size `m`
//! every element must end at degree `delta = km/n`, which gives three sound
//! prunings:
//!
//! - no element may exceed `delta`;
//! - the remaining candidates must still cover every element's deficit;
//! - chosen plus remaining candidates must reach `m`.
//!
//! Each node picks the element whose remaining candidates have the least
//! slack over its deficit and branches on the candidates through it in
//! lexicographic order, excluding earlier siblings from later branches.
//! Each family is therefore reached exactly once.
//!
//! The first level is split across worker threads. The branch with the
//! smallest index that succeeds wins, so the answer does not depend on the
//! number of workers.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{SearchOptions, SearchResult, SearchScope, Strategy};
use crate::bounds::{ekr_bound, general_bound_u64};
use crate::construct::SizeCap;
use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::kset::KSet;
use crate::math::binomial;

/// Size to search for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Try sizes downward from the best upper bound; the first hit is a
    /// largest family.
    Auto,
    Size(u64),
}

pub const MAX_N: usize = 64;

/// Sizes tried by [`Target::Auto`]: multiples of `n / gcd(n, k)`, descending
/// from `general_bound(n, k)`, or from the EKR bound when that is zero so
/// that nonexistence is confirmed by the search itself.
pub fn auto_targets(n: usize, k: usize) -> Result<Vec<u64>> {
    let mut top = general_bound_u64(n, k)?;
    if top == 0 {
        top = ekr_bound(n, k)?
            .to_u64()
            .ok_or_else(|| Error::InvalidParameters("bound exceeds u64".into()))?;
    }
    let step = (n / n.gcd(&k)) as u64;
    let mut targets = Vec::new();
    let mut m = top - top % step;
    while m > 0 {
        targets.push(m);
        m -= step;
    }
    Ok(targets)
}

fn check(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and n >= 2k, got n = {n}, k = {k}"
        )));
    }
    if n > MAX_N {
        return Err(Error::LimitExceeded { n, limit: MAX_N });
    }
    SizeCap::current().check(binomial(n as i64, k as i64))
}

pub fn dfs_search(
    n: usize,
    k: usize,
    target: Target,
    options: &SearchOptions,
) -> Result<SearchResult> {
    let started = Instant::now();
    check(n, k)?;
    let targets = match target {
        Target::Auto => auto_targets(n, k)?,
        Target::Size(m) => {
            if m == 0 || !(k as u64 * m).is_multiple_of(n as u64) {
                return Err(Error::InvalidParameters(format!(
                    "target {m} needs n = {n} to divide k * target = {}",
                    k as u64 * m
                )));
            }
            vec![m]
        }
    };
    let deadline = options.time_limit.map(|t| started + t);
    let mut cands: Vec<u64> = (0..n)
        .combinations(k)
        .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    if options.seed != 0 {
        cands.shuffle(&mut ChaCha8Rng::seed_from_u64(options.seed));
    }

    let pool = match options.threads {
        Some(t) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?,
        ),
        None => None,
    };

    let mut nodes = 0u64;
    let mut tried = Vec::new();
    let mut found = None;
    let mut timed_out = false;
    for &m in &targets {
        tried.push(m);
        let run = || run_target(n, k as u64, m, &cands, deadline);
        let (outcome, spent) = match &pool {
            Some(p) => p.install(run),
            None => run(),
        };
        nodes += spent;
        match outcome {
            Outcome::Found(sets) => {
                found = Some(sets);
                break;
            }
            Outcome::NotFound => {}
            Outcome::TimedOut(partial) => {
                found = partial;
                timed_out = true;
                break;
            }
        }
    }

    let family = found
        .map(|sets| KSetFamily::from_ksets(n, k, sets.into_iter().map(to_kset).collect()))
        .transpose()?;
    // A hit for an explicit size says nothing about larger sizes.
    let exhaustive = !timed_out && (family.is_none() || target == Target::Auto);
    let mut result = SearchResult::new(
        family,
        Strategy::Dfs,
        SearchScope::AllFamilies,
        exhaustive,
        timed_out,
        options.seed,
        started.elapsed(),
        nodes,
    );
    result.targets_tried = tried;
    Ok(result)
}

fn to_kset(mask: u64) -> KSet {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

enum Outcome {
    Found(Vec<u64>),
    NotFound,
    TimedOut(Option<Vec<u64>>),
}

enum Branch {
    Found(Vec<u64>),
    Exhausted,
    Skipped,
    TimedOut,
}

fn run_target(
    n: usize,
    k: u64,
    m: u64,
    cands: &[u64],
    deadline: Option<Instant>,
) -> (Outcome, u64) {
    let delta = (k * m / n as u64) as u32;
    let winner = AtomicUsize::new(usize::MAX);
    let stop = AtomicBool::new(false);
    let nodes = AtomicU64::new(0);
    // every element is alike at the root, so branch on element 1
    let through_first: Vec<usize> = (0..cands.len()).filter(|&i| cands[i] & 1 != 0).collect();
    let branches: Vec<Branch> = (0..through_first.len())
        .into_par_iter()
        .map(|b| {
            if winner.load(Ordering::Relaxed) < b {
                return Branch::Skipped;
            }
            let mut walk = Walk {
                n,
                m: m as usize,
                delta,
                deadline,
                stop: &stop,
                winner: &winner,
                branch: b,
                nodes: 0,
            };
            let first = cands[through_first[b]];
            let excluded = &through_first[..=b];
            let mut deg = [0u32; MAX_N];
            let full = walk.add(&mut deg, first);
            let rest: Vec<u64> = cands
                .iter()
                .enumerate()
                .filter(|(i, &s)| !excluded.contains(i) && s & first != 0 && s & full == 0)
                .map(|(_, &s)| s)
                .collect();
            let mut chosen = vec![first];
            let step = walk.go(&mut chosen, &mut deg, rest);
            nodes.fetch_add(walk.nodes, Ordering::Relaxed);
            match step {
                Step::Found => {
                    winner.fetch_min(b, Ordering::Relaxed);
                    Branch::Found(chosen)
                }
                Step::NotFound => Branch::Exhausted,
                Step::Abort if stop.load(Ordering::Relaxed) => Branch::TimedOut,
                Step::Abort => Branch::Skipped,
            }
        })
        .collect();

    let mut incomplete = false;
    let mut outcome = Outcome::NotFound;
    for b in branches {
        match b {
            Branch::Found(sets) if incomplete => {
                outcome = Outcome::TimedOut(Some(sets));
                break;
            }
            Branch::Found(sets) => {
                outcome = Outcome::Found(sets);
                break;
            }
            Branch::Exhausted => {}
            Branch::Skipped | Branch::TimedOut => incomplete = true,
        }
    }
    if let (Outcome::NotFound, true) = (&outcome, incomplete) {
        outcome = Outcome::TimedOut(None);
    }
    (outcome, nodes.into_inner())
}

enum Step {
    Found,
    NotFound,
    Abort,
}

struct Walk<'a> {
    n: usize,
    m: usize,
    delta: u32,
    deadline: Option<Instant>,
    stop: &'a AtomicBool,
    winner: &'a AtomicUsize,
    branch: usize,
    nodes: u64,
}

impl Walk<'_> {
    /// Adds `set` to the degrees and returns the mask of saturated elements.
    fn add(&self, deg: &mut [u32; MAX_N], set: u64) -> u64 {
        let mut full = 0u64;
        for (x, d) in deg.iter_mut().enumerate().take(self.n) {
            *d += (set >> x & 1) as u32;
            if *d == self.delta {
                full |= 1 << x;
            }
        }
        full
    }

    fn remove(&self, deg: &mut [u32; MAX_N], set: u64) {
        for (x, d) in deg.iter_mut().enumerate().take(self.n) {
            *d -= (set >> x & 1) as u32;
        }
    }

    fn should_abort(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed) || self.winner.load(Ordering::Relaxed) < self.branch
    }

    fn go(&mut self, chosen: &mut Vec<u64>, deg: &mut [u32; MAX_N], mut cand: Vec<u64>) -> Step {
        if self.should_abort() {
            return Step::Abort;
        }
        if chosen.len() == self.m {
            return Step::Found;
        }
        if chosen.len() + cand.len() < self.m {
            return Step::NotFound;
        }
        let mut cover = [0u32; MAX_N];
        for &s in &cand {
            for (x, c) in cover.iter_mut().enumerate().take(self.n) {
                *c += (s >> x & 1) as u32;
            }
        }
        // most constrained unsaturated element
        let mut pick = None;
        for x in 0..self.n {
            let deficit = self.delta - deg[x];
            if deficit == 0 {
                continue;
            }
            if cover[x] < deficit {
                return Step::NotFound;
            }
            let slack = cover[x] - deficit;
            if pick.is_none_or(|(_, best)| slack < best) {
                pick = Some((x, slack));
            }
        }
        let Some((x, _)) = pick else {
            return Step::NotFound;
        };
        let bit = 1u64 << x;
        let mut remaining = cover[x];
        let deficit = self.delta - deg[x];
        while remaining >= deficit {
            let Some(pos) = cand.iter().position(|&s| s & bit != 0) else {
                break;
            };
            let c = cand.remove(pos);
            remaining -= 1;
            if chosen.len() + 1 + cand.len() < self.m {
                break;
            }
            let full = self.add(deg, c);
            let next: Vec<u64> = cand
                .iter()
                .copied()
                .filter(|&s| s & c != 0 && s & full == 0)
                .collect();
            chosen.push(c);
            match self.go(chosen, deg, next) {
                Step::Found => return Step::Found,
                Step::Abort => return Step::Abort,
                Step::NotFound => {}
            }
            chosen.pop();
            self.remove(deg, c);
        }
        Step::NotFound
    }
}

/// Convenience for callers that only want a bounded run.
pub fn dfs_search_with_limit(
    n: usize,
    k: usize,
    target: Target,
    limit: Duration,
) -> Result<SearchResult> {
    let options = SearchOptions {
        time_limit: Some(limit),
        ..SearchOptions::default()
    };
    dfs_search(n, k, target, &options)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_target_lists() {
        assert_eq!(auto_targets(6, 3).unwrap(), vec![10, 8, 6, 4, 2]);
        assert_eq!(auto_targets(7, 3).unwrap(), vec![7]);
        assert_eq!(auto_targets(8, 3).unwrap(), vec![16, 8]);
        assert_eq!(auto_targets(9, 4).unwrap(), vec![36, 27, 18, 9]);
    }

    #[test]
    fn six_three() {
        let r = dfs_search(6, 3, Target::Auto, &SearchOptions::default()).unwrap();
        assert_eq!((r.size, r.delta, r.exhaustive), (10, Some(5), true));
        assert!(r.family.unwrap().is_intersecting());
    }

    #[test]
    fn seven_three() {
        let r = dfs_search(7, 3, Target::Size(7), &SearchOptions::default()).unwrap();
        assert_eq!((r.size, r.delta), (7, Some(3)));
        assert!(!r.exhaustive);
        let r = dfs_search(7, 3, Target::Size(14), &SearchOptions::default()).unwrap();
        assert_eq!((r.size, r.exhaustive), (0, true));
        assert!(r.family.is_none());
    }

    #[test]
    fn worker_count_does_not_change_the_answer() {
        let one = SearchOptions {
            threads: Some(1),
            ..SearchOptions::default()
        };
        let four = SearchOptions {
            threads: Some(4),
            ..SearchOptions::default()
        };
        for (n, k, m) in [(7, 3, 7), (6, 3, 10), (9, 3, 6)] {
            let a = dfs_search(n, k, Target::Size(m), &one).unwrap();
            let b = dfs_search(n, k, Target::Size(m), &four).unwrap();
            assert_eq!(a.family, b.family, "({n},{k},{m})");
        }
    }

    #[test]
    fn bad_targets() {
        let o = SearchOptions::default();
        assert_eq!(
            dfs_search(7, 3, Target::Size(5), &o).unwrap_err().case(),
            "InvalidParameters"
        );
        assert_eq!(
            dfs_search(7, 3, Target::Size(0), &o).unwrap_err().case(),
            "InvalidParameters"
        );
        assert_eq!(
            dfs_search(65, 3, Target::Auto, &o).unwrap_err(),
            Error::LimitExceeded { n: 65, limit: 64 }
        );
    }

    #[test]
    fn time_limit_gives_up_cleanly() {
        let r = dfs_search_with_limit(12, 4, Target::Size(33), Duration::ZERO).unwrap();
        assert!(r.timed_out);
        assert!(!r.exhaustive);
    }
}
