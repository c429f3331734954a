//! Degree-balanced `(k-1)`-uniform families on `[2k-1]` and the fold that
//! turns them into intersecting `k`-uniform families on `[2k]`.
//!
//! A family `Q` on `[2k-1]` with prescribed degrees is built in stages:
//!
//! 1. take every `(k-1)`-set through the top element `2k-1`, except the
//!    listed exception sets;
//! 2. greedily add sets from the layer `C([2k-2], k-1)` in colex order until
//!    the target size is reached, never letting a degree exceed the ceiling
//!    of the layer average;
//! 3. balance the layer with `(g,h)`-replacements (swap `g` for `h` in one
//!    set) until its degrees differ by at most one;
//! 4. relabel `[2k-2]` so that the layer degrees line up with what the
//!    target profile still needs;
//! 5. move the surplus of the top element (and any other surplus) onto
//!    deficient elements with further replacements until the profile is
//!    exact.
//!
//! Every replacement swaps a set for one not yet present, so `Q` stays a
//! set family throughout.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::kset::KSet;
use crate::math::binomial_u128;

/// Target for [`balanced_half_family`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfFamilySpec {
    pub k: usize,
    /// `(k-1)`-subsets of `[2k-1]` through `2k-1` that must not appear.
    pub exceptions: Vec<KSet>,
    /// Desired degree of each element of `[2k-1]` (index 0 is element 1).
    pub target_profile: Vec<u64>,
}

/// Bookkeeping from a balancing run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BalanceTrace {
    /// `sum deg^2` over `[2k-2]` for the layer, before the first and after
    /// each layer replacement.
    pub layer_energy: Vec<u64>,
    /// Sets added by the greedy fill.
    pub greedy_fill: usize,
    /// `relabel[x - 1]` is the new name of layer element `x`.
    pub relabel: Vec<usize>,
    /// Replacements spent matching the final profile.
    pub profile_replacements: usize,
}

const MAX_K: usize = 32;

impl HalfFamilySpec {
    pub fn new(k: usize, exceptions: Vec<KSet>, target_profile: Vec<u64>) -> Result<Self> {
        let spec = HalfFamilySpec {
            k,
            exceptions,
            target_profile,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Exceptions `A_1 = [k+1, 2k-1]`, `A_2 = [1, k/2] ∪ [3k/2+1, 2k-1]`,
    /// `A_3 = [k/2+1, k] ∪ [3k/2+1, 2k-1]`, size `(C(2k-1,k-1) - 3)/2`, and
    /// degrees `d+1` on `[3k/2]`, `d` elsewhere, `d = (C(2k-2,k-2) - 3)/2`.
    /// Requires even `k >= 4`.
    pub fn three_exceptions(k: usize) -> Result<Self> {
        if k < 4 || !k.is_multiple_of(2) || k > MAX_K {
            return Err(Error::InvalidParameters(format!(
                "three-exception layout needs even 4 <= k <= {MAX_K}, got {k}"
            )));
        }
        let top = 2 * k - 1;
        let h = k / 2;
        let tail = (3 * h + 1)..=top;
        let exceptions = vec![
            ((k + 1)..=top).collect::<KSet>(),
            (1..=h).chain(tail.clone()).collect(),
            ((h + 1)..=k).chain(tail).collect(),
        ];
        let c = binomial_u128((2 * k - 2) as u64, (k - 2) as u64).expect("k <= 32");
        if c.is_multiple_of(2) {
            return Err(Error::ProfileInfeasible(format!(
                "C({}, {}) = {c} is even, so (C - 3)/2 is not an integer",
                2 * k - 2,
                k - 2
            )));
        }
        let d = ((c - 3) / 2) as u64;
        let profile = (1..=top)
            .map(|x| if x <= 3 * h { d + 1 } else { d })
            .collect();
        Self::new(k, exceptions, profile)
    }

    /// No exceptions, size `C(2k-1,k-1)/2` and a constant profile. Needs that
    /// size and its degree `size (k-1)/(2k-1)` to be integers.
    pub fn uniform(k: usize) -> Result<Self> {
        if !(2..=MAX_K).contains(&k) {
            return Err(Error::InvalidParameters(format!(
                "need 2 <= k <= {MAX_K}, got {k}"
            )));
        }
        let total = binomial_u128((2 * k - 1) as u64, (k - 1) as u64).expect("k <= 32");
        if !total.is_multiple_of(2) {
            return Err(Error::ProfileInfeasible(format!(
                "C({}, {}) = {total} is odd",
                2 * k - 1,
                k - 1
            )));
        }
        let size = total / 2;
        let deg_total = size * (k as u128 - 1);
        if !deg_total.is_multiple_of(2 * k as u128 - 1) {
            return Err(Error::ProfileInfeasible(format!(
                "degree {deg_total}/{} is not an integer",
                2 * k - 1
            )));
        }
        let d = (deg_total / (2 * k as u128 - 1)) as u64;
        Self::new(k, Vec::new(), vec![d; 2 * k - 1])
    }

    pub fn ground(&self) -> usize {
        2 * self.k - 1
    }

    /// `sum(target_profile) / (k - 1)`.
    pub fn target_size(&self) -> u64 {
        self.target_profile.iter().sum::<u64>() / (self.k as u64 - 1)
    }

    fn validate(&self) -> Result<()> {
        let k = self.k;
        if !(2..=MAX_K).contains(&k) {
            return Err(Error::InvalidParameters(format!(
                "need 2 <= k <= {MAX_K}, got {k}"
            )));
        }
        let top = self.ground();
        if self.target_profile.len() != top {
            return Err(Error::DimensionMismatch {
                expected: top,
                actual: self.target_profile.len(),
            });
        }
        for e in &self.exceptions {
            let in_range = e.max_element().is_some_and(|x| x <= top);
            if e.len() != k - 1 || !in_range || !e.contains(top) {
                return Err(Error::InvalidParameters(format!(
                    "exception {e:?} must be a {}-subset of [{top}] containing {top}",
                    k - 1
                )));
            }
        }
        let sum: u64 = self.target_profile.iter().sum();
        if !sum.is_multiple_of(k as u64 - 1) {
            return Err(Error::ProfileInfeasible(format!(
                "profile sum {sum} is not a multiple of k - 1 = {}",
                k - 1
            )));
        }
        Ok(())
    }
}

fn mask(s: &KSet) -> u64 {
    s.elements().fold(0u64, |m, x| m | 1 << (x - 1))
}

fn unmask(m: u64) -> KSet {
    (0..64).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect()
}

struct Degrees(Vec<i64>);

impl Degrees {
    fn of(sets: &[u64], ground: usize) -> Self {
        let mut d = vec![0i64; ground];
        for &s in sets {
            for (x, slot) in d.iter_mut().enumerate() {
                *slot += (s >> x & 1) as i64;
            }
        }
        Degrees(d)
    }

    fn energy(&self, upto: usize) -> u64 {
        self.0[..upto].iter().map(|&d| (d * d) as u64).sum()
    }
}

pub fn balanced_half_family(spec: &HalfFamilySpec) -> Result<KSetFamily> {
    balanced_half_family_traced(spec).map(|(q, _)| q)
}

pub fn balanced_half_family_traced(spec: &HalfFamilySpec) -> Result<(KSetFamily, BalanceTrace)> {
    spec.validate()?;
    let k = spec.k;
    let top = spec.ground();
    let layer_ground = top - 1;
    let top_bit = 1u64 << (top - 1);
    let target_size = spec.target_size() as usize;
    let exceptions: HashSet<u64> = spec.exceptions.iter().map(mask).collect();
    let mut trace = BalanceTrace::default();

    // Stage 1: everything through the top element.
    let upper: Vec<u64> = (1..top)
        .combinations(k - 2)
        .map(|c| c.iter().fold(top_bit, |m, &x| m | 1 << (x - 1)))
        .filter(|m| !exceptions.contains(m))
        .collect();
    if upper.len() > target_size {
        return Err(Error::ProfileInfeasible(format!(
            "{} sets through {top} already exceed the target size {target_size}",
            upper.len()
        )));
    }
    let needed = target_size - upper.len();

    // Stage 2: greedy colex fill of the layer.
    let mut candidates: Vec<u64> = (0..layer_ground)
        .combinations(k - 1)
        .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    candidates.sort_unstable();
    if candidates.len() < needed {
        return Err(Error::ProfileInfeasible(format!(
            "layer has {} sets, {needed} needed",
            candidates.len()
        )));
    }
    let cap = (needed * (k - 1)).div_ceil(layer_ground) as i64;
    let mut layer: Vec<u64> = Vec::with_capacity(needed);
    let mut chosen: HashSet<u64> = HashSet::new();
    let mut layer_deg = vec![0i64; layer_ground];
    for &c in &candidates {
        if layer.len() == needed {
            break;
        }
        if (0..layer_ground).any(|x| c >> x & 1 == 1 && layer_deg[x] >= cap) {
            continue;
        }
        for (x, d) in layer_deg.iter_mut().enumerate() {
            *d += (c >> x & 1) as i64;
        }
        layer.push(c);
        chosen.insert(c);
    }
    trace.greedy_fill = layer.len();
    for &c in &candidates {
        if layer.len() == needed {
            break;
        }
        if chosen.insert(c) {
            layer.push(c);
        }
    }

    // Stage 3: (g,h)-replacements inside the layer.
    let mut deg = Degrees::of(&layer, layer_ground);
    trace.layer_energy.push(deg.energy(layer_ground));
    loop {
        let (g, &dg) = deg
            .0
            .iter()
            .enumerate()
            .max_by_key(|&(i, d)| (*d, std::cmp::Reverse(i)))
            .unwrap();
        let (h, &dh) = deg
            .0
            .iter()
            .enumerate()
            .min_by_key(|&(i, d)| (*d, i))
            .unwrap();
        if dg - dh < 2 {
            break;
        }
        let (gb, hb) = (1u64 << g, 1u64 << h);
        let slot = layer
            .iter()
            .position(|&a| a & gb != 0 && a & hb == 0 && !chosen.contains(&(a ^ gb ^ hb)))
            .ok_or_else(|| {
                Error::NoReplacementFound(format!("layer ({}, {}) replacement", g + 1, h + 1))
            })?;
        let old = layer[slot];
        let new = old ^ gb ^ hb;
        chosen.remove(&old);
        chosen.insert(new);
        layer[slot] = new;
        deg.0[g] -= 1;
        deg.0[h] += 1;
        trace.layer_energy.push(deg.energy(layer_ground));
    }

    // Stage 4: relabel the layer to match the remaining need.
    let upper_deg = Degrees::of(&upper, top);
    let need: Vec<i64> = (0..layer_ground)
        .map(|x| spec.target_profile[x] as i64 - upper_deg.0[x])
        .collect();
    let mut by_degree: Vec<usize> = (0..layer_ground).collect();
    by_degree.sort_by_key(|&x| (deg.0[x], x));
    let mut by_need: Vec<usize> = (0..layer_ground).collect();
    by_need.sort_by_key(|&x| (need[x], x));
    let mut relabel = vec![0usize; layer_ground];
    for (&from, &to) in by_degree.iter().zip(&by_need) {
        relabel[from] = to;
    }
    trace.relabel = relabel.iter().map(|&x| x + 1).collect();
    let layer: Vec<u64> = layer
        .iter()
        .map(|&a| {
            (0..layer_ground)
                .filter(|&x| a >> x & 1 == 1)
                .fold(0u64, |m, x| m | 1 << relabel[x])
        })
        .collect();

    // Stage 5: exact profile.
    let mut family: Vec<u64> = upper;
    family.extend(layer);
    let mut present: HashSet<u64> = family.iter().copied().collect();
    let mut current = Degrees::of(&family, top).0;
    let target: Vec<i64> = spec.target_profile.iter().map(|&d| d as i64).collect();
    loop {
        let surplus: Vec<usize> = {
            let mut s: Vec<usize> = (0..top).filter(|&x| current[x] > target[x]).collect();
            // the top element first, then largest surplus
            s.sort_by_key(|&x| (x != top - 1, std::cmp::Reverse(current[x] - target[x]), x));
            s
        };
        if surplus.is_empty() {
            break;
        }
        let mut deficit: Vec<usize> = (0..top).filter(|&x| current[x] < target[x]).collect();
        deficit.sort_by_key(|&x| (std::cmp::Reverse(target[x] - current[x]), x));
        let found = surplus.iter().find_map(|&g| {
            deficit.iter().find_map(|&h| {
                let (gb, hb) = (1u64 << g, 1u64 << h);
                family
                    .iter()
                    .position(|&a| {
                        let b = a ^ gb ^ hb;
                        a & gb != 0
                            && a & hb == 0
                            && !present.contains(&b)
                            && !exceptions.contains(&b)
                    })
                    .map(|slot| (slot, g, h))
            })
        });
        let Some((slot, g, h)) = found else {
            return Err(Error::NoReplacementFound(format!(
                "no replacement moves degree from {:?} to {:?}",
                surplus.iter().map(|x| x + 1).collect::<Vec<_>>(),
                deficit.iter().map(|x| x + 1).collect::<Vec<_>>()
            )));
        };
        let old = family[slot];
        let new = old ^ (1 << g) ^ (1 << h);
        present.remove(&old);
        present.insert(new);
        family[slot] = new;
        current[g] -= 1;
        current[h] += 1;
        trace.profile_replacements += 1;
    }

    let sets = family.into_iter().map(unmask).collect();
    let q = KSetFamily::from_ksets(top, k - 1, sets)?;
    Ok((q, trace))
}

/// `{Q ∪ {2k}} ∪ (C([2k-1], k) \ {[2k-1] \ Q})`, minus `removals`.
///
/// The result is always intersecting: two sets through `2k` meet there,
/// two `k`-subsets of `[2k-1]` must meet, and a set `Q ∪ {2k}` can only miss
/// `[2k-1] \ Q`, which was excluded.
pub fn fold_to_intersecting(q: &KSetFamily, k: usize, removals: &[KSet]) -> Result<KSetFamily> {
    if k < 2 || q.n() != 2 * k - 1 || q.k() != k - 1 {
        return Err(Error::InvalidParameters(format!(
            "expected a {}-uniform family on [{}], got k = {} on [{}]",
            k.saturating_sub(1),
            2 * k.max(1) - 1,
            q.k(),
            q.n()
        )));
    }
    let top = 2 * k - 1;
    let n = 2 * k;
    let excluded: HashSet<KSet> = q.iter().map(|s| s.complement(top)).collect();
    let mut sets: Vec<KSet> = q
        .iter()
        .map(|s| {
            let mut t = *s;
            t.insert(n);
            t
        })
        .collect();
    sets.extend(
        (1..=top)
            .combinations(k)
            .map(KSet::from_elements)
            .filter(|s| !excluded.contains(s)),
    );
    let mut present: HashSet<KSet> = sets.iter().copied().collect();
    for r in removals {
        if !present.remove(r) {
            return Err(Error::RemovalNotPresent(r.to_vec()));
        }
    }
    sets.retain(|s| present.contains(s));
    KSetFamily::from_ksets(n, k, sets)
}
