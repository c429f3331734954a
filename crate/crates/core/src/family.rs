//! Uniform set families and the predicates used to analyse them.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::kset::KSet;
use crate::math::binomial_u128;

/// A `k`-uniform family of distinct subsets of `[n]`, kept in lexicographic
/// order. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KSetFamily {
    n: usize,
    k: usize,
    sets: Vec<KSet>,
}

/// Number of members containing each element of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<u64>,
}

/// Normalised pair-intersection counts: `a[i]` is the number of ordered
/// pairs of members meeting in `k - i` elements, divided by `|F|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerDistribution {
    a: Vec<BigRational>,
    family_size: u64,
}

impl KSetFamily {
    /// Builds a family from element lists, checking sizes, ranges and
    /// duplicates, and sorting into canonical order.
    pub fn new<S: AsRef<[usize]>>(n: usize, k: usize, sets: &[S]) -> Result<Self> {
        check_params(n, k)?;
        let mut ksets = Vec::with_capacity(sets.len());
        for s in sets {
            let s = s.as_ref();
            if let Some(&x) = s.iter().find(|&&x| x == 0 || x > n) {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            let set = KSet::from_elements(s.iter().copied());
            if set.len() != k || s.len() != k {
                return Err(Error::WrongSetSize {
                    set: s.to_vec(),
                    expected: k,
                    actual: set.len(),
                });
            }
            ksets.push(set);
        }
        Self::from_ksets(n, k, ksets)
    }

    /// Same checks as [`KSetFamily::new`] for already-built bit sets.
    pub fn from_ksets(n: usize, k: usize, mut sets: Vec<KSet>) -> Result<Self> {
        check_params(n, k)?;
        for s in &sets {
            if let Some(x) = s.max_element().filter(|&x| x > n) {
                return Err(Error::ElementOutOfRange { element: x, n });
            }
            if s.len() != k {
                return Err(Error::WrongSetSize {
                    set: s.to_vec(),
                    expected: k,
                    actual: s.len(),
                });
            }
        }
        sets.sort_unstable();
        if let Some(w) = sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateSet(w[0].to_vec()));
        }
        Ok(KSetFamily { n, k, sets })
    }

    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::from_ksets(n, k, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[KSet] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, KSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &KSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(KSet::to_vec).collect()
    }

    /// Every two members share an element. Vacuously true for fewer than
    /// two members.
    pub fn is_intersecting(&self) -> bool {
        self.sets
            .iter()
            .enumerate()
            .all(|(i, a)| self.sets[i + 1..].iter().all(|b| a.intersects(b)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0u64; self.n];
        for s in &self.sets {
            for x in s.elements() {
                degrees[x - 1] += 1;
            }
        }
        DegreeProfile { degrees }
    }

    /// `Some(δ)` when every element has degree δ, `None` otherwise.
    pub fn is_regular(&self) -> Result<Option<u64>> {
        self.nonempty()?;
        let profile = self.degree_profile();
        let d = profile.degrees[0];
        Ok(profile.degrees.iter().all(|&x| x == d).then_some(d))
    }

    /// Maximal degree over minimal degree.
    pub fn irregularity_ratio(&self) -> Result<BigRational> {
        self.nonempty()?;
        let profile = self.degree_profile();
        let (x, &min) = profile
            .degrees
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| **d)
            .expect("n >= 1");
        if min == 0 {
            return Err(Error::ZeroMinDegree(x + 1));
        }
        Ok(BigRational::new(profile.max().into(), min.into()))
    }

    /// Number of members avoiding an element of maximal degree.
    pub fn diversity(&self) -> Result<u64> {
        self.nonempty()?;
        Ok(self.len() as u64 - self.degree_profile().max())
    }

    /// `Some(δ_s)` when every `s`-subset of `[n]` lies in exactly `δ_s`
    /// members.
    pub fn is_subset_regular(&self, s: usize) -> Result<Option<u64>> {
        if s == 0 || s > self.k {
            return Err(Error::InvalidS(format!(
                "s = {s} must lie in 1..={}",
                self.k
            )));
        }
        self.nonempty()?;
        let mut counts: HashMap<KSet, u64> = HashMap::new();
        for set in &self.sets {
            for sub in set.elements().combinations(s) {
                *counts.entry(KSet::from_elements(sub)).or_default() += 1;
            }
        }
        let total = binomial_u128(self.n as u64, s as u64);
        if total != Some(counts.len() as u128) {
            return Ok(None);
        }
        let mut values = counts.values();
        let first = *values.next().expect("nonempty family");
        Ok(values.all(|&c| c == first).then_some(first))
    }

    pub fn inner_distribution(&self) -> Result<InnerDistribution> {
        self.nonempty()?;
        let k = self.k;
        let mut pairs = vec![0u64; k + 1];
        pairs[0] = self.len() as u64;
        for (i, a) in self.sets.iter().enumerate() {
            for b in &self.sets[i + 1..] {
                pairs[k - a.intersection_size(b)] += 2;
            }
        }
        let size = self.len() as u64;
        Ok(InnerDistribution {
            a: pairs
                .into_iter()
                .map(|c| BigRational::new(c.into(), size.into()))
                .collect(),
            family_size: size,
        })
    }

    /// Entry `i` counts members meeting `probe` in exactly `k - i` elements.
    pub fn meet_profile(&self, probe: &KSet) -> Result<Vec<u64>> {
        if probe.len() != self.k {
            return Err(Error::WrongProbeSize {
                expected: self.k,
                actual: probe.len(),
            });
        }
        if let Some(x) = probe.max_element().filter(|&x| x > self.n) {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        let mut out = vec![0u64; self.k + 1];
        for s in &self.sets {
            out[self.k - probe.intersection_size(s)] += 1;
        }
        Ok(out)
    }

    /// `k / n` as an exact rational.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.k.into(), self.n.into())
    }

    fn nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyFamily)
        } else {
            Ok(())
        }
    }
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n > KSet::MAX_ELEMENT {
        return Err(Error::GroundSetTooLarge {
            n,
            max: KSet::MAX_ELEMENT,
        });
    }
    Ok(())
}

impl std::fmt::Debug for KSetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KSetFamily(n={}, k={}, ", self.n, self.k)?;
        f.debug_list().entries(&self.sets).finish()?;
        write!(f, ")")
    }
}

impl<'a> IntoIterator for &'a KSetFamily {
    type Item = &'a KSet;
    type IntoIter = std::slice::Iter<'a, KSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl DegreeProfile {
    /// Degree of element `x` (1-indexed).
    pub fn degree(&self, x: usize) -> u64 {
        self.degrees[x - 1]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.degrees
    }

    pub fn max(&self) -> u64 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min(&self) -> u64 {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.degrees.iter().sum()
    }
}

impl InnerDistribution {
    pub fn a(&self) -> &[BigRational] {
        &self.a
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.a[i]
    }

    /// `k + 1`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn family_size(&self) -> u64 {
        self.family_size
    }

    /// Builds a distribution from explicit entries, e.g. an LP witness.
    /// `family_size` is taken as the sum of the entries, rounded down.
    pub fn from_entries(a: Vec<BigRational>) -> Self {
        let total = a.iter().fold(BigRational::zero(), |acc, x| acc + x);
        let family_size = u64::try_from(total.to_integer()).unwrap_or(0);
        InnerDistribution { a, family_size }
    }

    /// Ordered pair count behind entry `i`, `|F| * a[i]`.
    pub fn pair_count(&self, i: usize) -> BigInt {
        (&self.a[i] * BigRational::from_integer(self.family_size.into())).to_integer()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use num_traits::One;

    pub fn fano() -> KSetFamily {
        let base = [1usize, 2, 4];
        let sets: Vec<Vec<usize>> = (0..7)
            .map(|s| base.iter().map(|&x| (x - 1 + s) % 7 + 1).collect())
            .collect();
        KSetFamily::new(7, 3, &sets).unwrap()
    }

    fn star() -> KSetFamily {
        let sets: Vec<Vec<usize>> = (2..=7)
            .tuple_combinations()
            .map(|(a, b)| vec![1, a, b])
            .collect();
        KSetFamily::new(7, 3, &sets).unwrap()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn make_family_checks() {
        let f = fano();
        assert_eq!(f.len(), 7);
        // every pair of lines meets in exactly one point
        for (i, a) in f.sets().iter().enumerate() {
            for b in &f.sets()[i + 1..] {
                assert_eq!(a.intersection_size(b), 1);
            }
        }
        assert_eq!(KSetFamily::new(4, 2, &[[1, 2]]).unwrap().len(), 1);
        assert_eq!(
            KSetFamily::new(4, 2, &[[1, 2], [1, 2]]),
            Err(Error::DuplicateSet(vec![1, 2]))
        );
        assert!(matches!(
            KSetFamily::new(4, 2, &[vec![1, 2, 3]]),
            Err(Error::WrongSetSize { .. })
        ));
        assert!(matches!(
            KSetFamily::new(4, 2, &[[1, 5]]),
            Err(Error::ElementOutOfRange { element: 5, .. })
        ));
        assert!(matches!(
            KSetFamily::new(4, 2, &[[1, 1]]),
            Err(Error::WrongSetSize { .. })
        ));
        // canonical order
        let g = KSetFamily::new(4, 2, &[[3, 4], [1, 3], [1, 2]]).unwrap();
        assert_eq!(g.to_lists(), vec![vec![1, 2], vec![1, 3], vec![3, 4]]);
    }

    #[test]
    fn intersecting() {
        assert!(fano().is_intersecting());
        assert!(!KSetFamily::new(4, 2, &[[1, 2], [3, 4]])
            .unwrap()
            .is_intersecting());
        let s = star();
        assert_eq!(s.len(), 15);
        assert!(s.is_intersecting());
        assert!(KSetFamily::empty(4, 2).unwrap().is_intersecting());
    }

    #[test]
    fn degrees_and_regularity() {
        assert_eq!(fano().degree_profile().as_slice(), &[3; 7]);
        assert_eq!(star().degree_profile().as_slice(), &[15, 5, 5, 5, 5, 5, 5]);
        assert_eq!(
            KSetFamily::empty(5, 2).unwrap().degree_profile().as_slice(),
            &[0; 5]
        );
        assert_eq!(fano().is_regular(), Ok(Some(3)));
        assert_eq!(star().is_regular(), Ok(None));
        assert_eq!(
            KSetFamily::empty(5, 2).unwrap().is_regular(),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn ratio_and_diversity() {
        assert_eq!(fano().irregularity_ratio().unwrap(), BigRational::one());
        assert_eq!(star().irregularity_ratio().unwrap(), rat(3, 1));
        let partial = KSetFamily::new(5, 2, &[[1, 2]]).unwrap();
        assert_eq!(partial.irregularity_ratio(), Err(Error::ZeroMinDegree(3)));
        assert_eq!(star().diversity(), Ok(0));
        assert_eq!(fano().diversity(), Ok(4));
    }

    #[test]
    fn subset_regularity() {
        assert_eq!(fano().is_subset_regular(2), Ok(Some(1)));
        assert_eq!(fano().is_subset_regular(1), Ok(Some(3)));
        assert_eq!(fano().is_subset_regular(3), Ok(None));
        assert_eq!(star().is_subset_regular(1), Ok(None));
        assert!(matches!(
            fano().is_subset_regular(0),
            Err(Error::InvalidS(_))
        ));
        assert!(matches!(
            fano().is_subset_regular(4),
            Err(Error::InvalidS(_))
        ));
        // brute-force oracle over all 21 pairs
        let f = fano();
        for pair in (1..=7).combinations(2) {
            let p = KSet::from_elements(pair);
            assert_eq!(f.iter().filter(|s| p.is_subset(s)).count(), 1);
        }
    }

    #[test]
    fn inner_distributions() {
        let a = fano().inner_distribution().unwrap();
        assert_eq!(a.a(), &[rat(1, 1), rat(0, 1), rat(6, 1), rat(0, 1)]);
        assert_eq!(a.pair_count(2), BigInt::from(42));
        let single = KSetFamily::new(5, 2, &[[1, 2]]).unwrap();
        assert_eq!(
            single.inner_distribution().unwrap().a(),
            &[rat(1, 1), rat(0, 1), rat(0, 1)]
        );
        assert_eq!(
            KSetFamily::empty(5, 2).unwrap().inner_distribution(),
            Err(Error::EmptyFamily)
        );
    }

    #[test]
    fn meet_profiles() {
        let f = fano();
        let line = f.sets()[0];
        assert_eq!(f.meet_profile(&line).unwrap(), vec![1, 0, 6, 0]);
        let mut non_lines = 0;
        for t in (1..=7).combinations(3) {
            let probe = KSet::from_elements(t);
            if f.contains(&probe) {
                continue;
            }
            non_lines += 1;
            let prof = f.meet_profile(&probe).unwrap();
            assert_eq!(prof[1], 3);
            assert_eq!(prof.iter().sum::<u64>(), 7);
        }
        assert_eq!(non_lines, 28);
        assert!(matches!(
            f.meet_profile(&KSet::from_elements([1, 2])),
            Err(Error::WrongProbeSize { .. })
        ));
    }

    #[test]
    fn meet_profiles_average_to_inner_distribution() {
        for f in [fano(), star()] {
            let mut sum = vec![0u64; f.k() + 1];
            for s in f.iter() {
                for (acc, c) in sum.iter_mut().zip(f.meet_profile(s).unwrap()) {
                    *acc += c;
                }
            }
            let a = f.inner_distribution().unwrap();
            for (i, total) in sum.into_iter().enumerate() {
                assert_eq!(a.get(i), &rat(total as i64, f.len() as i64));
            }
        }
    }

    #[test]
    fn regular_families_balance_first_dual_column() {
        // sum_i (kn - in - k^2) a_i = 0 for regular families
        let f = fano();
        let (n, k) = (7i64, 3i64);
        let a = f.inner_distribution().unwrap();
        let total = a
            .a()
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (i, ai)| {
                acc + ai * rat(k * n - i as i64 * n - k * k, 1)
            });
        assert!(total.is_zero());
    }
}
