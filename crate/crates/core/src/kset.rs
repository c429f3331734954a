//! Fixed-width bit sets over the ground set `{1, ..., 255}`.

use std::cmp::Ordering;
use std::fmt;

const WORDS: usize = 4;

/// A subset of `[n]` stored as a 256-bit mask. Bit `x` represents element
/// `x`; bit 0 is never set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct KSet {
    words: [u64; WORDS],
}

impl KSet {
    /// Largest element a `KSet` can hold.
    pub const MAX_ELEMENT: usize = WORDS * 64 - 1;

    pub const fn empty() -> Self {
        KSet { words: [0; WORDS] }
    }

    /// Builds a set from 1-indexed elements. Returns `None` if an element is
    /// 0 or above [`KSet::MAX_ELEMENT`].
    pub fn try_from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Option<Self> {
        let mut set = KSet::empty();
        for x in elements {
            if x == 0 || x > Self::MAX_ELEMENT {
                return None;
            }
            set.insert(x);
        }
        Some(set)
    }

    /// Panics on elements outside `1..=MAX_ELEMENT`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        Self::try_from_elements(elements).expect("element outside 1..=255")
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.words[x / 64] &= !(1 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x <= Self::MAX_ELEMENT && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &KSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn intersection_size(&self, other: &KSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn union(&self, other: &KSet) -> KSet {
        let mut out = *self;
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn difference(&self, other: &KSet) -> KSet {
        let mut out = *self;
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    pub fn is_subset(&self, other: &KSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Largest element, or `None` for the empty set.
    pub fn max_element(&self) -> Option<usize> {
        (0..WORDS)
            .rev()
            .find(|&i| self.words[i] != 0)
            .map(|i| i * 64 + 63 - self.words[i].leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Elements {
        Elements {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.elements().collect()
    }

    /// Complement within `[n]`.
    pub fn complement(&self, n: usize) -> KSet {
        let mut out = KSet::empty();
        for x in 1..=n {
            if !self.contains(x) {
                out.insert(x);
            }
        }
        out
    }
}

pub struct Elements {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = self.words[self.index];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.index] &= w - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
        }
        None
    }
}

/// Lexicographic order of the sorted element lists.
impl Ord for KSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for KSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl FromIterator<usize> for KSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        KSet::from_elements(iter)
    }
}
