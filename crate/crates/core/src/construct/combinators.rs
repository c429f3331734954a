//! Ways of building larger regular intersecting families from smaller ones.

use itertools::Itertools;
use num_bigint::BigInt;

use super::{plane::projective_plane, SizeCap};
use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::kset::KSet;
use crate::math::binomial;

fn require_regular(fam: &KSetFamily, what: &str) -> Result<()> {
    match fam.is_regular()? {
        Some(_) => Ok(()),
        None => Err(Error::NotRegular(format!("{what} is not regular"))),
    }
}

fn require_intersecting(fam: &KSetFamily, what: &str) -> Result<()> {
    if fam.is_intersecting() {
        Ok(())
    } else {
        Err(Error::NotIntersecting(format!(
            "{what} is not intersecting"
        )))
    }
}

/// Smallest `|F1 \ F2|` over distinct members, `None` for a single member.
pub fn min_difference(fam: &KSetFamily) -> Option<usize> {
    let k = fam.k();
    fam.sets()
        .iter()
        .tuple_combinations()
        .map(|(a, b)| k - a.intersection_size(b))
        .min()
}

/// All `(k+l)`-supersets of members. Each superset contains exactly one
/// member because `l` stays below the minimum pairwise difference.
pub fn extend_family(fam: &KSetFamily, l: usize) -> Result<KSetFamily> {
    if l == 0 {
        return Err(Error::InvalidParameters("l must be at least 1".into()));
    }
    require_regular(fam, "family")?;
    require_intersecting(fam, "family")?;
    if let Some(min_difference) = min_difference(fam).filter(|&d| l >= d) {
        return Err(Error::LTooLarge { l, min_difference });
    }
    let (n, k) = (fam.n(), fam.k());
    if k + l > n {
        return Err(Error::GroundSetExhausted { needed: k + l, n });
    }
    SizeCap::current().check(binomial((n - k) as i64, l as i64) * BigInt::from(fam.len()))?;
    let mut sets = Vec::new();
    for base in fam.iter() {
        let outside: Vec<usize> = base.complement(n).elements().collect();
        for extra in outside.into_iter().combinations(l) {
            let mut s = *base;
            for x in extra {
                s.insert(x);
            }
            sets.push(s);
        }
    }
    KSetFamily::from_ksets(n, k + l, sets)
}

/// `{F ∪ G}` with `famG` relabelled onto `[n1+1, n1+n2]`. Needs equal ratios
/// `k/n`; `famG` need not be intersecting.
pub fn disjoint_sum(fam_f: &KSetFamily, fam_g: &KSetFamily) -> Result<KSetFamily> {
    disjoint_sum_capped(fam_f, fam_g, SizeCap::current())
}

fn disjoint_sum_capped(fam_f: &KSetFamily, fam_g: &KSetFamily, cap: SizeCap) -> Result<KSetFamily> {
    require_regular(fam_f, "first family")?;
    require_intersecting(fam_f, "first family")?;
    require_regular(fam_g, "second family")?;
    if fam_f.ratio() != fam_g.ratio() {
        return Err(Error::RatioMismatch {
            left: fam_f.ratio().to_string(),
            right: fam_g.ratio().to_string(),
        });
    }
    cap.check(BigInt::from(fam_f.len()) * BigInt::from(fam_g.len()))?;
    let offset = fam_f.n();
    let shifted: Vec<KSet> = fam_g
        .iter()
        .map(|g| g.elements().map(|x| x + offset).collect())
        .collect();
    let sets = fam_f
        .iter()
        .flat_map(|f| shifted.iter().map(move |g| f.union(g)))
        .collect();
    KSetFamily::from_ksets(fam_f.n() + fam_g.n(), fam_f.k() + fam_g.k(), sets)
}

/// `{F1 × F2}` on the grid `[n1] × [n2]`, with `(x, y) ↦ (x-1) n2 + y`.
pub fn product_family(f1: &KSetFamily, f2: &KSetFamily) -> Result<KSetFamily> {
    for (fam, what) in [(f1, "first family"), (f2, "second family")] {
        require_regular(fam, what)?;
        require_intersecting(fam, what)?;
    }
    let n2 = f2.n();
    let n = f1.n() * n2;
    if n > KSet::MAX_ELEMENT {
        return Err(Error::GroundSetTooLarge {
            n,
            max: KSet::MAX_ELEMENT,
        });
    }
    SizeCap::current().check(BigInt::from(f1.len()) * BigInt::from(f2.len()))?;
    let mut sets = Vec::with_capacity(f1.len() * f2.len());
    for a in f1.iter() {
        for b in f2.iter() {
            let mut s = KSet::empty();
            for x in a.elements() {
                for y in b.elements() {
                    s.insert((x - 1) * n2 + y);
                }
            }
            sets.push(s);
        }
    }
    KSetFamily::from_ksets(n, f1.k() * f2.k(), sets)
}

/// Every `m`-subset of `[z]`.
pub fn complete_uniform(z: usize, m: usize) -> Result<KSetFamily> {
    complete_uniform_capped(z, m, SizeCap::current())
}

pub(crate) fn complete_uniform_capped(z: usize, m: usize, cap: SizeCap) -> Result<KSetFamily> {
    if m == 0 || m > z {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= m <= z, got z = {z}, m = {m}"
        )));
    }
    if z > KSet::MAX_ELEMENT {
        return Err(Error::GroundSetTooLarge {
            n: z,
            max: KSet::MAX_ELEMENT,
        });
    }
    cap.check(binomial(z as i64, m as i64))?;
    let sets = (1..=z).combinations(m).map(KSet::from_elements).collect();
    KSetFamily::from_ksets(z, m, sets)
}

/// `PG(2, q) + C([l(q^2+q+1)], l(q+1))`: a regular intersecting family of
/// ratio `(q+1)/(q^2+q+1)` on `(l+1)(q^2+q+1)` points.
pub fn prop3_construction(q: u64, l: usize, cap: SizeCap) -> Result<KSetFamily> {
    if l == 0 {
        return Err(Error::InvalidParameters("l must be at least 1".into()));
    }
    let plane = projective_plane(q)?;
    let points = plane.n();
    let (z, m) = (l * points, l * plane.k());
    let n = z + points;
    if n > KSet::MAX_ELEMENT {
        return Err(Error::GroundSetTooLarge {
            n,
            max: KSet::MAX_ELEMENT,
        });
    }
    cap.check(binomial(z as i64, m as i64) * BigInt::from(points))?;
    let complete = complete_uniform_capped(z, m, cap)?;
    disjoint_sum_capped(&plane, &complete, cap)
}
