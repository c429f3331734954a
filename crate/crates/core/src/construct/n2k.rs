//! Regular intersecting families on `[2k]`.

use num_bigint::BigInt;

use super::half::{balanced_half_family, fold_to_intersecting, HalfFamilySpec};
use super::SizeCap;
use crate::error::{Error, Result};
use crate::family::KSetFamily;
use crate::kset::KSet;
use crate::math::{binomial, is_power_of_two};

fn check_cap(k: usize) -> Result<()> {
    SizeCap::current().check(binomial(2 * k as i64 - 1, k as i64))
}

/// Size `C(2k-1, k)` and degree `C(2k,k)/4` on `[2k]`, for `k >= 3` not a
/// power of two: a regular half family with no exceptions, folded.
pub fn brace_daykin(k: usize) -> Result<KSetFamily> {
    if is_power_of_two(k) {
        return Err(Error::PowerOfTwoK(k));
    }
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    check_cap(k)?;
    let q = balanced_half_family(&HalfFamilySpec::uniform(k)?)?;
    fold_to_intersecting(&q, k, &[])
}

/// The sets `[2k-1] \ A_i` deleted after folding.
pub fn neq2k_removals(spec: &HalfFamilySpec) -> Vec<KSet> {
    spec.exceptions
        .iter()
        .map(|a| a.complement(spec.ground()))
        .collect()
}

/// Size `C(2k-1, k) - 3` on `[2k]` for `k` a power of two, `k >= 4`.
pub fn neq2k_construction(k: usize) -> Result<KSetFamily> {
    if !is_power_of_two(k) {
        return Err(Error::KNotPowerOfTwo(k));
    }
    if k < 4 {
        return Err(Error::InvalidParameters(format!(
            "no regular intersecting {k}-uniform family on [{}]",
            2 * k
        )));
    }
    check_cap(k)?;
    let spec = HalfFamilySpec::three_exceptions(k)?;
    let q = balanced_half_family(&spec)?;
    let fam = fold_to_intersecting(&q, k, &neq2k_removals(&spec))?;
    debug_assert_eq!(
        BigInt::from(fam.len()) + 3,
        binomial(2 * k as i64 - 1, k as i64)
    );
    Ok(fam)
}
