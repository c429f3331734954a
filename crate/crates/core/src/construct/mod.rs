//! Explicit constructions of regular intersecting families.

mod combinators;
mod field;
mod half;
mod n2k;
mod plane;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use combinators::{
    complete_uniform, disjoint_sum, extend_family, min_difference, product_family,
    prop3_construction,
};
pub use field::FiniteField;
pub use half::{
    balanced_half_family, balanced_half_family_traced, fold_to_intersecting, BalanceTrace,
    HalfFamilySpec,
};
pub use n2k::{brace_daykin, neq2k_construction, neq2k_removals};
pub use plane::projective_plane;

/// Upper limit on the number of sets a construction may materialise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeCap(pub u64);

impl SizeCap {
    pub const ENV: &'static str = "RIF_SIZE_CAP";
    pub const DEFAULT: u64 = 1_000_000;

    /// The cap from `RIF_SIZE_CAP`, or the default when unset or unparsable.
    pub fn current() -> Self {
        std::env::var(Self::ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or_else(Self::default, SizeCap)
    }

    pub fn check(&self, requested: BigInt) -> Result<()> {
        if requested > BigInt::from(self.0) {
            Err(Error::SizeCapExceeded {
                requested: requested.to_string(),
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeCap {
    fn default() -> Self {
        SizeCap(Self::DEFAULT)
    }
}
